"""The semlift command line: lift-schema, convert, align, apply, enrich,
index, serve, query.

Every subcommand reads and writes the flat-file artifacts of its module, as
wired by one TOML config (--config, or the SEMLIFT_CONFIG environment
variable). Exit code 0 on success; on failure a single machine-parseable
line `semlift: error: <message>` goes to stderr and the exit code is 2 for
configuration problems, 1 for everything else.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from semlift import vocab
from semlift.errors import ConfigError, SemliftError
from semlift.config import PipelineConfig
from semlift.rdf.graph import Graph
from semlift.rdf.ntriples import parse_ntriples, write_ntriples
from semlift.rdf.terms import Iri
from semlift.rdf.turtle import parse_turtle, write_turtle
from semlift.align.apply import apply_mappings
from semlift.align.facts import FactsSpec, extract_identifier_facts
from semlift.align.loader import load_ontology, ontology_from_graph
from semlift.align.matchers import AlignmentSide, suggest_alignments
from semlift.align.rules_io import parse_rules, write_rules
from semlift.enrich.enrich import enrich
from semlift.snapshot import (
    Snapshot,
    build_snapshot,
    canonical_json,
    load_snapshot,
    write_snapshot,
)
from semlift.search.facets import FilterSelection
from semlift.server import SnapshotHolder, make_server
from semlift.xmllift.convert import convert_instance
from semlift.xmllift.lift import DerivedOntology, lift_schema
from semlift.xmllift.model import LiftConfig
from semlift.xmllift.xml_io import parse_document, parse_schema


def _write(path: Path, text: str, verbose: bool, what: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    if verbose:
        print(f"wrote {what}: {path}", file=sys.stderr)


def _lift(config: PipelineConfig) -> DerivedOntology:
    schema = parse_schema(config.schema_path.read_text(encoding="utf-8"))
    lift_config = LiftConfig(config.lifting_namespace, config.instance_namespace)
    return lift_schema(schema, lift_config)


def cmd_lift_schema(config: PipelineConfig, args) -> int:
    onto = _lift(config)
    out = Path(args.out) if args.out else config.ontology_out
    _write(out, write_turtle(onto.to_graph()), args.verbose, "derived ontology")
    report_path = Path(args.report) if args.report else config.report_out
    if report_path is not None:
        _write(report_path, onto.mapping_report(), args.verbose, "mapping report")
    return 0


def cmd_convert(config: PipelineConfig, args) -> int:
    if not config.documents:
        raise SemliftError("no input documents")
    onto = _lift(config)
    target_ns = onto.schema.target_namespace
    merged = Graph()
    for path, doc_id in zip(config.documents, config.document_ids):
        doc = parse_document(path.read_text(encoding="utf-8"), target_ns)
        lift_config = LiftConfig(config.lifting_namespace, config.instance_namespace, doc_id)
        merged.insert_all(convert_instance(doc, onto, lift_config).triple_set())
    out = Path(args.out) if args.out else config.data_out
    _write(out, write_ntriples(merged), args.verbose, f"{len(merged)} data triples")
    return 0


def cmd_align(config: PipelineConfig, args) -> int:
    data = parse_ntriples(config.data_out.read_text(encoding="utf-8"))
    derived = _lift(config)
    local_side = AlignmentSide(
        ontology=ontology_from_graph(derived.to_graph()),
        facts=extract_identifier_facts(data, config.local_facts),
    )
    expert_onto, expert_graph = load_ontology(config.expert_ontologies, config.import_dir)
    expert_side = AlignmentSide(
        ontology=expert_onto, facts=extract_identifier_facts(expert_graph, FactsSpec())
    )
    rules = suggest_alignments(local_side, expert_side)
    out = Path(args.out) if args.out else config.rules_out
    _write(out, write_rules(rules), args.verbose, f"{len(rules)} mapping rules")
    return 0


def cmd_apply(config: PipelineConfig, args) -> int:
    g = parse_ntriples(config.data_out.read_text(encoding="utf-8"))
    for path in config.include_graphs:
        g.insert_all(parse_turtle(path.read_text(encoding="utf-8")).triple_set())
    rules_path = Path(args.rules) if args.rules else config.rules_out
    rules = parse_rules(rules_path.read_text(encoding="utf-8"))
    threshold = args.threshold if args.threshold is not None else config.threshold
    ontologies = []
    if config.expert_ontologies:
        expert_onto, _ = load_ontology(config.expert_ontologies, config.import_dir)
        ontologies.append(expert_onto)
    ontologies.append(ontology_from_graph(_lift(config).to_graph()))
    result = apply_mappings(g, rules, threshold, ontologies=tuple(ontologies))
    for rule, reason in result.skipped:
        print(f"semlift: warning: skipped rule {rule.source} -> {rule.target}: {reason}", file=sys.stderr)
    out = Path(args.out) if args.out else config.applied_out
    _write(out, write_ntriples(result.graph), args.verbose, f"{len(result.graph)} integrated triples")
    return 0


def cmd_enrich(config: PipelineConfig, args) -> int:
    g = parse_ntriples(config.applied_out.read_text(encoding="utf-8"))
    targets = set(config.extra_targets)
    if config.target_class is not None:
        targets.update(
            s
            for s in g.subjects(predicate=vocab.RDF_TYPE, object=config.target_class)
            if isinstance(s, Iri)
        )
    enriched, report = enrich(g, targets, config.sources)
    out = Path(args.out) if args.out else config.enriched_out
    _write(out, write_ntriples(enriched), args.verbose, f"{len(enriched)} enriched triples")
    report_path = Path(args.report) if args.report else config.enrich_report_out
    if report_path is not None:
        payload = {
            "entries": [
                {
                    "target": e.target.value,
                    "source": e.source_id,
                    "added": e.triples_added,
                    "languages": sorted(e.languages),
                }
                for e in report.entries
            ],
            "skipped": [
                {"target": s.target.value, "source": s.source_id, "reason": s.reason}
                for s in report.skipped
            ],
        }
        _write(report_path, canonical_json(payload).decode("utf-8") + "\n", args.verbose, "report")
    return 0


def _build_snapshot_from_config(config: PipelineConfig) -> Snapshot:
    graph = parse_ntriples(config.enriched_out.read_text(encoding="utf-8"))
    ontology_graph = _lift(config).to_graph()
    if config.expert_ontologies:
        _, expert_graph = load_ontology(config.expert_ontologies, config.import_dir)
        ontology_graph.insert_all(expert_graph.triple_set())
        for prefix, ns in expert_graph.prefixes.items():
            ontology_graph.prefixes.setdefault(prefix, ns)
    return build_snapshot(graph, ontology_graph, config.facets, config.label_predicates)


def cmd_index(config: PipelineConfig, args) -> int:
    snapshot = _build_snapshot_from_config(config)
    out = Path(args.out) if args.out else config.snapshot_dir
    write_snapshot(snapshot, out)
    if args.verbose:
        print(f"wrote snapshot {snapshot.content_hash} to {out}", file=sys.stderr)
    print(snapshot.content_hash)
    return 0


def _load_snapshot(config: PipelineConfig, args) -> Snapshot:
    directory = Path(args.snapshot) if getattr(args, "snapshot", None) else config.snapshot_dir
    return load_snapshot(directory)


def cmd_serve(config: PipelineConfig, args) -> int:
    snapshot = _load_snapshot(config, args)
    holder = SnapshotHolder(snapshot, rebuild=lambda: _build_snapshot_from_config(config))
    port = args.port if args.port is not None else config.port
    ui_dir = Path(args.ui) if args.ui else config.ui_dir
    allow_reload = args.allow_reload or config.allow_reload
    server = make_server(holder, port=port, ui_dir=ui_dir, allow_reload=allow_reload)
    actual_port = server.server_address[1]
    # flush so supervisors watching a pipe see the port immediately
    print(
        f"serving snapshot {snapshot.content_hash} on http://127.0.0.1:{actual_port}",
        flush=True,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


def cmd_query(config: PipelineConfig, args) -> int:
    snapshot = _load_snapshot(config, args)
    if args.complete is not None:
        hits = snapshot.index.complete(args.complete, args.limit)
        payload = [
            {"surface": h.surface, "language": h.language, "concept": h.concept.value, "score": h.score}
            for h in hits
        ]
        print(canonical_json(payload).decode("utf-8"))
        return 0
    selections = []
    for spec in args.select or []:
        facet_id, sep, values = spec.partition("=")
        if not sep or not values:
            raise SemliftError(f"bad --select (want facet=value[,value...]): {spec!r}")
        selections.append(FilterSelection(facet_id, frozenset(values.split(","))))
    engine = snapshot.engine
    state = engine.state(tuple(selections))
    payload = {
        "total": len(state.results),
        "entities": sorted(e.value for e in state.results),
        "suggestions": [
            {"facet": s.facet_id, "value": s.value, "count": s.count, "origin": s.origin, "hop": s.hop}
            for s in engine.suggest(state)
        ],
    }
    print(canonical_json(payload).decode("utf-8"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semlift",
        description="Lift XML into RDF, align and enrich it, and serve semantic search over the result.",
    )
    parser.add_argument("--config", help="pipeline config file (or set SEMLIFT_CONFIG)")
    parser.add_argument("--verbose", action="store_true", help="chatty progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lift-schema", help="derive an ontology from the XML schema")
    p.add_argument("--out", help="override ontology output path")
    p.add_argument("--report", help="also write the human-review mapping report here")
    p.set_defaults(fn=cmd_lift_schema)

    p = sub.add_parser("convert", help="convert the XML documents into N-Triples")
    p.add_argument("--out", help="override data output path")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("align", help="suggest mappings against the expert ontologies")
    p.add_argument("--out", help="override rules output path")
    p.set_defaults(fn=cmd_align)

    p = sub.add_parser("apply", help="apply mapping rules and materialize the closure")
    p.add_argument("--rules", help="override rules input path")
    p.add_argument("--threshold", type=float, help="override confidence threshold")
    p.add_argument("--out", help="override integrated-graph output path")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("enrich", help="merge external linked-data descriptions")
    p.add_argument("--out", help="override enriched-graph output path")
    p.add_argument("--report", help="override report output path")
    p.set_defaults(fn=cmd_enrich)

    p = sub.add_parser("index", help="build the query snapshot (prints its hash)")
    p.add_argument("--out", help="override snapshot directory")
    p.set_defaults(fn=cmd_index)

    p = sub.add_parser("serve", help="serve the HTTP API over the snapshot")
    p.add_argument("--port", type=int, help="override port (0 picks a free one)")
    p.add_argument("--snapshot", help="override snapshot directory")
    p.add_argument("--ui", help="serve this directory of static UI assets under /ui/")
    p.add_argument("--allow-reload", action="store_true", help="enable POST /admin/reload")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("query", help="run one autocomplete or facet query")
    p.add_argument("--snapshot", help="override snapshot directory")
    p.add_argument("--complete", help="autocomplete this text")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument(
        "--select",
        action="append",
        metavar="FACET=VALUE[,VALUE...]",
        help="facet selection; repeat for AND",
    )
    p.set_defaults(fn=cmd_query)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config_path = args.config or os.environ.get("SEMLIFT_CONFIG")
    try:
        if not config_path:
            raise ConfigError("no config given (use --config or SEMLIFT_CONFIG)")
        config = PipelineConfig.from_file(config_path)
        return args.fn(config, args)
    except ConfigError as e:
        print(f"semlift: error: {_one_line(e)}", file=sys.stderr)
        return 2
    except SemliftError as e:
        print(f"semlift: error: {_one_line(e)}", file=sys.stderr)
        return 1
    except OSError as e:
        # missing/unreadable pipeline artifact (e.g. a stage run out of order)
        print(f"semlift: error: {_one_line(e)}", file=sys.stderr)
        return 1


def _one_line(e: Exception) -> str:
    return " ".join(str(e).split())


if __name__ == "__main__":
    sys.exit(main())
