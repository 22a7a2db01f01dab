"""Pipeline configuration: one TOML file drives every subcommand.

Input paths are resolved relative to the config file's directory and must
exist at load time; output paths are resolved the same way but are created
on demand. See tests/fixtures/corpus/pipeline.toml for a complete commented
example.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from semlift.errors import ConfigError, ValidationError
from semlift.rdf.terms import Iri
from semlift.align.facts import FactsSpec
from semlift.enrich.sources import EnrichmentSource
from semlift.search.facets import FacetDefinition


def _iri(value: str, where: str) -> Iri:
    try:
        return Iri(value)
    except ValidationError as e:
        raise ConfigError(f"{where}: {e}") from None


def _iri_list(values, where: str) -> tuple[Iri, ...]:
    if not isinstance(values, list):
        raise ConfigError(f"{where}: expected a list of IRIs")
    return tuple(_iri(v, where) for v in values)


@dataclass
class PipelineConfig:
    base_dir: Path

    schema_path: Path
    lifting_namespace: str
    instance_namespace: str
    ontology_out: Path
    report_out: Path | None

    documents: list[Path]
    document_ids: list[str]
    data_out: Path

    expert_ontologies: list[Path]
    import_dir: Path | None
    threshold: float
    rules_out: Path
    local_facts: FactsSpec

    include_graphs: list[Path]
    applied_out: Path

    sources: list[EnrichmentSource]
    target_class: Iri | None
    extra_targets: tuple[Iri, ...]
    enriched_out: Path
    enrich_report_out: Path | None

    label_predicates: list[Iri]
    snapshot_dir: Path

    facets: list[FacetDefinition] = field(default_factory=list)

    port: int = 8080
    ui_dir: Path | None = None
    allow_reload: bool = False

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        try:
            raw = tomllib.loads(path.read_text(encoding="utf-8"))
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"bad config syntax: {e}") from None
        base = path.parent.resolve()

        def section(name) -> dict:
            value = raw.get(name, {})
            if not isinstance(value, dict):
                raise ConfigError(f"[{name}] must be a table")
            return value

        def need(table: dict, table_name: str, key: str):
            if key not in table:
                raise ConfigError(f"missing {table_name}.{key}")
            return table[key]

        def in_path(value: str, where: str) -> Path:
            p = (base / value).resolve()
            if not p.exists():
                raise ConfigError(f"{where}: path does not exist: {value}")
            return p

        def out_path(value: str) -> Path:
            return (base / value).resolve()

        lift = section("lift")
        convert = section("convert")
        align = section("align")
        apply_s = section("apply")
        enrich_s = section("enrich")
        index_s = section("index")
        serve_s = section("serve")

        for ns_key in ("lifting_namespace", "instance_namespace"):
            value = need(lift, "lift", ns_key)
            if not value.endswith(("/", "#")):
                raise ConfigError(f"lift.{ns_key} must end in '/' or '#'")

        documents = [in_path(p, "convert.documents") for p in convert.get("documents", [])]
        document_ids = convert.get("document_ids") or [p.stem for p in documents]
        if len(document_ids) != len(documents):
            raise ConfigError("convert.document_ids must match convert.documents in length")

        threshold = align.get("threshold", 0.7)
        if not isinstance(threshold, (int, float)) or not 0.0 <= threshold <= 1.0:
            raise ConfigError("align.threshold must be a number in [0,1]")

        facts_table = align.get("local_facts", {})
        local_facts = FactsSpec(
            name_predicates=_iri_list(
                facts_table.get("name_predicates", []), "align.local_facts.name_predicates"
            ),
            formula_predicates=_iri_list(
                facts_table.get("formula_predicates", []), "align.local_facts.formula_predicates"
            ),
            id_predicates={
                _iri(k, "align.local_facts.id_predicates"): v
                for k, v in facts_table.get("id_predicates", {}).items()
            },
            dbxref_predicates=_iri_list(
                facts_table.get("dbxref_predicates", []), "align.local_facts.dbxref_predicates"
            ),
        )

        sources = []
        for i, s in enumerate(enrich_s.get("sources", [])):
            where = f"enrich.sources[{i}]"
            kind = need(s, where, "kind")
            location = need(s, where, "location")
            if kind == "fixture-directory":
                location = str(in_path(location, f"{where}.location"))
            try:
                sources.append(
                    EnrichmentSource(
                        id=need(s, where, "id"),
                        kind=kind,
                        location=location,
                        enabled_predicates=_iri_list(
                            need(s, where, "predicates"), f"{where}.predicates"
                        ),
                    )
                )
            except ValidationError as e:
                raise ConfigError(f"{where}: {e}") from None

        facets = []
        for i, f in enumerate(raw.get("facets", [])):
            where = f"facets[{i}]"
            try:
                facets.append(
                    FacetDefinition(
                        id=need(f, where, "id"),
                        kind=need(f, where, "kind"),
                        anchor=_iri(need(f, where, "anchor"), f"{where}.anchor"),
                        label=need(f, where, "label"),
                    )
                )
            except ValidationError as e:
                raise ConfigError(f"{where}: {e}") from None

        target_class = enrich_s.get("target_class")
        ui_dir = serve_s.get("ui_dir")
        import_dir = align.get("import_dir")
        return cls(
            base_dir=base,
            schema_path=in_path(need(lift, "lift", "schema"), "lift.schema"),
            lifting_namespace=lift["lifting_namespace"],
            instance_namespace=lift["instance_namespace"],
            ontology_out=out_path(lift.get("ontology_out", "out/ontology.ttl")),
            report_out=out_path(lift["report_out"]) if "report_out" in lift else None,
            documents=documents,
            document_ids=list(document_ids),
            data_out=out_path(convert.get("data_out", "out/data.nt")),
            expert_ontologies=[
                in_path(p, "align.expert_ontologies") for p in align.get("expert_ontologies", [])
            ],
            import_dir=in_path(import_dir, "align.import_dir") if import_dir else None,
            threshold=float(threshold),
            rules_out=out_path(align.get("rules_out", "out/mappings.tsv")),
            local_facts=local_facts,
            include_graphs=[
                in_path(p, "apply.include_graphs") for p in apply_s.get("include_graphs", [])
            ],
            applied_out=out_path(apply_s.get("applied_out", "out/integrated.nt")),
            sources=sources,
            target_class=_iri(target_class, "enrich.target_class") if target_class else None,
            extra_targets=_iri_list(enrich_s.get("extra_targets", []), "enrich.extra_targets"),
            enriched_out=out_path(enrich_s.get("enriched_out", "out/enriched.nt")),
            enrich_report_out=(
                out_path(enrich_s["report_out"]) if "report_out" in enrich_s else None
            ),
            label_predicates=list(
                _iri_list(index_s.get("label_predicates", []), "index.label_predicates")
            ),
            snapshot_dir=out_path(index_s.get("snapshot_dir", "out/snapshot")),
            facets=facets,
            port=int(serve_s.get("port", 8080)),
            ui_dir=in_path(ui_dir, "serve.ui_dir") if ui_dir else None,
            allow_reload=bool(serve_s.get("allow_reload", False)),
        )
