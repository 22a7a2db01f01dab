"""Ontology model, mapping rules, and identifier evidence."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from semlift.errors import OntologyError, ValidationError
from semlift.rdf.terms import Iri

Label = tuple[str, str | None]  # (text, language tag or None)


class RuleKind(str, Enum):
    EQUIVALENT_CLASS = "EquivalentClass"
    SUB_CLASS_OF = "SubClassOf"
    EQUIVALENT_PROPERTY = "EquivalentProperty"
    SAME_INDIVIDUAL = "SameIndividual"


@dataclass(frozen=True)
class MappingRule:
    kind: RuleKind
    source: Iri
    target: Iri
    confidence: float
    provenance: str  # matcher id or "manual"

    def __post_init__(self):
        if self.source == self.target:
            raise ValidationError(f"mapping rule maps {self.source} to itself")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValidationError(f"confidence out of [0,1]: {self.confidence}")


@dataclass(frozen=True)
class ClassDecl:
    iri: Iri
    labels: tuple[Label, ...] = ()


@dataclass(frozen=True)
class PropDecl:
    iri: Iri
    kind: str  # "datatype" | "object"
    labels: tuple[Label, ...] = ()

    def __post_init__(self):
        if self.kind not in ("datatype", "object"):
            raise ValidationError(f"bad property kind {self.kind!r}")


@dataclass
class Ontology:
    """A (possibly merged) ontology document: declarations plus hierarchy."""

    id: Iri | None = None
    classes: dict[Iri, ClassDecl] = field(default_factory=dict)
    properties: dict[Iri, PropDecl] = field(default_factory=dict)
    subclass_axioms: set[tuple[Iri, Iri]] = field(default_factory=set)
    subproperty_axioms: set[tuple[Iri, Iri]] = field(default_factory=set)
    imports: tuple[Iri, ...] = ()

    def validate(self):
        self._check_acyclic(self.subclass_axioms, "subclass")
        self._check_acyclic(self.subproperty_axioms, "subproperty")

    def _check_acyclic(self, axioms: set[tuple[Iri, Iri]], what: str):
        up: dict[Iri, set[Iri]] = {}
        for sub, sup in axioms:
            up.setdefault(sub, set()).add(sup)
        done: set[Iri] = set()

        def visit(node: Iri, path: list[Iri]):
            if node in path:
                cycle = path[path.index(node) :] + [node]
                raise OntologyError(f"{what} cycle: " + " -> ".join(i.value for i in cycle))
            if node in done:
                return
            path.append(node)
            for nxt in sorted(up.get(node, ()), key=lambda i: i.value):
                visit(nxt, path)
            path.pop()
            done.add(node)

        for start in sorted(up, key=lambda i: i.value):
            visit(start, [])

    def merge(self, other: "Ontology"):
        self.classes.update(other.classes)
        self.properties.update(other.properties)
        self.subclass_axioms |= other.subclass_axioms
        self.subproperty_axioms |= other.subproperty_axioms

    def subclass_descendants(self, root: Iri) -> set[Iri]:
        """root plus every class reachable downward through subClassOf."""
        down: dict[Iri, set[Iri]] = {}
        for sub, sup in self.subclass_axioms:
            down.setdefault(sup, set()).add(sub)
        out = {root}
        frontier = [root]
        while frontier:
            node = frontier.pop()
            for child in down.get(node, ()):
                if child not in out:
                    out.add(child)
                    frontier.append(child)
        return out

    def superclasses_of(self, cls: Iri) -> set[Iri]:
        return {sup for sub, sup in self.subclass_axioms if sub == cls}

    def labels_of(self, iri: Iri) -> tuple[Label, ...]:
        if iri in self.classes:
            return self.classes[iri].labels
        if iri in self.properties:
            return self.properties[iri].labels
        return ()


@dataclass
class EntityFacts:
    names: tuple[Label, ...] = ()
    formulas: tuple[str, ...] = ()
    external_ids: tuple[tuple[str, str], ...] = ()  # (scheme, value) verbatim

    def __post_init__(self):
        for scheme, _ in self.external_ids:
            if not scheme:
                raise ValidationError("external id with empty scheme")


@dataclass
class IdentifierFacts:
    entries: dict[Iri, EntityFacts] = field(default_factory=dict)

    def facts_for(self, iri: Iri) -> EntityFacts:
        return self.entries.get(iri, EntityFacts())

    def add(self, iri: Iri, *, names=(), formulas=(), external_ids=()):
        current = self.entries.get(iri, EntityFacts())
        self.entries[iri] = EntityFacts(
            names=current.names + tuple(names),
            formulas=current.formulas + tuple(formulas),
            external_ids=current.external_ids + tuple(external_ids),
        )
