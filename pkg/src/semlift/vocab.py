"""Well-known vocabulary IRIs used across the toolkit."""

from __future__ import annotations

from semlift.rdf.terms import Iri

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
DCT_NS = "http://purl.org/dc/terms/"

# Namespace of the toolkit's own vocabulary (mapping provenance, formulas).
SEMLIFT_NS = "http://semlift.example/ns#"

RDF_TYPE = Iri(RDF_NS + "type")
RDF_PROPERTY = Iri(RDF_NS + "Property")

RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_COMMENT = Iri(RDFS_NS + "comment")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_SUBPROPERTYOF = Iri(RDFS_NS + "subPropertyOf")
RDFS_CLASS = Iri(RDFS_NS + "Class")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")
OWL_IMPORTS = Iri(OWL_NS + "imports")
OWL_EQUIVALENT_CLASS = Iri(OWL_NS + "equivalentClass")
OWL_EQUIVALENT_PROPERTY = Iri(OWL_NS + "equivalentProperty")
OWL_SAME_AS = Iri(OWL_NS + "sameAs")

XSD_STRING = Iri(XSD_NS + "string")
XSD_INTEGER = Iri(XSD_NS + "integer")
XSD_DECIMAL = Iri(XSD_NS + "decimal")
XSD_BOOLEAN = Iri(XSD_NS + "boolean")
XSD_DATE = Iri(XSD_NS + "date")

SKOS_BROADER = Iri(SKOS_NS + "broader")
SKOS_PREF_LABEL = Iri(SKOS_NS + "prefLabel")
SKOS_ALT_LABEL = Iri(SKOS_NS + "altLabel")

DCT_SUBJECT = Iri(DCT_NS + "subject")
DCT_DESCRIPTION = Iri(DCT_NS + "description")

SEMLIFT_PROVENANCE = Iri(SEMLIFT_NS + "mappingProvenance")
SEMLIFT_FORMULA = Iri(SEMLIFT_NS + "formula")

# Predicates commonly carrying identifier evidence in expert ontologies.
CHEBI_FORMULA = Iri("http://purl.obolibrary.org/obo/chebi/formula")
OBO_DBXREF = Iri("http://www.geneontology.org/formats/oboInOwl#hasDbXref")

WELL_KNOWN_PREFIXES = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
    "skos": SKOS_NS,
    "dct": DCT_NS,
}
