"""semlift: XML-to-RDF lifting, ontology alignment, linked-data enrichment,
and synonym-aware search over the integrated graph."""

__version__ = "0.1.0"
