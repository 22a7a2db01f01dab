from pathlib import Path

import pytest

from semlift import vocab
from semlift.errors import ConversionError, ParseError, SchemaError, UnsupportedFeatureError
from semlift.rdf import Iri, Literal, Triple, parse_ntriples, write_ntriples, write_turtle
from semlift.xmllift import (
    AttrDecl,
    ComplexContent,
    ElementDecl,
    ElementRef,
    LiftConfig,
    SimpleContent,
    XmlSchemaModel,
    convert_instance,
    lift_schema,
    parse_document,
    parse_schema,
)
from semlift.xmllift.names import camel_case, pascal_case, split_name

FIXTURES = Path(__file__).parent / "fixtures" / "thermo"
NS = "http://fixtures.semlift.example/thermo"
CFG = LiftConfig(
    lifting_namespace="http://fixtures.semlift.example/thermo/schema#",
    instance_namespace="http://fixtures.semlift.example/thermo/data/",
    document_id="d1",
)


def minimal_schema() -> XmlSchemaModel:
    return XmlSchemaModel(
        NS,
        (
            ElementDecl("compound", ComplexContent(children=(ElementRef("name"),))),
            ElementDecl("name", SimpleContent("string")),
        ),
    )


def thermo_schema_model() -> XmlSchemaModel:
    """The 6-domain-element fixture schema, built by hand once."""
    return XmlSchemaModel(
        NS,
        (
            ElementDecl(
                "dataset",
                ComplexContent(
                    children=(
                        ElementRef("citation", 0, 1),
                        ElementRef("compound", 1, None),
                        ElementRef("measurement", 0, None),
                    ),
                    attributes=(AttrDecl("version", "string"),),
                ),
            ),
            ElementDecl(
                "citation",
                ComplexContent(
                    children=(
                        ElementRef("title"),
                        ElementRef("year", 0, 1),
                        ElementRef("doi", 0, 1),
                    )
                ),
            ),
            ElementDecl(
                "compound",
                ComplexContent(
                    children=(
                        ElementRef("name"),
                        ElementRef("formula", 0, 1),
                        ElementRef("casNumber", 0, 1),
                    ),
                    attributes=(AttrDecl("id", "string"),),
                ),
            ),
            ElementDecl(
                "measurement",
                ComplexContent(
                    children=(
                        ElementRef("property"),
                        ElementRef("method", 0, 1),
                        ElementRef("unit", 0, 1),
                        ElementRef("value"),
                        ElementRef("temperature", 0, 1),
                        ElementRef("measured", 0, 1),
                    ),
                    attributes=(AttrDecl("compoundRef", "string"),),
                ),
            ),
            ElementDecl("property", ComplexContent(children=(ElementRef("name"),))),
            ElementDecl(
                "method",
                ComplexContent(children=(ElementRef("name"), ElementRef("description", 0, 1))),
            ),
            ElementDecl(
                "unit",
                ComplexContent(children=(ElementRef("symbol"), ElementRef("si", 0, 1))),
            ),
            ElementDecl("title", SimpleContent("string")),
            ElementDecl("year", SimpleContent("integer")),
            ElementDecl("doi", SimpleContent("string")),
            ElementDecl("name", SimpleContent("string")),
            ElementDecl("formula", SimpleContent("string")),
            ElementDecl("casNumber", SimpleContent("string")),
            ElementDecl("value", SimpleContent("decimal")),
            ElementDecl("temperature", SimpleContent("decimal")),
            ElementDecl("measured", SimpleContent("date")),
            ElementDecl("symbol", SimpleContent("string")),
            ElementDecl("si", SimpleContent("boolean")),
            ElementDecl("description", SimpleContent("string")),
        ),
    )


class TestNames:
    @pytest.mark.parametrize(
        "name, tokens",
        [
            ("compound", ["compound"]),
            ("casNumber", ["cas", "number"]),
            ("boiling-point", ["boiling", "point"]),
            ("some_odd.name", ["some", "odd", "name"]),
            ("HTMLPage", ["html", "page"]),
            ("sVolume", ["s", "volume"]),
        ],
    )
    def test_split(self, name, tokens):
        assert split_name(name) == tokens

    def test_pascal_and_camel(self):
        assert pascal_case("compound") == "Compound"
        assert pascal_case("boiling-point") == "BoilingPoint"
        assert camel_case("casNumber") == "casNumber"
        assert camel_case("Boiling-Point") == "boilingPoint"


class TestSchemaModel:
    def test_dangling_ref_lists_names(self):
        with pytest.raises(SchemaError) as exc:
            XmlSchemaModel(
                NS,
                (
                    ElementDecl(
                        "a", ComplexContent(children=(ElementRef("ghost"), ElementRef("zed")))
                    ),
                ),
            )
        assert "ghost" in str(exc.value) and "zed" in str(exc.value)

    def test_duplicate_element_names(self):
        with pytest.raises(SchemaError):
            XmlSchemaModel(
                NS,
                (ElementDecl("a", SimpleContent("string")), ElementDecl("a", SimpleContent("string"))),
            )

    def test_min_above_max(self):
        with pytest.raises(SchemaError):
            ElementRef("x", min_occurs=3, max_occurs=1)

    def test_namespace_shape_validated(self):
        with pytest.raises(Exception):
            LiftConfig("http://x/no-trailing", "http://x/", "d")


class TestLiftSchema:
    def test_minimal_compound_example(self):
        onto = lift_schema(minimal_schema(), CFG)
        assert [c.iri.value for c in onto.classes] == [CFG.lifting_namespace + "Compound"]
        (prop,) = onto.datatype_properties
        assert prop.iri.value == CFG.lifting_namespace + "compound_name"
        assert prop.domain.value == CFG.lifting_namespace + "Compound"
        assert prop.range == vocab.XSD_STRING
        assert onto.object_properties == ()

    def test_empty_schema(self):
        onto = lift_schema(XmlSchemaModel(NS, ()), CFG)
        assert onto.classes == ()
        assert onto.datatype_properties == ()
        assert onto.object_properties == ()
        assert len(onto.to_graph()) == 0

    def test_collision_suffixes_in_declaration_order(self):
        schema = XmlSchemaModel(
            NS,
            (
                ElementDecl("my-item", ComplexContent(children=(ElementRef("my_item"),))),
                ElementDecl("my_item", ComplexContent()),
                ElementDecl("myItem", ComplexContent()),
            ),
        )
        onto = lift_schema(schema, CFG)
        assert [c.iri.value.rsplit("#", 1)[1] for c in onto.classes] == [
            "MyItem",
            "MyItem_2",
            "MyItem_3",
        ]
        # labels keep the original XML names
        assert [c.label for c in onto.classes] == ["my-item", "my_item", "myItem"]

    def test_labels_are_original_names(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        by_local = {p.iri.value.rsplit("#", 1)[1]: p for p in onto.datatype_properties}
        assert by_local["compound_casNumber"].label == "casNumber"
        obj_by_local = {p.iri.value.rsplit("#", 1)[1]: p for p in onto.object_properties}
        assert obj_by_local["hasCompound"].label == "compound"

    def test_golden_ontology_turtle(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        golden = (FIXTURES / "golden_ontology.ttl").read_text(encoding="utf-8")
        assert write_turtle(onto.to_graph()) == golden

    def test_mapping_report_mentions_every_term(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        report = onto.mapping_report()
        lines = [l for l in report.split("\n") if l]
        assert len(lines) == len(onto.classes) + len(onto.datatype_properties) + len(
            onto.object_properties
        )
        assert any("compound_name" in l for l in lines)

    def test_determinism(self):
        a = lift_schema(thermo_schema_model(), CFG)
        b = lift_schema(thermo_schema_model(), CFG)
        assert write_turtle(a.to_graph()) == write_turtle(b.to_graph())


class TestParseSchema:
    def test_minimal_one_element(self):
        model = parse_schema(
            '<xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema" '
            'targetNamespace="http://x/"><xs:element name="note" type="xs:string"/></xs:schema>'
        )
        assert len(model.elements) == 1
        assert model.elements[0] == ElementDecl("note", SimpleContent("string"))

    def test_fixture_schema_equals_hand_built_model(self):
        parsed = parse_schema((FIXTURES / "schema.xsd").read_text(encoding="utf-8"))
        hand = thermo_schema_model()
        assert parsed.target_namespace == hand.target_namespace
        assert parsed.elements == hand.elements

    def test_xml_syntax_error_has_position(self):
        with pytest.raises(ParseError) as exc:
            parse_schema("<xs:schema xmlns:xs='http://www.w3.org/2001/XMLSchema'>\n<broken")
        assert exc.value.line is not None

    @pytest.mark.parametrize(
        "body, construct",
        [
            ('<xs:element name="c"><xs:complexType><xs:choice/></xs:complexType></xs:element>', "xs:choice"),
            ('<xs:element name="c"><xs:complexType><xs:sequence><xs:element name="local" type="xs:string"/></xs:sequence></xs:complexType></xs:element>', "local element"),
            ('<xs:element name="c" type="tns:custom"/>', "type"),
            ('<xs:simpleType name="t"/>', "xs:simpleType"),
            ('<xs:element name="c"/>', "without a type"),
        ],
    )
    def test_unsupported_constructs(self, body, construct):
        text = (
            '<xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema" '
            'xmlns:tns="http://x/" targetNamespace="http://x/">' + body + "</xs:schema>"
        )
        with pytest.raises(UnsupportedFeatureError) as exc:
            parse_schema(text)
        assert construct in str(exc.value)

    def test_missing_target_namespace(self):
        with pytest.raises(SchemaError):
            parse_schema('<xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema"/>')


class TestParseDocument:
    def test_prefixed_elements_under_target_namespace_stripped(self):
        doc = parse_document(
            f'<t:compound xmlns:t="{NS}"><t:name>water</t:name></t:compound>',
            target_namespace=NS,
        )
        assert doc.root.name == "compound"
        assert doc.root.children[0].name == "name"

    def test_foreign_namespace_rejected(self):
        with pytest.raises(ConversionError) as exc:
            parse_document(
                '<f:compound xmlns:f="http://foreign.example/"/>', target_namespace=NS
            )
        assert "foreign namespace" in str(exc.value)

    def test_order_and_text_preserved(self):
        doc = parse_document("<a><b>1</b><c>2</c><b>3</b></a>")
        assert [c.name for c in doc.root.children] == ["b", "c", "b"]
        assert [c.text for c in doc.root.children] == ["1", "2", "3"]


class TestConvert:
    def test_two_triple_example(self):
        onto = lift_schema(minimal_schema(), CFG)
        doc = parse_document("<compound><name>water</name></compound>")
        g = convert_instance(doc, onto, CFG)
        ind = Iri(CFG.instance_namespace + "d1/compound/1")
        assert g.triple_set() == {
            Triple(ind, vocab.RDF_TYPE, Iri(CFG.lifting_namespace + "Compound")),
            Triple(ind, Iri(CFG.lifting_namespace + "compound_name"), Literal("water")),
        }

    def test_absent_optional_child_yields_no_triple(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document(
            "<dataset><compound><name>x</name></compound></dataset>", target_namespace=NS
        )
        g = convert_instance(doc, onto, CFG)
        assert g.match(predicate=Iri(CFG.lifting_namespace + "compound_formula")) == []

    def test_golden_d1(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document((FIXTURES / "d1.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, CFG)
        assert write_ntriples(g) == (FIXTURES / "golden_d1.nt").read_text(encoding="utf-8")

    @pytest.mark.parametrize("doc_id", ["d2", "d3"])
    def test_golden_other_documents(self, doc_id):
        onto = lift_schema(thermo_schema_model(), CFG)
        cfg = LiftConfig(CFG.lifting_namespace, CFG.instance_namespace, doc_id)
        doc = parse_document((FIXTURES / f"{doc_id}.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, cfg)
        assert write_ntriples(g) == (FIXTURES / f"golden_{doc_id}.nt").read_text(encoding="utf-8")

    def test_every_individual_has_exactly_one_type(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document((FIXTURES / "d1.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, CFG)
        individuals = {t.subject for t in g.triple_set()}
        for ind in individuals:
            assert len(g.match(subject=ind, predicate=vocab.RDF_TYPE)) == 1

    def test_individual_count_equals_complex_instances(self):
        # d1 has 8 complex element instances (counted by hand on the fixture)
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document((FIXTURES / "d1.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, CFG)
        assert len(g.match(predicate=vocab.RDF_TYPE)) == 8

    def test_range_soundness(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        ranges = {p.iri: p.range for p in onto.datatype_properties}
        doc = parse_document((FIXTURES / "d2.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, LiftConfig(CFG.lifting_namespace, CFG.instance_namespace, "d2"))
        for t in g.triple_set():
            if isinstance(t.object, Literal):
                assert t.object.datatype == ranges[t.predicate]

    def test_invalid_lexical_names_location(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document(
            "<dataset><compound><name>x</name></compound>"
            "<measurement><property><name>p</name></property>"
            "<value>abc</value></measurement></dataset>",
            NS,
        )
        with pytest.raises(ConversionError) as exc:
            convert_instance(doc, onto, CFG)
        msg = str(exc.value)
        assert "abc" in msg and "/dataset[1]/measurement[1]/value[1]" in msg

    def test_occurrence_bounds_enforced(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document("<dataset/>", NS)  # compound requires min 1
        with pytest.raises(ConversionError) as exc:
            convert_instance(doc, onto, CFG)
        assert "compound" in str(exc.value)

    def test_undeclared_child_rejected(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document("<dataset><mystery/></dataset>", NS)
        with pytest.raises(ConversionError) as exc:
            convert_instance(doc, onto, CFG)
        assert "mystery" in str(exc.value)

    def test_whitespace_only_text_ignored(self):
        onto = lift_schema(minimal_schema(), CFG)
        doc = parse_document("<compound>\n   <name>water</name>\n   </compound>")
        assert len(convert_instance(doc, onto, CFG)) == 2

    def test_nonwhitespace_text_in_complex_element_rejected(self):
        onto = lift_schema(minimal_schema(), CFG)
        doc = parse_document("<compound>stray<name>water</name></compound>")
        with pytest.raises(ConversionError) as exc:
            convert_instance(doc, onto, CFG)
        assert "text" in str(exc.value)

    def test_conversion_is_deterministic(self):
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document((FIXTURES / "d1.xml").read_text(encoding="utf-8"), NS)
        assert write_ntriples(convert_instance(doc, onto, CFG)) == write_ntriples(
            convert_instance(doc, onto, CFG)
        )

    def test_oracle_equivalence_triple_sets(self):
        # output triple set equals the hand-derived golden exactly, not just bytes
        onto = lift_schema(thermo_schema_model(), CFG)
        doc = parse_document((FIXTURES / "d1.xml").read_text(encoding="utf-8"), NS)
        g = convert_instance(doc, onto, CFG)
        golden = parse_ntriples((FIXTURES / "golden_d1.nt").read_text(encoding="utf-8"))
        assert g.triple_set() == golden.triple_set()
