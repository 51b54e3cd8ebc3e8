import pytest
from hypothesis import given, strategies as st

from sensebridge.errors import QueryParseError
from sensebridge.skos import SKOS_NS, Concept, ConceptStore, pref_label
from sensebridge.sparql import (
    BindingRow,
    IriTerm,
    LangFilter,
    LiteralTerm,
    QueryAst,
    TriplePattern,
    build_label_query,
    evaluate,
    parse_query,
    render_query,
)
from tests.conftest import DRUMS_IRI, DRUMS_LABEL_QUERY


# --- parsing -----------------------------------------------------------------


def test_parse_canonical_label_query():
    ast = parse_query(DRUMS_LABEL_QUERY)
    assert ast.prefixes == (("skos", SKOS_NS),)
    assert ast.select_var == "prefLabel"
    assert ast.pattern.subject == IriTerm(DRUMS_IRI)
    assert ast.pattern.predicate == ("skos", "prefLabel")
    assert ast.pattern.object == "prefLabel"
    # the stray space inside the tag string is trimmed at parse time
    assert ast.filter == LangFilter(variable="prefLabel", tag="en")


def test_parse_same_query_with_pt_filter():
    ast_en = parse_query(DRUMS_LABEL_QUERY)
    ast_pt = parse_query(DRUMS_LABEL_QUERY.replace('"en "', '"pt"'))
    assert ast_pt.filter.tag == "pt"
    assert ast_pt.pattern == ast_en.pattern
    assert ast_pt.select_var == ast_en.select_var


def test_parse_requires_declared_prefix():
    with pytest.raises(QueryParseError) as exc:
        parse_query("SELECT ?x WHERE { ?x skos:prefLabel ?y. }")
    assert "undeclared prefix" in str(exc.value)


def test_parse_rejects_multiple_select_variables():
    text = f'PREFIX skos: <{SKOS_NS}>\nSELECT ?a ?b WHERE {{ ?a skos:prefLabel ?b. }}'
    with pytest.raises(QueryParseError) as exc:
        parse_query(text)
    assert "multiple select variables" in str(exc.value)


def test_parse_rejects_multiple_triple_patterns():
    text = (
        f"PREFIX skos: <{SKOS_NS}>\n"
        "SELECT ?y WHERE { ?x skos:prefLabel ?y. ?x skos:altLabel ?z. }"
    )
    with pytest.raises(QueryParseError) as exc:
        parse_query(text)
    assert "multiple triple patterns" in str(exc.value)


def test_parse_rejects_malformed_filter():
    text = (
        f"PREFIX skos: <{SKOS_NS}>\n"
        'SELECT ?y WHERE { ?x skos:prefLabel ?y. FILTER (tongue(?y) = "en") }'
    )
    with pytest.raises(QueryParseError):
        parse_query(text)


def test_parse_rejects_filter_on_unbound_variable():
    text = (
        f"PREFIX skos: <{SKOS_NS}>\n"
        'SELECT ?y WHERE { ?x skos:prefLabel ?y. FILTER (lang(?z) = "en") }'
    )
    with pytest.raises(QueryParseError):
        parse_query(text)


def test_parse_rejects_unused_select_variable():
    text = f"PREFIX skos: <{SKOS_NS}>\nSELECT ?nope WHERE {{ ?x skos:prefLabel ?y. }}"
    with pytest.raises(QueryParseError):
        parse_query(text)


def test_parse_error_carries_byte_offset():
    text = "SELECT ?x WHERE { ?x skos:prefLabel ?y. }"
    with pytest.raises(QueryParseError) as exc:
        parse_query(text)
    assert exc.value.offset == text.index("skos")


def test_parse_is_whitespace_insensitive():
    compact = f'PREFIX skos:<{SKOS_NS}> SELECT ?y WHERE {{<http://x#C> skos:prefLabel ?y.FILTER(lang(?y)="en")}}'
    spread = (
        f"PREFIX skos: <{SKOS_NS}>\n\n  SELECT   ?y\nWHERE   {{ <http://x#C>   skos:prefLabel\n"
        '  ?y .\n  FILTER ( lang( ?y ) = "en" ) }'
    )
    assert parse_query(compact) == parse_query(spread)


def test_keywords_case_insensitive():
    text = f'prefix skos: <{SKOS_NS}>\nselect ?y where {{ <http://x#C> skos:prefLabel ?y. filter (LANG(?y) = "EN") }}'
    ast = parse_query(text)
    assert ast.filter.tag == "en"


# --- render round trip ---------------------------------------------------------


def test_render_parse_round_trip_canonical():
    ast = parse_query(DRUMS_LABEL_QUERY)
    assert parse_query(render_query(ast)) == ast


_var_names = st.from_regex(r"[a-z][a-zA-Z0-9_]{0,8}", fullmatch=True)
_iris = st.from_regex(r"http://[a-z]{1,8}\.example/[A-Za-z0-9_#/]{1,12}", fullmatch=True)
_tags = st.from_regex(r"[a-z]{2}", fullmatch=True)


@st.composite
def asts(draw):
    subject_is_iri = draw(st.booleans())
    obj = draw(_var_names)
    subject = IriTerm(draw(_iris)) if subject_is_iri else draw(_var_names.filter(lambda v: v != obj))
    has_filter = draw(st.booleans())
    filter_ = None
    if has_filter:
        filter_ = LangFilter(variable=obj, tag=draw(_tags))
    select_var = obj if subject_is_iri else draw(st.sampled_from([obj, subject]))
    return QueryAst(
        prefixes=(("skos", SKOS_NS),),
        select_var=select_var,
        pattern=TriplePattern(subject=subject, predicate=("skos", "prefLabel"), object=obj),
        filter=filter_,
    )


@given(asts())
def test_render_parse_round_trip_property(ast):
    assert parse_query(render_query(ast)) == ast


# --- evaluation ----------------------------------------------------------------


def test_evaluate_label_query_en(drums_store_en_pt):
    rows = evaluate(drums_store_en_pt, parse_query(DRUMS_LABEL_QUERY))
    assert rows == [BindingRow(bindings={"prefLabel": LiteralTerm("Drums", "en")})]


def test_evaluate_label_query_pt(drums_store_en_pt):
    rows = evaluate(drums_store_en_pt, parse_query(DRUMS_LABEL_QUERY.replace('"en "', '"pt"')))
    assert rows == [BindingRow(bindings={"prefLabel": LiteralTerm("Bateria", "pt")})]


def test_evaluate_on_empty_store():
    rows = evaluate(ConceptStore(), parse_query(DRUMS_LABEL_QUERY))
    assert rows == []


def test_evaluate_unfiltered_orders_by_language(drums_store_en_pt):
    text = f"PREFIX skos: <{SKOS_NS}>\nSELECT ?y WHERE {{ <{DRUMS_IRI}> skos:prefLabel ?y. }}"
    rows = evaluate(drums_store_en_pt, parse_query(text))
    assert [r["y"] for r in rows] == [LiteralTerm("Drums", "en"), LiteralTerm("Bateria", "pt")]


def test_evaluate_subject_variable_orders_by_iri():
    store = ConceptStore(
        concepts={
            "http://x#B": Concept("http://x#B", {"en": "Bee"}),
            "http://x#A": Concept("http://x#A", {"en": "Ay"}),
        }
    )
    text = f"PREFIX skos: <{SKOS_NS}>\nSELECT ?s WHERE {{ ?s skos:prefLabel ?y. }}"
    rows = evaluate(store, parse_query(text))
    assert [r["s"] for r in rows] == [IriTerm("http://x#A"), IriTerm("http://x#B")]


def test_evaluate_non_preflabel_predicate_is_empty(drums_store_en_pt):
    text = f"PREFIX skos: <{SKOS_NS}>\nSELECT ?y WHERE {{ <{DRUMS_IRI}> skos:altLabel ?y. }}"
    assert evaluate(drums_store_en_pt, parse_query(text)) == []


def test_build_label_query_matches_parsed_equivalent():
    built = build_label_query(DRUMS_IRI, "en")
    assert evaluate_ast_shape(built) == evaluate_ast_shape(parse_query(DRUMS_LABEL_QUERY))


def evaluate_ast_shape(ast: QueryAst):
    return (ast.pattern, ast.filter, ast.select_var)


# --- oracle equivalence ----------------------------------------------------------


_labels = st.text(
    alphabet="ABCDEFGabcdefghijklmnop", min_size=1, max_size=10
)


@st.composite
def stores(draw):
    n = draw(st.integers(min_value=0, max_value=5))
    concepts = {}
    for i in range(n):
        iri = f"http://gen.example/c{i}"
        langs = draw(st.sets(st.sampled_from(["en", "pt", "es", "fr"]), max_size=3))
        concepts[iri] = Concept(iri, {lang: draw(_labels) for lang in langs})
    store = ConceptStore(concepts=concepts)
    index: dict = {}
    for concept in concepts.values():
        for lang, label in concept.pref_labels.items():
            index.setdefault((lang, label.lower()), []).append(concept.iri)
    for v in index.values():
        v.sort()
    store.label_index = index
    return store


@given(stores(), st.sampled_from(["en", "pt", "es", "fr", "de"]))
def test_label_query_equals_pref_label_oracle(store, lang):
    for iri, concept in store.concepts.items():
        rows = evaluate(store, build_label_query(iri, lang))
        expected = pref_label(store, iri, lang)
        if expected is None:
            assert rows == []
        else:
            assert rows == [BindingRow(bindings={"prefLabel": LiteralTerm(expected, lang)})]


@given(stores())
def test_result_count_bounded_by_label_pairs(store):
    total_pairs = sum(len(c.pref_labels) for c in store.concepts.values())
    text = f"PREFIX skos: <{SKOS_NS}>\nSELECT ?y WHERE {{ ?s skos:prefLabel ?y. }}"
    assert len(evaluate(store, parse_query(text))) <= total_pairs


def test_oracle_equivalence_on_shipped_stores(registry):
    for ontology_id in registry.ids():
        store = registry.get(ontology_id)
        for iri, concept in store.concepts.items():
            for lang in ("en", "pt", "de"):
                rows = evaluate(store, build_label_query(iri, lang))
                expected = pref_label(store, iri, lang)
                if expected is None:
                    assert rows == []
                else:
                    assert len(rows) == 1
                    assert rows[0]["prefLabel"] == LiteralTerm(expected, lang)
