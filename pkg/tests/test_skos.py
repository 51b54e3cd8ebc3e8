import pytest

from sensebridge.errors import ConfigurationError, SkosLoadError, SkosParseError
from sensebridge.skos import OntologyRegistry, load_skos, pref_label, scan_for_term
from tests.conftest import DRUMS_IRI

WRAPPER = """<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:skos="http://www.w3.org/2004/02/skos/core#">
{body}
</rdf:RDF>
"""


def test_bilingual_excerpt_loads(drums_store_en_pt):
    concept = drums_store_en_pt.concepts[DRUMS_IRI]
    assert concept.pref_labels == {"en": "Drums", "pt": "Bateria"}
    assert concept.scheme_iri == "http://purl.org/ontology/mo/instruments#Musical_instruments"


def test_english_only_excerpt_loads(drums_store_en):
    concept = drums_store_en.concepts[DRUMS_IRI]
    assert concept.pref_labels == {"en": "Drums"}


def test_excerpts_differ_only_in_pt_label(drums_store_en, drums_store_en_pt):
    a = drums_store_en.concepts[DRUMS_IRI]
    b = drums_store_en_pt.concepts[DRUMS_IRI]
    assert set(drums_store_en.concepts) == set(drums_store_en_pt.concepts)
    assert a.scheme_iri == b.scheme_iri
    assert a.narrower == b.narrower
    diff = {k: v for k, v in b.pref_labels.items() if a.pref_labels.get(k) != v}
    assert diff == {"pt": "Bateria"}


def test_empty_document_gives_empty_store():
    store = load_skos(WRAPPER.format(body=""))
    assert len(store) == 0


def test_malformed_xml_raises_with_position():
    with pytest.raises(SkosParseError) as exc:
        load_skos("<rdf:RDF><unclosed>")
    assert exc.value.line is not None


def test_duplicate_language_label_rejected():
    body = """
  <skos:Concept rdf:about="http://x#C">
    <skos:prefLabel xml:lang="en">One</skos:prefLabel>
    <skos:prefLabel xml:lang="en">Two</skos:prefLabel>
  </skos:Concept>"""
    with pytest.raises(SkosLoadError) as exc:
        load_skos(WRAPPER.format(body=body))
    assert "http://x#C" in str(exc.value)


def test_unknown_elements_are_ignored():
    body = """
  <skos:ConceptScheme rdf:about="http://x#S"/>
  <skos:Concept rdf:about="http://x#C">
    <skos:prefLabel xml:lang="en">Thing</skos:prefLabel>
    <skos:altLabel xml:lang="en">Alt</skos:altLabel>
    <skos:definition xml:lang="en">Defined.</skos:definition>
  </skos:Concept>"""
    store = load_skos(WRAPPER.format(body=body))
    assert list(store.concepts) == ["http://x#C"]
    assert store.concepts["http://x#C"].pref_labels == {"en": "Thing"}


def test_language_tags_lowercased():
    body = """
  <skos:Concept rdf:about="http://x#C">
    <skos:prefLabel xml:lang="EN">Thing</skos:prefLabel>
  </skos:Concept>"""
    store = load_skos(WRAPPER.format(body=body))
    assert store.concepts["http://x#C"].pref_labels == {"en": "Thing"}


def test_malformed_language_tag_rejected():
    body = """
  <skos:Concept rdf:about="http://x#C">
    <skos:prefLabel xml:lang="pt-BR">Coisa</skos:prefLabel>
  </skos:Concept>"""
    with pytest.raises(SkosLoadError):
        load_skos(WRAPPER.format(body=body))


def test_nested_narrower_recorded(registry):
    store = registry.get("music_ontology")
    percussion = store.concepts["http://purl.org/ontology/mo/mit#Percussion"]
    assert DRUMS_IRI in percussion.narrower
    assert DRUMS_IRI in store.concepts


# --- scans and label lookups -------------------------------------------------


def test_scan_case_insensitive(drums_store_en_pt):
    concept = scan_for_term(drums_store_en_pt, "bateria", "pt")
    assert concept is not None and concept.iri == DRUMS_IRI


def test_scan_exact_label_self_lookup(drums_store_en_pt):
    assert scan_for_term(drums_store_en_pt, "drums", "en").iri == DRUMS_IRI


def test_scan_miss_returns_none(registry):
    store = registry.get("music_ontology")
    assert scan_for_term(store, "está", "pt") is None


def test_scan_accent_sensitive(registry):
    store = registry.get("music_ontology")
    assert scan_for_term(store, "percussão", "pt") is not None
    assert scan_for_term(store, "percussao", "pt") is None


def test_scan_multiple_matches_smallest_iri():
    body = """
  <skos:Concept rdf:about="http://x#B">
    <skos:prefLabel xml:lang="en">Same</skos:prefLabel>
  </skos:Concept>
  <skos:Concept rdf:about="http://x#A">
    <skos:prefLabel xml:lang="en">Same</skos:prefLabel>
  </skos:Concept>"""
    store = load_skos(WRAPPER.format(body=body))
    assert scan_for_term(store, "same", "en").iri == "http://x#A"


def test_scan_empty_label_rejected(drums_store_en_pt):
    with pytest.raises(ValueError):
        scan_for_term(drums_store_en_pt, "", "en")


def test_pref_label_lookup(drums_store_en_pt):
    assert pref_label(drums_store_en_pt, DRUMS_IRI, "en") == "Drums"
    assert pref_label(drums_store_en_pt, DRUMS_IRI, "pt") == "Bateria"
    assert pref_label(drums_store_en_pt, "http://x#missing", "en") is None
    assert pref_label(drums_store_en_pt, DRUMS_IRI, "fr") is None


def test_scan_pref_label_round_trip(registry):
    for ontology_id in registry.ids():
        store = registry.get(ontology_id)
        for concept in store.concepts.values():
            for lang, label in concept.pref_labels.items():
                found = scan_for_term(store, label, lang)
                assert found is not None
                assert found.pref_labels[lang].lower() == label.lower()


def test_label_index_matches_rebuild(registry):
    store = registry.get("music_ontology")
    rebuilt: dict = {}
    for concept in store.concepts.values():
        for lang, label in concept.pref_labels.items():
            rebuilt.setdefault((lang, label.lower()), []).append(concept.iri)
    for iris in rebuilt.values():
        iris.sort()
    assert rebuilt == store.label_index


# --- registry -----------------------------------------------------------------


def test_registry_lists_shipped_ontologies(registry):
    assert registry.ids() == [
        "electronic_ontology",
        "financial_ontology",
        "music_ontology",
        "sports_ontology",
        "vehicle_ontology",
    ]


def test_registry_unknown_id_raises(registry):
    with pytest.raises(ConfigurationError):
        registry.get("nope")


def test_registry_missing_directory_raises(tmp_path):
    with pytest.raises(ConfigurationError):
        OntologyRegistry(tmp_path / "absent")
