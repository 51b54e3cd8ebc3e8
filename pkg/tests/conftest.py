"""Shared fixtures: packaged data, stores, and the canonical query/excerpt texts."""

from __future__ import annotations

import pytest

import sensebridge
from sensebridge import context as context_mod
from sensebridge.lexicon import load_lexicon_file
from sensebridge.skos import OntologyRegistry, load_skos
from sensebridge.translation import MockStatisticalMt, load_phrase_table_file

# The label query the pipeline issues, as captured from the running tool
# (note the stray space inside the language tag, preserved on purpose).
DRUMS_LABEL_QUERY = """PREFIX skos: <http://www.w3.org/2004/02/skos/core#>

SELECT ?prefLabel
WHERE {<http://purl.org/ontology/mo/mit#Drums> skos:prefLabel ?prefLabel.
      FILTER (lang(?prefLabel) = "en ")}"""

DRUMS_IRI = "http://purl.org/ontology/mo/mit#Drums"

# Published music vocabulary excerpt: English label only.
DRUMS_EXCERPT_EN = """<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:skos="http://www.w3.org/2004/02/skos/core#">
  <skos:narrower>
    <skos:Concept rdf:about="http://purl.org/ontology/mo/mit#Drums">
      <skos:prefLabel xml:lang="en">Drums</skos:prefLabel>
      <skos:inScheme rdf:resource="http://purl.org/ontology/mo/instruments#Musical_instruments"/>
    </skos:Concept>
  </skos:narrower>
</rdf:RDF>
"""

# Same excerpt hand-extended with the Portuguese label.
DRUMS_EXCERPT_EN_PT = """<?xml version="1.0" encoding="UTF-8"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:skos="http://www.w3.org/2004/02/skos/core#">
  <skos:narrower>
    <skos:Concept rdf:about="http://purl.org/ontology/mo/mit#Drums">
      <skos:prefLabel xml:lang="en">Drums</skos:prefLabel>
      <skos:prefLabel xml:lang="pt">Bateria</skos:prefLabel>
      <skos:inScheme rdf:resource="http://purl.org/ontology/mo/instruments#Musical_instruments"/>
    </skos:Concept>
  </skos:narrower>
</rdf:RDF>
"""


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon_file(sensebridge.data_path("lexicon_pt.tsv"))


@pytest.fixture(scope="session")
def registry():
    return OntologyRegistry(sensebridge.data_path("ontologies"))


@pytest.fixture(scope="session")
def contexts():
    return context_mod.load_contexts_file(sensebridge.data_path("contexts.tsv"))


@pytest.fixture(scope="session")
def phrase_table():
    return load_phrase_table_file(sensebridge.data_path("phrase_table_pt_en.tsv"))


@pytest.fixture(scope="session")
def backend(phrase_table):
    return MockStatisticalMt(phrase_table)


@pytest.fixture(scope="session")
def correlation_log():
    return context_mod.load_message_log_file(
        sensebridge.data_path("logs", "correlation_log.tsv")
    )


@pytest.fixture(scope="session")
def music_chat_log():
    return context_mod.load_message_log_file(
        sensebridge.data_path("logs", "music_chat_log.tsv")
    )


@pytest.fixture()
def drums_store_en():
    return load_skos(DRUMS_EXCERPT_EN)


@pytest.fixture()
def drums_store_en_pt():
    return load_skos(DRUMS_EXCERPT_EN_PT)
