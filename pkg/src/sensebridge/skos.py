"""SKOS concept store: RDF/XML subset parser, label scans, and the ontology registry.

The parser supports exactly the constructs this package's ontology fixtures
use: ``skos:Concept`` (with ``rdf:about``), ``skos:prefLabel`` (with
``xml:lang``), ``skos:inScheme`` (with ``rdf:resource``), and nested
``skos:narrower`` concepts.  Anything else in a document is skipped
without error.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigurationError, SkosLoadError, SkosParseError

SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"

_CONCEPT_TAG = f"{{{SKOS_NS}}}Concept"
_PREF_LABEL_TAG = f"{{{SKOS_NS}}}prefLabel"
_IN_SCHEME_TAG = f"{{{SKOS_NS}}}inScheme"
_NARROWER_TAG = f"{{{SKOS_NS}}}narrower"
_ABOUT_ATTR = f"{{{RDF_NS}}}about"
_RESOURCE_ATTR = f"{{{RDF_NS}}}resource"
_XML_LANG_ATTR = "{http://www.w3.org/XML/1998/namespace}lang"

_LANG_RE = re.compile(r"^[a-z]{2}$")


@dataclass
class Concept:
    iri: str
    pref_labels: dict[str, str] = field(default_factory=dict)
    scheme_iri: str | None = None
    narrower: list[str] = field(default_factory=list)


@dataclass
class ConceptStore:
    concepts: dict[str, Concept] = field(default_factory=dict)
    label_index: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.concepts)


def load_skos(document: str) -> ConceptStore:
    """Parse an RDF/XML subset document into a :class:`ConceptStore`.

    Raises :class:`SkosParseError` on malformed XML (with position) and
    :class:`SkosLoadError` when one concept declares two preferred labels
    for the same language.
    """
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        line, column = exc.position if exc.position else (None, None)
        raise SkosParseError(str(exc.msg if hasattr(exc, "msg") else exc), line, column) from exc

    store = ConceptStore()
    _walk(root, store)
    _index_labels(store)
    return store


def load_skos_file(path: str | Path) -> ConceptStore:
    return load_skos(Path(path).read_text(encoding="utf-8"))


def _walk(elem: ET.Element, store: ConceptStore) -> None:
    for child in elem:
        if child.tag == _CONCEPT_TAG:
            _parse_concept(child, store)
        else:
            _walk(child, store)


def _parse_concept(elem: ET.Element, store: ConceptStore) -> str | None:
    iri = elem.get(_ABOUT_ATTR)
    if not iri:
        # Out of subset; still look for nested concepts.
        _walk(elem, store)
        return None
    concept = store.concepts.get(iri)
    if concept is None:
        concept = Concept(iri=iri)
        store.concepts[iri] = concept

    for child in elem:
        if child.tag == _PREF_LABEL_TAG:
            lang = child.get(_XML_LANG_ATTR)
            if lang is None:
                continue
            lang = lang.strip().lower()
            if not _LANG_RE.match(lang):
                raise SkosLoadError(f"{iri}: malformed language tag {lang!r}")
            if lang in concept.pref_labels:
                raise SkosLoadError(f"{iri}: duplicate prefLabel for language {lang!r}")
            concept.pref_labels[lang] = (child.text or "").strip()
        elif child.tag == _IN_SCHEME_TAG:
            resource = child.get(_RESOURCE_ATTR)
            if resource:
                concept.scheme_iri = resource
        elif child.tag == _NARROWER_TAG:
            for nested in child:
                if nested.tag == _CONCEPT_TAG:
                    nested_iri = _parse_concept(nested, store)
                    if nested_iri:
                        concept.narrower.append(nested_iri)
        # anything else: skipped without error
    return iri


def _index_labels(store: ConceptStore) -> None:
    index: dict[tuple[str, str], list[str]] = {}
    for concept in store.concepts.values():
        for lang, label in concept.pref_labels.items():
            index.setdefault((lang, label.lower()), []).append(concept.iri)
    for iris in index.values():
        iris.sort()
    store.label_index = index


def scan_for_term(store: ConceptStore, label: str, lang: str) -> Concept | None:
    """Concept whose preferred label in ``lang`` equals ``label`` (case-insensitive).

    When several concepts share the label, the one with the smallest IRI
    wins; None when no concept matches.
    """
    if not label:
        raise ValueError("label must be non-empty")
    iris = store.label_index.get((lang.lower(), label.lower()))
    if not iris:
        return None
    return store.concepts[iris[0]]


def pref_label(store: ConceptStore, iri: str, lang: str) -> str | None:
    concept = store.concepts.get(iri)
    if concept is None:
        return None
    return concept.pref_labels.get(lang.lower())


class OntologyRegistry:
    """Directory-backed registry: one ``<ontology_id>.xml`` file per ontology.

    All documents are parsed eagerly at construction so configuration
    errors surface at startup rather than mid-dialogue.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        if not self.directory.is_dir():
            raise ConfigurationError(f"ontology directory not found: {self.directory}")
        self._stores: dict[str, ConceptStore] = {}
        for path in sorted(self.directory.glob("*.xml")):
            self._stores[path.stem] = load_skos_file(path)

    def ids(self) -> list[str]:
        return sorted(self._stores)

    def __contains__(self, ontology_id: str) -> bool:
        return ontology_id in self._stores

    def get(self, ontology_id: str) -> ConceptStore:
        try:
            return self._stores[ontology_id]
        except KeyError:
            raise ConfigurationError(f"unknown ontology id: {ontology_id!r}") from None
