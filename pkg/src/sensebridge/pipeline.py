"""Message pipeline: morphology -> sense resolution -> replacement -> MT.

Processing order per message:

1. advance the session iteration (possibly resetting the meaning window);
2. tokenize, tag, apply the "da" repair;
3. collect noun/verb candidates;
4. resolve each candidate left to right: locution members are skipped, the
   temporary log takes precedence, then the session ontology is scanned
   and queried for the target-language label;
5. record a binding for every substitution;
6. hand the replaced text to the translation backend;
7. append the exchange to the session history.

Every step is captured in a :class:`TranslationTrace` so clients can show
exactly why a word was (or was not) replaced.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable

from . import dialogue, morphology, skos, sparql, translation
from .dialogue import Session
from .errors import ConfigurationError, PipelineError
from .lexicon import Lexicon
from .morphology import HomographCandidate, TaggedSentence
from .skos import OntologyRegistry
from .translation import MtBackend, Replacement, ResolutionSource


class SkipReason(enum.Enum):
    LOCUTION = "locution"
    NOT_IN_ONTOLOGY = "not_in_ontology"
    NO_ONTOLOGY = "no_ontology"


@dataclass(frozen=True)
class CandidateDecision:
    word: str
    skipped_reason: SkipReason | None = None
    resolution_source: ResolutionSource | None = None
    concept_iri: str | None = None
    target_word: str | None = None


@dataclass
class TranslationTrace:
    tagged: TaggedSentence
    candidates: list[HomographCandidate]
    decisions: list[CandidateDecision]
    replacements: list[Replacement]
    pre_mt_text: str
    final_text: str
    iteration: int
    window_reset: bool

    def to_dict(self) -> dict[str, Any]:
        return trace_to_dict(self)


@dataclass(frozen=True)
class TranslationResult:
    final_text: str
    trace: TranslationTrace


def resolve_candidate(
    session: Session,
    candidate: HomographCandidate,
    registry: OntologyRegistry | None,
) -> CandidateDecision:
    """Decide how one candidate is handled, without touching the sentence.

    Locution members are decided before any store access; the temporary
    log beats the ontology; a scan miss (or a hit without a target-language
    label) falls through to the backend untouched.
    """
    word = candidate.surface.lower()
    if candidate.in_locution:
        return CandidateDecision(word=word, skipped_reason=SkipReason.LOCUTION)

    bound = dialogue.lookup_binding(session, word)
    if bound is not None:
        return CandidateDecision(
            word=word, resolution_source=ResolutionSource.TEMP_LOG, target_word=bound
        )

    if session.ontology_id is None:
        return CandidateDecision(word=word, skipped_reason=SkipReason.NO_ONTOLOGY)
    if registry is None:
        raise ConfigurationError(
            f"session is bound to {session.ontology_id!r} but no registry was given"
        )
    store = registry.get(session.ontology_id)

    concept = skos.scan_for_term(store, word, session.source_lang)
    if concept is None:
        return CandidateDecision(word=word, skipped_reason=SkipReason.NOT_IN_ONTOLOGY)

    query = sparql.build_label_query(concept.iri, session.target_lang)
    rows = sparql.evaluate(store, query)
    if not rows:
        # Term exists but carries no label in the target language.
        return CandidateDecision(word=word, skipped_reason=SkipReason.NOT_IN_ONTOLOGY)
    literal = rows[0][query.select_var]
    assert isinstance(literal, sparql.LiteralTerm)
    return CandidateDecision(
        word=word,
        resolution_source=ResolutionSource.ONTOLOGY,
        concept_iri=concept.iri,
        target_word=literal.text.lower(),
    )


def translate_message(
    session: Session,
    text: str,
    backend: MtBackend,
    lexicon: Lexicon,
    registry: OntologyRegistry | None = None,
    sender: str = "",
    on_record: Callable[[dict[str, Any]], None] | None = None,
) -> TranslationResult:
    """Run one message through the whole pipeline, updating the session."""
    iteration, window_reset = dialogue.advance_iteration(session)

    tagged = morphology.analyze(text, lexicon)
    candidates = morphology.find_candidates(tagged)

    decisions: list[CandidateDecision] = []
    replacements: list[Replacement] = []
    working = tagged
    for candidate in candidates:
        decision = resolve_candidate(session, candidate, registry)
        decisions.append(decision)
        if decision.target_word is None:
            continue
        result = translation.replace(
            working, candidate.token_index, decision.target_word,
            source=decision.resolution_source,
        )
        working = result.sentence
        replacements.append(result.replacement)

    for replacement in replacements:
        dialogue.record_binding(session, replacement.original, replacement.substituted)

    pre_mt_text = working.render()
    trace = TranslationTrace(
        tagged=tagged,
        candidates=candidates,
        decisions=decisions,
        replacements=replacements,
        pre_mt_text=pre_mt_text,
        final_text="",
        iteration=iteration,
        window_reset=window_reset,
    )

    try:
        final_text = backend.translate(pre_mt_text, session.source_lang, session.target_lang)
    except Exception as exc:
        raise PipelineError(f"backend {backend.name!r} failed: {exc}", trace=trace) from exc
    trace.final_text = final_text

    entry = dialogue.HistoryEntry(
        sender=sender, original=text, translated=final_text, trace=trace.to_dict()
    )
    session.history.append(entry)
    if on_record is not None:
        on_record(
            {
                "seq": len(session.history),
                "sender": sender,
                "original": text,
                "translated": final_text,
                "trace": entry.trace,
                "iteration": iteration,
                "window_reset": window_reset,
            }
        )
    return TranslationResult(final_text=final_text, trace=trace)


# --- trace serialization ----------------------------------------------------


def trace_to_dict(trace: TranslationTrace) -> dict[str, Any]:
    return {
        "tagged": {
            "original": trace.tagged.original,
            "tokens": [
                {
                    "surface": t.surface,
                    "normalized": t.normalized,
                    "pos": t.pos.value,
                    "index": t.index,
                    "trailing_punct": t.trailing_punct,
                }
                for t in trace.tagged.tokens
            ],
        },
        "candidates": [
            {
                "token_index": c.token_index,
                "surface": c.surface,
                "in_locution": c.in_locution,
            }
            for c in trace.candidates
        ],
        "decisions": [
            {
                "word": d.word,
                "skipped_reason": d.skipped_reason.value if d.skipped_reason else None,
                "resolution_source": d.resolution_source.value if d.resolution_source else None,
                "concept_iri": d.concept_iri,
                "target_word": d.target_word,
            }
            for d in trace.decisions
        ],
        "replacements": [
            {
                "token_index": r.token_index,
                "original": r.original,
                "substituted": r.substituted,
                "source": r.source.value,
            }
            for r in trace.replacements
        ],
        "pre_mt_text": trace.pre_mt_text,
        "final_text": trace.final_text,
        "iteration": trace.iteration,
        "window_reset": trace.window_reset,
    }
