"""Evaluation harness: semantic-correctness scoring of pipeline variants.

A corpus case names a source sentence, the homograph under test, its
context, the target-language phrase that must appear in a correct output,
and optionally a phrase that must not.  Each case runs in a fresh session
(the temporary log never leaks between cases), once per configured
variant, and the report aggregates the correct fraction per
(variant, context) cell.

Corpus document: UTF-8 TSV lines
``source_sentence<TAB>homograph<TAB>context_name<TAB>expected_target[<TAB>forbidden_target]``
with ``#`` comments and blank lines ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import dialogue, pipeline
from .context import ContextDomain
from .errors import ConfigurationError, CorpusLoadError
from .lexicon import Lexicon
from .morphology import tokenize
from .skos import OntologyRegistry
from .translation import MtBackend


@dataclass(frozen=True)
class EvalCase:
    source_sentence: str
    homograph: str
    context_name: str
    expected_target: str
    forbidden_target: str | None = None

    def __post_init__(self):
        tokens = {t.normalized for t in tokenize(self.source_sentence)}
        if self.homograph.lower() not in tokens:
            raise ValueError(
                f"homograph {self.homograph!r} does not occur in {self.source_sentence!r}"
            )


@dataclass(frozen=True)
class EvalVariant:
    """A named system configuration: backend alone, or the full pipeline."""

    name: str
    use_pipeline: bool


DEFAULT_VARIANTS = (
    EvalVariant(name="baseline", use_pipeline=False),
    EvalVariant(name="disambig", use_pipeline=True),
)


@dataclass
class EvalReport:
    rows: dict[tuple[str, str], float]
    counts: dict[str, int]
    variant_names: list[str]
    context_names: list[str]

    def fraction(self, variant: str, context: str) -> float:
        return self.rows[(variant, context)]

    def to_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "rows": [
                {
                    "variant": variant,
                    "context": context,
                    "correct_fraction": self.rows[(variant, context)],
                }
                for variant in self.variant_names
                for context in self.context_names
            ],
        }

    def render_table(self) -> str:
        """Aligned text table: one row per variant, one column per context."""
        header = ["variant"] + self.context_names
        lines = [header]
        for variant in self.variant_names:
            lines.append(
                [variant]
                + [f"{self.rows[(variant, ctx)]:.2f}" for ctx in self.context_names]
            )
        widths = [max(len(row[i]) for row in lines) for i in range(len(header))]
        rendered = []
        for row in lines:
            rendered.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
        counts = "  ".join(f"{ctx}={self.counts[ctx]}" for ctx in self.context_names)
        rendered.append(f"cases per context: {counts}")
        return "\n".join(rendered)


def _phrase_tokens(text: str) -> list[str]:
    return [t.normalized for t in tokenize(text)]


def _contains_phrase(output_tokens: list[str], phrase: str) -> bool:
    needle = _phrase_tokens(phrase)
    if not needle:
        return False
    span = len(needle)
    return any(
        output_tokens[i : i + span] == needle
        for i in range(len(output_tokens) - span + 1)
    )


def semantic_correctness(output: str, case: EvalCase) -> bool:
    """Whole-token, case-insensitive phrase check of an output sentence.

    True when the expected target occurs and the forbidden target (when
    given) does not.
    """
    tokens = _phrase_tokens(output)
    if not _contains_phrase(tokens, case.expected_target):
        return False
    if case.forbidden_target and _contains_phrase(tokens, case.forbidden_target):
        return False
    return True


def load_corpus(text: str) -> list[EvalCase]:
    cases: list[EvalCase] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) not in (4, 5):
            raise CorpusLoadError(line_no, f"expected 4 or 5 tab-separated fields, got {len(fields)}")
        try:
            cases.append(
                EvalCase(
                    source_sentence=fields[0],
                    homograph=fields[1],
                    context_name=fields[2],
                    expected_target=fields[3],
                    forbidden_target=fields[4] if len(fields) == 5 and fields[4] else None,
                )
            )
        except ValueError as exc:
            raise CorpusLoadError(line_no, str(exc)) from exc
    return cases


def load_corpus_file(path: str | Path) -> list[EvalCase]:
    return load_corpus(Path(path).read_text(encoding="utf-8"))


def run_eval(
    corpus: list[EvalCase],
    variants: tuple[EvalVariant, ...],
    *,
    lexicon: Lexicon,
    registry: OntologyRegistry,
    contexts: list[ContextDomain],
    backend: MtBackend,
    source_lang: str = "pt",
    target_lang: str = "en",
) -> EvalReport:
    """Score every variant on every case; fresh session per case."""
    contexts_by_name = {c.name: c for c in contexts}
    unresolved = sorted(
        {case.context_name for case in corpus}
        - set(contexts_by_name)
    )
    if unresolved:
        offenders = [
            case.source_sentence for case in corpus if case.context_name in unresolved
        ]
        raise ConfigurationError(
            f"corpus references unknown contexts {unresolved}; offending cases: {offenders}"
        )

    context_names = sorted({case.context_name for case in corpus})
    counts = {name: 0 for name in context_names}
    correct = {(v.name, name): 0 for v in variants for name in context_names}

    for case in corpus:
        counts[case.context_name] += 1
        for variant in variants:
            if variant.use_pipeline:
                context = contexts_by_name[case.context_name]
                session = dialogue.create_session(
                    source_lang, target_lang, context=context, registry=registry
                )
                result = pipeline.translate_message(
                    session, case.source_sentence, backend, lexicon, registry
                )
                output = result.final_text
            else:
                output = backend.translate(case.source_sentence, source_lang, target_lang)
            if semantic_correctness(output, case):
                correct[(variant.name, case.context_name)] += 1

    rows = {
        (v.name, name): correct[(v.name, name)] / counts[name] if counts[name] else 0.0
        for v in variants
        for name in context_names
    }
    return EvalReport(
        rows=rows,
        counts=counts,
        variant_names=[v.name for v in variants],
        context_names=context_names,
    )


def report_to_json(report: EvalReport) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2)
