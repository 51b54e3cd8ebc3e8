"""Pre-translation word replacement, the MT backend contract, and the mock SMT.

The mock backend reproduces the frequency-driven behaviour of statistical
engines on short sentences: greedy left-to-right longest-match over a
phrase table, always emitting the highest-frequency target.  Words absent
from the table pass through unchanged, which is exactly what lets a
pre-translated (already target-language) word survive the backend.

Phrase-table document: UTF-8 TSV lines ``source_phrase<TAB>target_phrase
<TAB>frequency``; phrases are space-separated normalized tokens; ``#``
comments and blank lines are ignored; duplicate (source, target) pairs
have their frequencies summed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace as _dc_replace
from pathlib import Path
from typing import Protocol

from .errors import PhraseTableLoadError
from .morphology import TaggedSentence, tokenize

MAX_PHRASE_TOKENS = 3


class ResolutionSource(enum.Enum):
    TEMP_LOG = "temp_log"
    ONTOLOGY = "ontology"


@dataclass(frozen=True)
class Replacement:
    token_index: int
    original: str
    substituted: str
    source: ResolutionSource


@dataclass(frozen=True)
class ReplacementResult:
    text: str
    sentence: TaggedSentence
    replacement: Replacement


def replace(
    sentence: TaggedSentence,
    token_index: int,
    target_word: str,
    source: ResolutionSource = ResolutionSource.ONTOLOGY,
) -> ReplacementResult:
    """Swap one token's surface for ``target_word``, leaving the rest intact."""
    if not 0 <= token_index < len(sentence.tokens):
        raise IndexError(f"token index {token_index} out of range")
    if not target_word:
        raise ValueError("target word must be non-empty")
    old = sentence.tokens[token_index]
    new_token = _dc_replace(old, surface=target_word, normalized=target_word.lower())
    tokens = list(sentence.tokens)
    tokens[token_index] = new_token
    new_sentence = TaggedSentence(original=sentence.original, tokens=tuple(tokens))
    replacement = Replacement(
        token_index=token_index,
        original=old.surface,
        substituted=target_word,
        source=source,
    )
    return ReplacementResult(text=new_sentence.render(), sentence=new_sentence, replacement=replacement)


@dataclass
class PhraseTable:
    entries: dict[str, list[tuple[str, int]]]

    def __len__(self) -> int:
        return len(self.entries)

    def best(self, source_phrase: str) -> str | None:
        targets = self.entries.get(source_phrase)
        return targets[0][0] if targets else None


def load_phrase_table(text: str) -> PhraseTable:
    entries: dict[str, dict[str, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise PhraseTableLoadError(line_no, f"expected 3 tab-separated fields, got {len(fields)}")
        source = " ".join(fields[0].strip().lower().split())
        target = fields[1].strip()
        if not source or not target:
            raise PhraseTableLoadError(line_no, "empty phrase field")
        if len(source.split()) > MAX_PHRASE_TOKENS:
            raise PhraseTableLoadError(line_no, f"source phrase longer than {MAX_PHRASE_TOKENS} tokens")
        try:
            frequency = int(fields[2].strip())
        except ValueError:
            raise PhraseTableLoadError(line_no, f"frequency is not an integer: {fields[2].strip()!r}") from None
        if frequency <= 0:
            raise PhraseTableLoadError(line_no, f"frequency must be positive, got {frequency}")
        entries.setdefault(source, {})
        entries[source][target] = entries[source].get(target, 0) + frequency
    sorted_entries = {
        source: sorted(targets.items(), key=lambda item: (-item[1], item[0]))
        for source, targets in entries.items()
    }
    return PhraseTable(entries=sorted_entries)


def load_phrase_table_file(path: str | Path) -> PhraseTable:
    return load_phrase_table(Path(path).read_text(encoding="utf-8"))


def mock_translate(table: PhraseTable, text: str, source_lang: str, target_lang: str) -> str:
    """Frequency-greedy phrase translation of ``text``.

    Scans normalized tokens left to right trying 3-, then 2-, then 1-token
    windows; a window never spans a token that carries trailing
    punctuation (punctuation acts as a phrase boundary).  Matched spans
    emit their highest-frequency target plus the span's final punctuation;
    unmatched tokens pass through in normalized (lowercase) form.
    """
    tokens = tokenize(text)
    output: list[str] = []
    i = 0
    while i < len(tokens):
        emitted = False
        for width in range(MAX_PHRASE_TOKENS, 0, -1):
            if i + width > len(tokens):
                continue
            span = tokens[i : i + width]
            if any(t.trailing_punct for t in span[:-1]):
                continue
            phrase = " ".join(t.normalized for t in span)
            target = table.best(phrase)
            if target is not None:
                output.append(target + span[-1].trailing_punct)
                i += width
                emitted = True
                break
        if not emitted:
            token = tokens[i]
            output.append(token.normalized + token.trailing_punct)
            i += 1
    return " ".join(output)


class MtBackend(Protocol):
    """Contract every machine-translation backend implements."""

    name: str

    def translate(self, text: str, source_lang: str, target_lang: str) -> str: ...


class MockStatisticalMt:
    """Deterministic phrase-table backend used in tests and evaluation."""

    def __init__(self, table: PhraseTable, name: str = "mock-smt"):
        self.table = table
        self.name = name

    def translate(self, text: str, source_lang: str, target_lang: str) -> str:
        return mock_translate(self.table, text, source_lang, target_lang)
