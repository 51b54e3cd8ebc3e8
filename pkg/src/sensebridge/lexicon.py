"""Morphological dictionary: surface form -> part-of-speech lookup.

The lexicon document format is plain UTF-8 text, one entry per line:

    surface<TAB>primary_pos[<TAB>alt_pos ...]

Lines starting with ``#`` and blank lines are ignored.  POS names are the
lowercase names of :class:`PosTag`.  Later duplicate surfaces override
earlier ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LexiconLoadError


class PosTag(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    PRONOUN = "pronoun"
    PREPOSITION = "preposition"
    ARTICLE = "article"
    CONJUNCTION = "conjunction"
    NUMERAL = "numeral"
    INTERJECTION = "interjection"
    PUNCTUATION = "punctuation"
    UNKNOWN = "unknown"


_POS_BY_NAME = {tag.value: tag for tag in PosTag}


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    primary_pos: PosTag
    alternates: tuple[PosTag, ...] = ()

    def __post_init__(self):
        if not self.surface:
            raise ValueError("entry surface must be non-empty")
        if self.surface != self.surface.lower():
            raise ValueError(f"entry surface must be lowercase: {self.surface!r}")
        if self.primary_pos is PosTag.UNKNOWN:
            raise ValueError(f"{self.surface!r}: primary POS may not be 'unknown'")
        if len(set(self.alternates)) != len(self.alternates):
            raise ValueError(f"{self.surface!r}: duplicate alternate POS")
        if self.primary_pos in self.alternates:
            raise ValueError(f"{self.surface!r}: primary POS repeated in alternates")


@dataclass
class Lexicon:
    """Immutable-after-load dictionary keyed by lowercase surface form."""

    entries: dict[str, LexiconEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface.lower() in self.entries

    def pos_of(self, surface: str) -> PosTag:
        """Primary POS of ``surface`` (case-insensitive), UNKNOWN when absent."""
        entry = self.entries.get(surface.lower())
        return entry.primary_pos if entry is not None else PosTag.UNKNOWN

    def entry(self, surface: str) -> LexiconEntry | None:
        return self.entries.get(surface.lower())


def pos_of(lexicon: Lexicon, surface: str) -> PosTag:
    return lexicon.pos_of(surface)


def load_lexicon(text: str) -> Lexicon:
    """Parse a lexicon document into a :class:`Lexicon`.

    Raises :class:`LexiconLoadError` (with the 1-based line number) on a
    wrong field count or an unrecognized POS name.
    """
    entries: dict[str, LexiconEntry] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise LexiconLoadError(line_no, f"expected at least 2 tab-separated fields, got {len(fields)}")
        surface = fields[0].strip().lower()
        if not surface:
            raise LexiconLoadError(line_no, "empty surface field")
        tags: list[PosTag] = []
        for name in fields[1:]:
            tag = _POS_BY_NAME.get(name.strip())
            if tag is None:
                raise LexiconLoadError(line_no, f"unknown POS name {name.strip()!r}")
            tags.append(tag)
        try:
            entry = LexiconEntry(surface, tags[0], tuple(tags[1:]))
        except ValueError as exc:
            raise LexiconLoadError(line_no, str(exc)) from exc
        entries[surface] = entry
    return Lexicon(entries)


def load_lexicon_file(path: str | Path) -> Lexicon:
    return load_lexicon(Path(path).read_text(encoding="utf-8"))
