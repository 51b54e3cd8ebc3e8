"""Sentence fragmentation, tagging, and homograph candidate detection.

The morphology layer splits a chat message into tokens, labels each token
with its dictionary POS, repairs the systematic mis-tagging of "da", and
marks the noun/verb tokens that need sense resolution.  Noun locutions
(noun + preposition + noun, e.g. "bateria do carro") are flagged so the
pipeline can leave them to the statistical backend, whose neighbour-based
frequencies already pick the right sense for them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace as _dc_replace

from .lexicon import Lexicon, PosTag

# Punctuation stripped off token ends (and splitting tokens internally).
PUNCT_CHARS = ".,!?;:"
_RUN_RE = re.compile(rf"[^{re.escape(PUNCT_CHARS)}]+|[{re.escape(PUNCT_CHARS)}]+")


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    pos: PosTag
    index: int
    trailing_punct: str = ""


@dataclass(frozen=True)
class TaggedSentence:
    original: str
    tokens: tuple[Token, ...]

    def render(self) -> str:
        """Space-joined surface forms with their trailing punctuation."""
        return " ".join(t.surface + t.trailing_punct for t in self.tokens)


@dataclass(frozen=True)
class HomographCandidate:
    token_index: int
    surface: str
    in_locution: bool


def tokenize(text: str) -> list[Token]:
    """Split ``text`` on whitespace into tokens with POS left UNKNOWN.

    Terminal punctuation (``. , ! ? ; :``) is stripped into
    ``trailing_punct``; punctuation inside a chunk splits it there, so
    "ok,e" becomes the tokens "ok" (trailing ",") and "e".
    """
    tokens: list[Token] = []
    for chunk in text.split():
        runs = _RUN_RE.findall(chunk)
        i = 0
        while i < len(runs):
            run = runs[i]
            if run[0] in PUNCT_CHARS:
                # Punctuation with no word before it in this chunk.
                tokens.append(_make_token(run, "", len(tokens)))
                i += 1
                continue
            trailing = ""
            if i + 1 < len(runs) and runs[i + 1][0] in PUNCT_CHARS:
                trailing = runs[i + 1]
                i += 1
            tokens.append(_make_token(run, trailing, len(tokens)))
            i += 1
    return tokens


def _make_token(surface: str, trailing: str, index: int) -> Token:
    return Token(surface=surface, normalized=surface.lower(), pos=PosTag.UNKNOWN,
                 index=index, trailing_punct=trailing)


def tag(tokens: list[Token], lexicon: Lexicon, original: str | None = None) -> TaggedSentence:
    """Label every token with its dictionary POS (UNKNOWN when absent)."""
    tagged = tuple(_dc_replace(t, pos=lexicon.pos_of(t.normalized)) for t in tokens)
    if original is None:
        original = " ".join(t.surface + t.trailing_punct for t in tokens)
    return TaggedSentence(original=original, tokens=tagged)


def analyze(text: str, lexicon: Lexicon) -> TaggedSentence:
    """Tokenize, tag, and apply the "da" repair in one step."""
    return apply_da_rule(tag(tokenize(text), lexicon, original=text))


def apply_da_rule(sentence: TaggedSentence) -> TaggedSentence:
    """Retag "da" from verb to preposition when another verb is present.

    The dictionary classifies "da" as a verb (imperative of "dar").  A
    sentence carries a single verb, so when any other token is already
    tagged verb, "da" is acting as a connector and is retagged
    preposition.  When "da" is the only verb it keeps its dictionary tag.
    Decisions are taken against the incoming tagging, so applying the rule
    twice changes nothing.
    """
    verb_count = sum(1 for t in sentence.tokens if t.pos is PosTag.VERB)
    retagged = []
    for token in sentence.tokens:
        if token.normalized == "da" and token.pos is PosTag.VERB and verb_count > 1:
            retagged.append(_dc_replace(token, pos=PosTag.PREPOSITION))
        else:
            retagged.append(token)
    return TaggedSentence(original=sentence.original, tokens=tuple(retagged))


def detect_locution(sentence: TaggedSentence, token_index: int) -> bool:
    """True when the token is followed by a preposition and then a noun."""
    if not 0 <= token_index < len(sentence.tokens):
        raise IndexError(f"token index {token_index} out of range")
    after = sentence.tokens[token_index + 1 : token_index + 3]
    return (
        len(after) == 2
        and after[0].pos is PosTag.PREPOSITION
        and after[1].pos is PosTag.NOUN
    )


def find_candidates(sentence: TaggedSentence) -> list[HomographCandidate]:
    """Noun and verb tokens, in order, with their locution flag.

    Expects the "da" rule to have run already; UNKNOWN-tagged tokens are
    never candidates.
    """
    return [
        HomographCandidate(
            token_index=t.index,
            surface=t.surface,
            in_locution=detect_locution(sentence, t.index),
        )
        for t in sentence.tokens
        if t.pos in (PosTag.NOUN, PosTag.VERB)
    ]
