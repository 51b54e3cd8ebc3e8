"""Context domains, the word-by-context correlation matrix, and pre-context selection.

A context domain is a named subject area (Music, Vehicles, ...) carrying an
ontology id and a set of annotation keywords.  A message belongs to a
context when it contains at least one of the context's keywords as a whole
token; the correlation matrix records, per homograph word, the percentage
of messages containing the word that belong to each context.

Document formats (UTF-8, tab-separated, ``#`` comments and blank lines
ignored):

* context configuration: ``name<TAB>ontology_id<TAB>kw1,kw2,...``
* message log:           ``sender<TAB>text``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigurationError
from .morphology import tokenize


@dataclass(frozen=True)
class ContextDomain:
    name: str
    ontology_id: str
    keywords: frozenset[str]

    def __post_init__(self):
        if not self.keywords:
            raise ValueError(f"context {self.name!r} has no keywords")


@dataclass
class MessageLog:
    messages: list[tuple[str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.messages)


@dataclass
class CorrelationMatrix:
    cells: dict[tuple[str, str], float]
    contexts: list[ContextDomain]

    def cell(self, word: str, context_name: str) -> float:
        return self.cells.get((word.lower(), context_name), 0.0)


def _message_tokens(text: str) -> list[str]:
    return [t.normalized for t in tokenize(text)]


def build_matrix(
    log: MessageLog,
    contexts: list[ContextDomain],
    homographs: list[str],
) -> CorrelationMatrix:
    """Correlate homograph words with contexts over a message log.

    cell(w, c) = 100 * |messages containing w and assigned to c|
                     / max(1, |messages containing w|)

    A message is assigned to every context for which it contains at least
    one keyword, so a row's cells need not sum to 100.  Matching is
    whole-token, lowercase, accent-sensitive.
    """
    if not contexts:
        raise ValueError("contexts must be non-empty")
    if not homographs:
        raise ValueError("homographs must be non-empty")

    tokenized = [set(_message_tokens(text)) for _, text in log.messages]
    assigned: list[set[str]] = [
        {c.name for c in contexts if tokens & c.keywords} for tokens in tokenized
    ]

    cells: dict[tuple[str, str], float] = {}
    for word in homographs:
        w = word.lower()
        containing = [i for i, tokens in enumerate(tokenized) if w in tokens]
        denominator = max(1, len(containing))
        for c in contexts:
            numerator = sum(1 for i in containing if c.name in assigned[i])
            cells[(w, c.name)] = 100.0 * numerator / denominator
    return CorrelationMatrix(cells=cells, contexts=list(contexts))


def select_context(matrix: CorrelationMatrix, word: str) -> ContextDomain | None:
    """Context with the highest matrix cell for ``word``.

    Ties break on the lexicographically smallest context name; returns
    None when every cell is zero or the word is absent from the matrix.
    """
    w = word.lower()
    best: ContextDomain | None = None
    best_value = 0.0
    for c in sorted(matrix.contexts, key=lambda c: c.name):
        value = matrix.cells.get((w, c.name), 0.0)
        if value > best_value:
            best, best_value = c, value
    return best


def select_session_context(
    log: MessageLog, contexts: list[ContextDomain]
) -> ContextDomain | None:
    """Context whose keywords occur most often across the whole log.

    Every matching token occurrence counts; ties break lexicographically
    by context name; None when no keyword occurs at all.
    """
    if not contexts:
        raise ValueError("contexts must be non-empty")
    hits = {c.name: 0 for c in contexts}
    for _, text in log.messages:
        for token in _message_tokens(text):
            for c in contexts:
                if token in c.keywords:
                    hits[c.name] += 1
    best: ContextDomain | None = None
    best_hits = 0
    for c in sorted(contexts, key=lambda c: c.name):
        if hits[c.name] > best_hits:
            best, best_hits = c, hits[c.name]
    return best


def load_contexts(text: str) -> list[ContextDomain]:
    """Parse a context configuration document."""
    contexts: list[ContextDomain] = []
    seen: set[str] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ConfigurationError(f"context config line {line_no}: expected 3 fields, got {len(fields)}")
        name, ontology_id, keyword_csv = (f.strip() for f in fields)
        keywords = frozenset(k.strip().lower() for k in keyword_csv.split(",") if k.strip())
        if not name or not ontology_id or not keywords:
            raise ConfigurationError(f"context config line {line_no}: empty field")
        if name in seen:
            raise ConfigurationError(f"context config line {line_no}: duplicate context {name!r}")
        seen.add(name)
        contexts.append(ContextDomain(name=name, ontology_id=ontology_id, keywords=keywords))
    return contexts


def load_contexts_file(path: str | Path) -> list[ContextDomain]:
    return load_contexts(Path(path).read_text(encoding="utf-8"))


def load_message_log(text: str) -> MessageLog:
    """Parse a message-log document (``sender<TAB>text`` lines)."""
    messages: list[tuple[str, str]] = []
    for raw in text.splitlines():
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        sender, sep, body = raw.partition("\t")
        if not sep:
            # A bare line is tolerated as an anonymous message.
            sender, body = "", raw
        messages.append((sender.strip(), body.strip()))
    return MessageLog(messages=messages)


def load_message_log_file(path: str | Path) -> MessageLog:
    return load_message_log(Path(path).read_text(encoding="utf-8"))
