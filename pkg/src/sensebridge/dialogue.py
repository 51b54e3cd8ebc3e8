"""Per-session dialogue state: bound context, temporary meaning log, iteration window.

A chat splits into short exchange units (statement, answer, counter), so
the momentary meaning of a word is trusted for a window of three processed
messages.  Each message advances the iteration counter; arriving at the
fourth message resets the counter to 1 and clears the temporary log, after
which ontology lookup resumes for every word.
"""

from __future__ import annotations

import re
import uuid
from dataclasses import dataclass, field
from typing import Any

from .context import ContextDomain
from .errors import ConfigurationError

_LANG_TAG_RE = re.compile(r"^[a-z]{2}$")

DEFAULT_WINDOW_LIMIT = 3


@dataclass(frozen=True)
class MeaningBinding:
    source_word: str
    target_word: str
    bound_at_iteration: int

    def __post_init__(self):
        if not self.source_word or not self.target_word:
            raise ValueError("binding words must be non-empty")
        if self.bound_at_iteration < 1:
            raise ValueError("bound_at_iteration must be >= 1")


@dataclass
class HistoryEntry:
    sender: str
    original: str
    translated: str
    trace: dict[str, Any]


@dataclass
class Session:
    id: str
    source_lang: str
    target_lang: str
    context: ContextDomain | None = None
    ontology_id: str | None = None
    temp_log: dict[str, MeaningBinding] = field(default_factory=dict)
    iteration: int = 0
    window_limit: int = DEFAULT_WINDOW_LIMIT
    history: list[HistoryEntry] = field(default_factory=list)


def create_session(
    source_lang: str,
    target_lang: str,
    context: ContextDomain | None = None,
    ontology_id: str | None = None,
    registry=None,
    window_limit: int = DEFAULT_WINDOW_LIMIT,
    session_id: str | None = None,
) -> Session:
    """Fresh session; validates language tags and ontology resolution.

    When a context is given without an explicit ontology id, the context's
    own ontology id is bound.  An ontology id that does not resolve in the
    given registry raises :class:`ConfigurationError`.
    """
    for tag in (source_lang, target_lang):
        if not _LANG_TAG_RE.match(tag):
            raise ValueError(f"invalid language tag: {tag!r}")
    if window_limit < 1:
        raise ValueError("window_limit must be >= 1")
    if context is not None and ontology_id is None:
        ontology_id = context.ontology_id
    if ontology_id is not None and registry is not None and ontology_id not in registry:
        raise ConfigurationError(f"unknown ontology id: {ontology_id!r}")
    return Session(
        id=session_id or uuid.uuid4().hex,
        source_lang=source_lang,
        target_lang=target_lang,
        context=context,
        ontology_id=ontology_id,
        window_limit=window_limit,
    )


def advance_iteration(session: Session) -> tuple[int, bool]:
    """Move to the next iteration, resetting the window when it is full.

    Returns ``(iteration, window_reset)``.  Hitting the message after the
    window limit clears the temporary log and restarts the counter at 1.
    """
    if session.iteration >= session.window_limit:
        session.temp_log.clear()
        session.iteration = 1
        return session.iteration, True
    session.iteration += 1
    return session.iteration, False


def lookup_binding(session: Session, word: str) -> str | None:
    binding = session.temp_log.get(word.lower())
    return binding.target_word if binding is not None else None


def record_binding(session: Session, source_word: str, target_word: str) -> None:
    """Insert (or refresh) a binding at the current iteration.

    Expects :func:`advance_iteration` to have run for the message being
    processed; a later binding for the same source word replaces the
    earlier one.
    """
    key = source_word.lower()
    session.temp_log[key] = MeaningBinding(
        source_word=key,
        target_word=target_word,
        bound_at_iteration=max(1, session.iteration),
    )


def seed_binding(session: Session, source_word: str, target_word: str) -> None:
    """Record a binding outside the pipeline (admin/test hook).

    Covers the case where the exchange opens from the target-language side
    and the binding is known without a source-language message.  Seeding a
    pristine session counts as that opening message, so the iteration
    moves to 1; seeding mid-dialogue records at the current iteration.
    """
    if session.iteration == 0:
        advance_iteration(session)
    record_binding(session, source_word, target_word)
