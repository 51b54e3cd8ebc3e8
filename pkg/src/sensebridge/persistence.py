"""Append-only session persistence and replay.

Each session owns two files in the persistence directory:

* ``<session_id>.jsonl`` — one JSON object per processed message:
  ``{seq, sender, original, translated, trace, iteration, window_reset}``
* ``<session_id>.meta.json`` — the session's creation parameters, needed
  to rebuild the session after a restart.

Replaying the record stream reconstructs the temporary meaning log and
the iteration counter exactly as they stood when the last record was
written.
"""

from __future__ import annotations

import json
from pathlib import Path

from .context import ContextDomain
from .dialogue import HistoryEntry, MeaningBinding, Session


class SessionStore:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _records_path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.jsonl"

    def _meta_path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.meta.json"

    def write_meta(self, session: Session) -> None:
        meta = {
            "id": session.id,
            "source_lang": session.source_lang,
            "target_lang": session.target_lang,
            "ontology_id": session.ontology_id,
            "window_limit": session.window_limit,
            "context": None
            if session.context is None
            else {
                "name": session.context.name,
                "ontology_id": session.context.ontology_id,
                "keywords": sorted(session.context.keywords),
            },
        }
        self._meta_path(session.id).write_text(
            json.dumps(meta, ensure_ascii=False, indent=2), encoding="utf-8"
        )

    def append_record(self, session_id: str, record: dict) -> None:
        with self._records_path(session_id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    def session_ids(self) -> list[str]:
        return sorted(p.stem.removesuffix(".meta") for p in self.directory.glob("*.meta.json"))

    def load_session(self, session_id: str) -> Session:
        """Rebuild a session from its meta file and record stream."""
        meta = json.loads(self._meta_path(session_id).read_text(encoding="utf-8"))
        context = None
        if meta.get("context"):
            c = meta["context"]
            context = ContextDomain(
                name=c["name"], ontology_id=c["ontology_id"], keywords=frozenset(c["keywords"])
            )
        session = Session(
            id=meta["id"],
            source_lang=meta["source_lang"],
            target_lang=meta["target_lang"],
            context=context,
            ontology_id=meta.get("ontology_id"),
            window_limit=meta.get("window_limit", 3),
        )
        records_path = self._records_path(session_id)
        if not records_path.exists():
            return session
        with records_path.open(encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                record = json.loads(line)
                if record["window_reset"]:
                    session.temp_log.clear()
                session.iteration = record["iteration"]
                for repl in record["trace"]["replacements"]:
                    key = repl["original"].lower()
                    session.temp_log[key] = MeaningBinding(
                        source_word=key,
                        target_word=repl["substituted"],
                        bound_at_iteration=record["iteration"],
                    )
                session.history.append(
                    HistoryEntry(
                        sender=record["sender"],
                        original=record["original"],
                        translated=record["translated"],
                        trace=record["trace"],
                    )
                )
        return session

    def load_all(self) -> dict[str, Session]:
        return {sid: self.load_session(sid) for sid in self.session_ids()}
