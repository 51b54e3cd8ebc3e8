"""Dialogue translation middleware for Portuguese homograph disambiguation.

Before a message reaches the statistical machine-translation backend, the
pipeline tags its words, finds the noun/verb homograph candidates, looks
their senses up in a SKOS ontology bound to the conversation's context,
and swaps each resolved word for its target-language label.  A short
per-session memory keeps senses stable across adjacent messages.
"""

from importlib import resources
from pathlib import Path

__version__ = "0.1.0"


def data_path(*parts: str) -> Path:
    """Path to a packaged fixture file (lexicon, ontologies, phrase table...)."""
    root = resources.files(__name__) / "data"
    return Path(str(root.joinpath(*parts)))
