"""Exception types shared across the package."""


class SenseBridgeError(Exception):
    """Base class for all package-specific errors."""


class LexiconLoadError(SenseBridgeError):
    """A lexicon document line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SkosParseError(SenseBridgeError):
    """An ontology document is not well-formed XML."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        location = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column


class SkosLoadError(SenseBridgeError):
    """An ontology document is well-formed XML but violates the concept model."""


class QueryParseError(SenseBridgeError):
    """A query string does not match the supported grammar."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


class PhraseTableLoadError(SenseBridgeError):
    """A phrase-table document line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CorpusLoadError(SenseBridgeError):
    """An evaluation corpus line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConfigurationError(SenseBridgeError):
    """A referenced resource (ontology, context, config key) cannot be resolved."""


class PipelineError(SenseBridgeError):
    """The translation backend failed mid-pipeline.

    Carries the trace accumulated before the backend call so callers can
    inspect how far the message got.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace
