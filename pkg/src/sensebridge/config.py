"""Service configuration: dataclass, key=value file loader, packaged defaults."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import data_path
from .errors import ConfigurationError

DEFAULT_LISTEN = "127.0.0.1:8040"


@dataclass
class ServiceConfig:
    listen_address: str = DEFAULT_LISTEN
    ontology_dir: Path = field(default_factory=lambda: data_path("ontologies"))
    lexicon_path: Path = field(default_factory=lambda: data_path("lexicon_pt.tsv"))
    phrase_table_path: Path = field(default_factory=lambda: data_path("phrase_table_pt_en.tsv"))
    context_config_path: Path = field(default_factory=lambda: data_path("contexts.tsv"))
    persistence_dir: Path = Path("./sessions")
    window_limit: int = 3
    admin_token: str = "change-me"

    def __post_init__(self):
        if self.window_limit < 1:
            raise ConfigurationError("window_limit must be >= 1")
        for attr in ("ontology_dir", "lexicon_path", "phrase_table_path", "context_config_path"):
            value = getattr(self, attr)
            if not Path(value).exists():
                raise ConfigurationError(f"{attr} does not exist: {value}")

    @property
    def host(self) -> str:
        return self.listen_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        try:
            return int(self.listen_address.rsplit(":", 1)[1])
        except (IndexError, ValueError):
            raise ConfigurationError(f"listen_address must be host:port, got {self.listen_address!r}") from None


_PATH_KEYS = {
    "ontology_dir",
    "lexicon_path",
    "phrase_table_path",
    "context_config_path",
    "persistence_dir",
}


def load_config(path: str | Path, overrides: dict | None = None) -> ServiceConfig:
    """Read a ``key=value`` config file; ``overrides`` (e.g. CLI flags) win.

    Unknown keys are rejected so typos fail fast.  Lines starting with
    ``#`` and blank lines are ignored.
    """
    values: dict = {}
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigurationError(f"config line {line_no}: expected key=value, got {line!r}")
        values[key.strip()] = value.strip()
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_values(values)


def config_from_values(values: dict) -> ServiceConfig:
    known = {
        "listen_address",
        "window_limit",
        "admin_token",
    } | _PATH_KEYS
    unknown = set(values) - known
    if unknown:
        raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
    kwargs: dict = {}
    for key, value in values.items():
        if key in _PATH_KEYS:
            kwargs[key] = Path(value)
        elif key == "window_limit":
            try:
                kwargs[key] = int(value)
            except ValueError:
                raise ConfigurationError(f"window_limit must be an integer, got {value!r}") from None
        else:
            kwargs[key] = value
    return ServiceConfig(**kwargs)


def render_config(config: ServiceConfig) -> str:
    """Serialize a config back to the key=value file format."""
    return "\n".join(
        [
            f"listen_address={config.listen_address}",
            f"ontology_dir={config.ontology_dir}",
            f"lexicon_path={config.lexicon_path}",
            f"phrase_table_path={config.phrase_table_path}",
            f"context_config_path={config.context_config_path}",
            f"persistence_dir={config.persistence_dir}",
            f"window_limit={config.window_limit}",
            f"admin_token={config.admin_token}",
        ]
    ) + "\n"
