"""Run configuration: defaults, config file, environment, flags.

The config file is a plain key-value format, one `key = value` per line,
with `#` comments.  Recognized keys match the RunConfig fields.  Flags
win over the file; the file wins over defaults.  The environment
variable PERMCLASS_CONFIG overrides the config file path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

ENV_CONFIG_PATH = "PERMCLASS_CONFIG"

DEFAULT_SEED = 1729


@dataclass
class RunConfig:
    bound: int = 5_000_000
    coset_index_bound: int = 10_000
    format: str = "text"
    workers: int = 1
    out_dir: str = "reports"
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.bound <= 0 or self.coset_index_bound <= 0 or self.workers <= 0:
            raise ValueError("bounds and worker count must be positive")
        if self.format not in ("text", "json"):
            raise ValueError(f"format must be 'text' or 'json', not {self.format!r}")


_INT_KEYS = {"bound", "coset_index_bound", "workers", "seed"}
_KEYS = {f.name for f in fields(RunConfig)}


def parse_config_file(path: str) -> dict:
    values: dict[str, object] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in _KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = int(value) if key in _INT_KEYS else value
    return values


def load_config(config_path: str | None = None, **overrides) -> RunConfig:
    """Assemble the effective configuration.

    config_path comes from the --config flag; when absent, the
    PERMCLASS_CONFIG environment variable is consulted.  Explicit None
    overrides are ignored.
    """
    path = config_path or os.environ.get(ENV_CONFIG_PATH)
    values: dict[str, object] = {}
    if path:
        values.update(parse_config_file(path))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
