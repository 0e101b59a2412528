"""TOML configuration files: a ``[core]`` table of CoreConfig fields, optional ``[run]`` defaults."""

from __future__ import annotations

import sys

from ..core.config import CoreConfig

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

RUN_KEYS = frozenset(("seed", "max_cycles", "mode", "watchdog"))


def load_config_file(path) -> tuple[dict, dict]:
    """Return (core field overrides, run option defaults) from a TOML file."""
    with open(path, "rb") as f:
        doc = tomllib.load(f)
    unknown = set(doc) - {"core", "run"}
    if unknown:
        raise ValueError(f"{path}: unknown table(s) {sorted(unknown)}")
    core = dict(doc.get("core", {}))
    run = dict(doc.get("run", {}))
    bad = set(run) - RUN_KEYS
    if bad:
        raise ValueError(f"{path}: unknown [run] key(s) {sorted(bad)}")
    CoreConfig.from_dict(core)   # validate early, with field names in the message
    return core, run


def parse_override(text: str) -> tuple[str, object]:
    """``field=value`` from the command line; values are parsed as TOML scalars."""
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise ValueError(f"expected FIELD=VALUE, got {text!r}")
    key = key.strip()
    parsed = tomllib.loads(f"v = {value.strip()}")["v"] if value.strip() else ""
    if "." in key:
        outer, inner = key.split(".", 1)
        return outer, {inner: parsed}
    return key, parsed


def build_config(file_core: dict | None = None, overrides=()) -> CoreConfig:
    d = dict(file_core or {})
    for key, value in overrides:
        if isinstance(value, dict) and isinstance(d.get(key, {}), dict):
            merged = dict(d.get(key) or CoreConfig().predictor.__dict__)
            merged.update(value)
            d[key] = merged
        else:
            d[key] = value
    return CoreConfig.from_dict(d)
