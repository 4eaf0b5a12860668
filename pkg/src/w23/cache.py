"""Resumable result cache: one JSON file per (kind, n).

Every payload carries a schema_version stamp; entries written by an older
schema are treated as absent and recomputed rather than migrated.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

SCHEMA_VERSION = 1
ENV_VAR = "W23_CACHE_DIR"


def resolve_cache_dir(flag: str | None) -> Path | None:
    """An explicit --cache-dir wins over the W23_CACHE_DIR environment variable."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def load(cache_dir: Path | None, kind: str, n: int) -> dict | None:
    """The stored payload, or None when absent, unreadable, or stale."""
    if cache_dir is None:
        return None
    try:
        payload = json.loads((cache_dir / f"{kind}-{n}.json").read_text())
    except (OSError, ValueError):
        return None
    if payload.get("schema_version") != SCHEMA_VERSION:
        return None
    return payload


def store(cache_dir: Path | None, kind: str, n: int, payload: dict) -> None:
    if cache_dir is None:
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    body = {"schema_version": SCHEMA_VERSION, "kind": kind, "n": n}
    body.update(payload)
    (cache_dir / f"{kind}-{n}.json").write_text(json.dumps(body) + "\n")
