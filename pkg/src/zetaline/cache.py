"""On-disk cache for the expensive coefficient tables.

Values are serialized as decimal strings carrying the full working precision,
so a cache hit is numerically identical to a cold computation.  Writes are
atomic (temp file + rename); the key embeds the schema version, the method
and the digits, so stale entries are simply never looked up.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from mpmath import mpf, workdps

SCHEMA_VERSION = 1
ENV_VAR = "ZETALINE_CACHE_DIR"


def cache_dir() -> Path:
    root = os.environ.get(ENV_VAR)
    if root:
        p = Path(root)
    else:
        p = Path.home() / ".cache" / "zetaline"
    p.mkdir(parents=True, exist_ok=True)
    return p


def _path(key: str) -> Path:
    return cache_dir() / f"{key}.json"


def load_values(key: str, digits: int) -> list | None:
    """Return the cached mpf list for ``key``, or None on miss.

    A schema or digits mismatch counts as stale: the entry is ignored (the
    caller recomputes) and a one-line notice goes to stderr.
    """
    path = _path(key)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("schema_version") != SCHEMA_VERSION or payload.get("digits") != digits:
        import sys

        sys.stderr.write(f"zetaline cache: stale entry {key}, recomputing\n")
        return None
    with workdps(digits + 35):
        return [mpf(v) for v in payload["values"]]


def store_values(key: str, digits: int, values) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "digits": digits,
        "values": [],
    }
    # guard digits keep a reloaded value from ever flipping a displayed digit
    with workdps(digits + 35):
        from mpmath import nstr

        payload["values"] = [nstr(mpf(v), digits + 25) for v in values]
    path = _path(key)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
