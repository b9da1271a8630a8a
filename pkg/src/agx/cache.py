"""Disk cache for enumeration sweeps: one graph6 string per line plus a
sidecar with count and checksum, under $AGX_CACHE (default ./.agx-cache)."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

_ENV_VAR = "AGX_CACHE"
_DEFAULT_DIR = ".agx-cache"

_override: Path | None = None


def cache_dir() -> Path:
    if _override is not None:
        return _override
    return Path(os.environ.get(_ENV_VAR, _DEFAULT_DIR))


def set_cache_dir(path: str | Path | None) -> None:
    global _override
    _override = None if path is None else Path(path)


def _paths(mode: str, n: int, m: int) -> tuple[Path, Path]:
    base = cache_dir() / f"{mode}_n{n}_m{m}"
    return base.with_suffix(".g6"), base.with_suffix(".meta.json")


def _checksum(lines: list[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


def load(mode: str, n: int, m: int) -> list[str] | None:
    """Cached graph6 lines, or None on miss or checksum mismatch."""
    g6_path, meta_path = _paths(mode, n, m)
    if not (g6_path.exists() and meta_path.exists()):
        return None
    try:
        meta = json.loads(meta_path.read_text())
        lines = g6_path.read_text().splitlines()
    except (OSError, json.JSONDecodeError):
        return None
    if meta.get("count") != len(lines) or meta.get("sha256") != _checksum(lines):
        return None
    return lines


def store(mode: str, n: int, m: int, lines: list[str]) -> None:
    g6_path, meta_path = _paths(mode, n, m)
    g6_path.parent.mkdir(parents=True, exist_ok=True)
    g6_path.write_text("\n".join(lines) + ("\n" if lines else ""))
    meta_path.write_text(json.dumps({"count": len(lines),
                                     "sha256": _checksum(lines)}))
