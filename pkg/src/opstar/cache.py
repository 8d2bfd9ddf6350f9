"""Append-only JSON-lines store of search results, keyed by cycle type.

The first line of every file is a header ``{"format": "opstar-cache",
"version": 1}``; files with another header are ignored.  Each further line
is ``{"type": [...], "trace": {...}}`` where the trace is self-contained
(search steps carry their starters or factors), so a cached entry can be
rebuilt and re-certified without running any search.

The directory comes from the ``OPSTAR_CACHE_DIR`` environment variable,
defaulting to ``~/.cache/opstar``.  A read-only seed file of hard base
cases ships inside the package.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path
from typing import Optional

CACHE_FORMAT = "opstar-cache"
CACHE_VERSION = 1
ENV_VAR = "OPSTAR_CACHE_DIR"
FILENAME = "results.jsonl"


def header() -> dict:
    return {"format": CACHE_FORMAT, "version": CACHE_VERSION}


def _read(lines) -> dict:
    out: dict = {}
    it = iter(lines)
    first = next(it, None)
    if first is None:
        return out
    try:
        if json.loads(first) != header():
            return out
    except json.JSONDecodeError:
        return out
    for line in it:
        line = line.strip()
        if not line:
            continue
        try:
            entry = json.loads(line)
            out[tuple(entry["type"])] = entry["trace"]
        except (json.JSONDecodeError, KeyError, TypeError):
            continue
    return out


def seed_entries() -> dict:
    try:
        text = resources.files("opstar").joinpath("data/seed_cache.jsonl").read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return {}
    return _read(text.splitlines())


def default_directory() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "opstar"


class ResultCache:
    """Seed entries overlaid by the on-disk file; ``directory=None`` keeps writes in memory."""

    def __init__(self, directory: Optional[Path] = None, *, use_seed: bool = True, persist: bool = True):
        self.directory = Path(directory) if directory is not None else default_directory()
        self.persist = persist
        self.entries: dict = dict(seed_entries()) if use_seed else {}
        self.entries.update(self._load_disk())

    @property
    def path(self) -> Path:
        return self.directory / FILENAME

    def _load_disk(self) -> dict:
        if not self.persist or not self.path.exists():
            return {}
        with self.path.open() as fh:
            return _read(fh)

    def get(self, lengths: tuple) -> Optional[dict]:
        return self.entries.get(tuple(lengths))

    def put(self, lengths: tuple, trace: dict) -> None:
        key = tuple(lengths)
        self.entries[key] = trace
        if not self.persist:
            return
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fresh = not self.path.exists() or self.path.stat().st_size == 0
            with self.path.open("a") as fh:
                if fresh:
                    fh.write(json.dumps(header()) + "\n")
                fh.write(json.dumps({"type": list(key), "trace": trace}, sort_keys=True) + "\n")
        except OSError:
            pass
