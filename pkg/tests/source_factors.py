"""Extract every directed 2-factor written out in the reference text, for transcription checks."""

from __future__ import annotations

import re
from pathlib import Path

from opstar.core import INF, TwoFactor
from opstar.errors import BadInstance

SOURCE_TEXT = Path(__file__).resolve().parents[1] / "paper.md"

_VERTEX = r"u_\{?(?:\\infty|\d+)\}?"
_EXPR = re.compile(rf"(?:{_VERTEX})+(?:\\cup(?:{_VERTEX})+)*")


def _closed_walk(chunk: str):
    vs = [INF if v == r"\infty" else int(v) for v in re.findall(r"u_\{?(\\infty|\d+)\}?", chunk)]
    if len(vs) < 3 or vs[0] != vs[-1]:
        return None
    return tuple(vs[:-1])


def written_factors() -> set:
    """Canonical forms of all cycle unions ``u_a u_b ... u_a \\cup ...`` in the reference text."""
    flat = re.sub(r"\\[,;!]|\s+|\$", "", SOURCE_TEXT.read_text())
    out = set()
    for m in _EXPR.finditer(flat):
        cycles = [_closed_walk(c) for c in m.group(0).split(r"\cup")]
        if any(c is None for c in cycles):
            continue
        try:
            out.add(TwoFactor(tuple(cycles)).canonical())
        except BadInstance:
            continue
    return out
