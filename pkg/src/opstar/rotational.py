"""Base-q 1-rotational factorizations of K*_n = K*_{n-1} join K_1.

Vertices of K*_{n-1} are the residues 0..n-2 and the join vertex is
:data:`~opstar.core.INF`.  A :class:`StarterSet` of q 2-factors covering
every base-q difference exactly once expands, under the powers of the
rotation ``i -> i + q``, to a full factorization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from . import catalog
from .core import INF, CycleType, Decomposition, TwoFactor, normalize_infinity, rotate
from .errors import BadModulus, BadStarter


class BaseQDifference(NamedTuple):
    """``kind`` is ``"d"`` (finite), ``"+inf"`` or ``"-inf"``; ``d`` is 0 for the infinite kinds."""

    kind: str
    d: int
    r: int

    def __str__(self) -> str:
        label = {"d": str(self.d), "+inf": "inf", "-inf": "-inf"}[self.kind]
        return f"{label}_{self.r}"


def base_q_difference(arc: Sequence, n: int, q: int) -> BaseQDifference:
    """Base-q difference of an arc of K*_{n-1} join {INF}."""
    if q < 1 or (n - 1) % q:
        raise BadModulus(f"q={q} does not divide n-1={n - 1}")
    u, v = arc
    if u is INF and v is INF:
        raise ValueError("loop at INF")
    if v is INF:
        return BaseQDifference("+inf", 0, u % q)
    if u is INF:
        return BaseQDifference("-inf", 0, v % q)
    d = (v - u) % (n - 1)
    if d == 0:
        raise ValueError(f"loop at {u}")
    return BaseQDifference("d", d, u % q)


def all_base_q_differences(n: int, q: int) -> list[BaseQDifference]:
    out = [BaseQDifference("d", d, r) for d in range(1, n - 1) for r in range(q)]
    out += [BaseQDifference(k, 0, r) for k in ("+inf", "-inf") for r in range(q)]
    return out


def parity_obstruction(cycle_type: CycleType) -> bool:
    """True when no single (q = 1) starter can exist: n even and every length >= 3.

    Cycle differences sum to 0 mod n-1, as do all of Z*_{n-1}, so the path
    left after deleting INF from its cycle would need zero total difference.
    """
    return cycle_type.n % 2 == 0 and min(cycle_type.lengths) >= 3


@dataclass(frozen=True)
class StarterSet:
    n: int
    q: int
    starters: tuple
    cycle_type: CycleType

    def __post_init__(self):
        n, q = self.n, self.q
        if q < 1 or (n - 1) % q:
            raise BadModulus(f"q={q} does not divide n-1={n - 1}")
        starters = tuple(s if isinstance(s, TwoFactor) else TwoFactor(tuple(map(tuple, s))) for s in self.starters)
        object.__setattr__(self, "starters", starters)
        ct = self.cycle_type if isinstance(self.cycle_type, CycleType) else CycleType(tuple(self.cycle_type))
        object.__setattr__(self, "cycle_type", ct)
        if len(starters) != q:
            raise BadStarter(f"expected {q} starters, got {len(starters)}")
        ground = set(range(n - 1)) | {INF}
        for f in starters:
            if f.vertices() != ground:
                raise BadStarter(f"starter {f.cycles} does not span Z_{n - 1} + INF")
            if f.cycle_type() != ct:
                raise BadStarter(f"starter has type {f.cycle_type()}, expected {ct}")
        seen = Counter(base_q_difference(a, n, q) for f in starters for a in f.arcs())
        want = set(all_base_q_differences(n, q))
        dup = sorted(str(d) for d, c in seen.items() if c > 1)
        missing = sorted(str(d) for d in want - set(seen))
        if dup or missing:
            msg = f"base-{q} differences: duplicated {dup}, missing {missing}"
            if q == 1:
                msg += f"; finite difference sum {self._finite_sum()} mod {n - 1}"
            raise BadStarter(msg, duplicated=dup, missing=missing)

    def _finite_sum(self) -> int:
        total = 0
        for f in self.starters:
            for u, v in f.arcs():
                if u is not INF and v is not INF:
                    total += v - u
        return total % (self.n - 1)


def expand_starters(ss: StarterSet) -> Decomposition:
    """All images rho^{qi}(F_j), with INF relabelled as n-1."""
    n, q = ss.n, ss.q
    factors = []
    for i in range((n - 1) // q):
        for f in ss.starters:
            factors.append(normalize_infinity(rotate(f, q * i, n - 1), n))
    return Decomposition(tuple(factors), n)


def _explicit(lengths: tuple) -> Decomposition:
    n = sum(lengths)
    factors = [normalize_infinity(TwoFactor(tuple(map(tuple, f))), n) for f in catalog.EXPLICIT[lengths]]
    return Decomposition(tuple(factors), n)


def catalog_lookup(cycle_type: CycleType) -> Optional[Union[StarterSet, Decomposition]]:
    """Hard-coded data for the listed special types, else None."""
    key = tuple(cycle_type.lengths)
    if key in catalog.STARTERS:
        q, starters = catalog.STARTERS[key]
        return StarterSet(sum(key), q, tuple(starters), cycle_type)
    if key in catalog.EXPLICIT:
        return _explicit(key)
    return None


def catalog_types() -> list[CycleType]:
    keys = sorted(set(catalog.STARTERS) | set(catalog.EXPLICIT), key=lambda k: (sum(k), k))
    return [CycleType(k) for k in keys]
