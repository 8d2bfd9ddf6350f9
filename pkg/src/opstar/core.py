"""Data model: vertices, arcs, directed cycles, 2-factors and circulants.

Vertices are non-negative integers plus the single sentinel :data:`INF`
used by 1-rotational constructions.  Every value here is immutable.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import BadConnectionSet, BadInstance, InstanceTooSmall


@total_ordering
class _Infinity:
    """The fixed point u_inf of a rotational construction."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __hash__(self) -> int:
        return hash("opstar.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        # sorts after every finite vertex
        return False

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Vertex = Union[int, _Infinity]


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex


def _check_vertex(v) -> None:
    if v is INF:
        return
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise BadInstance(f"invalid vertex {v!r}")


def cycle_arcs(cycle: Sequence[Vertex]) -> list[Arc]:
    """Arcs of the directed cycle visiting ``cycle`` in order."""
    k = len(cycle)
    return [Arc(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def canonical_cycle(cycle: Sequence[Vertex]) -> tuple:
    """Rotate a cycle so that it starts at its minimum vertex."""
    i = min(range(len(cycle)), key=lambda j: cycle[j])
    return tuple(cycle[i:]) + tuple(cycle[:i])


@dataclass(frozen=True)
class TwoFactor:
    """A disjoint union of directed cycles (digons allowed).

    The ground set is the union of the cycles' vertices; whether it spans a
    particular digraph is a question for :mod:`opstar.verify`.
    """

    cycles: tuple

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        seen: set = set()
        for c in cycles:
            if len(c) < 2:
                raise BadInstance(f"cycle {c} has fewer than 2 vertices")
            for v in c:
                _check_vertex(v)
                if v in seen:
                    raise BadInstance(f"vertex {v} repeated in 2-factor")
                seen.add(v)
        object.__setattr__(self, "cycles", cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def vertices(self) -> set:
        return {v for c in self.cycles for v in c}

    def arcs(self) -> list[Arc]:
        return [a for c in self.cycles for a in cycle_arcs(c)]

    def successor(self) -> dict:
        return {a.tail: a.head for a in self.arcs()}

    def cycle_type(self) -> "CycleType":
        return CycleType(tuple(len(c) for c in self.cycles))

    def relabel(self, mapping: Callable[[Vertex], Vertex] | dict) -> "TwoFactor":
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return TwoFactor(tuple(tuple(f(v) for v in c) for c in self.cycles))

    def canonical(self) -> "TwoFactor":
        """Cycles rotated to start at their minimum, listed by that minimum."""
        cs = sorted((canonical_cycle(c) for c in self.cycles), key=lambda c: c[0])
        return TwoFactor(tuple(cs))

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    @classmethod
    def from_arcs(cls, arcs: Iterable[Sequence[Vertex]]) -> "TwoFactor":
        """Rebuild the cycle list of a 1-in/1-out arc set."""
        succ: dict = {}
        heads: set = set()
        for u, v in arcs:
            if u in succ or v in heads:
                raise BadInstance("arc set is not a union of disjoint cycles")
            succ[u] = v
            heads.add(v)
        if set(succ) != heads:
            raise BadInstance("arc set is not a union of disjoint cycles")
        cycles = []
        done: set = set()
        for start in sorted(succ):
            if start in done:
                continue
            cyc = [start]
            done.add(start)
            v = succ[start]
            while v != start:
                cyc.append(v)
                done.add(v)
                v = succ[v]
            cycles.append(tuple(cyc))
        return cls(tuple(cycles))


def cycle_type_of(factor: TwoFactor) -> "CycleType":
    return factor.cycle_type()


_POWER = re.compile(r"^\s*(\d+)\s*(?:\^\s*<?\s*(\d+)\s*>?)?\s*$")


@dataclass(frozen=True, order=True)
class CycleType:
    """The multiset of cycle lengths of an OP* instance, kept sorted."""

    lengths: tuple = field(default=())

    def __post_init__(self):
        lengths = tuple(sorted(int(m) for m in self.lengths))
        if not lengths:
            raise BadInstance("empty cycle type")
        if any(m < 2 for m in lengths):
            raise BadInstance(f"cycle lengths must be at least 2, got {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def of(cls, *lengths: int) -> "CycleType":
        return cls(tuple(lengths))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse ``"2^3, 4"`` or ``"2 2 2 4"`` style notation."""
        lengths: list[int] = []
        for tok in re.split(r"[,\s]+(?![^<]*>)", text.strip()):
            if not tok:
                continue
            m = _POWER.match(tok)
            if not m:
                raise BadInstance(f"cannot parse cycle length {tok!r}")
            lengths.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(tuple(lengths))

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def k(self) -> int:
        return len(self.lengths)

    def counts(self) -> Counter:
        return Counter(self.lengths)

    def is_uniform(self) -> bool:
        return len(set(self.lengths)) == 1

    def __add__(self, other: "CycleType") -> "CycleType":
        return CycleType(self.lengths + tuple(other.lengths))

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.lengths)) + ")"


@dataclass(frozen=True)
class Decomposition:
    """An ordered list of 2-factors claimed to partition the arcs of K*_n."""

    factors: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[TwoFactor]:
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def arcs(self) -> list[Arc]:
        return [a for f in self.factors for a in f.arcs()]

    def relabel(self, mapping) -> "Decomposition":
        return Decomposition(tuple(f.relabel(mapping) for f in self.factors), self.n)

    def canonical(self) -> "Decomposition":
        return Decomposition(tuple(f.canonical() for f in self.factors), self.n)


@dataclass(frozen=True)
class ConnectionSet:
    """A set of nonzero residues mod ``modulus``."""

    modulus: int
    residues: frozenset

    def __post_init__(self):
        if self.modulus < 2:
            raise BadConnectionSet(f"modulus {self.modulus} < 2")
        res = frozenset(int(d) for d in self.residues)
        for d in res:
            if not 0 < d < self.modulus:
                raise BadConnectionSet(f"residue {d} not in [1, {self.modulus})")
        object.__setattr__(self, "residues", res)

    @classmethod
    def signed(cls, t: int, diffs: Iterable[int]) -> "ConnectionSet":
        """Build from signed differences; ``-d`` is stored as ``t - d``."""
        res = set()
        for d in diffs:
            if d % t == 0:
                raise BadConnectionSet(f"difference {d} is 0 mod {t}")
            res.add(d % t)
        return cls(t, frozenset(res))

    @classmethod
    def full(cls, t: int) -> "ConnectionSet":
        return cls(t, frozenset(range(1, t)))

    def complement(self) -> "ConnectionSet":
        return ConnectionSet(self.modulus, frozenset(range(1, self.modulus)) - self.residues)

    def __contains__(self, d: int) -> bool:
        return d % self.modulus in self.residues

    def __iter__(self):
        return iter(sorted(self.residues))

    def __len__(self) -> int:
        return len(self.residues)

    def __or__(self, other: "ConnectionSet") -> "ConnectionSet":
        return ConnectionSet(self.modulus, self.residues | other.residues)

    def __sub__(self, other: "ConnectionSet") -> "ConnectionSet":
        return ConnectionSet(self.modulus, self.residues - other.residues)


def complete_symmetric_arcs(n: int) -> frozenset:
    """All n(n-1) arcs of K*_n on vertices 0..n-1."""
    if n < 2:
        raise InstanceTooSmall(f"K*_{n} has no arcs")
    return frozenset(Arc(u, v) for u in range(n) for v in range(n) if u != v)


def circulant_digraph(t: int, S: ConnectionSet | Iterable[int]) -> frozenset:
    """Arc set of the directed circulant on Z_t with connection set ``S``."""
    if not isinstance(S, ConnectionSet):
        S = ConnectionSet(t, frozenset(S))
    if S.modulus != t:
        raise BadConnectionSet(f"connection set is mod {S.modulus}, not {t}")
    return frozenset(Arc(i, (i + d) % t) for i in range(t) for d in S.residues)


def difference(arc: Sequence[int], t: int) -> int:
    """Difference of an arc of a circulant on Z_t, in [0, t)."""
    return (arc[1] - arc[0]) % t


def rotate(factor: TwoFactor, j: int, orbit: int | Sequence[Vertex]) -> TwoFactor:
    """Apply the j-th power of the cyclic permutation ``orbit``.

    ``orbit`` is either an integer t (meaning 0 -> 1 -> ... -> t-1 -> 0) or an
    explicit cyclic sequence of vertices.  Vertices outside the orbit,
    including INF, stay fixed.
    """
    if isinstance(orbit, int):
        t = orbit
        j %= t

        def move(v):
            if v is INF or v >= t:
                return v
            return (v + j) % t

        return factor.relabel(move)
    orbit = list(orbit)
    t = len(orbit)
    pos = {v: i for i, v in enumerate(orbit)}
    return factor.relabel(lambda v: orbit[(pos[v] + j) % t] if v in pos else v)


def normalize_infinity(factor: TwoFactor, n: int) -> TwoFactor:
    """Relabel INF as the integer vertex n-1."""
    return factor.relabel(lambda v: n - 1 if v is INF else v)
