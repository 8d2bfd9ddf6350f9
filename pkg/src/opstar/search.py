"""Search engines: an exhaustive exact-cover oracle and a symmetric starter search.

:func:`exact_cover_search` enumerates every directed 2-factor of the
requested type and runs Algorithm X over the arcs of K*_n.  One factor is
fixed to a canonical representative, which loses no generality since the
symmetric group acts transitively on 2-factors of a given type.  When the
search space is exhausted without a solution the result is a proof of
nonexistence.

:func:`rotational_search` looks for factorizations invariant under a
cyclic permutation ``sigma`` of order g.  Arcs fall into orbits of size g;
a *starter* uses one arc from each of n orbits and contributes its g images,
while an *invariant* factor is a union of whole orbits.  Two families of
``sigma`` are offered: the 1-rotational rotation ``i -> i + q`` on
Z_{n-1} plus a fixed point, and a fixed-point-free rotation on
Z_g x {0..n/g-1}.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .core import CycleType, Decomposition, TwoFactor


class _OutOfBudget(Exception):
    pass


# --- enumeration of 2-factors --------------------------------------------------


def enumerate_two_factors(cycle_type: CycleType, vertices: Sequence[int]) -> Iterator[tuple]:
    """Every directed 2-factor of the given type on ``vertices``, each exactly once.

    Each cycle starts at its least vertex and cycles are produced in order of
    their least vertex, so no factor is generated twice.
    """
    lengths = Counter(cycle_type.lengths)
    verts = sorted(vertices)

    def rec(free: list, counts: Counter) -> Iterator[list]:
        if not free:
            yield []
            return
        v, rest = free[0], free[1:]
        for m in sorted(counts):
            if counts[m] == 0 or m - 1 > len(rest):
                continue
            counts[m] -= 1
            for others in permutations(rest, m - 1):
                remaining = [w for w in rest if w not in others]
                for tail in rec(remaining, counts):
                    yield [(v,) + others] + tail
            counts[m] += 1

    for cycles in rec(verts, lengths):
        yield tuple(cycles)


def _canonical_factor(cycle_type: CycleType) -> tuple:
    cycles, v = [], 0
    for m in cycle_type.lengths:
        cycles.append(tuple(range(v, v + m)))
        v += m
    return tuple(cycles)


def _arcs_of(cycles: Sequence[Sequence[int]]) -> list:
    return [(c[i], c[(i + 1) % len(c)]) for c in cycles for i in range(len(c))]


@dataclass
class ExactCoverResult:
    factors: Optional[list]
    exhausted: bool
    nodes: int
    rows: int


def _algorithm_x(X: dict, Y: dict, partial: list, counter: list, budget: int) -> Optional[list]:
    if not X:
        return list(partial)
    counter[0] += 1
    if counter[0] > budget:
        raise _OutOfBudget
    col = min(X, key=lambda c: len(X[c]))
    for r in list(X[col]):
        partial.append(r)
        removed = []
        for j in Y[r]:
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].discard(i)
            removed.append(X.pop(j))
        found = _algorithm_x(X, Y, partial, counter, budget)
        for j in reversed(Y[r]):
            X[j] = removed.pop()
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].add(i)
        partial.pop()
        if found is not None:
            return found
    return None


def exact_cover_search(cycle_type: CycleType, *, budget: int = 5_000_000) -> ExactCoverResult:
    """Exhaustive search for a factorization of K*_n of the given type."""
    n = cycle_type.n
    fixed = _canonical_factor(cycle_type)
    fixed_arcs = set(_arcs_of(fixed))
    rows: dict = {}
    for cyc in enumerate_two_factors(cycle_type, range(n)):
        arcs = _arcs_of(cyc)
        if fixed_arcs.isdisjoint(arcs):
            rows[cyc] = arcs
    X: dict = {(u, v): set() for u in range(n) for v in range(n) if u != v and (u, v) not in fixed_arcs}
    for r, arcs in rows.items():
        for a in arcs:
            X[a].add(r)
    counter = [0]
    try:
        found = _algorithm_x(X, rows, [], counter, budget)
    except _OutOfBudget:
        return ExactCoverResult(None, False, counter[0], len(rows))
    if found is None:
        return ExactCoverResult(None, True, counter[0], len(rows))
    return ExactCoverResult([fixed] + found, True, counter[0], len(rows))


# --- symmetric starter search ------------------------------------------------


@dataclass(frozen=True)
class RotationModel:
    """A cyclic permutation ``perm`` of order ``order`` on 0..n-1.

    ``starters`` factors each contribute ``order`` images and ``invariant``
    factors are fixed by ``perm``; ``starters * order + invariant == n - 1``.
    """

    name: str
    n: int
    order: int
    perm: tuple
    starters: int
    invariant: int

    def power(self, v: int, k: int) -> int:
        for _ in range(k % self.order):
            v = self.perm[v]
        return v

    def images(self, cycles: Sequence[Sequence[int]]) -> list:
        return [tuple(tuple(self.power(v, k) for v in c) for c in cycles) for k in range(self.order)]

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n, "order": self.order}


def one_rotational_model(n: int, q: int) -> RotationModel:
    """Rotation i -> i + q on Z_{n-1}, fixing vertex n-1."""
    if (n - 1) % q:
        raise ValueError(f"q={q} does not divide n-1={n - 1}")
    N = n - 1
    perm = tuple([(i + q) % N for i in range(N)] + [N])
    return RotationModel(f"1-rotational q={q}", n, N // q, perm, q, 0)


def fixed_point_free_model(n: int, g: int) -> RotationModel:
    """Rotation (i, x) -> (i + 1, x) on Z_g x {0..n/g-1}; vertex (i, x) is x*g + i."""
    if n % g:
        raise ValueError(f"g={g} does not divide n={n}")
    perm = tuple(x * g + (i + 1) % g for x in range(n // g) for i in range(g))
    return RotationModel(f"cyclic g={g}", n, g, perm, (n - 1) // g, (n - 1) % g)


def model_from_json(data: dict) -> RotationModel:
    name = data["name"]
    if name.startswith("1-rotational"):
        return one_rotational_model(data["n"], (data["n"] - 1) // data["order"])
    return fixed_point_free_model(data["n"], data["order"])


def _arc_orbits(model: RotationModel) -> dict:
    ids: dict = {}
    k = 0
    for u in range(model.n):
        for v in range(model.n):
            if u == v or (u, v) in ids:
                continue
            a = (u, v)
            for _ in range(model.order):
                if a in ids:
                    break
                ids[a] = k
                a = (model.perm[a[0]], model.perm[a[1]])
            k += 1
    return ids


def _invariant_factors(model: RotationModel, cycle_type: CycleType) -> list:
    """All 2-factors of the type fixed by the rotation (successor maps commuting with it)."""
    n, perm = model.n, model.perm
    reps, seen = [], set()
    for v in range(n):
        if v in seen:
            continue
        reps.append(v)
        w = v
        while w not in seen:
            seen.add(w)
            w = perm[w]
    want = sorted(cycle_type.lengths)
    out = []

    def rec(i: int, succ: dict) -> None:
        if i == len(reps):
            if len(set(succ.values())) != n:
                return
            cycles, done = [], set()
            for s in range(n):
                if s in done:
                    continue
                c = [s]
                done.add(s)
                w = succ[s]
                while w != s:
                    c.append(w)
                    done.add(w)
                    w = succ[w]
                cycles.append(tuple(c))
            if sorted(len(c) for c in cycles) == want:
                out.append(tuple(cycles))
            return
        r = reps[i]
        for target in range(n):
            if target == r:
                continue
            new = dict(succ)
            ok = True
            u, w = r, target
            for _ in range(model.order):
                if u in new and new[u] != w:
                    ok = False
                    break
                new[u] = w
                u, w = perm[u], perm[w]
            if ok and all(a != b for a, b in new.items()):
                heads = list(new.values())
                if len(heads) == len(set(heads)):
                    rec(i + 1, new)

    rec(0, {})
    return out


@dataclass
class RotationalResult:
    model: RotationModel
    starters: Optional[list]
    invariant: Optional[list]
    nodes: int

    @property
    def found(self) -> bool:
        return self.starters is not None

    def factors(self) -> list:
        out = []
        for s in self.starters:
            out += self.model.images(s)
        return out + list(self.invariant)


def expand_rotational(model: RotationModel, starters: Sequence, invariant: Sequence) -> Decomposition:
    facs = []
    for s in starters:
        facs += model.images(s)
    facs += list(invariant)
    return Decomposition(tuple(TwoFactor(tuple(map(tuple, f))) for f in facs), model.n)


class _StarterDFS:
    def __init__(self, model: RotationModel, cycle_type: CycleType, orbit_of: dict, used: set, rng: random.Random, budget: int):
        self.model = model
        self.lengths = Counter(cycle_type.lengths)
        self.orbit_of = orbit_of
        self.used = used
        self.rng = rng
        self.budget = budget
        self.nodes = 0
        self.n = model.n

    def run(self) -> Optional[list]:
        return self._starter(0, [])

    def _starter(self, idx: int, done: list) -> Optional[list]:
        if idx == self.model.starters:
            return list(done)
        return self._cycle(idx, done, [], set(), Counter(self.lengths))

    def _cycle(self, idx, done, cycles, inside, counts) -> Optional[list]:
        free = [v for v in range(self.n) if v not in inside]
        if not free:
            done.append(list(cycles))
            got = self._starter(idx + 1, done)
            if got is None:
                done.pop()
            return got
        start = free[0]
        options = [m for m in counts if counts[m] > 0]
        self.rng.shuffle(options)
        for m in options:
            counts[m] -= 1
            got = self._extend(idx, done, cycles, inside | {start}, counts, [start], m)
            counts[m] += 1
            if got is not None:
                return got
        return None

    def _extend(self, idx, done, cycles, inside, counts, path, m) -> Optional[list]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        cur = path[-1]
        if len(path) == m:
            o = self.orbit_of[(cur, path[0])]
            if o in self.used:
                return None
            self.used.add(o)
            cycles.append(tuple(path))
            got = self._cycle(idx, done, cycles, inside, counts)
            if got is None:
                cycles.pop()
                self.used.discard(o)
            return got
        cands = [w for w in range(self.n) if w not in inside and self.orbit_of[(cur, w)] not in self.used]
        self.rng.shuffle(cands)
        for w in cands:
            o = self.orbit_of[(cur, w)]
            self.used.add(o)
            path.append(w)
            got = self._extend(idx, done, cycles, inside | {w}, counts, path, m)
            path.pop()
            self.used.discard(o)
            if got is not None:
                return got
        return None


def rotational_search(
    cycle_type: CycleType,
    model: RotationModel,
    *,
    seed: int = 0,
    budget: int = 200_000,
    restarts: int = 20,
) -> RotationalResult:
    """Randomized backtracking for starters (and invariant factors) under ``model``."""
    if model.n != cycle_type.n:
        raise ValueError("model and type disagree on n")
    rng = random.Random(seed)
    orbit_of = _arc_orbits(model)
    invariants = _invariant_factors(model, cycle_type) if model.invariant else []
    total = 0
    for _ in range(restarts):
        chosen: list = []
        used: set = set()
        if model.invariant:
            pool = list(invariants)
            rng.shuffle(pool)
            for f in pool:
                orbits = {orbit_of[a] for a in _arcs_of(f)}
                if used.isdisjoint(orbits):
                    chosen.append(f)
                    used |= orbits
                    if len(chosen) == model.invariant:
                        break
            if len(chosen) < model.invariant:
                return RotationalResult(model, None, None, total)
        dfs = _StarterDFS(model, cycle_type, orbit_of, used, rng, budget)
        try:
            found = dfs.run()
        except _OutOfBudget:
            found = None
        total += dfs.nodes
        if found is not None:
            return RotationalResult(model, found, chosen, total)
    return RotationalResult(model, None, None, total)


def candidate_models(cycle_type: CycleType) -> list:
    """Rotation models worth trying, cheapest first."""
    n = cycle_type.n
    out = []
    parity_blocked = n % 2 == 0 and min(cycle_type.lengths) >= 3
    for q in range(1, n):
        if (n - 1) % q == 0 and (n - 1) // q >= 3 and not (q == 1 and parity_blocked):
            out.append(one_rotational_model(n, q))
    for g in (3, 5, 7, 2):
        if n % g == 0 and (n - 1) // g >= 1:
            out.append(fixed_point_free_model(n, g))
    return out
