"""Hamilton decompositions of small-degree circulants and the derived
C_t- and C_2-factorizations of directed circulants.

The existence results for degree-4 and degree-6 circulants are not
constructive, so :func:`hamilton_decompose_circulant` finds the cycles by a
randomized 4-cycle switching search.  It starts from the 2-factors
generated by each generator and swaps edges around squares
``i, i+a, i+a+b, i+b`` whenever that merges cycles.  Every result is
checked edge by edge before it is returned.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd
from typing import NamedTuple, Sequence

from .core import ConnectionSet, TwoFactor
from .errors import HypothesisViolated, SearchFailed


class HamiltonDecomposition(NamedTuple):
    t: int
    generators: tuple
    cycles: tuple  # undirected Hamilton cycles as vertex sequences


def _edge(u: int, v: int) -> frozenset:
    return frozenset((u, v))


def _circulant_edges(t: int, gens: Sequence[int]) -> set:
    return {_edge(i, (i + g) % t) for i in range(t) for g in gens}


def _check_hypotheses(t: int, gens: tuple) -> None:
    signed = {g % t for g in gens} | {(-g) % t for g in gens}
    if 0 in signed or len(signed) != 2 * len(gens):
        raise HypothesisViolated(f"Circ({t}; +-{list(gens)}) is not {2 * len(gens)}-regular")
    if len(gens) == 1:
        if gcd(t, gens[0]) != 1:
            raise HypothesisViolated(f"Circ({t}; +-{gens[0]}) is disconnected")
    elif len(gens) == 2:
        if gcd(gcd(t, gens[0]), gens[1]) != 1:
            raise HypothesisViolated(f"Circ({t}; +-{list(gens)}) is disconnected")
    elif len(gens) == 3:
        a, b, c = gens
        if t % 2 or gcd(gcd(t, a), b) * gcd(t, c) != 2:
            raise HypothesisViolated(f"gcd({t},{a},{b})*gcd({t},{c}) != 2 or t odd")
    else:
        raise HypothesisViolated("only 1, 2 or 3 generators are supported")


def _cycles_of(adj: dict) -> list[list[int]]:
    seen: set = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = None, s
        while True:
            a, b = adj[cur]
            nxt = b if a == prev else a
            if nxt == s:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        out.append(cyc)
    return out


def _count_cycles(adj: dict) -> int:
    return len(_cycles_of(adj))


def _adjacency(t: int, edges: set) -> dict:
    adj: dict = {v: [] for v in range(t)}
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _switch_search(t: int, gens: tuple, rng: random.Random, max_rounds: int):
    factors = [{_edge(i, (i + g) % t) for i in range(t)} for g in gens]
    adjs = [_adjacency(t, f) for f in factors]
    counts = [_count_cycles(a) for a in adjs]
    squares = [
        (x, y, i)
        for x in range(len(gens))
        for y in range(len(gens))
        if x != y
        for i in range(t)
    ]
    for _ in range(max_rounds):
        if all(c == 1 for c in counts):
            return [_cycles_of(a)[0] for a in adjs]
        rng.shuffle(squares)
        progressed = False
        for x, y, i in squares:
            a, b = gens[x], gens[y]
            e1, e2 = _edge(i, (i + a) % t), _edge((i + b) % t, (i + a + b) % t)
            e3, e4 = _edge(i, (i + b) % t), _edge((i + a) % t, (i + a + b) % t)
            fa, fb = factors[x], factors[y]
            if not (e1 in fa and e2 in fa and e3 in fb and e4 in fb):
                continue
            na = (fa - {e1, e2}) | {e3, e4}
            nb = (fb - {e3, e4}) | {e1, e2}
            if len(na) != t or len(nb) != t:
                continue
            adj_a, adj_b = _adjacency(t, na), _adjacency(t, nb)
            if any(len(v) != 2 for v in adj_a.values()) or any(len(v) != 2 for v in adj_b.values()):
                continue
            ca, cb = _count_cycles(adj_a), _count_cycles(adj_b)
            delta = (ca - counts[x]) + (cb - counts[y])
            if delta < 0 or (delta == 0 and rng.random() < 0.05):
                factors[x], factors[y] = na, nb
                adjs[x], adjs[y] = adj_a, adj_b
                counts[x], counts[y] = ca, cb
                progressed = progressed or delta < 0
                if all(c == 1 for c in counts):
                    break
    if all(c == 1 for c in counts):
        return [_cycles_of(a)[0] for a in adjs]
    return None


def _verify_hamilton(t: int, gens: tuple, cycles: list) -> bool:
    used: set = set()
    for cyc in cycles:
        if sorted(cyc) != list(range(t)):
            return False
        for j in range(t):
            e = _edge(cyc[j], cyc[(j + 1) % t])
            if e in used:
                return False
            used.add(e)
    return used == _circulant_edges(t, gens)


@lru_cache(maxsize=None)
def _decompose(t: int, gens: tuple, seed: int, budget: int) -> HamiltonDecomposition:
    if len(gens) == 1:
        cyc = [(i * gens[0]) % t for i in range(t)]
        return HamiltonDecomposition(t, gens, (tuple(cyc),))
    rng = random.Random(seed)
    for _ in range(budget):
        found = _switch_search(t, gens, rng, max_rounds=4 * t)
        if found is not None and _verify_hamilton(t, gens, found):
            return HamiltonDecomposition(t, gens, tuple(tuple(c) for c in found))
    raise SearchFailed(f"no Hamilton decomposition of Circ({t}; +-{list(gens)}) found within budget {budget}")


def hamilton_decompose_circulant(t: int, gens: Sequence[int], *, seed: int = 0, budget: int = 200) -> HamiltonDecomposition:
    """Split Circ(t; +-gens) into |gens| edge-disjoint Hamilton cycles.

    ``gens`` is ordered: with three generators ``(a, b, c)`` the condition
    ``gcd(t,a,b) * gcd(t,c) == 2`` is checked for that labelling.
    """
    gens = tuple(int(g) % t for g in gens)
    _check_hypotheses(t, gens)
    return _decompose(t, gens, seed, budget)


# --- directed factorizations -------------------------------------------------


class CirculantFactorization(NamedTuple):
    t: int
    D: ConnectionSet
    factors: tuple  # TwoFactors on Z_t


def _both_ways(cyc: Sequence[int]) -> list[TwoFactor]:
    cyc = list(cyc)
    back = [cyc[0]] + cyc[:0:-1]
    return [TwoFactor((tuple(cyc),)), TwoFactor((tuple(back),))]


def ct_connection_set(t: int, s: int) -> ConnectionSet:
    if s % 2:
        diffs = [d for i in range(1, (s - 1) // 2 + 1) for d in (i, -i)]
    else:
        diffs = [-1] + [d for i in range(2, s // 2 + 1) for d in (i, -i)]
    return ConnectionSet.signed(t, diffs)


def ct_blocks(t: int, s: int) -> list[tuple]:
    """Generator blocks whose Hamilton decompositions, directed both ways, cover D minus +-1 / -1."""
    k = s // 2
    if s == 5 and t % 2 == 0:
        # Circ(t; +-2) is disconnected for even t, so take {1, 2} together
        return [(1, 2)]
    T = list(range(2, k + 1))
    if len(T) == 0:
        return []
    if len(T) == 1:
        return [(T[0],)]
    blocks: list[tuple] = []
    if len(T) % 2:
        if t % 2:
            blocks += [(2,), (3, 4)]
        else:
            blocks.append((3, 4, 2))  # ordered so that gcd(t,3,4)*gcd(t,2) == 2
        T = T[3:]
    blocks += [(T[i], T[i + 1]) for i in range(0, len(T), 2)]
    return blocks


def ct_factorization(t: int, s: int, *, seed: int = 0) -> CirculantFactorization:
    """C_t-factorization of Circ(t; D) into s-1 directed Hamilton cycles."""
    if not 2 <= s < t:
        raise HypothesisViolated(f"need 2 <= s < t, got s={s}, t={t}")
    if s == 4 and t % 2 == 0:
        raise HypothesisViolated("s = 4 requires t odd")
    D = ct_connection_set(t, s)
    factors: list[TwoFactor] = []
    blocks = ct_blocks(t, s)
    if s % 2 == 0:
        factors.append(TwoFactor((tuple((-i) % t for i in range(t)),)))
    elif not (blocks and 1 in blocks[0]):
        factors += _both_ways(range(t))
    for block in blocks:
        for cyc in hamilton_decompose_circulant(t, block, seed=seed).cycles:
            factors += _both_ways(cyc)
    return CirculantFactorization(t, D, tuple(factors))


def c2_connection_set(t: int, s: int) -> ConnectionSet:
    if s % 2:
        diffs = [d for i in range(1, (s - 1) // 2 + 1) for d in (i, -i)]
    else:
        diffs = [d for i in range(1, s // 2) for d in (i, -i)] + [t // 2]
    return ConnectionSet.signed(t, diffs)


def c2_blocks(s: int) -> list[tuple]:
    k = (s - 1) // 2
    T = list(range(1, k + 1))
    if not T:
        return []
    if len(T) % 2:
        return [(1,)] + [(T[i], T[i + 1]) for i in range(1, len(T), 2)]
    return [(T[i], T[i + 1]) for i in range(0, len(T), 2)]


def split_matchings(cyc: Sequence[int]) -> tuple[list, list]:
    """Alternate edges of an even cycle, starting at its least vertex."""
    cyc = list(cyc)
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    m = len(cyc)
    first = [(cyc[j], cyc[j + 1]) for j in range(0, m, 2)]
    second = [(cyc[j], cyc[(j + 1) % m]) for j in range(1, m, 2)]
    return first, second


def c2_factorization(t: int, s: int, *, seed: int = 0) -> CirculantFactorization:
    """C_2-factorization of Circ(t; D) into s-1 digon factors."""
    if t % 2:
        raise HypothesisViolated(f"t={t} must be even")
    if not 2 <= s < t:
        raise HypothesisViolated(f"need 2 <= s < t, got s={s}, t={t}")
    D = c2_connection_set(t, s)
    factors: list[TwoFactor] = []
    for block in c2_blocks(s):
        for cyc in hamilton_decompose_circulant(t, block, seed=seed).cycles:
            for matching in split_matchings(cyc):
                factors.append(TwoFactor(tuple(tuple(e) for e in matching)))
    if s % 2 == 0:
        factors.append(TwoFactor(tuple((i, i + t // 2) for i in range(t // 2))))
    return CirculantFactorization(t, D, tuple(factors))
