from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from opstar.core import CycleType, Decomposition, TwoFactor, normalize_infinity
from opstar.rotational import catalog_lookup, expand_starters
from opstar.verify import (
    DUPLICATE_ARC,
    MISSING_ARC,
    NOT_ORTHOGONAL,
    NOT_SPANNING,
    WRONG_CYCLE_TYPE,
    WRONG_FACTOR_COUNT,
    path,
    cycle,
    verify_decomposition,
    verify_orthogonal,
    verify_two_factor,
)


def _oracle_cycle_lengths(arcs, n):
    """Independent check: arcs as a permutation of 0..n-1, return its cycle lengths or None."""
    succ = dict(arcs)
    if len(succ) != len(arcs) or sorted(succ) != list(range(n)) or sorted(succ.values()) != list(range(n)):
        return None
    lengths, seen = [], set()
    for v in range(n):
        if v not in seen:
            k, w = 0, v
            while w not in seen:
                seen.add(w)
                w = succ[w]
                k += 1
            lengths.append(k)
    return sorted(lengths)


def _starter_45():
    ss = catalog_lookup(CycleType((4, 5)))
    return normalize_infinity(TwoFactor(ss.starters[0]), 9)


def test_catalog_starter_is_a_45_factor():
    F = _starter_45()
    assert verify_two_factor(F, 9, (4, 5)).ok
    assert _oracle_cycle_lengths(F.arcs(), 9) == [4, 5]


def test_wrong_cycle_type_reported():
    assert verify_two_factor(_starter_45(), 9, (3, 6)).kinds() == {WRONG_CYCLE_TYPE}


def test_missing_vertex_is_not_spanning():
    F = TwoFactor(((0, 1, 2), (3, 4)))
    assert NOT_SPANNING in verify_two_factor(F, 6, (2, 4)).kinds()


def test_expanded_45_solution():
    dec = expand_starters(catalog_lookup(CycleType((4, 5))))
    assert len(dec) == 8 and len(dec.arcs()) == 72
    assert verify_decomposition(dec, (4, 5)).ok


def test_repeated_factor_gives_duplicate_arc():
    dec = expand_starters(catalog_lookup(CycleType((4, 5))))
    bad = Decomposition(dec.factors[:-1] + (dec.factors[0],), 9)
    kinds = verify_decomposition(bad, (4, 5)).kinds()
    assert DUPLICATE_ARC in kinds and MISSING_ARC in kinds


def test_k2_single_digon():
    assert verify_decomposition(Decomposition((TwoFactor(((0, 1),)),), 2), (2,)).ok


def test_wrong_factor_count():
    dec = expand_starters(catalog_lookup(CycleType((4, 5))))
    report = verify_decomposition(Decomposition(dec.factors[:-1], 9), (4, 5))
    assert {WRONG_FACTOR_COUNT, MISSING_ARC} <= report.kinds()


def test_orthogonal_two_single_arcs():
    assert verify_orthogonal([(0, 3), (4, 1)], 5, [2, 3], [path(1), path(1)]).ok


def test_orthogonal_digon():
    assert verify_orthogonal([(0, 1), (1, 0)], 4, [1, 3], [cycle(2)]).ok


def test_orthogonal_repeated_difference():
    report = verify_orthogonal([(0, 2), (1, 3)], 5, [2, 3], [path(1), path(1)])
    assert NOT_ORTHOGONAL in report.kinds()


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=9), st.randoms(use_true_random=False))
def test_random_permutations_agree_with_oracle(n, rnd):
    perm = list(range(n))
    rnd.shuffle(perm)
    arcs = [(v, perm[v]) for v in range(n)]
    want = _oracle_cycle_lengths(arcs, n)
    if any(u == v for u, v in arcs):
        assert not verify_two_factor(set(arcs), n, [n]).ok
        return
    assert verify_two_factor(set(arcs), n, want).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_single_arc_deletion_is_caught(seed):
    dec = expand_starters(catalog_lookup(CycleType((4, 5))))
    rnd = random.Random(seed)
    i = rnd.randrange(len(dec))
    arcs = list(dec[i].arcs())
    del arcs[rnd.randrange(len(arcs))]
    factors = [f.arcs() for f in dec]
    factors[i] = arcs
    report = verify_decomposition([set(map(tuple, f)) for f in factors], (4, 5))
    assert not report.ok and MISSING_ARC in report.kinds()
