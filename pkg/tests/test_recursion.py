from __future__ import annotations

import pytest

from opstar.circulant_ham import ct_factorization
from opstar.core import ConnectionSet, CycleType, Decomposition, TwoFactor
from opstar.errors import ConditionFailed, OddLengthInBipartite, SizeMismatch
from opstar.orthogonal import OrthogonalRequest, orthogonal_paths, paths_connection_set, special_3_t
from opstar.recursion import (
    CYCLE,
    PATH,
    SplitAssignment,
    bipartite_double,
    join_extend,
    join_extend_circulant,
    op_224,
)
from opstar.solver import solve

from .oracles import cycle_lengths, is_partition

K2 = Decomposition((TwoFactor(((0, 1),)),), 2)
K3 = Decomposition((TwoFactor(((0, 1, 2),)), TwoFactor(((0, 2, 1),))), 3)


def _oracle_ok(dec, lengths):
    n = sum(lengths)
    target = {(u, v) for u in range(n) for v in range(n) if u != v}
    parts = [set(f.arcs()) for f in dec]
    return (
        len(parts) == n - 1
        and is_partition(parts, target)
        and all(cycle_lengths(p, range(n)) == sorted(lengths) for p in parts)
    )


def _solution(*lengths):
    return solve(CycleType(lengths)).decomposition


def test_double_digons():
    dec = bipartite_double(_solution(2, 2), _solution(2, 2))
    assert len(dec) == 7 and _oracle_ok(dec, (2, 2, 2, 2))


def test_double_448():
    dec = bipartite_double(_solution(4, 4), _solution(8))
    assert _oracle_ok(dec, (4, 4, 8))


@pytest.mark.parametrize("x, y", [((2, 4), (2, 4)), ((2, 4), (2, 2, 2))])
def test_double_with_24(x, y):
    assert _oracle_ok(bipartite_double(_solution(*x), _solution(*y)), x + y)


def test_double_rejects_odd():
    with pytest.raises(OddLengthInBipartite):
        bipartite_double(K3, K3)


def test_double_rejects_size_mismatch():
    with pytest.raises(SizeMismatch):
        bipartite_double(K2, _solution(2, 2))


def test_op224():
    dec = op_224()
    assert len(dec) == 7 and _oracle_ok(dec, (2, 2, 4))


def test_split_assignment_checks_lengths():
    with pytest.raises(ConditionFailed) as info:
        SplitAssignment((2, 4), (1, 1), (0, 1))
    assert info.value.condition == "2c"


def test_join_rejects_bad_family():
    # a family that repeats H_0 everywhere cannot decompose D''
    dprime = [TwoFactor(((1, 4), (0, 5, 2, 3)))]
    h0 = [(PATH, (0,)), (PATH, (1,)), (CYCLE, (2, 5, 3, 4))]
    assign = SplitAssignment((2, 2, 4), (1, 1, 0), (0, 0, 4))
    with pytest.raises(ConditionFailed):
        join_extend(K2, dprime, [h0] * 6, assign)


def test_join_circulant_25():
    s, t, a = 2, 5, 0
    fac = ct_factorization(t, s)
    S = paths_connection_set(s, t)
    H = orthogonal_paths(OrthogonalRequest(s, t, a))
    dec = join_extend_circulant(K2, t, S, H, fac.factors, SplitAssignment((2, 5), (1, 1), (0, 3)))
    assert _oracle_ok(dec, (2, 5))


def test_join_circulant_38_with_gadget():
    t = 8
    D, fac, H = special_3_t(t)
    dec = join_extend_circulant(K3, t, D.complement(), H, fac.factors, SplitAssignment((3, 8), (1, 2), (1, 4)))
    assert _oracle_ok(dec, (3, 8))


def test_join_circulant_size_mismatch():
    fac = ct_factorization(5, 2)
    H = orthogonal_paths(OrthogonalRequest(2, 5, 0))
    with pytest.raises(SizeMismatch):
        join_extend_circulant(K2, 5, ConnectionSet.signed(5, [1, -1]), H, fac.factors, SplitAssignment((2, 5), (1, 1), (0, 3)))
