from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from opstar.core import circulant_digraph
from opstar.errors import BadForm, CollisionDetected, HypothesisViolated
from opstar.orthogonal import (
    DIGONS,
    PATHS,
    OrthogonalRequest,
    Subdigraph,
    digons_connection_set,
    orthogonal_digons,
    orthogonal_digons_traced,
    orthogonal_paths,
    orthogonal_paths_traced,
    paths_connection_set,
    special_22_t,
    special_3_t,
    walk_P,
)
from opstar.verify import cycle, path, verify_orthogonal

from .oracles import components, cycle_lengths, differences, is_partition


def admissible_paths(t_max):
    for t in range(3, t_max + 1):
        for s in range(2, t):
            if s == 3 and t % 2 == 0:
                continue
            for a in range(s % 2, min(s // 3, 2 * (t // 2) - s) + 1, 2):
                yield s, t, a


def admissible_digons(t_max):
    for t in range(4, t_max + 1, 2):
        for s in range(2, t):
            for a in range(s % 2, min(s // 3, t - s) + 1, 2):
                yield s, t, a


def _oracle_paths(H, s, t, a):
    arcs = H.arcs
    S = set(paths_connection_set(s, t))
    if differences(arcs, t) != {d: 1 for d in S}:
        return False
    comps = sorted((nv, na) for nv, na, deg in components(arcs) if deg <= 1)
    if len(comps) != len(components(arcs)):
        return False
    # a single arcs plus one (t-s-a)-path, all acyclic
    want = sorted([(2, 1)] * a + ([(t - s - a + 1, t - s - a)] if t - s - a > 0 else []))
    return comps == want


def _oracle_digons(H, s, t, a):
    arcs = H.arcs
    S = set(digons_connection_set(s, t))
    if differences(arcs, t) != {d: 1 for d in S}:
        return False
    comps = sorted((nv, na) for nv, na, _ in components(arcs))
    return comps == sorted([(2, 1)] * a + [(2, 2)] * ((t - s - a) // 2))


def test_walk_examples():
    assert walk_P({2, 4, 3}, 0, 6) == (0, 2, 5, 3)
    assert walk_P({4}, 0, 8) == (0, 4)
    p = walk_P({2, 7, 3, 6, 4}, 0, 9)
    assert [(p[i + 1] - p[i]) % 9 for i in range(5)] == [2, 6, 4, 3, 7]


def test_walk_bad_form():
    with pytest.raises(BadForm):
        walk_P({2, 3}, 0, 6)
    with pytest.raises(BadForm):
        walk_P({2, 3, 1}, 0, 6)


@pytest.mark.parametrize("t", range(4, 16))
def test_walk_uses_each_difference_once(t):
    h = t // 2
    for r in range(h):
        for ds in combinations(range(1, h), r):
            R = {h} | {d % t for d in ds} | {-d % t for d in ds}
            for k in (0, 3):
                p = walk_P(R, k, t)
                assert p[0] == k and len(set(p)) == len(p)
                arcs = list(zip(p, p[1:]))
                assert differences(arcs, t) == {d: 1 for d in R}


def test_subdigraph_build_collision():
    with pytest.raises(CollisionDetected):
        Subdigraph.build(5, paths=[(0, 1), (6, 2)])


def test_paths_s3_t5():
    H = orthogonal_paths(OrthogonalRequest(3, 5, 1))
    assert set(H.arcs) == {(0, 3), (4, 1)}


def test_paths_s5_t8_starts_with_half_plus_one():
    H = orthogonal_paths(OrthogonalRequest(5, 8, 1))
    assert (0, 5) in H.paths
    assert _oracle_paths(H, 5, 8, 1)


def test_paths_s6_t9_single_path_end():
    H = orthogonal_paths(OrthogonalRequest(6, 9, 0))
    assert len(H.paths) == 1 and H.paths[0][-1] == (1 - 2) % 9
    assert _oracle_paths(H, 6, 9, 0)


def test_digons_small_examples():
    H = orthogonal_digons(OrthogonalRequest(2, 4, 0, DIGONS))
    assert H.paths == () and len(H.cycles) == 1
    H = orthogonal_digons(OrthogonalRequest(3, 6, 1, DIGONS))
    assert (0, 3) in H.paths and len(H.cycles) == 1
    H = orthogonal_digons(OrthogonalRequest(7, 10, 1, DIGONS))
    assert set(digons_connection_set(7, 10)) == {4, 5, 6}
    assert len(H.paths) == 1 and len(H.cycles) == 1


@pytest.mark.parametrize(
    "req",
    [
        OrthogonalRequest(3, 6, 1),
        OrthogonalRequest(5, 8, 3),
        OrthogonalRequest(5, 7, 1, DIGONS),
        OrthogonalRequest(8, 9, 2),
        OrthogonalRequest(4, 10, 0, "loops"),
    ],
)
def test_request_validation(req):
    with pytest.raises(HypothesisViolated):
        req.validate()


@pytest.mark.parametrize("s, t, a", [(9, 20, 3), (9, 23, 3), (5, 12, 1), (5, 11, 1), (3, 7, 1), (3, 9, 1)])
def test_special_pairs(s, t, a):
    H = orthogonal_paths(OrthogonalRequest(s, t, a))
    assert _oracle_paths(H, s, t, a)


def test_every_paths_subcase_is_reached():
    seen = {orthogonal_paths_traced(OrthogonalRequest(s, t, a))[0].case.split("(")[0] for s, t, a in admissible_paths(40)}
    assert {"1.1", "1.2", "1.3", "2.1", "2.2", "2.3", "2.4", "3.1", "3.2", "3.3", "3.4", "4.1", "4.2", "4.3", "4.4"} <= seen


@pytest.mark.parametrize("t", range(3, 31))
def test_paths_sweep_oracle(t):
    for s, tt, a in admissible_paths(t):
        if tt != t:
            continue
        H = orthogonal_paths(OrthogonalRequest(s, t, a))
        assert _oracle_paths(H, s, t, a), (s, t, a)


@pytest.mark.parametrize("t", range(4, 31, 2))
def test_digons_sweep_oracle(t):
    for s, tt, a in admissible_digons(t):
        if tt != t:
            continue
        state, H = orthogonal_digons_traced(OrthogonalRequest(s, t, a, DIGONS))
        assert _oracle_digons(H, s, t, a), (s, t, a, state.case)


def test_casework_state_is_serializable():
    state, _ = orthogonal_paths_traced(OrthogonalRequest(10, 17, 2))
    d = state.as_dict()
    assert d["s"] == 10 and d["t"] == 17 and d["a"] == 2 and "case" in d


def _gadget_ok(t, D, fac, H, s):
    S = D.complement()
    parts = [set(f.arcs()) for f in fac.factors]
    return (
        is_partition(parts, circulant_digraph(t, D))
        and all(cycle_lengths(p, range(t)) == [t] for p in parts)
        and len(parts) == s - 1
        and differences(H.arcs, t) == {d: 1 for d in S}
    )


@pytest.mark.parametrize("t", [4, 6, 8, 10, 12, 14, 20, 22])
def test_special_3(t):
    D, fac, H = special_3_t(t)
    assert _gadget_ok(t, D, fac, H, 3)
    if t == 4:
        assert set(D) == {1, 3} and set(H.arcs) == {(0, 2)}
    if t % 4 == 2 and t > 6:
        assert set(D) == {t // 2 - 2, t // 2 + 2}


@pytest.mark.parametrize("t", [8, 10, 12, 14, 16, 18])
def test_special_22(t):
    D, fac, H = special_22_t(t)
    assert _gadget_ok(t, D, fac, H, 4)
    if t % 4 == 0:
        assert set(D) == {t - 1, t // 2 - 1, t // 2 + 1}
    else:
        assert set(D) == {t - 1, t // 2 - 2, t // 2 + 2}


def test_special_22_rejects_t6():
    with pytest.raises(HypothesisViolated):
        special_22_t(6)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=41, max_value=90).flatmap(lambda t: st.tuples(st.just(t), st.integers(2, t - 1))))
def test_paths_beyond_sweep(ts):
    t, s = ts
    if s == 3 and t % 2 == 0:
        return
    for a in range(s % 2, min(s // 3, 2 * (t // 2) - s) + 1, 2):
        H = orthogonal_paths(OrthogonalRequest(s, t, a))
        assert verify_orthogonal(H, t, paths_connection_set(s, t), [path(1)] * a + [path(t - s - a)]).ok
