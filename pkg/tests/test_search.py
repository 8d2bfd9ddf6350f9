from __future__ import annotations

from collections import Counter
from math import factorial, prod

import pytest

from opstar.core import CycleType, TwoFactor
from opstar.search import (
    candidate_models,
    enumerate_two_factors,
    exact_cover_search,
    expand_rotational,
    fixed_point_free_model,
    model_from_json,
    one_rotational_model,
    rotational_search,
)
from opstar.verify import verify_decomposition


def _count_formula(lengths):
    """Permutations of n points with the given cycle type: n! / (prod m_i * prod c_j!)."""
    n = sum(lengths)
    return factorial(n) // (prod(lengths) * prod(factorial(c) for c in Counter(lengths).values()))


@pytest.mark.parametrize("lengths", [(2,), (2, 2), (4,), (3, 3), (2, 4), (2, 2, 3), (3, 4), (7,)])
def test_enumeration_count(lengths):
    ct = CycleType(lengths)
    got = list(enumerate_two_factors(ct, range(ct.n)))
    assert len(got) == _count_formula(lengths)
    assert len({TwoFactor(f).canonical() for f in got}) == len(got)
    assert all(TwoFactor(f).cycle_type() == ct for f in got)


@pytest.mark.parametrize("lengths", [(3, 3), (4,), (6,)])
def test_exact_cover_exhausts_exceptions(lengths):
    res = exact_cover_search(CycleType(lengths))
    assert res.factors is None and res.exhausted


@pytest.mark.parametrize("lengths", [(2, 3), (5,), (2, 2, 2), (4, 4), (3, 3, 3)])
def test_exact_cover_finds(lengths):
    res = exact_cover_search(CycleType(lengths))
    dec = [TwoFactor(f) for f in res.factors]
    assert verify_decomposition(dec, lengths).ok


def test_exact_cover_budget():
    res = exact_cover_search(CycleType((6,)), budget=5)
    assert res.factors is None and not res.exhausted


def test_models_are_permutations_of_right_order():
    for model in (one_rotational_model(10, 3), fixed_point_free_model(12, 3), fixed_point_free_model(14, 2)):
        assert sorted(model.perm) == list(range(model.n))
        v = 0
        for _ in range(model.order):
            v = model.perm[v]
        assert v == 0
        assert model.starters * model.order + model.invariant == model.n - 1
        assert model_from_json(model.to_json()) == model


def test_candidate_models_skip_parity_blocked():
    names = [m.name for m in candidate_models(CycleType((3, 5)))]
    assert "1-rotational q=1" not in names
    assert "1-rotational q=1" in [m.name for m in candidate_models(CycleType((4, 7)))]


@pytest.mark.parametrize("lengths", [(4, 7), (3, 4, 4), (5, 5), (10,)])
def test_rotational_search_finds_and_expands(lengths):
    ct = CycleType(lengths)
    for model in candidate_models(ct):
        res = rotational_search(ct, model, budget=100_000, restarts=4)
        if res.found:
            dec = expand_rotational(model, res.starters, res.invariant)
            assert verify_decomposition(dec, ct).ok
            return
    pytest.fail(f"no model found {ct}")


def test_rotational_search_is_seed_deterministic():
    ct = CycleType((3, 4, 6))
    model = one_rotational_model(13, 1)
    a = rotational_search(ct, model, seed=7)
    b = rotational_search(ct, model, seed=7)
    assert a.starters == b.starters and a.nodes == b.nodes
