from __future__ import annotations

import pytest

from opstar.core import CycleType
from opstar.errors import HypothesisViolated
from opstar.solver import delta, extend_by_digons, extend_by_long_cycle, solve
from opstar.verify import verify_decomposition


@pytest.mark.parametrize("m, d", [(4, 0), (7, 1), (2, 0)])
def test_delta(m, d):
    assert delta(m) == d


def _base(*lengths):
    out = solve(CycleType(lengths))
    assert out.verdict == "Solved"
    return out


def test_long_25():
    out = extend_by_long_cycle(_base(2), 5)
    assert out.decomposition.n == 7 and verify_decomposition(out.decomposition, (2, 5)).ok


def test_long_36_uses_gadget():
    out = extend_by_long_cycle(_base(3), 6)
    assert verify_decomposition(out.decomposition, (3, 6)).ok


def test_long_226_routes_to_catalog():
    out = extend_by_long_cycle(_base(2, 2), 6)
    assert out.trace.rules() == ["catalog"]
    assert verify_decomposition(out.decomposition, (2, 2, 6)).ok


def test_long_needs_t_above_s():
    with pytest.raises(HypothesisViolated):
        extend_by_long_cycle(_base(2, 3), 4)


def test_digons_5():
    out = extend_by_digons(_base(5), 12)
    assert verify_decomposition(out.decomposition, (5,) + (2,) * 6).ok


def test_digons_233():
    out = extend_by_digons(_base(2, 3, 3), 10)
    assert verify_decomposition(out.decomposition, (2,) * 6 + (3, 3)).ok


def test_digons_rejected_when_t_not_above_s():
    with pytest.raises(HypothesisViolated):
        extend_by_digons(_base(2, 2), 4)


def test_digons_rejects_odd_t():
    with pytest.raises(HypothesisViolated):
        extend_by_digons(_base(3), 7)


@pytest.mark.parametrize("t", range(4, 22))
def test_every_t_extends_digon_and_triangle(t):
    for base in ((2,), (3,)):
        if t <= sum(base):
            continue
        out = extend_by_long_cycle(_base(*base), t)
        assert verify_decomposition(out.decomposition, base + (t,)).ok
        if t % 2 == 0:
            out = extend_by_digons(_base(*base), t)
            assert verify_decomposition(out.decomposition, base + (2,) * (t // 2)).ok
