from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from opstar.cache import ResultCache
from opstar.core import CycleType
from opstar.errors import BadInstance
from opstar.outcome import StrategyTrace
from opstar.solver import (
    KNOWN_EXCEPTIONS,
    OPEN_N14,
    SearchBudget,
    Solver,
    brute_force_search,
    extend_by_long_cycle,
    is_open_two_table,
    replay,
    solve,
)
from opstar.verify import verify_decomposition


def _fresh(**kw):
    return Solver(SearchBudget(**kw), cache=ResultCache(persist=False, use_seed=False))


@pytest.mark.parametrize("lengths", [(3, 3), (4,), (6,)])
def test_known_exceptions(lengths):
    out = solve(lengths)
    assert out.verdict == "Nonexistent" and out.witness.kind == "KnownException"


def test_catalog_route():
    out = solve((4, 5))
    assert out.verdict == "Solved" and out.trace.rules() == ["catalog"]
    assert len(out.decomposition) == 8


@pytest.mark.parametrize("lengths", [(4, 10), (6, 8), (3, 3, 8), (4, 12), (6, 16)])
def test_open_cases_are_unknown(lengths):
    out = _fresh().solve(lengths)
    assert out.verdict == "Unknown" and out.reason.kind == "OpenCase"


def test_open_family_predicate():
    assert is_open_two_table((4, 10)) and is_open_two_table((6, 8)) and is_open_two_table((6, 20))
    assert not is_open_two_table((4, 8)) and not is_open_two_table((4, 9)) and not is_open_two_table((5, 10))
    assert len(OPEN_N14) == 9 and all(sum(t) == 14 for t in OPEN_N14)


@pytest.mark.parametrize(
    "lengths, rule",
    [
        ((2, 2, 2), "round-robin"),
        ((9,), "walecki"),
        ((2, 2, 4), "join-224"),
        ((2, 9), "long-extension"),
        ((2, 2, 2, 2, 2, 5), "digon-extension"),
        ((2, 2, 4, 4), "bipartite-double"),
    ],
)
def test_rule_routing(lengths, rule):
    out = _fresh().solve(lengths)
    assert out.verdict == "Solved" and out.trace.root.rule == rule
    assert verify_decomposition(out.decomposition, lengths).ok


def test_bad_instance():
    with pytest.raises(BadInstance):
        solve((1, 4))
    with pytest.raises(BadInstance):
        solve("x y")


def test_trace_replay_is_deterministic():
    out = _fresh().solve((2, 3, 11))
    doc = json.loads(json.dumps(out.trace.to_json()))
    again = replay(StrategyTrace.from_json(doc))
    assert [f.canonical() for f in again] == [f.canonical() for f in out.decomposition]
    assert out.trace.rules()[0] == "long-extension"


def test_trace_steps_hide_bulky_data():
    out = _fresh().solve((4, 4))
    assert out.trace.rules() == ["exact-cover"]
    assert all(not k.startswith("_") for _, p in out.trace.steps for k in p)


def test_search_disabled_gives_budget_exhausted():
    out = _fresh(allow_search=False).solve((4, 7))
    assert out.verdict == "Unknown" and out.reason.kind == "BudgetExhausted"


def test_brute_force():
    assert brute_force_search((3, 3)).witness.kind == "ExhaustiveSearchLog"
    assert brute_force_search((2, 3)).verdict == "Solved"
    assert brute_force_search((6,), budget=3).verdict == "Unknown"


def test_exceptions_table():
    assert set(KNOWN_EXCEPTIONS) == {(3, 3), (4,), (6,)}


def test_parsed_types_accepted():
    assert solve("2^2, 4").verdict == "Solved"
    assert solve(CycleType((2, 5))).verdict == "Solved"


@st.composite
def chains(draw, n_max: int = 60):
    """Sequences where each new m has m - (m mod 2) > the sum of m_i + (m_i mod 2) so far."""
    seq = [draw(st.sampled_from([2, 3, 5, 7, 8, 9]))]
    while len(seq) == 1 or draw(st.booleans()):
        need = sum(m + m % 2 for m in seq)
        lo = need + 1 if need % 2 else need + 2
        if sum(seq) + lo > n_max:
            break
        seq.append(draw(st.integers(lo, n_max - sum(seq))))
    return seq


@settings(max_examples=25, deadline=None)
@given(chains())
def test_repeated_long_extension_chains(seq):
    sol = solve((seq[0],))
    for i, t in enumerate(seq[1:], start=1):
        sol = extend_by_long_cycle(sol, t)
        assert verify_decomposition(sol.decomposition, seq[: i + 1]).ok


@pytest.mark.parametrize("lengths", [(2, 2, 2, 5), (3, 3, 3, 3), (2, 4, 4), (3, 4, 8), (7, 7), (5, 2, 2, 2, 2)])
def test_every_solved_trace_replays(lengths):
    out = solve(lengths)
    again = replay(out.trace)
    assert [f.arcs() for f in again] == [f.arcs() for f in out.decomposition]
