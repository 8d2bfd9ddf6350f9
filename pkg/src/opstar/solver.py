"""Strategy dispatcher: plan a derivation tree, then build and certify it.

Planning walks the rules below in order and returns the first derivation
that applies.  Building is a pure function of the plan, so replaying a
:class:`~opstar.outcome.StrategyTrace` reproduces the same decomposition.

1. known nonexistence: (4), (6), (3,3);
2. catalog entries and the special (2,2,4) join;
3. uniform base cases: digon round robin, doubled Walecki for odd n = m;
4. bipartite doubling when all lengths are even and split into two
   equal-sum halves that are both solvable (applied recursively);
5. extension by the longest cycle, or by a run of digons;
6. the open families with two cycles or n = 14 are reported as open unless a
   cached solution exists;
7. search: cached results, exact cover for small n, then rotational
   starter search under a list of symmetry models;
8. otherwise Unknown.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .basecases import doubled_walecki, round_robin_digons
from .cache import ResultCache
from .core import CycleType, Decomposition, TwoFactor
from .errors import BadInstance, CertificationError, HypothesisViolated
from .extension import delta, digon_extension, long_cycle_extension
from .outcome import (
    BudgetExhausted,
    ExhaustiveSearchLog,
    KnownException,
    Nonexistent,
    OpenCase,
    Solved,
    SolveOutcome,
    Step,
    StrategyTrace,
    Unknown,
)
from .recursion import bipartite_double, op_224
from .rotational import catalog_lookup, expand_starters, StarterSet
from .search import (
    candidate_models,
    exact_cover_search,
    expand_rotational,
    model_from_json,
    rotational_search,
)
from .verify import verify_decomposition

__all__ = [
    "SearchBudget",
    "Solver",
    "solve",
    "brute_force_search",
    "replay",
    "build",
    "delta",
    "extend_by_long_cycle",
    "extend_by_digons",
    "KNOWN_EXCEPTIONS",
    "OPEN_N14",
    "is_open_two_table",
]

KNOWN_EXCEPTIONS = {(4,): "OP*(4;4) has no solution", (6,): "OP*(6;6) has no solution", (3, 3): "OP*(6;3) has no solution"}

OPEN_N14 = frozenset(
    {
        (4, 10),
        (6, 8),
        (3, 3, 8),
        (3, 4, 7),
        (3, 5, 6),
        (4, 4, 6),
        (4, 5, 5),
        (3, 3, 3, 5),
        (3, 3, 4, 4),
    }
)


def is_open_two_table(lengths: Sequence[int]) -> bool:
    """m1 in {4, 6}, m2 even and m1 + m2 >= 14."""
    if len(lengths) != 2:
        return False
    m1, m2 = sorted(lengths)
    return m1 in (4, 6) and m2 % 2 == 0 and m1 + m2 >= 14


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the search rules; ``nodes`` bounds each backtracking run."""

    nodes: int = 400_000
    restarts: int = 8
    exact_cover_max_n: int = 9
    exact_cover_nodes: int = 2_000_000
    seed: int = 0
    allow_search: bool = True


def _as_type(cycle_type) -> CycleType:
    if isinstance(cycle_type, CycleType):
        return cycle_type
    if isinstance(cycle_type, str):
        return CycleType.parse(cycle_type)
    try:
        return CycleType(tuple(int(m) for m in cycle_type))
    except (TypeError, ValueError) as exc:
        raise BadInstance(f"not a cycle type: {cycle_type!r}") from exc


# --- building ------------------------------------------------------------------


def build(step: Step, log: Optional[list] = None) -> Decomposition:
    """Execute one derivation tree; extension parameters are appended to ``log``."""
    rule, p = step.rule, step.params
    if rule == "catalog":
        found = catalog_lookup(CycleType(tuple(p["type"])))
        return expand_starters(found) if isinstance(found, StarterSet) else found
    if rule == "join-224":
        return op_224()
    if rule == "round-robin":
        return round_robin_digons(p["n"])
    if rule == "walecki":
        return doubled_walecki(p["n"])
    if rule == "bipartite-double":
        return bipartite_double(build(step.children[0], log), build(step.children[1], log))
    if rule in ("long-extension", "digon-extension"):
        extend = long_cycle_extension if rule == "long-extension" else digon_extension
        ext = extend(build(step.children[0], log), p["t"], seed=p.get("seed", 0))
        if log is not None:
            log.append({"rule": rule, **ext.params})
        return ext.decomposition
    if rule == "rotational-search":
        model = model_from_json(p["model"])
        return expand_rotational(model, p["_starters"], p["_invariant"])
    if rule in ("exact-cover", "explicit"):
        return Decomposition(tuple(TwoFactor(tuple(map(tuple, f))) for f in p["_factors"]), p["n"])
    raise BadInstance(f"unknown rule {rule!r}")


def replay(trace: Union[StrategyTrace, dict], log: Optional[list] = None) -> Decomposition:
    """Rebuild the decomposition described by a trace."""
    if isinstance(trace, dict):
        trace = StrategyTrace.from_json(trace)
    return build(trace.root, log)


# --- the solver ---------------------------------------------------------------------


def _even_splits(lengths: tuple) -> Iterator[tuple]:
    """Sub-multisets with half the total that contain the largest length, largest-first."""
    total = sum(lengths)
    if total % 2:
        return
    half = total // 2
    counts = Counter(lengths)
    values = sorted(counts, reverse=True)
    top = values[0]

    def rec(i: int, remaining: int, chosen: list) -> Iterator[list]:
        if remaining == 0:
            yield list(chosen)
            return
        if i == len(values):
            return
        v = values[i]
        lo = 1 if v == top and not chosen else 0
        for c in range(min(counts[v], remaining // v), lo - 1, -1):
            chosen.extend([v] * c)
            yield from rec(i + 1, remaining - c * v, chosen)
            del chosen[len(chosen) - c :]

    for part in rec(0, half, []):
        rest = Counter(lengths) - Counter(part)
        yield tuple(sorted(part)), tuple(sorted(rest.elements()))


class Solver:
    """Memoizing planner; one instance per cache and budget."""

    def __init__(self, budget: Optional[SearchBudget] = None, cache: Optional[ResultCache] = None):
        self.budget = budget or SearchBudget()
        self.cache = cache if cache is not None else ResultCache(persist=False)
        self._memo: dict = {}

    # planning

    def plan(self, lengths: tuple):
        lengths = tuple(sorted(lengths))
        if lengths not in self._memo:
            self._memo[lengths] = None  # guards against cycles in the rule graph
            self._memo[lengths] = self._plan(lengths)
        return self._memo[lengths]

    def _solved_plan(self, lengths: tuple) -> Optional[Step]:
        got = self.plan(lengths)
        return got if isinstance(got, Step) else None

    def _plan(self, lengths: tuple):
        n = sum(lengths)
        if lengths in KNOWN_EXCEPTIONS:
            return Nonexistent(KnownException(KNOWN_EXCEPTIONS[lengths]))
        if catalog_lookup(CycleType(lengths)) is not None:
            return Step("catalog", {"type": list(lengths)})
        if lengths == (2, 2, 4):
            return Step("join-224", {})
        if set(lengths) == {2}:
            return Step("round-robin", {"n": n})
        if len(lengths) == 1 and n % 2:
            return Step("walecki", {"n": n})
        step = self._bipartite(lengths)
        if step is not None:
            return step
        step = self._extension(lengths)
        if step is not None:
            return step
        if is_open_two_table(lengths) or lengths in OPEN_N14:
            cached = self.cache.get(lengths)
            if cached is not None:
                return Step.from_json(cached)
            return Unknown(OpenCase(f"{CycleType(lengths)} is in the open family; no cached solution"))
        return self._search(lengths)

    def _bipartite(self, lengths: tuple) -> Optional[Step]:
        if any(m % 2 for m in lengths) or len(lengths) < 2:
            return None
        for X, Y in _even_splits(lengths):
            sx = self._solved_plan(X)
            if sx is None:
                continue
            sy = self._solved_plan(Y)
            if sy is None:
                continue
            return Step("bipartite-double", {"halves": [list(X), list(Y)]}, [sx, sy])
        return None

    def _extension(self, lengths: tuple) -> Optional[Step]:
        if len(lengths) < 2:
            return None
        t = lengths[-1]
        base = lengths[:-1]
        s = sum(base)
        a = sum(delta(m) for m in base)
        if t > s and a <= 2 * (t // 2) - s and not (t % 2 == 0 and s == 4 and (base != (2, 2) or t < 8)):
            sub = self._solved_plan(base)
            if sub is not None:
                return Step("long-extension", {"t": t}, [sub])
        twos = lengths.count(2)
        rest = tuple(m for m in lengths if m != 2)
        for keep in range(twos):
            t = 2 * (twos - keep)
            base = tuple(sorted(rest + (2,) * keep))
            if not base:
                continue
            s = sum(base)
            a = sum(delta(m) for m in base)
            if t > s and a <= t - s:
                sub = self._solved_plan(base)
                if sub is not None:
                    return Step("digon-extension", {"t": t}, [sub])
        return None

    def _search(self, lengths: tuple):
        cached = self.cache.get(lengths)
        if cached is not None:
            return Step.from_json(cached)
        if not self.budget.allow_search:
            return Unknown(BudgetExhausted(0, "search disabled"))
        ct = CycleType(lengths)
        nodes = 0
        if ct.n <= self.budget.exact_cover_max_n:
            res = exact_cover_search(ct, budget=self.budget.exact_cover_nodes)
            nodes += res.nodes
            if res.factors is not None:
                step = Step("exact-cover", {"n": ct.n, "_factors": [list(map(list, f)) for f in res.factors]})
                self.cache.put(lengths, step.to_json())
                return step
            if res.exhausted:
                return Nonexistent(ExhaustiveSearchLog(ct.n, res.rows, res.nodes, "exact cover exhausted"))
        for model in candidate_models(ct):
            res = rotational_search(
                ct, model, seed=self.budget.seed, budget=self.budget.nodes, restarts=self.budget.restarts
            )
            nodes += res.nodes
            if res.found:
                step = Step(
                    "rotational-search",
                    {
                        "model": model.to_json(),
                        "_starters": [[list(c) for c in s] for s in res.starters],
                        "_invariant": [[list(c) for c in f] for f in res.invariant],
                    },
                )
                self.cache.put(lengths, step.to_json())
                return step
        return Unknown(BudgetExhausted(nodes, f"no factorization found for {ct} within budget"))

    # public

    def solve(self, cycle_type) -> SolveOutcome:
        ct = _as_type(cycle_type)
        got = self.plan(tuple(ct.lengths))
        if not isinstance(got, Step):
            if got is None:
                return Unknown(BudgetExhausted(0, "circular derivation"))
            return got
        dec = build(got)
        report = verify_decomposition(dec, ct)
        if not report.ok:
            raise CertificationError(f"derivation for {ct} failed certification: {report.summary()}", report)
        return Solved(dec, StrategyTrace(got), report)


_DEFAULT: Optional[Solver] = None


def default_solver() -> Solver:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Solver(cache=ResultCache())
    return _DEFAULT


def solve(cycle_type, budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Solve OP* for one cycle type; see the module docstring for the rule order."""
    if budget is None:
        return default_solver().solve(cycle_type)
    return Solver(budget, cache=default_solver().cache).solve(cycle_type)


def brute_force_search(cycle_type, budget: Optional[int] = None) -> SolveOutcome:
    """Exhaustive exact cover; Nonexistent only when the search space is exhausted."""
    ct = _as_type(cycle_type)
    res = exact_cover_search(ct, budget=budget or 50_000_000)
    if res.factors is not None:
        step = Step("exact-cover", {"n": ct.n, "_factors": [list(map(list, f)) for f in res.factors]})
        dec = build(step)
        return Solved(dec, StrategyTrace(step), verify_decomposition(dec, ct))
    if res.exhausted:
        return Nonexistent(ExhaustiveSearchLog(ct.n, res.rows, res.nodes, "exact cover exhausted"))
    return Unknown(BudgetExhausted(res.nodes, "exact cover budget exhausted"))


def _solved_from(step: Step, ct: CycleType) -> Solved:
    dec = build(step)
    report = verify_decomposition(dec, ct)
    if not report.ok:
        raise CertificationError(f"{step.rule} for {ct} failed certification: {report.summary()}", report)
    return Solved(dec, StrategyTrace(step), report)


def extend_by_long_cycle(base: Solved, t: int) -> Solved:
    """OP*(m_1..m_l, t) from a solved OP*(m_1..m_l)."""
    base_type = base.decomposition[0].cycle_type()
    target = base_type + CycleType((t,))
    if t % 2 == 0 and base_type.lengths == (2, 2) and t < 8 and catalog_lookup(target) is not None:
        # the circulant gadget needs t >= 8 here; the small case is a catalog entry
        return _solved_from(Step("catalog", {"type": list(target.lengths)}), target)
    step = Step("long-extension", {"t": t}, [base.trace.root])
    return _solved_from(step, target)


def extend_by_digons(base: Solved, t: int) -> Solved:
    """OP*(m_1..m_l, 2^(t/2)) from a solved OP*(m_1..m_l)."""
    if t % 2:
        raise HypothesisViolated(f"t={t} must be even")
    base_type = base.decomposition[0].cycle_type()
    step = Step("digon-extension", {"t": t}, [base.trace.root])
    return _solved_from(step, base_type + CycleType((2,) * (t // 2)))
