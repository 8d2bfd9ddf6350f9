"""Extending a solution by one long cycle or by a run of digons.

Both constructions split every base cycle of length m into floor(m/2)
vertices of X and m mod 2 arcs inside Y, then join the base solution with
a circulant on Z_t.  The leftover budget ``r = (s + a) / 2`` of X vertices
goes to the new cycle (long case) or to ``r`` of the new digons.
"""

from __future__ import annotations

from typing import NamedTuple

from .circulant_ham import c2_factorization, ct_factorization
from .core import CycleType, Decomposition
from .errors import HypothesisViolated
from .orthogonal import (
    DIGONS,
    PATHS,
    OrthogonalRequest,
    digons_connection_set,
    orthogonal_digons_traced,
    orthogonal_paths_traced,
    paths_connection_set,
    special_22_t,
    special_3_t,
)
from .recursion import SplitAssignment, join_extend_circulant


def delta(m: int) -> int:
    """1 for odd m, 0 for even m."""
    return m % 2


class Extension(NamedTuple):
    decomposition: Decomposition
    params: dict


def _base_numbers(base_type: CycleType) -> tuple:
    s = base_type.n
    a = sum(delta(m) for m in base_type.lengths)
    return s, a, (s + a) // 2


def check_extension(base_type: CycleType, t: int, digons: bool = False) -> None:
    """Raise HypothesisViolated unless t > s and a <= 2*floor(t/2) - s."""
    s, a, _ = _base_numbers(base_type)
    if t <= s:
        raise HypothesisViolated(f"t={t} must exceed s={s}")
    if a > 2 * (t // 2) - s:
        raise HypothesisViolated(f"a={a} exceeds 2*floor(t/2) - s = {2 * (t // 2) - s}")
    if digons and t % 2:
        raise HypothesisViolated(f"t={t} must be even for digons")


def _base_split(base_type: CycleType) -> tuple:
    lengths = tuple(base_type.lengths)
    return lengths, tuple(m // 2 for m in lengths), tuple(m % 2 for m in lengths)


def long_cycle_extension(base: Decomposition, t: int, *, seed: int = 0) -> Extension:
    """A solution of type base + (t) from a solution ``base``."""
    base_type = base[0].cycle_type()
    check_extension(base_type, t)
    s, a, r = _base_numbers(base_type)
    lengths, sp, tp = _base_split(base_type)
    assign = SplitAssignment(lengths + (t,), sp + (r,), tp + (t - 2 * r,))
    if t % 2 == 0 and s == 3:
        D, fac, H = special_3_t(t)
        S, case = D.complement(), "special-3"
    elif t % 2 == 0 and s == 4:
        if tuple(lengths) != (2, 2) or t < 8:
            raise HypothesisViolated(f"s = 4 with t={t} even needs base (2,2) and t >= 8")
        D, fac, H = special_22_t(t)
        S, case = D.complement(), "special-22"
    else:
        fac = ct_factorization(t, s, seed=seed)
        S = paths_connection_set(s, t)
        state, H = orthogonal_paths_traced(OrthogonalRequest(s, t, a, PATHS))
        case = state.as_dict()
    dec = join_extend_circulant(base, t, S, H, fac.factors, assign)
    return Extension(dec, {"s": s, "t": t, "a": a, "r": r, "case": case})


def digon_extension(base: Decomposition, t: int, *, seed: int = 0) -> Extension:
    """A solution of type base + (2^(t/2)) from a solution ``base``."""
    base_type = base[0].cycle_type()
    check_extension(base_type, t, digons=True)
    s, a, r = _base_numbers(base_type)
    lengths, sp, tp = _base_split(base_type)
    h = t // 2
    assign = SplitAssignment(
        lengths + (2,) * h,
        sp + (1,) * r + (0,) * (h - r),
        tp + (0,) * r + (2,) * (h - r),
    )
    fac = c2_factorization(t, s, seed=seed)
    S = digons_connection_set(s, t)
    state, H = orthogonal_digons_traced(OrthogonalRequest(s, t, a, DIGONS))
    dec = join_extend_circulant(base, t, S, H, fac.factors, assign)
    return Extension(dec, {"s": s, "t": t, "a": a, "r": r, "case": state.as_dict()})
