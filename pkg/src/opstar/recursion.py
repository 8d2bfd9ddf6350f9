"""Composition engines: bipartite doubling and the join recursion.

Vertex layout for joins: X = 0..s-1 carries a solution on s vertices and
Y = s..s+t-1 carries the circulant part; ``y_i`` is vertex ``s + i``.  The
rotation rho moves ``y_i`` to ``y_{i+1}`` and fixes X.  For doubling, X is
0..n-1 and Y is n..2n-1.

Every engine certifies its output with
:func:`opstar.verify.verify_decomposition` and raises
:class:`~opstar.errors.CertificationError` if that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import ConnectionSet, CycleType, Decomposition, TwoFactor, circulant_digraph
from .errors import CertificationError, ConditionFailed, OddLengthInBipartite, SizeMismatch
from .verify import factor_arcs, verify_decomposition, verify_factorization

PATH = "P"
CYCLE = "C"


@dataclass(frozen=True)
class SplitAssignment:
    """How each cycle of the target type splits between X and Y.

    Cycle i takes ``s_parts[i]`` vertices of X and ``s_parts[i] + t_parts[i]``
    vertices of Y; ``t_parts[i]`` is the number of its arcs inside Y.
    """

    lengths: tuple
    s_parts: tuple
    t_parts: tuple

    def __post_init__(self):
        for name in ("lengths", "s_parts", "t_parts"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if not len(self.lengths) == len(self.s_parts) == len(self.t_parts):
            raise ConditionFailed("2c", "lengths, s_parts and t_parts differ in size")
        for m, si, ti in zip(self.lengths, self.s_parts, self.t_parts):
            if si < 0 or ti < 0:
                raise ConditionFailed("2c", f"negative split for cycle of length {m}")
            if m != 2 * si + ti:
                raise ConditionFailed("2c", f"{m} != 2*{si} + {ti}")

    @property
    def s(self) -> int:
        return sum(self.s_parts)

    @property
    def t(self) -> int:
        return sum(self.s_parts) + sum(self.t_parts)

    @property
    def k(self) -> int:
        return len(self.lengths)


def _certify(dec: Decomposition, lengths: Sequence[int], label: str) -> Decomposition:
    report = verify_decomposition(dec, CycleType(tuple(lengths)))
    if not report.ok:
        raise CertificationError(f"{label}: {report.summary()}", report)
    return dec


def _type_of(dec: Decomposition) -> CycleType:
    return dec[0].cycle_type() if len(dec) else CycleType((dec.n,))


# --- bipartite doubling -------------------------------------------------------


def bipartite_double(solX: Decomposition, solY: Decomposition) -> Decomposition:
    """Combine two solutions on n vertices with even lengths into one on 2n vertices."""
    n = solX.n
    if solY.n != n:
        raise SizeMismatch(f"inputs have {n} and {solY.n} vertices")
    typeX, typeY = _type_of(solX), _type_of(solY)
    lengths = list(typeX.lengths) + list(typeY.lengths)
    odd = [m for m in lengths if m % 2]
    if odd:
        raise OddLengthInBipartite(f"odd lengths {odd} cannot alternate between X and Y")
    if len(solX) != n - 1 or len(solY) != n - 1:
        raise SizeMismatch("each input must have n-1 factors")
    factors = [TwoFactor(tuple(fx.cycles) + tuple(fy.relabel(lambda v: v + n).cycles)) for fx, fy in zip(solX, solY)]
    cycles = []
    pos = 0
    for m in lengths:
        half = m // 2
        cyc = []
        for j in range(half):
            cyc += [pos + j, n + pos + j]
        cycles.append(tuple(cyc))
        pos += half
    F = TwoFactor(tuple(cycles))
    for i in range(n):
        factors.append(F.relabel(lambda v, i=i: v if v < n else n + (v - n + i) % n))
    return _certify(Decomposition(tuple(factors), 2 * n), lengths, "bipartite doubling")


# --- join recursion -------------------------------------------------------------


Component = tuple  # (kind, vertices) with kind PATH or CYCLE; a P_0 may have 0 or 1 vertex


def _comp_vertices(comp: Optional[Component]) -> tuple:
    return tuple(comp[1]) if comp else ()


def _comp_arcs(comp: Optional[Component]) -> list:
    if not comp:
        return []
    kind, vs = comp
    vs = list(vs)
    if kind == CYCLE:
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def _check_family(H_family: Sequence[Sequence], assign: SplitAssignment, t: int) -> None:
    if len(H_family) != t:
        raise ConditionFailed("2d", f"{len(H_family)} subdigraphs H_j, expected {t}")
    H0 = H_family[0]
    if len(H0) != assign.k:
        raise ConditionFailed("2d", f"H_0 has {len(H0)} components, expected {assign.k}")
    for i, (comp, m, ti) in enumerate(zip(H0, assign.lengths, assign.t_parts)):
        arcs = len(_comp_arcs(comp))
        if ti == m and (not comp or comp[0] != CYCLE or len(comp[1]) != m):
            raise ConditionFailed("2d", f"component {i} must be a {m}-cycle")
        if ti < m and ((comp and comp[0] != PATH) or arcs != ti):
            raise ConditionFailed("2d", f"component {i} must be a path with {ti} arcs")
    V0 = {v for comp in H0 for v in _comp_vertices(comp)}
    for j, Hj in enumerate(H_family):
        Vj = {v for comp in Hj for v in _comp_vertices(comp)}
        if Vj != {(v + j) % t for v in V0}:
            raise ConditionFailed("2d", f"V(H_{j}) is not rho^{j}(V(H_0))")
        for i, (c0, cj) in enumerate(zip(H0, Hj)):
            if c0 and c0[0] == PATH and len(c0[1]) > 1:
                want = ((c0[1][0] + j) % t, (c0[1][-1] + j) % t)
                if not cj or (cj[1][0], cj[1][-1]) != want:
                    raise ConditionFailed("2d", f"component {i} of H_{j} does not end at rho^{j} of H_0's ends")


def join_extend(
    sol_s: Decomposition,
    dprime_factors: Sequence[TwoFactor],
    H_family: Sequence[Sequence[Optional[Component]]],
    assign: SplitAssignment,
) -> Decomposition:
    """Solution on s + t vertices from a solution on X, factors of D' on Y and the family H_j.

    ``H_family[j][i]`` is the component D_i^(j) (labels 0..t-1 on Y) for
    cycle i of ``assign``; ``None`` stands for a P_0 placeholder.
    """
    s, t = sol_s.n, assign.t
    if assign.s != s:
        raise ConditionFailed("2b", f"sum of s_i is {assign.s}, expected {s}")
    if not s < t:
        raise ConditionFailed("2b", f"need s < t, got s={s}, t={t}")
    base = _type_of(sol_s)
    rep = verify_decomposition(sol_s, base)
    if not rep.ok:
        raise ConditionFailed("1", rep.summary())
    dprime_factors = list(dprime_factors)
    if len(dprime_factors) != s - 1:
        raise ConditionFailed("2a", f"{len(dprime_factors)} factors of D', expected {s - 1}")
    if dprime_factors:
        d_type = dprime_factors[0].cycle_type()
        if d_type + base != CycleType(assign.lengths):
            raise ConditionFailed("2a", f"types {base} and {d_type} do not make {CycleType(assign.lengths)}")
        drep = verify_factorization(dprime_factors, {a for f in dprime_factors for a in factor_arcs(f)}, t, d_type)
        if not drep.ok:
            raise ConditionFailed("2a", drep.summary())
    _check_family(H_family, assign, t)

    def y(v: int) -> int:
        return s + v

    H0 = H_family[0]
    used_X: list = []
    used_Y: set = set()
    L: list = []  # per cycle: list of arcs in global labels, plus the in-Y arcs to substitute
    free_X = iter(range(s))
    for i, (m, si, ti) in enumerate(zip(assign.lengths, assign.s_parts, assign.t_parts)):
        comp = H0[i]
        later = {v for c in H0[i + 1 :] for v in _comp_vertices(c)}
        if ti == m:
            verts = [y(v) for v in comp[1]]
            used_Y.update(comp[1])
        else:
            us = [next(free_X) for _ in range(si)]
            if ti == 0:
                blocked = used_Y | later
                vs = [v for v in range(t) if v not in blocked][:si]
                if len(vs) < si:
                    raise ConditionFailed("2d", f"not enough free Y vertices for cycle {i}")
                verts = [w for pair in zip(us, [y(v) for v in vs]) for w in pair]
            else:
                path_vs = list(comp[1])
                blocked = used_Y | later | set(path_vs)
                extra = [v for v in range(t) if v not in blocked][: si - 1]
                if len(extra) < si - 1:
                    raise ConditionFailed("2d", f"not enough free Y vertices for cycle {i}")
                vs = path_vs + extra
                verts = [y(v) for v in path_vs]
                for j in range(si):
                    verts.append(us[j])
                    if j < si - 1:
                        verts.append(y(extra[j]))
            used_X += us
            used_Y.update(vs)
        if len(verts) != m or len(set(verts)) != m:
            raise ConditionFailed("2d", f"could not thread cycle {i} of length {m}")
        L.append(verts)

    inner0 = {a for comp in H0 for a in _comp_arcs(comp)}
    cross: list = []
    for verts in L:
        for k in range(len(verts)):
            u, v = verts[k], verts[(k + 1) % len(verts)]
            if u >= s and v >= s and (u - s, v - s) in inner0:
                continue
            cross.append((u, v))

    def rot(v: int, j: int) -> int:
        return v if v < s else s + (v - s + j) % t

    factors = []
    for j in range(t):
        arcs = [(rot(u, j), rot(v, j)) for u, v in cross]
        arcs += [(y(u), y(v)) for comp in H_family[j] for u, v in _comp_arcs(comp)]
        try:
            factors.append(TwoFactor.from_arcs(arcs))
        except Exception as exc:  # noqa: BLE001 - reported as a named condition
            raise ConditionFailed("2d", f"F_{j} is not a 2-factor: {exc}") from exc
    for fs, fd in zip(sol_s, dprime_factors):
        factors.append(TwoFactor(tuple(fs.cycles) + tuple(fd.relabel(y).cycles)))
    return _certify(Decomposition(tuple(factors), s + t), assign.lengths, "join")


def _match_components(H, assign: SplitAssignment) -> list:
    """Assign H's paths and cycles to the cycles of ``assign`` by shape."""
    paths = {}
    for p in H.paths:
        paths.setdefault(len(p) - 1, []).append(p)
    cycles = {}
    for c in H.cycles:
        cycles.setdefault(len(c), []).append(c)
    out: list = []
    for m, ti in zip(assign.lengths, assign.t_parts):
        if ti == m:
            bucket = cycles.get(m) or []
            if not bucket:
                raise ConditionFailed("2d", f"H has no {m}-cycle left")
            out.append((CYCLE, tuple(bucket.pop(0))))
        elif ti == 0:
            out.append(paths[0].pop(0) if paths.get(0) else None)
            if out[-1] is not None:
                out[-1] = (PATH, tuple(out[-1]))
        else:
            bucket = paths.get(ti) or []
            if not bucket:
                raise ConditionFailed("2d", f"H has no path with {ti} arcs left")
            out.append((PATH, tuple(bucket.pop(0))))
    leftovers = [x for b in paths.values() for x in b] + [x for b in cycles.values() for x in b]
    if leftovers:
        raise ConditionFailed("2d", f"H has unmatched components {leftovers}")
    return out


def join_extend_circulant(
    sol_s: Decomposition,
    t: int,
    S: ConnectionSet,
    H,
    complement_factors: Sequence[TwoFactor],
    assign: SplitAssignment,
) -> Decomposition:
    """The join with D'' = Circ(t; S), D' = Circ(t; Z_t* - S) and H_j = rho^j(H)."""
    s = sol_s.n
    if len(S) != t - s:
        raise SizeMismatch(f"|S| = {len(S)} but t - s = {t - s}")
    if sum(assign.t_parts) != t - s:
        raise SizeMismatch(f"sum of t_i is {sum(assign.t_parts)}, expected {t - s}")
    covered = {a for f in complement_factors for a in factor_arcs(f)}
    if covered != set(circulant_digraph(t, S.complement())):
        raise ConditionFailed("2a", "complement factors do not cover Circ(t; Z_t* - S)")
    H0 = _match_components(H, assign)
    family = []
    for j in range(t):
        family.append([None if c is None else (c[0], tuple((v + j) % t for v in c[1])) for c in H0])
    return join_extend(sol_s, complement_factors, family, assign)


# --- the (2,2,4) construction -----------------------------------------------------


def op_224() -> Decomposition:
    """OP*(2,2,4) from OP*(2) and an explicit non-circulant family H_0..H_5 on K*_6."""
    sol2 = Decomposition((TwoFactor(((0, 1),)),), 2)
    dprime = [TwoFactor(((1, 4), (0, 5, 2, 3)))]
    H2 = (4, 5, 1, 0)
    cyc = [(2, 5, 3, 4), (3, 5, 4, 0), H2] + [tuple((v + j) % 6 for v in H2) for j in (1, 2, 3)]
    family = [[(PATH, (j,)), (PATH, ((j + 1) % 6,)), (CYCLE, cyc[j])] for j in range(6)]
    assign = SplitAssignment((2, 2, 4), (1, 1, 0), (0, 0, 4))
    return join_extend(sol2, dprime, family, assign)
