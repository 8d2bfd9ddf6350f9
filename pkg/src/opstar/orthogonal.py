"""S-orthogonal subdigraphs of directed circulants on Z_t.

Three families are built here:

* :func:`orthogonal_paths` gives ``a`` single arcs plus one long path (the
  input needed to extend a 2-factor by a long cycle);
* :func:`orthogonal_digons` gives ``a`` single arcs plus digons (extension by
  2-cycles);
* :func:`special_3_t` and :func:`special_22_t` are the gadgets for the
  extension of (3) and (2,2) by an even cycle.

Each subcase is a separate pure constructor returning ``(CaseworkState, H)``.
The dispatchers pick the subcase from (s, t, a) and certify the result with
:func:`opstar.verify.verify_orthogonal` before returning it.  Vertex
subscripts may be negative in the formulas and are reduced mod t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .circulant_ham import CirculantFactorization
from .core import ConnectionSet, TwoFactor
from .errors import BadForm, CertificationError, CollisionDetected, HypothesisViolated
from .verify import cycle, path, verify_orthogonal

PATHS = "paths"
DIGONS = "digons"


def _ceil(x: int, y: int) -> int:
    return -(-x // y)


class Subdigraph(NamedTuple):
    """Disjoint directed paths and cycles on Z_t, as vertex sequences."""

    t: int
    paths: tuple = ()
    cycles: tuple = ()

    @property
    def arcs(self) -> list:
        out = []
        for p in self.paths:
            out += [(p[i], p[i + 1]) for i in range(len(p) - 1)]
        for c in self.cycles:
            out += [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]
        return out

    @property
    def vertices(self) -> set:
        return {v for comp in self.paths + self.cycles for v in comp}

    def shape(self) -> list:
        return sorted([path(len(p) - 1) for p in self.paths] + [cycle(len(c)) for c in self.cycles])

    def differences(self) -> list:
        return sorted((v - u) % self.t for u, v in self.arcs)

    @classmethod
    def build(cls, t: int, paths: Iterable[Sequence[int]] = (), cycles: Iterable[Sequence[int]] = ()) -> "Subdigraph":
        ps = tuple(tuple(v % t for v in p) for p in paths)
        cs = tuple(tuple(v % t for v in c) for c in cycles)
        seen: set = set()
        for comp in ps + cs:
            for v in comp:
                if v in seen:
                    raise CollisionDetected(f"vertex y_{v} used twice")
                seen.add(v)
        return cls(t, ps, cs)


@dataclass
class CaseworkState:
    """Bookkeeping of one casework branch, for tracing and debugging."""

    case: str
    s: int
    t: int
    a: int
    d_A: Optional[int] = None
    d_B: Optional[int] = None
    a_prime: Optional[int] = None
    b: Optional[int] = None
    c: Optional[int] = None
    sets: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"case": self.case, "s": self.s, "t": self.t, "a": self.a}
        for key in ("d_A", "d_B", "a_prime", "b", "c"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out.update({k: sorted(v) for k, v in self.sets.items()})
        return out


@dataclass(frozen=True)
class OrthogonalRequest:
    s: int
    t: int
    a: int
    flavor: str = PATHS

    def validate(self) -> None:
        s, t, a = self.s, self.t, self.a
        if not 2 <= s < t:
            raise HypothesisViolated(f"need 2 <= s < t, got s={s}, t={t}")
        if a < 0 or (a - s) % 2:
            raise HypothesisViolated(f"a={a} must be non-negative with a = s mod 2")
        if self.flavor == PATHS:
            if s == 3 and t % 2 == 0:
                raise HypothesisViolated("s = 3 needs t odd")
            if a > min(s // 3, 2 * (t // 2) - s):
                raise HypothesisViolated(f"a={a} exceeds min(s//3, 2*floor(t/2)-s)")
        elif self.flavor == DIGONS:
            if t % 2:
                raise HypothesisViolated("t must be even")
            if a > min(s // 3, t - s):
                raise HypothesisViolated(f"a={a} exceeds min(s//3, t-s)")
        else:
            raise HypothesisViolated(f"unknown flavor {self.flavor!r}")


def _pm(*ds: int) -> list:
    return [x for d in ds for x in (d, -d)]


def paths_connection_set(s: int, t: int) -> ConnectionSet:
    h = t // 2
    if s % 2:
        diffs = _pm(*range((s + 1) // 2, h + 1))
    else:
        diffs = [1] + _pm(*range(s // 2 + 1, h + 1))
    return ConnectionSet.signed(t, diffs)


def digons_connection_set(s: int, t: int) -> ConnectionSet:
    h = t // 2
    if s % 2:
        diffs = _pm(*range((s + 1) // 2, h)) + [h]
    else:
        diffs = _pm(*range(s // 2, h))
    return ConnectionSet.signed(t, diffs)


def _res(t: int, diffs: Iterable[int]) -> set:
    return {d % t for d in diffs}


# --- the walk P(R, y_k) ------------------------------------------------------


def _parse_star(R: Iterable[int], t: int) -> list[int]:
    """Return d_1 < ... < d_l for R = {+-d_i} u {floor(t/2)}, or raise BadForm."""
    h = t // 2
    res = _res(t, R)
    if h not in res:
        raise BadForm(f"R must contain floor(t/2)={h}")
    res.discard(h)
    if t % 2 and (t - h) % t in res:
        raise BadForm(f"R may not contain -floor(t/2) for odd t")
    ds = sorted(d for d in res if d < t - d)
    for d in ds:
        if (t - d) not in res:
            raise BadForm(f"difference {d} present without its negative")
    if len(res) != 2 * len(ds):
        raise BadForm("R is not closed under negation apart from floor(t/2)")
    return ds


def walk_P(R: Iterable[int], k: int, t: int) -> tuple:
    """The directed path from y_k with differences d1, -d2, ..., floor(t/2), ..., d2, -d1."""
    ds = _parse_star(R, t)
    h = t // 2
    sigma = [0]
    for i, d in enumerate(ds):
        sigma.append(sigma[-1] + (d if i % 2 == 0 else -d))
    verts = [(k + x) % t for x in sigma] + [(k + x + h) % t for x in reversed(sigma)]
    if len(set(verts)) != len(verts):
        raise CollisionDetected(f"P(R, y_{k}) revisits a vertex for t={t}, R={sorted(_res(t, R))}")
    return tuple(verts)


# --- paths: shared pieces ----------------------------------------------------


def _certify(H: Subdigraph, S: ConnectionSet, shape: list, label: str) -> None:
    report = verify_orthogonal(H, H.t, S, shape)
    if not report.ok:
        raise CertificationError(f"{label}: {report.summary()}", report)


def _paths_shape(s: int, t: int, a: int) -> list:
    shape = [path(1)] * a
    shape.append(path(t - s - a))
    return shape


def _B_pair(d: int, h: int) -> tuple:
    """The pair B_d, B_{-d} for difference d."""
    return (-_ceil(d, 2), d // 2), (h + d // 2, h - _ceil(d, 2))


def _B_pair_odd(d: int, h: int) -> tuple:
    """B_{-d} and B_d placed around y_0 and y_h, for odd t."""
    return (d // 2, -_ceil(d, 2)), (h - _ceil(d, 2), h + d // 2)


# Case 1: t and s even


def _case1_A(i: int, h: int) -> tuple:
    return (i, h - i + 1)


def _sub_1_1(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    arcs = [_case1_A(i, h) for i in range(-(a // 2) + 1, a // 2 + 1)]
    T = _res(t, _pm(*range(h - 1, h - a, -2))) if a else set()
    R = set(S.residues) - T - {1}
    c = _ceil(s + 2, 4)
    P = walk_P(R, -c, t) + ((h - c + 1) % t,)
    st = CaseworkState("1.1", s, t, a, sets={"T": T, "R": R})
    return st, Subdigraph.build(t, paths=arcs + [P])


def _sub_1_2(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    ap = (t - s) // 4
    dA = h - (2 * ap - 1)
    dB = (s + 4) // 2 if (t - s) % 4 == 0 else (s + 2) // 2
    b = a - 2 * ap
    Tp = _res(t, _pm(*range(h - 1, dA - 1, -2)))
    Rp_pos = list(range(dB, dB + b - 1, 2))
    Rp = _res(t, _pm(*Rp_pos))
    B = [arc for d in Rp_pos for arc in _B_pair(d, h)]
    R = set(S.residues) - Tp - Rp - {1}
    st = CaseworkState("1.2", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=b, sets={"T'": Tp, "R'": Rp, "R": R})
    if len(R) > 1:
        A = [_case1_A(i, h) for i in range(-ap + 1, ap + 1)]
        d1 = dB + b
        k = -_ceil(d1, 2)
        P = ((k - 1) % t,) + walk_P(R, k, t)
        return st, Subdigraph.build(t, paths=A + B + [P])
    # |R| = 1: the arc of difference 1 is joined to A_{-a'+1} to form a 2-path
    A2 = [_case1_A(i, h) for i in range(-ap + 2, ap + 1)]
    P = (-_ceil(t, 4), t // 4)
    first = _case1_A(-ap + 1, h)
    P2 = (first[0] - 1, first[0], first[1])
    st.case = "1.2|R|=1"
    return st, Subdigraph.build(t, paths=A2 + B + [P, P2])


def _sub_1_3(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    ap = (t - s) // 4
    dA = h - (2 * ap - 1)
    dB = (s + 4) // 2 if (t - s) % 4 == 0 else (s + 2) // 2
    b = a - 2 * ap
    A = [_case1_A(i, h) for i in range(-ap + 1, ap + 1)]
    Tp = _res(t, _pm(*range(h - 1, dA - 1, -2)))
    Rp = set(S.residues) - Tp - {1}
    B = []
    for d in range(dB, h, 2):
        B += list(_B_pair(d, h))
    if h in Rp:
        B.append(_B_pair(h, h)[0])
    P = (-ap - 1, -ap)
    st = CaseworkState("1.3", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=b, sets={"T'": Tp, "R'": Rp})
    return st, Subdigraph.build(t, paths=A + B + [P])


# Case 2: t even, s odd


def _case2_A_general(s, t, a):
    h = t // 2
    arcs = []
    for i in range(1, (a - 1) // 2 + 1):
        if i == 1:
            arcs.append(((s - a) // 2 - 1, h + (s - a) // 2 - 2))
        else:
            arcs.append((i, h - i + 1))
    for i in range(1, (a + 1) // 2 + 1):
        if i == (a + 1) // 2:
            arcs.append((h - (a - 1) // 2, (a + 1) // 2))
        else:
            arcs.append((-i, h + i - 1))
    return arcs


def _case2_T(t, a):
    h = t // 2
    return _res(t, _pm(*range(h - 1, h - a + 1, -2)) + [-(h - a)])


def _sub_2_1(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    A = _case2_A_general(s, t, a)
    T = _case2_T(t, a)
    R = set(S.residues) - T - {(h - a) % t}
    k = -(a + 1) // 2
    P = ((h + (a - 1) // 2) % t,) + walk_P(R, k, t)
    st = CaseworkState("2.1", s, t, a, sets={"T": T, "R": R})
    return st, Subdigraph.build(t, paths=A + [P])


def _sub_2_1_a1(s, t, a):
    """a = 1 with s >= 7: the arc of difference -(t/2-1) is A = y_0 y_{t/2+1}."""
    h = t // 2
    S = paths_connection_set(s, t)
    R = set(S.residues) - _res(t, _pm(h - 1))
    P = (h,) + walk_P(R, -1, t)
    st = CaseworkState("2.1a=1", s, t, a, sets={"R": R})
    return st, Subdigraph.build(t, paths=[(0, h + 1), P])


def _sub_2_2(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    if (s, a) == (9, 3):
        T = _case2_T(t, a)
        R = set(S.residues) - T - {(h - a) % t}
        A = [(-1, h), (h - 1, 2), (h + 2, 1)]
        P = ((h + 1) % t,) + walk_P(R, -2, t)
        st = CaseworkState("2.2(9,3)", s, t, a, sets={"T": T, "R": R})
        return st, Subdigraph.build(t, paths=A + [P])
    R = set(S.residues) - _res(t, _pm(h - 1))
    P = (h,) + walk_P(R, -1, t)
    st = CaseworkState("2.2(5,1)", s, t, a, sets={"R": R})
    return st, Subdigraph.build(t, paths=[(0, h + 1), P])


def _sub_2_3(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    ap = (t - s + 1) // 4
    dA = h - (2 * ap - 1)
    dB = (s + 1) // 2 if (t - s - 1) % 4 == 0 else (s + 3) // 2
    b = a - 2 * ap
    A = [(i, h - i - 1) for i in range(-ap, ap)]
    Tp = _res(t, _pm(*range(h - 1, dA - 1, -2)))
    Rp_pos = list(range(dB, dB + b, 2))
    Rp = _res(t, _pm(*Rp_pos))
    top = dB + b - 1
    B = []
    for d in Rp_pos:
        B.append((d // 2, -_ceil(d, 2)))  # B_{-d}
        if d != top:
            B.append((h - _ceil(d + 2, 2), h + (d - 2) // 2))  # B_d
    R = set(S.residues) - Tp - Rp
    st = CaseworkState("2.3", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=b, sets={"T'": Tp, "R'": Rp, "R": R})
    if len(R) > 1:
        d1 = dB + b + 1
        W = walk_P(R, -_ceil(d1, 2), t)
        P = W + ((h + (d1 - 4) // 2) % t,)
        return st, Subdigraph.build(t, paths=A + B + [P])
    # |R| = 1: a 2-path with differences t/2 and t/2 - 2
    st.case = "2.3|R|=1"
    P = (h + t // 4, h - _ceil(t, 4), h + t // 4 - 2)
    return st, Subdigraph.build(t, paths=A + B + [P])


def _sub_2_4(s, t, a):
    h = t // 2
    S = paths_connection_set(s, t)
    ap = (t - s + 1) // 4
    dA = h - (2 * ap - 1)
    dB = (s + 1) // 2 if (t - s - 1) % 4 == 0 else (s + 3) // 2
    A = [(i, h - i - 1) for i in range(-ap, ap)]
    Tp = _res(t, _pm(*range(h - 1, dA - 1, -2)))
    Rp = set(S.residues) - Tp
    B = []
    for d in range(dB, h - 1, 2):
        B += list(_B_pair_odd(d, h))
    B.append(_B_pair_odd(h, h)[1])
    st = CaseworkState("2.4", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=a - 2 * ap, sets={"T'": Tp, "R'": Rp})
    return st, Subdigraph.build(t, paths=A + B)


# Cases 3 and 4: t odd


def _odd_A(i: int, g: int) -> tuple:
    """A_i for odd t with g = (t-1)/2."""
    return (i, g - i) if i > 0 else (i, g - i + 1)


def _odd_T(t: int, top: int) -> set:
    """{-(t-1)/2, +-((t-1)/2-2), ..., +-((t-1)/2-top)}."""
    g = (t - 1) // 2
    return _res(t, [-g] + _pm(*range(g - 2, g - top - 1, -2)))


def _sub_3_1(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    half = (a - 1) // 2
    A = [_odd_A(i, g) for i in range(-half, half + 1)]
    T = _odd_T(t, a - 1)
    R = set(S.residues) - T
    P = walk_P(R, -_ceil(s + 1, 4), t)
    st = CaseworkState("3.1", s, t, a, sets={"T": T, "R": R})
    return st, Subdigraph.build(t, paths=A + [P])


def _sub_3_2(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    if (s, a) == (9, 3):
        A = [(-2, (t + 1) // 2), (-1, g), (0, (t - 5) // 2)]
    else:
        A = [(g, 0)]
    T = _odd_T(t, a - 1)
    R = set(S.residues) - T
    P = walk_P(R, -_ceil(s + 1, 4), t)
    st = CaseworkState(f"3.2({s},{a})", s, t, a, sets={"T": T, "R": R})
    return st, Subdigraph.build(t, paths=A + [P])


def _sub_3_3(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    if s == 3:
        st = CaseworkState("3.3(s=3)", s, t, a)
        return st, Subdigraph.build(t, paths=[(0, -2), (-1, 1)])
    ap = (t - s - 2) // 4
    dA = g - 2 * ap
    dB = (s + 3) // 2 if (t - s - 2) % 4 == 0 else (s + 1) // 2
    b = a - 2 * ap - 1
    A = [_odd_A(i, g) for i in range(-ap, ap + 1)]
    Tp = _odd_T(t, 2 * ap)
    Rp_pos = list(range(dB, dB + b - 1, 2))
    Rp = _res(t, _pm(*Rp_pos))
    B = [arc for d in Rp_pos for arc in _B_pair_odd(d, g)]
    R = set(S.residues) - Tp - Rp
    d1 = dB + b
    P = walk_P(R, -_ceil(d1, 2), t)
    st = CaseworkState("3.3", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=b, sets={"T'": Tp, "R'": Rp, "R": R})
    return st, Subdigraph.build(t, paths=A + B + [P])


def _bc_arcs(t: int, ap: int, upto: int) -> list:
    g = (t - 1) // 2
    b = 2 * ap + 1
    arcs = []
    for i in range(-ap, upto + 1):
        arcs.append((i, g - i))
        arcs.append((b + g - i, b + i))
    return arcs


def _sub_3_4(s, t, a):
    ap = _ceil(t - s - 2, 4)
    upto = ap if (t - s) % 4 == 2 else ap - 1
    st = CaseworkState("3.4", s, t, a, a_prime=ap, b=2 * ap + 1)
    return st, Subdigraph.build(t, paths=_bc_arcs(t, ap, upto))


def _sub_4_trivial(s, t, a):
    st = CaseworkState("4(t-s=1)", s, t, a)
    return st, Subdigraph.build(t, paths=[(0, 1)])


def _sub_4_1(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    c = _ceil(s + 2, 4)
    if (s, a) == (6, 2):
        A = [((t + 1) // 2, 1)]
    else:
        half = (a - 2) // 2
        A = [_odd_A(i, g) for i in range(-half, half + 1)]
    T = _odd_T(t, a - 2)
    R = set(S.residues) - T - {1}
    P = walk_P(R, -c, t)
    B0 = (1 - c, 2 - c)
    st = CaseworkState("4.1" if (s, a) != (6, 2) else "4.1(6,2)", s, t, a, sets={"T": T, "R": R})
    return st, Subdigraph.build(t, paths=A + [B0, P])


def _sub_4_2(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    c = _ceil(s + 2, 4)
    R = set(S.residues) - {1, (-g) % t}
    P = walk_P(R, -c, t) + ((g - c + 1) % t, (1 - c) % t)
    st = CaseworkState("4.2", s, t, a, sets={"R": R})
    return st, Subdigraph.build(t, paths=[P])


def _sub_4_3(s, t, a):
    g = (t - 1) // 2
    S = paths_connection_set(s, t)
    ap = (t - s - 3) // 4
    dA = g - 2 * ap
    dB = (s + 4) // 2 if (t - s - 3) % 4 == 0 else (s + 2) // 2
    b = a - 2 * ap - 2
    A = [_odd_A(i, g) for i in range(-ap, ap + 1)]
    Tp = _odd_T(t, 2 * ap)
    Rp_pos = list(range(dB, dB + b - 1, 2))
    Rp = _res(t, _pm(*Rp_pos))
    B = [arc for d in Rp_pos for arc in _B_pair_odd(d, g)]
    R = set(S.residues) - Tp - Rp - {1}
    d1 = dB + b
    P = walk_P(R, -_ceil(d1, 2), t)
    B0 = (1 - _ceil(dB, 2), 2 - _ceil(dB, 2))
    st = CaseworkState("4.3", s, t, a, d_A=dA, d_B=dB, a_prime=ap, b=b, sets={"T'": Tp, "R'": Rp, "R": R})
    return st, Subdigraph.build(t, paths=A + B + [B0, P])


def _sub_4_4(s, t, a):
    ap = _ceil(t - s - 3, 4)
    upto = ap if (t - s) % 4 == 3 else ap - 1
    D0 = (-ap - 2, -ap - 1)
    st = CaseworkState("4.4", s, t, a, a_prime=ap, b=2 * ap + 1)
    return st, Subdigraph.build(t, paths=_bc_arcs(t, ap, upto) + [D0])


def _dispatch_paths(s: int, t: int, a: int):
    if t % 2 == 0 and s % 2 == 0:
        if 2 * a <= t - s - 2:
            return _sub_1_1
        if a < t - s:
            return _sub_1_2
        return _sub_1_3
    if t % 2 == 0:
        if 2 * a <= t - s - 1:
            if (s, a) in ((9, 3), (5, 1)):
                return _sub_2_2
            if a == 1:
                return _sub_2_1_a1
            return _sub_2_1
        if a < t - s:
            return _sub_2_3
        return _sub_2_4
    if s % 2:
        if 2 * a <= t - s - 2:
            if (s, a) in ((9, 3), (5, 1), (3, 1)):
                return _sub_3_2
            return _sub_3_1
        if a < t - s - 1:
            return _sub_3_3
        if s == 3:
            return _sub_3_3
        return _sub_3_4
    if t - s == 1:
        return _sub_4_trivial
    if a == 0:
        return _sub_4_2
    if 2 * a <= t - s - 1:
        return _sub_4_1
    if a < t - s - 1:
        return _sub_4_3
    return _sub_4_4


def orthogonal_paths_traced(req: OrthogonalRequest) -> tuple:
    """``(CaseworkState, H)`` for an S-orthogonal (P_1^a, P_{t-s-a})-subdigraph."""
    if req.flavor != PATHS:
        raise HypothesisViolated("request flavor must be paths")
    req.validate()
    s, t, a = req.s, req.t, req.a
    state, H = _dispatch_paths(s, t, a)(s, t, a)
    S = paths_connection_set(s, t)
    shape = _paths_shape(s, t, a)
    _certify(H, S, shape, f"orthogonal paths s={s} t={t} a={a} ({state.case})")
    return state, H


def orthogonal_paths(req: OrthogonalRequest) -> Subdigraph:
    return orthogonal_paths_traced(req)[1]


# --- digons -------------------------------------------------------------------


def _digon_case1(s, t, a):
    h = t // 2
    if (t - s - 1) % 4 == 0:
        dA, dB = (s + 1) // 2, (s + 3) // 2
    else:
        dA, dB = (s + 3) // 2, (s + 1) // 2
    I = list(range(dB, h, 2))
    J = list(range(dA, h - 1, 2))

    def Bset(i):
        return (-_ceil(i, 2), i // 2)

    def Eset(i):
        return (h - _ceil(i, 2), h + i // 2)

    def Cset(i):
        return (h - _ceil(i - 1, 2), h + (i + 1) // 2)

    if 2 * a <= t - s - 1:
        c = (a - 1) // 2
        case = "1.1"
        A = [(i, h - i) for i in range(-c, c + 1)]
        Tpos = {h - 2 * i for i in range(0, c + 1)}
        cycles = [Bset(i) for i in I] + [Cset(j) for j in J if j not in Tpos]
        paths = A
        b = None
    else:
        c = (t - s - 1) // 4
        case = "1.2"
        A = [(i, h - i) for i in range(-c, c + 1)]
        b = a - (2 * c + 1)
        Ip = I[: b // 2]
        cycles = [Bset(i) for i in I if i not in Ip]
        paths = A + [Bset(j) for j in Ip] + [(h + j // 2, h - _ceil(j, 2)) for j in Ip]
    st = CaseworkState(case, s, t, a, d_A=dA, d_B=dB, b=b, c=c, sets={"I": set(I), "J": set(J)})
    return st, Subdigraph.build(t, paths=paths, cycles=cycles)


def _digon_case2(s, t, a):
    h = t // 2
    if (t - s - 2) % 4 == 0:
        dA, dB = s // 2, (s + 2) // 2
    else:
        dA, dB = (s + 2) // 2, s // 2
    I = list(range(dB, h - 1, 2))
    J = list(range(dA, h, 2))

    def Bset(i):
        return (-_ceil(i, 2), i // 2)

    def Cset(i):
        return (h - _ceil(i + 1, 2), h + (i - 1) // 2)

    if a == 0 or 2 * a <= t - s + 2:
        c = a // 2
        case = "2.2" if a == 0 else "2.1"
        A = [(i, h - i - 1) for i in range(-c, c)]
        Tpos = {h - (2 * i - 1) for i in range(1, c + 1)}
        cycles = [Bset(i) for i in I] + [Cset(j) for j in J if j not in Tpos]
        paths = A
        b = None
    else:
        c = (t - s + 2) // 4
        case = "2.3"
        A = [(i, h - i - 1) for i in range(-c, c)]
        b = a - 2 * c
        Ip = I[: b // 2]
        cycles = [Bset(i) for i in I if i not in Ip]
        paths = A + [Bset(j) for j in Ip] + [(h + j // 2, h - _ceil(j, 2)) for j in Ip]
    st = CaseworkState(case, s, t, a, d_A=dA, d_B=dB, b=b, c=c, sets={"I": set(I), "J": set(J)})
    return st, Subdigraph.build(t, paths=paths, cycles=cycles)


def orthogonal_digons_traced(req: OrthogonalRequest) -> tuple:
    """``(CaseworkState, H)`` for an S-orthogonal (P_1^a, C_2^((t-s-a)/2))-subdigraph."""
    if req.flavor != DIGONS:
        raise HypothesisViolated("request flavor must be digons")
    req.validate()
    s, t, a = req.s, req.t, req.a
    state, H = (_digon_case1 if s % 2 else _digon_case2)(s, t, a)
    shape = [path(1)] * a + [cycle(2)] * ((t - s - a) // 2)
    _certify(H, digons_connection_set(s, t), shape, f"orthogonal digons s={s} t={t} a={a} ({state.case})")
    return state, H


def orthogonal_digons(req: OrthogonalRequest) -> Subdigraph:
    return orthogonal_digons_traced(req)[1]


# --- gadgets for (3, t) and (2, 2, t) ---------------------------------------


def _path_from_differences(start: int, diffs: Sequence[int], t: int) -> tuple:
    verts = [start % t]
    for d in diffs:
        verts.append((verts[-1] + d) % t)
    return tuple(verts)


def _alternating(lo: int, hi: int, even_sign: int) -> list:
    """lo..hi (or hi..lo when lo > hi) with even numbers signed ``even_sign``."""
    step = 1 if hi >= lo else -1
    return [d * (even_sign if d % 2 == 0 else -even_sign) for d in range(lo, hi + step, step)]


def _directed_cycle_factors(t: int, D: ConnectionSet) -> tuple:
    """Each d in D with gcd(t, d) = 1 gives one directed Hamilton cycle."""
    return tuple(TwoFactor((tuple((i * d) % t for i in range(t)),)) for d in sorted(D.residues))


def special_3_t(t: int) -> tuple:
    """(D, C_t-factorization of Circ(t; D), S-orthogonal (P_1, P_{t-4})-subdigraph) for OP*(3, t)."""
    if t % 2 or t < 4:
        raise HypothesisViolated(f"t={t} must be even and at least 4")
    h = t // 2
    if t == 4:
        D = ConnectionSet.signed(t, [1, -1])
        H = Subdigraph.build(t, paths=[(0, 2)])
    elif t == 6:
        D = ConnectionSet.signed(t, [1, -1])
        H = Subdigraph.build(t, paths=[(0, 2, 5), (3, 1)])
    elif t % 4 == 0:
        D = ConnectionSet.signed(t, [-1, h - 1])
        diffs = _alternating(2, h - 2, 1) + [-(h - 1)] + _alternating(h - 2, 2, -1) + [h]
        D1 = _path_from_differences(0, diffs, t)
        D2 = (t // 4 + 1, t // 4 + 2)
        H = Subdigraph.build(t, paths=[D1, D2])
    else:
        D = ConnectionSet.signed(t, [h - 2, -(h - 2)])
        diffs = _alternating(2, h - 3, 1) + [-(h - 1), -1] + _alternating(h - 3, 2, -1) + [1, h]
        D1 = _path_from_differences(0, diffs, t)
        D2 = (-(t - 6) // 4, (t + 2) // 4)
        H = Subdigraph.build(t, paths=[D1, D2])
    S = D.complement()
    _certify(H, S, [path(1), path(t - 4)], f"OP*(3,{t}) gadget")
    return D, CirculantFactorization(t, D, _directed_cycle_factors(t, D)), H


def special_22_t(t: int) -> tuple:
    """(D, C_t-factorization of Circ(t; D), S-orthogonal P_{t-4}) for OP*(2, 2, t)."""
    if t % 2 or t < 8:
        raise HypothesisViolated(f"t={t} must be even and at least 8")
    h = t // 2
    if t % 4 == 0:
        D = ConnectionSet.signed(t, [-1, h - 1, -(h - 1)])
        diffs = _alternating(2, h - 2, 1) + [h] + _alternating(h - 2, 2, -1) + [1]
    else:
        D = ConnectionSet.signed(t, [-1, h - 2, -(h - 2)])
        diffs = _alternating(2, h - 3, 1) + [-(h - 1), h, h - 1] + _alternating(h - 3, 2, -1) + [1]
    P = _path_from_differences(0, diffs, t)
    H = Subdigraph.build(t, paths=[P])
    S = D.complement()
    _certify(H, S, [path(t - 4)], f"OP*(2,2,{t}) gadget")
    return D, CirculantFactorization(t, D, _directed_cycle_factors(t, D)), H
