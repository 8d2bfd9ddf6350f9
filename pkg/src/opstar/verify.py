"""Independent certification of 2-factors, factorizations and S-orthogonality.

Nothing in this module trusts construction metadata: differences,
components, degrees and cycle lengths are all recomputed from raw arcs.
Factors may be given as :class:`~opstar.core.TwoFactor` objects, as a list
of cycles (vertex sequences), or as a ``set``/``frozenset`` of arcs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import ConnectionSet, CycleType, Decomposition, TwoFactor, complete_symmetric_arcs

MISSING_ARC = "MissingArc"
DUPLICATE_ARC = "DuplicateArc"
NOT_SPANNING = "NotSpanning"
WRONG_CYCLE_TYPE = "WrongCycleType"
WRONG_FACTOR_COUNT = "WrongFactorCount"
NOT_ORTHOGONAL = "NotOrthogonal"
WRONG_SHAPE = "WrongShape"

FAILURE_KINDS = (
    MISSING_ARC,
    DUPLICATE_ARC,
    NOT_SPANNING,
    WRONG_CYCLE_TYPE,
    WRONG_FACTOR_COUNT,
    NOT_ORTHOGONAL,
    WRONG_SHAPE,
)


@dataclass
class CertificateReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, kind: str, detail: str) -> None:
        self.failures.append((kind, detail))

    def extend(self, other: "CertificateReport", prefix: str = "") -> None:
        for kind, detail in other.failures:
            self.failures.append((kind, prefix + detail))

    def kinds(self) -> set:
        return {k for k, _ in self.failures}

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{k}: {d}" for k, d in self.failures[:5]) + (
            f" (+{len(self.failures) - 5} more)" if len(self.failures) > 5 else ""
        )


def factor_arcs(factor) -> list:
    """Raw arc list of a factor in any accepted representation."""
    if isinstance(factor, TwoFactor):
        return [tuple(a) for a in factor.arcs()]
    if isinstance(factor, (set, frozenset)):
        return [tuple(a) for a in factor]
    arcs = []
    for cyc in factor:
        cyc = list(cyc)
        for i in range(len(cyc)):
            arcs.append((cyc[i], cyc[(i + 1) % len(cyc)]))
    return arcs


def _shape_of_arcs(arcs: Sequence[tuple], n: int, report: CertificateReport, label: str):
    """Return sorted cycle lengths, or None if the arcs are not a 2-factor of K*_n."""
    out_deg: Counter = Counter()
    in_deg: Counter = Counter()
    succ = {}
    for u, v in arcs:
        if u == v:
            report.add(WRONG_SHAPE, f"{label}loop at {u!r}")
            return None
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                report.add(NOT_SPANNING, f"{label}vertex {w!r} outside 0..{n - 1}")
                return None
        out_deg[u] += 1
        in_deg[v] += 1
        succ[u] = v
    bad = False
    for w in range(n):
        if out_deg[w] == 0 and in_deg[w] == 0:
            report.add(NOT_SPANNING, f"{label}vertex {w} not covered")
            bad = True
        elif out_deg[w] != 1 or in_deg[w] != 1:
            report.add(WRONG_SHAPE, f"{label}vertex {w} has in/out degree {in_deg[w]}/{out_deg[w]}")
            bad = True
    if bad:
        return None
    lengths = []
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        length = 0
        v = start
        while v not in seen:
            seen.add(v)
            v = succ[v]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def verify_two_factor(factor, n: int, cycle_type: CycleType | Sequence[int]) -> CertificateReport:
    """Check that ``factor`` is a 2-factor on 0..n-1 with the given cycle type."""
    report = CertificateReport()
    _check_factor(factor_arcs(factor), n, cycle_type, report, "")
    return report


def _check_factor(arcs, n, cycle_type, report, label) -> None:
    wanted = sorted(cycle_type.lengths if isinstance(cycle_type, CycleType) else cycle_type)
    if len(arcs) != len(set(arcs)):
        report.add(WRONG_SHAPE, f"{label}repeated arc inside one factor")
        return
    lengths = _shape_of_arcs(arcs, n, report, label)
    if lengths is not None and lengths != wanted:
        report.add(WRONG_CYCLE_TYPE, f"{label}cycle type {tuple(lengths)} != {tuple(wanted)}")


def verify_factorization(
    factors: Iterable,
    target_arcs: Iterable,
    n: int,
    cycle_type: CycleType | Sequence[int],
    expected_count: int | None = None,
) -> CertificateReport:
    """Check that ``factors`` partition ``target_arcs`` into 2-factors of one type."""
    report = CertificateReport()
    factors = list(factors)
    if expected_count is not None and len(factors) != expected_count:
        report.add(WRONG_FACTOR_COUNT, f"{len(factors)} factors, expected {expected_count}")
    used: Counter = Counter()
    for idx, f in enumerate(factors):
        arcs = factor_arcs(f)
        _check_factor(arcs, n, cycle_type, report, f"factor {idx}: ")
        used.update(arcs)
    target = {tuple(a) for a in target_arcs}
    for arc, count in used.items():
        if count > 1:
            report.add(DUPLICATE_ARC, f"arc {arc} used {count} times")
        if arc not in target:
            report.add(WRONG_SHAPE, f"arc {arc} not in target digraph")
    for arc in sorted(target - set(used)):
        report.add(MISSING_ARC, f"arc {arc} not covered")
    return report


def verify_decomposition(decomposition, cycle_type: CycleType | Sequence[int]) -> CertificateReport:
    """Certify a (C_m1,...,C_mk)-factorization of K*_n, n = sum of the lengths."""
    if not isinstance(cycle_type, CycleType):
        cycle_type = CycleType(tuple(cycle_type))
    n = cycle_type.n
    report = CertificateReport()
    if isinstance(decomposition, Decomposition) and decomposition.n != n:
        report.add(WRONG_SHAPE, f"decomposition declares n={decomposition.n}, type has n={n}")
    factors = list(decomposition)
    report.extend(verify_factorization(factors, complete_symmetric_arcs(n), n, cycle_type, n - 1))
    return report


# --- S-orthogonal subdigraphs ------------------------------------------------


def path(length: int) -> tuple:
    """Shape component: a directed path with ``length`` arcs."""
    return ("P", length)


def cycle(length: int) -> tuple:
    """Shape component: a directed cycle of ``length`` vertices."""
    return ("C", length)


def _components(vertices: set, arcs: list):
    adj: dict = {v: set() for v in vertices}
    for u, v in arcs:
        adj[u].add(v)
        adj[v].add(u)
    seen: set = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        stack = [s]
        comp = set()
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.add(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def verify_orthogonal(H, t: int, S: ConnectionSet | Iterable[int], shape: Iterable[tuple]) -> CertificateReport:
    """Check that H has exactly one arc of each difference in S and the given shape.

    ``H`` is either an object with ``vertices`` and ``arcs`` attributes or a
    plain iterable of arcs.  ``shape`` is a multiset of ``("P", l)`` and
    ``("C", m)`` components; ``("P", 0)`` matches an isolated vertex.
    """
    report = CertificateReport()
    if hasattr(H, "arcs"):
        arcs = [tuple(a) for a in H.arcs]
        vertices = set(getattr(H, "vertices", ()))
    else:
        arcs = [tuple(a) for a in H]
        vertices = set()
    residues = set(S.residues) if isinstance(S, ConnectionSet) else {d % t for d in S}
    for u, v in arcs:
        vertices.update((u, v))
    for w in vertices:
        if not (isinstance(w, int) and 0 <= w < t):
            report.add(WRONG_SHAPE, f"vertex {w!r} not in Z_{t}")
            return report
    diffs = Counter((v - u) % t for u, v in arcs)
    for d, c in sorted(diffs.items()):
        if d not in residues:
            report.add(NOT_ORTHOGONAL, f"difference {d} not in S")
        elif c > 1:
            report.add(NOT_ORTHOGONAL, f"difference {d} used {c} times")
    for d in sorted(residues - set(diffs)):
        report.add(NOT_ORTHOGONAL, f"difference {d} missing")
    if len(set(arcs)) != len(arcs):
        report.add(WRONG_SHAPE, "repeated arc")
        return report

    out_deg: Counter = Counter(u for u, _ in arcs)
    in_deg: Counter = Counter(v for _, v in arcs)
    found = []
    for comp in _components(vertices, arcs):
        comp_arcs = [a for a in arcs if a[0] in comp]
        if any(out_deg[w] > 1 or in_deg[w] > 1 for w in comp):
            report.add(WRONG_SHAPE, f"component {sorted(comp)} is not a path or cycle")
            continue
        if len(comp_arcs) == len(comp):
            found.append(cycle(len(comp)))
        elif len(comp_arcs) == len(comp) - 1:
            found.append(path(len(comp_arcs)))
        else:
            report.add(WRONG_SHAPE, f"component {sorted(comp)} is not a path or cycle")
    want = Counter(tuple(c) for c in shape)
    got = Counter(found)
    # isolated-vertex placeholders may be supplied by any vertex outside H
    spare = t - len(vertices)
    p0_short = want[("P", 0)] - got[("P", 0)]
    if 0 < p0_short <= spare:
        got[("P", 0)] += p0_short
    if got != want:
        report.add(WRONG_SHAPE, f"components {sorted(got.elements())} != shape {sorted(want.elements())}")
    return report
