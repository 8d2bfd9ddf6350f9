"""Command line front end: ``opstar solve|verify|search|catalog|batch``.

Exit codes: 0 solved or verified, 1 usage or parse error, 2 nonexistent,
3 unknown, 4 certificate failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .core import CycleType, Decomposition, TwoFactor
from .errors import OPStarError
from .outcome import BudgetExhausted, Nonexistent, Solved, Step, StrategyTrace, Unknown
from .rotational import catalog_lookup, catalog_types, expand_starters, StarterSet
from .search import candidate_models, rotational_search, expand_rotational
from .solver import SearchBudget, Solver, brute_force_search, default_solver, replay
from .verify import verify_decomposition

DOC_FORMAT = "opstar-solution"
DOC_VERSION = 1
MAX_BATCH_N = 40

EXIT_SOLVED = 0
EXIT_USAGE = 1
EXIT_NONEXISTENT = 2
EXIT_UNKNOWN = 3
EXIT_VERIFY_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means Nonexistent here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- documents ---------------------------------------------------------------


def canonical_factors(dec: Decomposition) -> list:
    """Cycles rotated to their least vertex, ordered by it; factor order is kept."""
    return [[list(c) for c in f.canonical().cycles] for f in dec]


def solution_document(ct: CycleType, outcome: Solved) -> dict:
    return {
        "format": DOC_FORMAT,
        "version": DOC_VERSION,
        "n": ct.n,
        "cycle_type": list(ct.lengths),
        "strategy": [{"rule": r, "params": p} for r, p in outcome.trace.steps],
        "factors": canonical_factors(outcome.decomposition),
        "certificate": {"ok": outcome.report.ok, "failures": [list(f) for f in outcome.report.failures]},
    }


def parse_document(text: str) -> tuple:
    """(cycle type, decomposition) from a SolutionDocument; ValueError on malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != DOC_FORMAT:
        raise ValueError("not a solution document")
    if doc.get("version") != DOC_VERSION:
        raise ValueError(f"unsupported version {doc.get('version')!r}")
    try:
        ct = CycleType(tuple(doc["cycle_type"]))
        n = int(doc["n"])
        factors = []
        for f in doc["factors"]:
            factors.append(TwoFactor(tuple(tuple(int(v) for v in c) for c in f)))
    except (KeyError, TypeError, ValueError, OPStarError) as exc:
        raise ValueError(f"malformed document: {exc}") from exc
    return ct, Decomposition(tuple(factors), n)


def text_factor(cycles) -> str:
    return " ∪ ".join(" ".join(f"u_{v}" for v in list(c) + [c[0]]) for c in cycles)


def render_text(ct: CycleType, outcome: Solved) -> str:
    lines = [f"OP*{ct}  n={ct.n}  factors={len(outcome.decomposition)}", outcome.trace.pretty()]
    lines += [text_factor(f) for f in canonical_factors(outcome.decomposition)]
    lines.append(f"certificate: {outcome.report.summary()}")
    return "\n".join(lines)


def _parse_lengths(values: Sequence[str]) -> CycleType:
    try:
        lengths = tuple(int(v) for v in values)
    except ValueError as exc:
        raise UsageError(f"cycle lengths must be integers: {' '.join(values)}") from exc
    if not lengths or any(m < 2 for m in lengths):
        raise UsageError("cycle lengths must be at least 2")
    return CycleType(lengths)


def _budget(args) -> Optional[SearchBudget]:
    if args.budget is None and args.seed is None:
        return None
    kw = {}
    if args.budget is not None:
        kw["nodes"] = args.budget
    if args.seed is not None:
        kw["seed"] = args.seed
    return SearchBudget(**kw)


def _emit_outcome(ct: CycleType, outcome, args, out) -> int:
    if isinstance(outcome, Solved):
        if not outcome.report.ok:
            print(f"certificate failed: {outcome.report.summary()}", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        if args.format == "json":
            out.write(json.dumps(solution_document(ct, outcome), sort_keys=True) + "\n")
        else:
            out.write(render_text(ct, outcome) + "\n")
        if getattr(args, "trace", False):
            log: list = []
            replay(outcome.trace, log)
            for entry in log:
                print(json.dumps(entry, sort_keys=True), file=sys.stderr)
        return EXIT_SOLVED
    if isinstance(outcome, Nonexistent):
        key, why = "witness", outcome.witness
    else:
        key, why = "reason", outcome.reason
    payload = {"cycle_type": list(ct.lengths), "verdict": outcome.verdict, key: vars(why)}
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        extra = ", ".join(f"{k}={v}" for k, v in vars(why).items() if k != "kind")
        out.write(f"OP*{ct}: {outcome.verdict} ({why.kind}) {extra}\n")
    return EXIT_NONEXISTENT if isinstance(outcome, Nonexistent) else EXIT_UNKNOWN


# --- commands ---------------------------------------------------------------------


def cmd_solve(args, out=sys.stdout) -> int:
    ct = _parse_lengths(args.lengths)
    budget = _budget(args)
    solver = default_solver() if budget is None else Solver(budget, cache=default_solver().cache)
    return _emit_outcome(ct, solver.solve(ct), args, out)


def cmd_verify(args, out=sys.stdout) -> int:
    try:
        with open(args.path) as fh:
            text = fh.read()
        ct, dec = parse_document(text)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_decomposition(dec, ct)
    if report.ok:
        out.write(f"ok: OP*{ct} with {len(dec)} factors\n")
        return EXIT_SOLVED
    for kind, detail in report.failures:
        out.write(f"{kind}: {detail}\n")
    return EXIT_VERIFY_FAILED


def cmd_search(args, out=sys.stdout) -> int:
    """Run one search engine directly, bypassing the constructions."""
    ct = _parse_lengths(args.lengths)
    if args.method == "exact":
        outcome = brute_force_search(ct, budget=args.budget)
        return _emit_outcome(ct, outcome, args, out)
    nodes = 0
    for model in candidate_models(ct):
        res = rotational_search(ct, model, seed=args.seed or 0, budget=args.budget or 400_000)
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
            dec = expand_rotational(model, res.starters, res.invariant)
            outcome = Solved(dec, StrategyTrace(step), verify_decomposition(dec, ct))
            return _emit_outcome(ct, outcome, args, out)
    return _emit_outcome(ct, Unknown(BudgetExhausted(nodes, "rotational search found nothing")), args, out)


def cmd_catalog(args, out=sys.stdout) -> int:
    if args.lengths:
        ct = _parse_lengths(args.lengths)
        found = catalog_lookup(ct)
        if found is None:
            out.write(f"OP*{ct}: not in catalog\n")
            return EXIT_UNKNOWN
        if isinstance(found, StarterSet):
            out.write(f"OP*{ct}: q={found.q}\n")
            for s in found.starters:
                out.write(text_factor(s) + "\n")
        else:
            for f in canonical_factors(found):
                out.write(text_factor(f) + "\n")
        return EXIT_SOLVED
    bad = 0
    for ct in catalog_types():
        line = f"OP*{ct}"
        if args.check:
            found = catalog_lookup(ct)
            dec = expand_starters(found) if isinstance(found, StarterSet) else found
            report = verify_decomposition(dec, ct)
            bad += not report.ok
            line += f"  {report.summary()}"
        out.write(line + "\n")
    return EXIT_VERIFY_FAILED if bad else EXIT_SOLVED


def cycle_types_up_to(max_n: int) -> list:
    """All cycle types with 2 <= n <= max_n, ordered by n and then lexicographically."""

    def rec(rem: int, lo: int):
        if rem == 0:
            yield ()
            return
        for m in range(lo, rem + 1):
            for tail in rec(rem - m, m):
                yield (m,) + tail

    return [t for n in range(2, max_n + 1) for t in rec(n, 2)]


def _batch_row(lengths: tuple) -> tuple:
    t0 = time.perf_counter()
    outcome = default_solver().solve(lengths)
    millis = int((time.perf_counter() - t0) * 1000)
    strategy = outcome.trace.root.rule if isinstance(outcome, Solved) else getattr(
        getattr(outcome, "witness", None) or outcome.reason, "kind"
    )
    return lengths, outcome.verdict, strategy, millis


def cmd_batch(args, out=sys.stdout) -> int:
    if args.max_n > MAX_BATCH_N:
        raise UsageError(f"--max-n is capped at {MAX_BATCH_N}")
    types = cycle_types_up_to(args.max_n)
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(types) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_batch_row, types))
    else:
        rows = [_batch_row(t) for t in types]
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["cycle_type", "verdict", "strategy", "millis"])
    for lengths, verdict, strategy, millis in rows:
        w.writerow(["(" + ",".join(map(str, lengths)) + ")", verdict, strategy, millis])
    return EXIT_SOLVED


# --- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="opstar", description="Constructive solver and checker for the directed Oberwolfach problem.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, *, trace: bool = True):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--budget", type=int, default=None, help="node budget for search")
        sp.add_argument("--seed", type=int, default=None, help="seed for randomized search")
        if trace:
            sp.add_argument("--trace", action="store_true", help="dump casework states to stderr")

    sp = sub.add_parser("solve", help="solve OP* for the given cycle lengths")
    sp.add_argument("lengths", nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a solution document")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="run a search engine directly")
    sp.add_argument("lengths", nargs="+")
    sp.add_argument("--method", choices=("exact", "rotational"), default="exact")
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("catalog", help="list or show catalog entries")
    sp.add_argument("lengths", nargs="*")
    sp.add_argument("--list", action="store_true", help="list catalog types (default)")
    sp.add_argument("--check", action="store_true", help="verify every entry")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("batch", help="solve every cycle type up to --max-n; CSV on stdout")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    sp.set_defaults(func=cmd_batch)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, OPStarError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
