"""Command-line front end.

Subcommands: interval, bound, sweep, opt, verify, extremal, peel,
realize, check-seq.  Exit codes are stable across subcommands: 0 for
success (all checks pass), 1 when a verification found a violation, 2 on
invalid arguments or domain errors.  The environment variable
DEGSEQ_MAX_N (default 10) caps the order of enumeration-backed commands.

Human-readable numbers are printed with 6 significant digits and exact
rationals as p/q; the sweep CSV carries full round-trip precision so the
curves can be checked and replotted without loss.
"""

import argparse
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bounds, extremal, optim, sequences
from .errors import DomainError
from .graphs import format_edge_list, parse_edge_list
from .params import GraphParams

SWEEP_HEADER = "d_over_n,d_plus_over_n,ell_min_over_n"
DEFAULT_SWEEP_DENSITIES = (0.25, 0.5, 0.81)


@dataclass
class SweepRow:
    d_over_n: float
    d_plus_over_n: float
    ell_min_over_n: float


def _enumeration_cap() -> int:
    raw = os.environ.get("DEGSEQ_MAX_N", "10")
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"DEGSEQ_MAX_N must be an integer, got {raw!r}") from None


def _frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q} = {float(q):.6g}"


def sweep_rows(density: float, steps: int) -> list:
    """Normalized window-length curve for one density d/n.

    Samples start just above sqrt(d/n) (rounded up to 4 decimals, so e.g.
    0.7072 for d/n = 0.5) and run uniformly to 1; the length minimizer
    (1 + d/n)/2, where the curve equals 1/2, is always included.
    """
    z0 = float(density)
    if not 0.0 < z0 < 1.0:
        raise DomainError(f"d/n must lie in (0, 1), got {z0}")
    if steps < 2:
        raise DomainError(f"steps must be at least 2, got {steps}")
    start = (math.floor(math.sqrt(z0) * 10 ** 4) + 1) / 10 ** 4
    xs = [start + i * (1.0 - start) / (steps - 1) for i in range(steps)]
    xs.append((1.0 + z0) / 2.0)
    xs = sorted(set(xs))
    return [SweepRow(z0, x, bounds.scaled_ell_min(x, z0)) for x in xs]


def write_sweep_csv(rows, fh) -> None:
    fh.write(SWEEP_HEADER + "\n")
    for r in rows:
        fh.write(f"{r.d_over_n!r},{r.d_plus_over_n!r},{r.ell_min_over_n!r}\n")


def read_sweep_csv(path) -> list:
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != SWEEP_HEADER:
        raise ValueError(f"bad sweep header: {lines[0] if lines else ''!r}")
    rows = []
    for ln in lines[1:]:
        a, b, c = ln.split(",")
        rows.append(SweepRow(float(a), float(b), float(c)))
    return rows


def cmd_interval(args) -> int:
    p = GraphParams(args.n, args.m)
    iv = bounds.half_order_interval(p)
    print(f"n = {p.n}  m = {args.m}")
    print(f"average degree d = {_frac(p.d)}")
    print(f"complement average degree = {_frac(p.d_bar)}")
    print(f"interval {iv}  (length {_frac(iv.length)})")
    if 0 < p.d < p.n - 1:
        prof = bounds.extremal_profile(p)
        tag = "realizable" if prof.realizable else "not realizable"
        print(f"extremal profile: clique side {_frac(prof.size_plus)} x degree "
              f"{_frac(prof.deg_plus)}, independent side {_frac(prof.size_minus)} x degree "
              f"{_frac(prof.deg_minus)} ({tag})")
    else:
        print("extremal profile: not defined at degenerate density")
    return 0


def cmd_bound(args) -> int:
    p = GraphParams(args.n, args.m)
    if args.dplus is None and args.dminus is None:
        print("error: bound needs --dplus and/or --dminus", file=sys.stderr)
        return 2
    print(f"n = {p.n}  m = {args.m}  d = {_frac(p.d)}")
    if args.dplus is not None:
        low = bounds.d_minus_bound(p, args.dplus)
        ell = bounds.ell_min(p, args.dplus)
        print(f"d_plus  = {args.dplus:.6g}")
        print(f"d_minus = {low:.6g}")
        print(f"ell_min = {ell:.6g}")
    if args.dminus is not None:
        up = bounds.symmetric_d_plus(p, args.dminus)
        print(f"symmetric window for d_minus = {args.dminus:.6g}: d_plus = {up:.6g}")
    return 0


def cmd_sweep(args) -> int:
    densities = args.density or list(DEFAULT_SWEEP_DENSITIES)
    rows = []
    for z0 in densities:
        rows.extend(sweep_rows(z0, args.steps))
    if args.out:
        with open(args.out, "w") as fh:
            write_sweep_csv(rows, fh)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        write_sweep_csv(rows, sys.stdout)
    return 0


def cmd_opt(args) -> int:
    p = GraphParams(args.n, args.m)
    sol = optim.closed_form_solution(p, args.dplus)
    grid = optim.solve_grid(p, args.dplus, coarse_steps=args.steps, refine_rounds=5)
    worst = max(abs(v) for v in sol.residuals.values() if v < 0) if any(
        v < 0 for v in sol.residuals.values()) else 0.0
    print(f"closed form: d_minus = {sol.d_minus:.6g}  dbar_plus = {sol.dbar_plus:.6g}"
          f"  x = {sol.x:.6g}  (feasible: {sol.feasible}, worst residual {worst:.3g})")
    print(f"grid oracle: d_minus = {grid.objective:.6g}")
    print(f"difference : {abs(grid.objective - sol.objective):.3g}")
    return 0


def _verify_half_order(nmax: int) -> int:
    total_viol = total_seq = total_mismatch = 0
    for n in range(2, nmax + 1):
        viol = seqs = mism = extremal_count = 0
        for m in range(1, n * (n - 1) // 2):
            rep = sequences.verify_half_order(n, m)
            viol += len(rep.violations)
            mism += len(rep.profile_mismatches)
            extremal_count += len(rep.extremal_sequences)
            seqs += rep.sequences_checked
        print(f"n={n}: {seqs} sequences, {viol} violations, "
              f"{extremal_count} extremal, {mism} profile mismatches")
        total_viol += viol
        total_seq += seqs
        total_mismatch += mism
    print(f"total: {total_seq} sequences, {total_viol} violations "
          f"({total_mismatch} profile mismatches)")
    return 0 if total_viol == 0 else 1


def _verify_window(nmax: int) -> int:
    total_viol = total_checks = bound_fail = 0
    for n in range(2, nmax + 1):
        viol = checks = 0
        for m in range(1, n * (n - 1) // 2):
            for dp in sequences.window_grid(n, m):
                rep = sequences.verify_window(n, m, dp)
                viol += len(rep.violations)
                checks += 1
                if not rep.bound_ok:
                    bound_fail += 1
        print(f"n={n}: {checks} (m, d_plus) cells, {viol} violations")
        total_viol += viol
        total_checks += checks
    print(f"total: {total_checks} cells, {total_viol} violations, "
          f"{bound_fail} empirical-vs-theory failures")
    return 0 if total_viol == 0 and bound_fail == 0 else 1


def _verify_opt(grid_name: str) -> int:
    if grid_name == "quick":
        cells = optim.reference_cells(sizes=(20,), ratios=(Fraction(1, 4), Fraction(1, 2)))
        count = 6
    elif grid_name == "default":
        cells = optim.reference_cells()
        count = 12
    else:
        raise DomainError(f"unknown grid {grid_name!r} (use default or quick)")
    ok = True
    for p in cells:
        worst = 0.0
        for dp in optim.d_plus_test_grid(p, count):
            closed = bounds.opt_value(p, dp)
            sol = optim.solve_grid(p, dp, coarse_steps=120, refine_rounds=5)
            worst = max(worst, abs(sol.objective - closed))
            cf = optim.closed_form_solution(p, dp)
            if not cf.feasible:
                ok = False
        bound = 1e-3 * p.n
        flag = "ok" if worst <= bound else "FAIL"
        if worst > bound:
            ok = False
        print(f"n={p.n} d={_frac(p.d)}: max |grid - closed| = {worst:.3g} "
              f"(allowed {bound:.3g}) {flag}")
    print("all cells within tolerance" if ok else "tolerance exceeded")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.mode in ("t1", "t2"):
        cap = _enumeration_cap()
        if args.nmax < 2:
            raise DomainError(f"nmax must be at least 2, got {args.nmax}")
        if args.nmax > cap:
            raise DomainError(
                f"nmax {args.nmax} exceeds the enumeration cap {cap} (set DEGSEQ_MAX_N)")
    if args.mode == "t1":
        return _verify_half_order(args.nmax)
    if args.mode == "t2":
        return _verify_window(args.nmax)
    return _verify_opt(args.grid)


def cmd_extremal(args) -> int:
    if args.dplus is None:
        res = extremal.build_split_extremal(args.n, args.m)
    else:
        res = extremal.build_near_extremal(args.n, args.m, args.dplus)
    sys.stdout.write(format_edge_list(res.graph))
    for key in sorted(res.gap_report):
        print(f"gap {key}: {res.gap_report[key]:.6g}", file=sys.stderr)
    return 0


def cmd_peel(args) -> int:
    text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
    g = parse_edge_list(text)
    steps = sequences.peel_trace(g)
    print("step vertex degree interval")
    for i, st in enumerate(steps, 1):
        print(f"{i} {st.vertex} {st.degree} {st.interval}")
    return 0


def cmd_realize(args) -> int:
    seq = sequences.parse_sequence(args.seq)
    g = sequences.realize(seq)
    sys.stdout.write(format_edge_list(g))
    return 0


def cmd_check_seq(args) -> int:
    seq = sequences.parse_sequence(args.seq)
    if sequences.is_graphical(seq):
        print(f"{sequences.format_sequence(seq)}: graphical")
        return 0
    print(f"{sequences.format_sequence(seq)}: not graphical")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degreeintervals",
        description="Guaranteed vertex-degree windows around the average degree.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("interval", cmd_interval, "half-order interval and extremal profile")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("bound", cmd_bound, "window bounds d_minus / ell_min / symmetric d_plus")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--dplus", type=float)
    sp.add_argument("--dminus", type=float)

    sp = add("sweep", cmd_sweep, "CSV of normalized window-length curves")
    sp.add_argument("density", type=float, nargs="*",
                    help="d/n values (default 0.25 0.5 0.81)")
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--out", type=str, default=None, help="CSV path (default stdout)")

    sp = add("opt", cmd_opt, "closed-form optimum cross-checked by the grid oracle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--dplus", type=float, required=True)
    sp.add_argument("--steps", type=int, default=120)

    sp = add("verify", cmd_verify, "exhaustive and oracle verification suites")
    sp.add_argument("--mode", choices=("t1", "t2", "opt"), required=True)
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--grid", choices=("default", "quick"), default="default")

    sp = add("extremal", cmd_extremal, "build boundary / near-boundary graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--dplus", type=float, default=None)

    sp = add("peel", cmd_peel, "peeling trace of an edge-list graph file")
    sp.add_argument("graph", help="edge list path, or - for stdin")

    sp = add("realize", cmd_realize, "realize a degree sequence as an edge list")
    sp.add_argument("--seq", required=True, help="comma-separated degrees")

    sp = add("check-seq", cmd_check_seq, "test whether a sequence is graphical")
    sp.add_argument("--seq", required=True, help="comma-separated degrees")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
