"""Feasibility checking and a grid oracle for the window relaxation.

The relaxation minimizes the window low end over real variables
(d_minus, dbar_minus, dbar_plus, x), where dbar_minus / dbar_plus are
the mean degrees of the low / high vertex classes and x is the high
class fraction:

    minimize  d_minus
    mixture:  (1-x) dbar_minus + x dbar_plus == d
    cross:    (1-x) dbar_minus >= (dbar_plus - x n) x
    low:      0 <= dbar_minus <= d_minus
    high:     d_plus <= dbar_plus <= n
    box:      0 <= x <= 1

`closed_form_solution` returns the optimal point in closed form;
`solve_grid` is an independent dense-scan oracle used to validate it.
After eliminating dbar_minus through the mixture identity and setting
d_minus = dbar_minus (forced at an optimum), two degrees of freedom
remain, so an exhaustive grid over (x, dbar_plus) with window refinement
is a trustworthy check.
"""

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .bounds import d_minus_bound, is_above_sqrt_dn, _window_sqrt
from .errors import DomainError, InfeasibleSearchError
from .params import GraphParams

X_EDGE = 1e-9  # keep x away from 1 so the mixture identity can be solved


def default_tolerance(p: GraphParams) -> float:
    """Scale-aware feasibility tolerance; constraint magnitudes grow with n."""
    return 1e-9 * p.n


@dataclass(frozen=True)
class OptSolution:
    """Candidate point of the relaxation with optional feasibility data."""

    d_minus: float
    dbar_minus: float
    dbar_plus: float
    x: float
    residuals: dict | None = None
    feasible: bool | None = None

    @property
    def objective(self) -> float:
        return self.d_minus


def constraint_residuals(sol: OptSolution, p: GraphParams, d_plus) -> dict:
    """Signed slack of each constraint (negative means violated).

    The mixture identity reports its signed deviation; the two-sided
    bounds report the smaller of their two slacks.
    """
    n, d = p.n, float(p.d)
    x, dm, db = sol.x, sol.dbar_minus, sol.dbar_plus
    return {
        "mixture": (1.0 - x) * dm + x * db - d,
        "cross": (1.0 - x) * dm - (db - x * n) * x,
        "low": min(dm, sol.d_minus - dm),
        "high": min(db - float(d_plus), n - db),
        "box": min(x, 1.0 - x),
    }


def check_feasible(sol: OptSolution, p: GraphParams, d_plus, tol: float | None = None):
    """List of (constraint name, residual) pairs violated beyond tol."""
    if tol is None:
        tol = default_tolerance(p)
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    res = constraint_residuals(sol, p, d_plus)
    out = []
    for name, value in res.items():
        bad = abs(value) > tol if name == "mixture" else value < -tol
        if bad:
            out.append((name, value))
    return out


def _require_opt_domain(p: GraphParams, d_plus):
    if p.d == 0 or p.d == p.n - 1:
        raise DomainError(f"average degree {p.d} is degenerate for order {p.n}")
    if not (d_plus > p.d and d_plus <= p.n - 1):
        raise DomainError(f"d_plus={d_plus} outside (d, n-1] = ({p.d}, {p.n - 1}]")


def _with_feasibility(sol: OptSolution, p: GraphParams, d_plus, tol: float) -> OptSolution:
    res = constraint_residuals(sol, p, d_plus)
    bad = check_feasible(sol, p, d_plus, tol)
    return replace(sol, residuals=res, feasible=not bad)


def closed_form_solution(p: GraphParams, d_plus, tol: float | None = None) -> OptSolution:
    """Optimal point of the relaxation.

    Below the sqrt(d n) threshold: (0, 0, sqrt(d n), sqrt(d/n)).  Above
    it: d_minus = dbar_minus = the closed-form bound, dbar_plus = d_plus,
    x = (d_plus - sqrt(d_plus^2 - d n))/n, with the cross constraint
    tight.
    """
    _require_opt_domain(p, d_plus)
    if tol is None:
        tol = default_tolerance(p)
    d = float(p.d)
    if not is_above_sqrt_dn(p, d_plus):
        sol = OptSolution(0.0, 0.0, math.sqrt(d * p.n), math.sqrt(d / p.n))
    else:
        v = d_minus_bound(p, d_plus)
        s = _window_sqrt(p, d_plus)
        sol = OptSolution(v, v, float(d_plus), (float(d_plus) - s) / p.n)
    return _with_feasibility(sol, p, d_plus, tol)


def solve_grid(p: GraphParams, d_plus, coarse_steps: int = 160,
               refine_rounds: int = 5, tol: float | None = None) -> OptSolution:
    """Dense grid minimizer over (x, dbar_plus) with window refinement.

    dbar_minus is eliminated through the mixture identity and d_minus is
    set equal to it.  Each round scans a coarse_steps x coarse_steps
    grid, keeps the feasible minimum, then shrinks the window around the
    incumbent by a factor of 10; a second refinement pass runs along the
    dbar_plus lower edge, where the joint window is prone to stalling.
    Ties break toward smaller x, then smaller dbar_plus, so the result
    is deterministic.

    Parameters
    ----------
    coarse_steps : grid points per axis, at least 100.
    refine_rounds : shrink-and-rescan rounds after the coarse pass, at least 3.
    tol : feasibility tolerance, default 1e-9 * n.
    """
    _require_opt_domain(p, d_plus)
    if coarse_steps < 100:
        raise DomainError(f"coarse_steps must be >= 100, got {coarse_steps}")
    if refine_rounds < 3:
        raise DomainError(f"refine_rounds must be >= 3, got {refine_rounds}")
    if tol is None:
        tol = default_tolerance(p)

    n = p.n
    d = float(p.d)
    dpf = float(d_plus)
    x_bounds = (X_EDGE, 1.0 - X_EDGE)
    b_bounds = (dpf, float(n))
    x_lo, x_hi = x_bounds
    b_lo, b_hi = b_bounds
    best = None  # (objective, x, dbar_plus)

    for _ in range(refine_rounds + 1):
        xs = np.linspace(x_lo, x_hi, coarse_steps)
        # Keep the admissible lower edge of dbar_plus sampled in every
        # round; window refinement around the incumbent can otherwise
        # strand a minimizer sitting exactly on that boundary.
        bs = np.unique(np.append(np.linspace(b_lo, b_hi, coarse_steps), b_bounds[0]))
        X, B = np.meshgrid(xs, bs, indexing="ij")
        dbar_minus = (d - X * B) / (1.0 - X)
        cross = (1.0 - X) * dbar_minus - (B - X * n) * X
        # Strict feasibility: tolerance-relaxed points could undercut the
        # true optimum by more than the promised 1e-9*n floor.
        feas = (dbar_minus >= 0.0) & (cross >= 0.0)
        if feas.any():
            obj = np.where(feas, dbar_minus, np.inf)
            val = obj.min()
            i, j = np.argwhere(obj == val)[0]  # row-major: smallest x, then dbar_plus
            cand = (float(val), float(xs[i]), float(bs[j]))
            if best is None or cand < best:
                best = cand
        cx = best[1] if best else 0.5 * (x_lo + x_hi)
        cb = best[2] if best else 0.5 * (b_lo + b_hi)
        wx = (x_hi - x_lo) / 10.0
        wb = (b_hi - b_lo) / 10.0
        x_lo = max(x_bounds[0], cx - wx / 2)
        x_hi = min(x_bounds[1], cx + wx / 2)
        b_lo = max(b_bounds[0], cb - wb / 2)
        b_hi = min(b_bounds[1], cb + wb / 2)

    # Second pass: 1-D scan along the dbar_plus lower edge, with its own
    # incumbent.  The joint window can stall on flat stretches of the
    # cross-constraint boundary curve; in one variable the incumbent
    # stays within one grid spacing of the edge optimum, so this pass
    # cannot strand.  Merged with the joint result at the end.
    edge_best = None
    x_lo, x_hi = x_bounds
    for _ in range(refine_rounds + 1):
        xs = np.linspace(x_lo, x_hi, coarse_steps)
        dbar_minus = (d - xs * dpf) / (1.0 - xs)
        cross = (1.0 - xs) * dbar_minus - (dpf - xs * n) * xs
        feas = (dbar_minus >= 0.0) & (cross >= 0.0)
        if feas.any():
            obj = np.where(feas, dbar_minus, np.inf)
            i = int(np.argmin(obj))
            cand = (float(obj[i]), float(xs[i]), dpf)
            if edge_best is None or cand < edge_best:
                edge_best = cand
        cx = edge_best[1] if edge_best else 0.5 * (x_lo + x_hi)
        wx = (x_hi - x_lo) / 10.0
        x_lo = max(x_bounds[0], cx - wx / 2)
        x_hi = min(x_bounds[1], cx + wx / 2)
    if edge_best is not None and (best is None or edge_best < best):
        best = edge_best

    if best is None:
        raise InfeasibleSearchError(
            f"no feasible grid point for n={n}, d={p.d}, d_plus={d_plus}")
    val, bx, bb = best
    sol = OptSolution(val, val, bb, bx)
    return _with_feasibility(sol, p, d_plus, tol)


def d_plus_test_grid(p: GraphParams, count: int = 12) -> list:
    """`count` d_plus values spanning (d, n-1].

    Uniform spacing, except that the value nearest to (n+d)/2 is replaced
    by it exactly: that point minimizes the window length (value n/2), so
    grids used for length sweeps must contain it.
    """
    d = float(p.d)
    n = p.n
    vals = [d + i * (n - 1 - d) / count for i in range(1, count + 1)]
    mid = (n + d) / 2.0
    if d < mid <= n - 1:
        j = min(range(count), key=lambda i: abs(vals[i] - mid))
        vals[j] = mid
    return vals


def reference_cells(sizes=(20, 50, 100),
                    ratios=(Fraction(1, 10), Fraction(1, 4), Fraction(1, 2),
                            Fraction(3, 4), Fraction(9, 10))) -> list:
    """GraphParams for the standard validation grid of (n, d/n) cells."""
    return [GraphParams.from_density(n, r * n) for n in sizes for r in ratios]


__all__ = [
    "OptSolution", "constraint_residuals", "check_feasible",
    "closed_form_solution", "solve_grid", "default_tolerance",
    "d_plus_test_grid", "reference_cells",
]
