"""Closed-form degree-interval bounds around the average degree.

For a graph of order n with average degree d and complement average
degree dbar = n-1-d, two guarantees are computed here:

* the half-order interval
      [d - (n-2)/(2(n-1)) * d,  d + (n-2)/(2(n-1)) * dbar]
  of exact length (n-2)/2, which always contains some vertex degree; its
  boundary case is a split graph whose only degrees are the two
  endpoints (`extremal_profile`), and

* the sliding window [d_minus, d_plus] for a chosen upper end
  d_plus in (sqrt(d*n), n-1], with
      d_minus = d_plus - (d_plus - d) n / (n - d_plus + sqrt(d_plus^2 - d n)),
  the optimal value of a continuous relaxation (see `optim`).  Below the
  sqrt(d*n) threshold nothing nontrivial holds and the optimum is 0.

Half-order quantities and the two edge-counting slack polynomials are
evaluated in exact rational arithmetic; window quantities involve a
square root and use floats, with the discriminant formed exactly when
the input is rational.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .params import GraphParams, Interval


def _require_nondegenerate(p: GraphParams):
    if p.d == 0 or p.d == p.n - 1:
        raise DomainError(
            f"average degree {p.d} is degenerate for order {p.n}; need 0 < d < n-1")


def is_above_sqrt_dn(p: GraphParams, d_plus) -> bool:
    """Branch test d_plus > sqrt(d*n), exact for rational d_plus."""
    if isinstance(d_plus, (int, Fraction)):
        return Fraction(d_plus) ** 2 > p.d * p.n
    return float(d_plus) > math.sqrt(float(p.d * p.n))


def _window_sqrt(p: GraphParams, d_plus) -> float:
    """sqrt(d_plus^2 - d*n), with the argument formed exactly when possible."""
    if isinstance(d_plus, (int, Fraction)):
        return math.sqrt(Fraction(d_plus) ** 2 - p.d * p.n)
    dpf = float(d_plus)
    return math.sqrt(dpf * dpf - float(p.d * p.n))


def _require_window_domain(p: GraphParams, d_plus):
    _require_nondegenerate(p)
    if d_plus > p.n - 1:
        raise DomainError(f"d_plus={d_plus} exceeds n-1={p.n - 1}")
    if not is_above_sqrt_dn(p, d_plus):
        raise DomainError(
            f"d_plus={d_plus} must exceed sqrt(d*n) = {math.sqrt(float(p.d * p.n)):.6g}")


def half_order_interval(p: GraphParams) -> Interval:
    """Closed interval of length (n-2)/2 around d guaranteed to contain a degree."""
    c = Fraction(p.n - 2, 2 * (p.n - 1))
    return Interval(p.d - c * p.d, p.d + c * p.d_bar)


@dataclass(frozen=True)
class ExtremalProfile:
    """Shape of the boundary graph for the half-order interval.

    A clique of size_plus vertices, an independent set of size_minus, and
    a biregular cross layer; the only degrees are the interval endpoints
    deg_plus and deg_minus.  Realizable iff both sizes are even integers
    (each side must see exactly half of the other).
    """

    size_plus: Fraction
    size_minus: Fraction
    deg_plus: Fraction
    deg_minus: Fraction
    realizable: bool


def extremal_profile(p: GraphParams) -> ExtremalProfile:
    """Sizes and endpoint degrees of the boundary split graph."""
    _require_nondegenerate(p)
    size_plus = p.d * p.n / (p.n - 1)
    size_minus = p.d_bar * p.n / (p.n - 1)
    c = Fraction(p.n - 2, 2 * (p.n - 1))
    realizable = all(
        s.denominator == 1 and s.numerator % 2 == 0 for s in (size_plus, size_minus))
    return ExtremalProfile(
        size_plus=size_plus,
        size_minus=size_minus,
        deg_plus=p.d + c * p.d_bar,
        deg_minus=p.d - c * p.d,
        realizable=realizable,
    )


def d_minus_bound(p: GraphParams, d_plus) -> float:
    """Guaranteed low endpoint of the window ending at d_plus.

    Equals d_plus - (d_plus - d) n / (n - d_plus + s) with
    s = sqrt(d_plus^2 - d n); evaluated as s*d*n/((d_plus+s)(n-d_plus+s)),
    which is the same value without subtractive cancellation and is
    nonnegative term by term.  Requires sqrt(d n) < d_plus <= n-1.
    """
    _require_window_domain(p, d_plus)
    s = _window_sqrt(p, d_plus)
    dpf = float(d_plus)
    dn = float(p.d * p.n)
    return s * dn / ((dpf + s) * (p.n - dpf + s))


def ell_min(p: GraphParams, d_plus) -> float:
    """Window length d_plus - d_minus = (d_plus - d) n / (n - d_plus + s)."""
    _require_window_domain(p, d_plus)
    s = _window_sqrt(p, d_plus)
    dpf = float(d_plus)
    return (dpf - float(p.d)) * p.n / (p.n - dpf + s)


def opt_value(p: GraphParams, d_plus) -> float:
    """Optimal value of the window relaxation: 0 up to sqrt(d*n), then
    the d_minus bound.  Defined for d < d_plus <= n-1."""
    _require_nondegenerate(p)
    if not (d_plus > p.d and d_plus <= p.n - 1):
        raise DomainError(f"d_plus={d_plus} outside (d, n-1] = ({p.d}, {p.n - 1}]")
    if not is_above_sqrt_dn(p, d_plus):
        return 0.0
    return d_minus_bound(p, d_plus)


def symmetric_d_plus(p: GraphParams, d_minus) -> float:
    """Upper window end for a prescribed lower end, via the complement.

    Pure complement map: n-1 minus the d_minus bound of the complement
    parameters evaluated at n-1-d_minus.  Requires
    n-1-d_minus > sqrt(dbar*n).
    """
    _require_nondegenerate(p)
    if not 0 <= d_minus < p.d:
        raise DomainError(f"d_minus={d_minus} outside [0, d) = [0, {p.d})")
    comp = p.complement()
    try:
        low = d_minus_bound(comp, (p.n - 1) - d_minus)
    except DomainError as exc:
        raise DomainError(f"complement precondition fails: {exc}") from None
    return (p.n - 1) - low


def edge_count_slack(x, p: GraphParams, expanded: bool = False) -> Fraction:
    """Slack polynomial of the degree-sum count on the graph side.

    Nonnegative whenever x is the clique-side fraction of a graph with no
    degree strictly inside the half-order interval.  Factored form
    (x n - 1)(x(n-1) - d)/(n-1); `expanded` evaluates the defining sum
    instead.  Both are exact and must agree.
    """
    x = Fraction(x)
    n = p.n
    if expanded:
        low = p.d - Fraction(n - 2, 2 * (n - 1)) * p.d
        return x * (x * n - 1) + 2 * (1 - x) * low - p.d
    return (x * n - 1) * (x * (n - 1) - p.d) / (n - 1)


def complement_edge_count_slack(x, p: GraphParams, expanded: bool = False) -> Fraction:
    """Slack polynomial of the same count applied to the complement.

    Factored form (x(n-1) - d)((x-1) n + 1)/(n-1).
    """
    x = Fraction(x)
    n = p.n
    if expanded:
        high = n - 1 - p.d - Fraction(n - 2, 2 * (n - 1)) * p.d_bar
        return (1 - x) * ((1 - x) * n - 1) + 2 * x * high - p.d_bar
    return (x * (n - 1) - p.d) * ((x - 1) * n + 1) / (n - 1)


def _require_scaled_domain(z: float, z0: float):
    if not 0 < z0 < 1:
        raise DomainError(f"z0={z0} outside (0, 1)")
    if z <= math.sqrt(z0):
        raise DomainError(f"z={z} at or below the sqrt singularity sqrt(z0)={math.sqrt(z0):.6g}")


def scaled_d_minus(z: float, z0: float) -> float:
    """Window low end over n as a function of z = d_plus/n, z0 = d/n."""
    _require_scaled_domain(z, z0)
    s = math.sqrt(z * z - z0)
    return z - (z - z0) / (1.0 - z + s)


def scaled_ell_min(z: float, z0: float) -> float:
    """Window length over n: (z - z0)/(1 - z + sqrt(z^2 - z0))."""
    _require_scaled_domain(z, z0)
    s = math.sqrt(z * z - z0)
    return (z - z0) / (1.0 - z + s)


def scaled_d_minus_deriv(z: float, z0: float) -> float:
    """Derivative of `scaled_d_minus` in z; nonnegative on the whole domain.

    The numerator factor 2z^2 - z0 - 2z*sqrt(z^2 - z0) is evaluated as
    z0^2 / (2z^2 - z0 + 2z*sqrt(z^2 - z0)) (rationalized; the product of
    the two forms is z0^2), which keeps it positive in floating point.
    """
    _require_scaled_domain(z, z0)
    s = math.sqrt(z * z - z0)
    core = z0 * z0 / (2 * z * z - z0 + 2 * z * s)
    return (1.0 - z) * core / (s * (1.0 - z + s) ** 2)
