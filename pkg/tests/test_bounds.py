import math
from fractions import Fraction

import pytest

from degreeintervals import (
    DomainError,
    GraphParams,
    complement_edge_count_slack,
    d_minus_bound,
    edge_count_slack,
    ell_min,
    extremal_profile,
    half_order_interval,
    opt_value,
    scaled_d_minus,
    scaled_d_minus_deriv,
    scaled_ell_min,
    symmetric_d_plus,
)


def all_params(n_max):
    for n in range(2, n_max + 1):
        for m in range(0, n * (n - 1) // 2 + 1):
            yield GraphParams(n, m)


class TestHalfOrderInterval:
    def test_known_intervals(self):
        iv = half_order_interval(GraphParams(4, 3))
        assert (iv.lo, iv.hi) == (Fraction(1), Fraction(2))
        iv = half_order_interval(GraphParams(6, 0))
        assert (iv.lo, iv.hi) == (0, 2)
        iv = half_order_interval(GraphParams(6, 15))
        assert (iv.lo, iv.hi) == (3, 5)

    def test_length_and_containment_exact(self):
        for p in all_params(10):
            iv = half_order_interval(p)
            assert iv.length == Fraction(p.n - 2, 2)
            assert iv.contains(p.d)

    def test_endpoints_are_exact_fractions(self):
        iv = half_order_interval(GraphParams(7, 9))
        assert isinstance(iv.lo, Fraction) and isinstance(iv.hi, Fraction)
        # lo = d * n / (2(n-1)) in lowest terms
        assert iv.lo == Fraction(18, 7) * 7 / 12


class TestExtremalProfile:
    def test_square_case(self):
        prof = extremal_profile(GraphParams(4, 3))
        assert (prof.size_plus, prof.size_minus) == (2, 2)
        assert (prof.deg_plus, prof.deg_minus) == (2, 1)
        assert prof.realizable

    def test_non_integer_sizes(self):
        prof = extremal_profile(GraphParams(5, 5))
        assert prof.size_plus == Fraction(5, 2)
        assert not prof.realizable

    def test_size_and_degree_identities(self):
        for p in all_params(9):
            if p.d == 0 or p.d == p.n - 1:
                continue
            prof = extremal_profile(p)
            assert prof.size_plus + prof.size_minus == p.n
            assert prof.deg_plus - prof.deg_minus == Fraction(p.n - 2, 2)

    def test_degenerate_density_rejected(self):
        with pytest.raises(DomainError):
            extremal_profile(GraphParams(6, 0))
        with pytest.raises(DomainError):
            extremal_profile(GraphParams(6, 15))


class TestWindowLowerBound:
    def test_reference_value(self):
        # 3 - 6/(1 + sqrt(3)) simplifies to 6 - 3 sqrt(3)
        got = d_minus_bound(GraphParams(4, 3), 3)
        assert got == pytest.approx(6 - 3 * math.sqrt(3), abs=1e-12)

    def test_half_order_crossover_point(self):
        # at d_plus = (n+d)/2 the window has length n/2, so the low end is d_plus - n/2
        assert d_minus_bound(GraphParams(4, 3), 2.75) == pytest.approx(0.75, abs=1e-12)
        assert ell_min(GraphParams(4, 3), 2.75) == pytest.approx(2.0, abs=1e-12)

    def test_domain_errors(self):
        p = GraphParams(4, 3)
        with pytest.raises(DomainError):
            d_minus_bound(p, 2)  # below sqrt(6)
        with pytest.raises(DomainError):
            d_minus_bound(p, math.sqrt(6))  # boundary is excluded
        with pytest.raises(DomainError):
            d_minus_bound(p, 3.5)  # above n-1
        with pytest.raises(DomainError):
            d_minus_bound(GraphParams(4, 0), 3)
        with pytest.raises(DomainError):
            d_minus_bound(GraphParams(4, 6), 3)

    def test_limit_at_threshold_is_zero(self):
        # convergence is like sqrt(eps): the discriminant vanishes linearly
        p = GraphParams(4, 3)
        root = math.sqrt(6)
        values = [d_minus_bound(p, root + eps) for eps in (1e-2, 1e-4, 1e-6, 1e-8)]
        assert all(v > 0 for v in values)
        assert values == sorted(values, reverse=True)
        assert values[-1] < 1e-3

    def test_range_and_monotonicity(self):
        for n, m in [(6, 7), (9, 14), (12, 30), (20, 60)]:
            p = GraphParams(n, m)
            root = math.sqrt(float(p.d) * n)
            grid = [root + (i + 1) * (n - 1 - root) / 120 for i in range(120)]
            vals = [d_minus_bound(p, dp) for dp in grid]
            for dp, v in zip(grid, vals):
                assert 0 <= v < float(p.d) < dp
            for a, b in zip(vals, vals[1:]):
                assert b >= a - 1e-12

    def test_ell_min_composition(self):
        p = GraphParams(4, 3)
        assert ell_min(p, 3) == pytest.approx(3 - d_minus_bound(p, 3), abs=1e-12)


class TestOptValue:
    def test_piecewise_branches(self):
        p = GraphParams(100, 1250)  # d = 25, sqrt(d n) = 50
        assert opt_value(p, 40) == 0.0
        expected = 60 - 3500 / (40 + math.sqrt(1100))
        assert opt_value(p, 60) == pytest.approx(expected, rel=1e-13)

    def test_boundary_value_zero(self):
        assert opt_value(GraphParams(4, 3), math.sqrt(6)) == 0.0

    def test_matches_bound_above_threshold(self):
        p = GraphParams(9, 14)
        root = math.sqrt(float(p.d) * 9)
        for dp in [root + 0.3, root + 1.0, 8.0]:
            assert opt_value(p, dp) == d_minus_bound(p, dp)

    def test_domain(self):
        p = GraphParams(100, 1250)
        with pytest.raises(DomainError):
            opt_value(p, 25)  # not above d
        with pytest.raises(DomainError):
            opt_value(p, 99.5)


class TestSymmetricUpper:
    def test_complement_map_identity(self):
        for n, m, d_minus in [(4, 3, 0), (8, 10, 0.5), (10, 23, 2.0)]:
            p = GraphParams(n, m)
            comp = GraphParams(n, n * (n - 1) // 2 - m)
            expected = (n - 1) - d_minus_bound(comp, (n - 1) - d_minus)
            assert symmetric_d_plus(p, d_minus) == expected

    def test_reference_value(self):
        got = symmetric_d_plus(GraphParams(4, 3), 0)
        assert got == pytest.approx(3 - (6 - 3 * math.sqrt(3)), abs=1e-12)

    def test_complement_precondition(self):
        # n-1-d_minus must clear sqrt(dbar n); a dense graph with a high
        # d_minus request fails it
        with pytest.raises(DomainError):
            symmetric_d_plus(GraphParams(6, 7), 2.3)
        with pytest.raises(DomainError):
            symmetric_d_plus(GraphParams(4, 3), 1.6)  # d_minus >= d


class TestSlackPolynomials:
    @pytest.mark.parametrize("n,m", [(4, 3), (5, 7), (9, 14), (11, 30)])
    def test_known_zeros_exact(self, n, m):
        p = GraphParams(n, m)
        assert edge_count_slack(Fraction(1, n), p) == 0
        assert edge_count_slack(p.d / (n - 1), p) == 0
        assert complement_edge_count_slack(p.d / (n - 1), p) == 0
        assert complement_edge_count_slack(1 - Fraction(1, n), p) == 0

    @pytest.mark.parametrize("n,m", [(4, 3), (6, 8), (10, 17)])
    def test_expanded_equals_factored_exactly(self, n, m):
        p = GraphParams(n, m)
        xs = [Fraction(k, 37) for k in range(0, 38, 5)] + [0.3125, 0.875]
        for x in xs:
            assert edge_count_slack(x, p, expanded=True) == edge_count_slack(x, p)
            assert complement_edge_count_slack(x, p, expanded=True) == \
                complement_edge_count_slack(x, p)

    def test_strict_convexity_second_differences(self):
        p = GraphParams(7, 10)
        h = Fraction(1, 64)
        for base in [Fraction(1, 7), Fraction(1, 3), Fraction(5, 6)]:
            for f in (edge_count_slack, complement_edge_count_slack):
                second = f(base + h, p) - 2 * f(base, p) + f(base - h, p)
                assert second > 0


class TestScaledBoundFunction:
    def test_value_at_one(self):
        for z0 in (0.1, 0.5, 0.9):
            assert scaled_d_minus(1.0, z0) == pytest.approx(1 - math.sqrt(1 - z0), abs=1e-15)
            assert scaled_d_minus_deriv(1.0, z0) == 0.0
            assert scaled_ell_min(1.0, z0) == pytest.approx(math.sqrt(1 - z0), abs=1e-15)

    def test_figure_endpoint(self):
        assert scaled_ell_min(1.0, 0.25) == pytest.approx(math.sqrt(0.75), abs=1e-12)

    def test_derivative_matches_finite_differences(self):
        h = 1e-6
        got = scaled_d_minus_deriv(0.8, 0.5)
        fd = (scaled_d_minus(0.8 + h, 0.5) - scaled_d_minus(0.8 - h, 0.5)) / (2 * h)
        assert abs(got - fd) / max(1.0, abs(got)) <= 1e-6

    def test_derivative_nonnegative(self):
        for z0 in [k / 10 for k in range(1, 10)]:
            lo = math.sqrt(z0) + 1e-3
            for i in range(50):
                z = min(lo + i * (1 - lo) / 49, 1.0)  # float drift past 1 is off-domain
                assert scaled_d_minus_deriv(z, z0) >= 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            scaled_d_minus(0.5, 0.5)  # below sqrt(z0)
        with pytest.raises(DomainError):
            scaled_d_minus(0.9, 1.5)


class TestEllMinIdentities:
    def test_midpoint_gives_half_order(self):
        for n, m in [(4, 3), (7, 9), (12, 30), (25, 100)]:
            p = GraphParams(n, m)
            dp = Fraction(n + p.d, 2)
            assert abs(ell_min(p, dp) - n / 2) <= 1e-12 * n

    def test_minimum_over_grid_at_most_half_order(self):
        for n, m in [(10, 20), (20, 50), (40, 300)]:
            p = GraphParams(n, m)
            root = math.sqrt(float(p.d) * n)
            grid = [root + (i + 1) * (n - 1 - root) / 200 for i in range(200)]
            grid.append(float(Fraction(n + p.d, 2)))
            best = min(ell_min(p, dp) for dp in grid if dp <= n - 1)
            assert best <= n / 2 + 1e-9
