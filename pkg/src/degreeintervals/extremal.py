"""Constructions that attain (or approach) the interval bounds.

`build_split_extremal` produces the split graph whose only degrees are
the two endpoints of the half-order interval: a clique joined to an
independent set by a biregular cross layer, each clique vertex adjacent
to half the independent side and vice versa.  It exists exactly when
both side sizes are even integers.

`build_near_extremal` aims at the optimal point of the window
relaxation: clique of size about x* n, every clique vertex pushed to
degree >= ceil(d_plus), cross edges dealt as evenly as possible over the
independent side.  The achieved low-side value is measured and reported
against the theoretical bound; it can approach but never beat it.
"""

import math
from collections import Counter
from dataclasses import dataclass

from .bounds import extremal_profile, is_above_sqrt_dn
from .errors import DomainError, InfeasibleConstructionError, NotRealizableError
from .graphs import Graph
from .optim import closed_form_solution
from .params import GraphParams


@dataclass
class ConstructionResult:
    """A constructed graph with its measured parameters and target gaps.

    `achieved_params` is recomputed from the graph, never copied from the
    target.  `gap_report` maps quantity names to |achieved - target|.
    """

    graph: Graph
    achieved_params: GraphParams
    achieved_degree_set: set
    target: object
    gap_report: dict


def _greedy_bipartite(left: list, right: list) -> list:
    """Greedy bipartite realization of a degree pair (largest residual first).

    Standard argument: feasible bipartite degree pairs stay feasible when
    the most demanding left vertex is wired to the largest right
    residuals, so the greedy order realizes every realizable pair.
    """
    res = list(right)
    pairs = []
    for i, need in enumerate(left):
        if need > len(res):
            raise NotRealizableError("bipartite degree pair is not realizable")
        order = sorted(range(len(res)), key=lambda j: (-res[j], j))
        if need and res[order[need - 1]] <= 0:
            raise NotRealizableError("bipartite degree pair is not realizable")
        for j in order[:need]:
            res[j] -= 1
            pairs.append((i, j))
    if any(res):
        raise NotRealizableError("bipartite degree pair is not realizable")
    return pairs


def _biregular_pairs(a: int, b: int) -> list:
    """Cross edges giving every left vertex b/2 rights, every right a/2 lefts.

    Modular layout first (left i covers an arc of b/2 rights starting at
    floor(i*b/a)); if the right side does not come out regular, fall back
    to the greedy bipartite realization.
    """
    if a == 0 or b == 0:
        return []
    pairs = [(i, (i * b // a + t) % b) for i in range(a) for t in range(b // 2)]
    counts = Counter(j for _, j in pairs)
    if len(set(pairs)) == len(pairs) and all(counts[j] == a // 2 for j in range(b)):
        return pairs
    return _greedy_bipartite([b // 2] * a, [a // 2] * b)


def build_split_extremal(n: int, m: int) -> ConstructionResult:
    """Split graph whose degrees are exactly the half-order endpoints.

    Requires both profile sizes to be even integers; raises
    NotRealizableError otherwise and DomainError at degenerate density.
    """
    p = GraphParams(n, m)
    if p.m.denominator != 1:
        raise DomainError("construction needs an integer edge count")
    prof = extremal_profile(p)
    if not prof.realizable:
        raise NotRealizableError(
            f"profile sizes {prof.size_plus} and {prof.size_minus} must be even integers")
    a, b = int(prof.size_plus), int(prof.size_minus)
    g = Graph(n)
    for i in range(a):
        for j in range(i + 1, a):
            g.add_edge(i, j)
    for i, j in _biregular_pairs(a, b):
        g.add_edge(i, a + j)
    achieved = GraphParams(n, g.m)
    degrees = g.degrees()
    gap = {
        "deg_plus": abs(max(degrees[:a]) - float(prof.deg_plus)),
        "deg_minus": abs(min(degrees[a:]) - float(prof.deg_minus)) if b else 0.0,
        "average_degree": abs(float(achieved.d) - float(p.d)),
    }
    return ConstructionResult(g, achieved, set(degrees), prof, gap)


def build_near_extremal(n: int, m: int, d_plus) -> ConstructionResult:
    """Clique-plus-independent graph approximating the window optimum.

    The clique size starts at round(x* n), where x* comes from the
    closed-form optimal point, and is reduced until the clique fits in m
    edges and every clique vertex can reach degree ceil(d_plus) through
    cross edges.  Cross edges are then dealt one at a time from the
    least-loaded clique vertex to the least-loaded independent vertex,
    which keeps the independent side balanced.  The total is clamped to
    the cross capacity, so the achieved edge count can fall short of m
    near the domain boundary; the shortfall shows up in the gap report.
    """
    p = GraphParams(n, m)
    if p.m.denominator != 1:
        raise DomainError("construction needs an integer edge count")
    if not is_above_sqrt_dn(p, d_plus):
        raise DomainError(
            f"d_plus={d_plus} must exceed sqrt(d*n) = {math.sqrt(float(p.d * p.n)):.6g}")
    if d_plus > n - 1:
        raise DomainError(f"d_plus={d_plus} exceeds n-1={n - 1}")
    sol = closed_form_solution(p, d_plus)
    ceil_dp = math.ceil(d_plus)
    a_start = min(max(round(sol.x * n), 1), n - 1)
    a = a_start
    while a >= 1:
        clique_edges = a * (a - 1) // 2
        per_vertex = max(ceil_dp - (a - 1), 0)
        if clique_edges + a * per_vertex <= m:
            break
        a -= 1
    else:
        raise InfeasibleConstructionError(
            f"no clique vertex can reach degree {ceil_dp} within m={m} edges")
    b = n - a

    g = Graph(n)
    for i in range(a):
        for j in range(i + 1, a):
            g.add_edge(i, j)
    cross_total = min(max(m - a * (a - 1) // 2, 0), a * b)
    cross = [0] * a
    right_deg = [0] * b
    right_of = [set() for _ in range(a)]
    for _ in range(cross_total):
        u = min((i for i in range(a) if cross[i] < b), key=lambda i: (cross[i], i))
        j = min((j for j in range(b) if j not in right_of[u]),
                key=lambda j: (right_deg[j], j))
        right_of[u].add(j)
        cross[u] += 1
        right_deg[j] += 1
        g.add_edge(u, a + j)

    achieved = GraphParams(n, g.m)
    degrees = g.degrees()
    low_side = [dv for dv in degrees if dv < d_plus]
    measured_low = max(low_side)  # nonempty: average degree < d_plus
    gap = {
        "high_side_min_degree": abs(min(degrees[:a]) - float(d_plus)),
        "low_side_L": abs(measured_low - sol.objective),
        "average_degree": abs(float(achieved.d) - float(p.d)),
        "clique_reduction": float(a_start - a),
    }
    return ConstructionResult(g, achieved, set(degrees), sol, gap)
