"""Degree-sequence machinery and the exhaustive ground truth.

The interval guarantees constrain vertex degrees only, so exhaustive
verification runs over graphical degree sequences instead of labeled
graphs (16016 graphical sequences of length 10, versus 2^45 labeled
graphs).  Sequences are plain non-increasing tuples of ints; candidate
sequences are generated as bounded partitions of the degree sum and kept
when they pass the Erdos-Gallai inequalities.

Wire formats shared with the command line: a degree sequence is one line
of comma-separated integers; graphs use the edge-list format of
`graphs`.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .bounds import d_minus_bound, extremal_profile, half_order_interval
from .errors import DomainError, EnumerationLimitError, NotGraphicalError
from .graphs import Graph
from .params import GraphParams, Interval

HARD_ORDER_LIMIT = 12

DegreeSequence = tuple


def as_degree_sequence(degrees) -> DegreeSequence:
    """Non-increasing tuple of the given degrees; rejects non-integers."""
    seq = []
    for d in degrees:
        v = int(d)
        if v != d:
            raise DomainError(f"degree {d!r} is not an integer")
        if v < 0:
            raise DomainError(f"degree {v} is negative")
        seq.append(v)
    seq.sort(reverse=True)
    return tuple(seq)


def _eg_ok(s: tuple) -> bool:
    # Erdos-Gallai: even sum and, for every prefix length k,
    # sum of the k largest <= k(k-1) + sum over the rest of min(d, k).
    if sum(s) % 2:
        return False
    n = len(s)
    lhs = 0
    for k in range(1, n + 1):
        lhs += s[k - 1]
        rhs = k * (k - 1)
        for d in s[k:]:
            rhs += d if d < k else k
        if lhs > rhs:
            return False
    return True


def is_graphical(degrees) -> bool:
    """True iff some simple graph has exactly these degrees."""
    s = as_degree_sequence(degrees)
    n = len(s)
    if n == 0:
        return True
    if s[0] > n - 1:
        raise DomainError(f"degree {s[0]} exceeds n-1 = {n - 1}")
    return _eg_ok(s)


def realize(degrees) -> Graph:
    """Deterministic realization of a graphical sequence.

    Repeatedly connects the vertex with the largest residual degree to
    the next-largest residuals (ties toward smaller index).  The sorted
    degree list of the result equals the input sequence.
    """
    s = as_degree_sequence(degrees)
    n = len(s)
    if not is_graphical(s):
        raise NotGraphicalError(f"sequence {s} is not graphical")
    g = Graph(n)
    residual = list(s)
    for _ in range(n):
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        for u in order[1:residual[v] + 1]:
            if residual[u] <= 0:
                raise NotGraphicalError(f"sequence {s} is not graphical")
            g.add_edge(v, u)
            residual[u] -= 1
        residual[v] = 0
    return g


def _bounded_partitions(total: int, parts: int, cap: int) -> Iterator[tuple]:
    # Non-increasing tuples of `parts` entries in [0, cap] summing to
    # `total`, emitted in lexicographically decreasing order.
    if parts == 0:
        if total == 0:
            yield ()
        return
    hi = min(cap, total)
    lo = -(-total // parts)  # ceil; later parts cannot exceed the first
    for v in range(hi, lo - 1, -1):
        for rest in _bounded_partitions(total - v, parts - 1, v):
            yield (v,) + rest


def enumerate_graphical(n: int, m: int) -> Iterator[DegreeSequence]:
    """All graphical sequences of length n and sum 2m, lexicographically
    decreasing, each exactly once."""
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"order must be an integer >= 2, got {n!r}")
    if n > HARD_ORDER_LIMIT:
        raise EnumerationLimitError(
            f"order {n} above enumeration limit {HARD_ORDER_LIMIT}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise DomainError(f"edge count {m} outside [0, {n * (n - 1) // 2}]")
    for seq in _bounded_partitions(2 * m, n, n - 1):
        if _eg_ok(seq):
            yield seq


@lru_cache(maxsize=None)
def graphical_sequences(n: int, m: int) -> tuple:
    """Cached tuple of `enumerate_graphical(n, m)`."""
    return tuple(enumerate_graphical(n, m))


@lru_cache(maxsize=None)
def _sequence_matrix(n: int, m: int) -> np.ndarray:
    seqs = graphical_sequences(n, m)
    if not seqs:
        return np.empty((0, n), dtype=np.int64)
    return np.array(seqs, dtype=np.int64)


def _require_window_args(p: GraphParams, m: int, d_plus):
    if not 0 < m < p.max_edges:
        raise DomainError(f"edge count {m} must lie strictly between 0 and {p.max_edges}")
    if not (d_plus > p.d and d_plus <= p.n - 1):
        raise DomainError(f"d_plus={d_plus} outside (d, n-1] = ({p.d}, {p.n - 1}]")


def empirical_d_minus(n: int, m: int, d_plus) -> int:
    """Exact minimum, over all graphical sequences with sum 2m, of the
    largest degree strictly below d_plus.

    This is the true optimum the closed-form bound approximates: the
    sequence attaining it has every degree <= the returned value or
    >= d_plus.  Comparisons against d_plus reduce to integer thresholds,
    so the scan is exact for any rational d_plus.
    """
    p = GraphParams(n, m)
    _require_window_args(p, m, d_plus)
    below_cap = math.ceil(d_plus) - 1  # degree < d_plus  <=>  degree <= below_cap
    arr = _sequence_matrix(n, m)
    low = np.where(arr <= below_cap, arr, -1).max(axis=1)
    return int(low.min())


@dataclass
class VerificationReport:
    """Outcome of one exhaustive scan over graphical sequences.

    `violations` holds sequences with no entry in the guaranteed closed
    interval (must stay empty).  `extremal_sequences` are those with no
    entry strictly inside; for the half-order scan each is compared with
    the two-endpoint profile and deviations land in `profile_mismatches`.
    Window scans also record the empirical optimum against the theory
    bound (`bound_ok`).
    """

    params: GraphParams
    d_plus: Optional[object]
    sequences_checked: int
    violations: list
    extremal_sequences: list
    profile_mismatches: list = field(default_factory=list)
    empirical_d_minus: Optional[int] = None
    theory_lower: Optional[float] = None
    bound_ok: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return not self.violations and self.bound_ok is not False


def _profile_sequence(p: GraphParams):
    prof = extremal_profile(p)
    if not prof.realizable:
        return None
    return (int(prof.deg_plus),) * int(prof.size_plus) + \
        (int(prof.deg_minus),) * int(prof.size_minus)


def verify_half_order(n: int, m: int) -> VerificationReport:
    """Scan every graphical sequence of length n, sum 2m, for an entry in
    the closed half-order interval; exact rational thresholds.

    Sequences with no entry in the open interval are collected as
    extremal; at non-degenerate density each is compared against the
    two-endpoint profile multiset and mismatches are recorded.
    """
    p = GraphParams(n, m)
    iv = half_order_interval(p)
    lo_in, hi_in = math.ceil(iv.lo), math.floor(iv.hi)
    lo_strict, hi_strict = math.floor(iv.lo) + 1, math.ceil(iv.hi) - 1
    seqs = graphical_sequences(n, m)
    arr = _sequence_matrix(n, m)
    inside_closed = ((arr >= lo_in) & (arr <= hi_in)).any(axis=1)
    inside_open = ((arr >= lo_strict) & (arr <= hi_strict)).any(axis=1)
    violations = [seqs[i] for i in np.flatnonzero(~inside_closed)]
    extremal = [seqs[i] for i in np.flatnonzero(~inside_open)]
    mismatches = []
    if 0 < p.d < n - 1:
        expected = _profile_sequence(p)
        mismatches = [s for s in extremal if s != expected]
    return VerificationReport(p, None, len(seqs), violations, extremal, mismatches)


def verify_window(n: int, m: int, d_plus) -> VerificationReport:
    """Scan every graphical sequence for an entry in [d_minus bound, d_plus]."""
    p = GraphParams(n, m)
    _require_window_args(p, m, d_plus)
    theory = d_minus_bound(p, d_plus)  # also enforces d_plus > sqrt(d n)
    hi_cap = math.floor(d_plus)        # degree <= d_plus  <=>  degree <= hi_cap
    strict_cap = math.ceil(d_plus) - 1
    seqs = graphical_sequences(n, m)
    arr = _sequence_matrix(n, m)
    inside = ((arr >= theory) & (arr <= hi_cap)).any(axis=1)
    interior = ((arr > theory) & (arr <= strict_cap)).any(axis=1)
    violations = [seqs[i] for i in np.flatnonzero(~inside)]
    extremal = [seqs[i] for i in np.flatnonzero(~interior)]
    emp = empirical_d_minus(n, m, d_plus)
    return VerificationReport(
        p, d_plus, len(seqs), violations, extremal,
        empirical_d_minus=emp, theory_lower=theory,
        bound_ok=emp >= theory - 1e-9,
    )


def window_grid(n: int, m: int) -> list:
    """One-decimal d_plus values strictly above sqrt(2m), up to n-1.

    The start index solves k^2 > 100 * 2m in integers, so the strictness
    is exact even when sqrt(2m) is itself a tenth.
    """
    p = GraphParams(n, m)
    if not 0 < m < p.max_edges:
        raise DomainError(f"edge count {m} must lie strictly between 0 and {p.max_edges}")
    k0 = math.isqrt(200 * m) + 1
    return [k / 10 for k in range(k0, 10 * (n - 1) + 1)]


def find_vertex_in_interval(g: Graph, interval: Interval):
    """Lowest-index vertex whose degree lies in the interval, else None."""
    for v in range(g.n):
        if interval.contains(g.degree(v)):
            return v
    return None


class PeelStep(NamedTuple):
    vertex: int
    degree: int
    interval: Interval


def peel_trace(g: Graph) -> list:
    """Repeatedly remove the lowest-index vertex whose degree lies in the
    current half-order interval, until the graph is empty.

    Every step succeeds (the closed interval always contains a degree),
    so the trace has exactly g.n steps.  The final single vertex has
    degree 0 and its interval degenerates to [0, 0].
    """
    adj = [g.neighbors(v) for v in range(g.n)]
    deg = [len(a) for a in adj]
    alive = list(range(g.n))
    steps = []
    while alive:
        k = len(alive)
        if k >= 2:
            twice_m = sum(deg[v] for v in alive)
            iv = half_order_interval(GraphParams(k, twice_m // 2))
        else:
            iv = Interval(Fraction(0), Fraction(0))
        pick = next((v for v in alive if iv.contains(deg[v])), None)
        if pick is None:
            raise RuntimeError("no vertex degree in the guaranteed interval")
        steps.append(PeelStep(pick, deg[pick], iv))
        for u in adj[pick]:
            adj[u].discard(pick)
            deg[u] -= 1
        adj[pick] = set()
        deg[pick] = 0
        alive.remove(pick)
    return steps


def parse_sequence(text: str) -> DegreeSequence:
    """Degree sequence from one line of comma-separated integers."""
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise DomainError("empty degree sequence")
    return as_degree_sequence(int(part) for part in items)


def format_sequence(seq) -> str:
    return ",".join(str(d) for d in seq)
