"""
pkcolor.bounds
==============

Closed‑form bounds on ``s_k(G)`` and ``a_k(G)``.

* Edge thresholds: more than ``(k−2)n/2`` edges force a P_k; more than
  ``(k−1)(n−1)/2`` edges force a cycle of length ≥ k.
* Lower bound on s_k: every two color classes induce a P_k‑free graph,
  so ``s_k(G) ≥ 2m / (n(k−2)) + 1``.
* Lower bound on a_k: the same counting with the cycle threshold gives
  ``a_k(G) ≥ (2n + 1 − √Δ) / 2`` with ``Δ = 4n(n−1) − 16m/(k−1) + 1``.
* Upper bound on s_k from the Local Lemma:
  ``s_k(G) ≤ ⌈6√10 · d^{(k−1)/(k−2)}⌉`` for ``d ≥ 2, k ≥ 4``.

All integer bounds are exact: rationals are kept as
:class:`fractions.Fraction`, the square root in the a_k bound is
bracketed with :func:`math.isqrt`, and the Local Lemma ceiling is found
with an integer root of ``a^{2(k−2)} · d^{2(k−1)}``.  No floating‑point
value ever decides a ceiling.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from .errors import InternalError, InvalidArgument
from .graph import Graph
from .models import Family, round_sig

logger = logging.getLogger(__name__)

# a² for the default leading constant a = 6√10.
DEFAULT_A_SQUARED = Fraction(360)


# ---------------------------------------------------------------------
# Exact integer helpers
# ---------------------------------------------------------------------
def iroot(value: int, r: int) -> int:
    """floor(value ** (1/r)) for integers value ≥ 0, r ≥ 1."""
    if value < 0 or r < 1:
        raise InvalidArgument(f"iroot needs value >= 0 and r >= 1, got {value}, {r}")
    if value < 2 or r == 1:
        return value
    if r == 2:
        return math.isqrt(value)
    lo, hi = 0, 1 << (value.bit_length() // r + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** r <= value:
            lo = mid
        else:
            hi = mid - 1
    return lo


def ceil_power_bound(a_squared: Fraction, d: int, k: int) -> int:
    """
    ⌈a · d^{(k−1)/(k−2)}⌉ computed exactly from ``a²``.

    With ``e = k − 2`` the quantity raised to ``2e`` is the rational
    ``(a²)^e · d^{2(k−1)}``; its integer ``2e``‑th root brackets the ceiling.
    """
    e = k - 2
    target = a_squared ** e * d ** (2 * (k - 1))
    r = 2 * e
    root = iroot(target.numerator // target.denominator, r)
    return root if Fraction(root) ** r >= target else root + 1


# ---------------------------------------------------------------------
# Edge thresholds
# ---------------------------------------------------------------------
def erdos_gallai_threshold(n: int, k: int, family: "Family | str" = Family.PATH) -> Fraction:
    """
    Edge count above which a graph on *n* vertices must contain P_k
    (``(k−2)n/2``, k ≥ 2) or a cycle of length ≥ k (``(k−1)(n−1)/2``, k ≥ 3).
    """
    family = Family.parse(family)
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    if family is Family.PATH:
        if k < 2:
            raise InvalidArgument(f"path threshold needs k >= 2, got {k}")
        return Fraction((k - 2) * n, 2)
    if k < 3:
        raise InvalidArgument(f"cycle threshold needs k >= 3, got {k}")
    return Fraction((k - 1) * (n - 1), 2)


def path_guaranteed(g: Graph, k: int) -> bool:
    """True when the edge count alone forces a P_k subgraph."""
    return g.m > erdos_gallai_threshold(g.n, k, Family.PATH)


def long_cycle_guaranteed(g: Graph, k: int) -> bool:
    """True when the edge count alone forces a cycle of length ≥ k."""
    return g.m > erdos_gallai_threshold(g.n, k, Family.CYCLE)


# ---------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------
def sk_lower_raw(g: Graph, k: int) -> Fraction:
    """2m / (n(k−2)) + 1 as an exact rational."""
    if k < 4:
        raise InvalidArgument(f"s_k is defined for k >= 4, got {k}")
    return Fraction(2 * g.m, g.n * (k - 2)) + 1


def sk_lower_bound(g: Graph, k: int) -> int:
    """⌈2m / (n(k−2)) + 1⌉; an integral raw value is its own bound."""
    return max(math.ceil(sk_lower_raw(g, k)), 1)


def ak_delta(g: Graph, k: int) -> Fraction:
    """Δ = 4n(n−1) − 16m/(k−1) + 1 (≥ 1 for every simple graph)."""
    if k < 3:
        raise InvalidArgument(f"a_k is defined for k >= 3, got {k}")
    n = g.n
    return 4 * n * (n - 1) - Fraction(16 * g.m, k - 1) + 1


def ak_lower_raw(g: Graph, k: int) -> float:
    delta = ak_delta(g, k)
    return (2 * g.n + 1 - math.sqrt(delta)) / 2


def ak_lower_bound(g: Graph, k: int) -> int:
    """
    ⌈(2n + 1 − √Δ) / 2⌉, exact.

    For an integer x, ``x ≥ (2n+1−√Δ)/2`` iff ``2n+1−2x ≤ √Δ`` iff
    ``2n+1−2x ≤ ⌊√Δ⌋``, and ``⌊√Δ⌋ = isqrt(⌊Δ⌋)``.
    """
    delta = ak_delta(g, k)
    if delta < 0:
        raise InternalError(f"Δ = {delta} < 0 is impossible for a simple graph")
    floor_sqrt = math.isqrt(delta.numerator // delta.denominator)
    return max(-((floor_sqrt - 2 * g.n - 1) // 2), 1)


# ---------------------------------------------------------------------
# Local Lemma upper bound
# ---------------------------------------------------------------------
def sk_upper_bound_lll(d: int, k: int) -> int:
    """⌈6√10 · d^{(k−1)/(k−2)}⌉ for d ≥ 2, k ≥ 4."""
    if d < 2 or k < 4:
        raise InvalidArgument(f"the Local Lemma bound needs d >= 2 and k >= 4, got d={d}, k={k}")
    return ceil_power_bound(DEFAULT_A_SQUARED, d, k)


def sk_upper_bound_for_graph(g: Graph, k: int) -> int:
    """:func:`sk_upper_bound_lll` with d read from the graph."""
    return sk_upper_bound_lll(g.max_degree, k)


def sk_upper_raw(d: int, k: int) -> float:
    return math.sqrt(360) * d ** ((k - 1) / (k - 2))


# ---------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class BoundsReport:
    """All bound values for one graph and one k, with the intermediate quantities."""
    n: int
    m: int
    d: int
    k: int
    sk_lower: int
    ak_lower: int
    delta: Fraction
    sk_upper_lll: Optional[int]
    raw_sk_lower: float
    raw_ak_lower: float
    raw_sk_upper: Optional[float]
    exponent: float

    def to_json(self) -> Dict[str, Any]:
        return {
            "graph_stats": {"n": self.n, "m": self.m, "d": self.d},
            "k": self.k,
            "sk_lower": self.sk_lower,
            "ak_lower": self.ak_lower,
            "delta": str(self.delta),
            "delta_value": round_sig(float(self.delta)),
            "sk_upper_lll": self.sk_upper_lll,
            "raw_sk_lower": round_sig(self.raw_sk_lower),
            "raw_ak_lower": round_sig(self.raw_ak_lower),
            "raw_sk_upper": round_sig(self.raw_sk_upper) if self.raw_sk_upper is not None else None,
            "exponent": round_sig(self.exponent),
        }


def bounds_report(g: Graph, k: int) -> BoundsReport:
    """
    Every bound for (g, k).  The Local Lemma bound is omitted (None)
    when the maximum degree is below 2, where the bound is not defined.
    """
    d = g.max_degree
    upper = sk_upper_bound_lll(d, k) if d >= 2 else None
    if upper is None:
        logger.info(f"max degree {d} < 2; Local Lemma bound not applicable")
    return BoundsReport(
        n=g.n,
        m=g.m,
        d=d,
        k=k,
        sk_lower=sk_lower_bound(g, k),
        ak_lower=ak_lower_bound(g, k),
        delta=ak_delta(g, k),
        sk_upper_lll=upper,
        raw_sk_lower=float(sk_lower_raw(g, k)),
        raw_ak_lower=ak_lower_raw(g, k),
        raw_sk_upper=sk_upper_raw(d, k) if d >= 2 else None,
        exponent=(k - 1) / (k - 2),
    )
