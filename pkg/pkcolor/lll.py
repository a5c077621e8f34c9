"""
pkcolor.lll
===========

The Local Lemma argument behind ``s_k(G) ≤ ⌈a · d^{(k−1)/(k−2)}⌉`` with
``a = 6√10``, made checkable and runnable.

Bad events for a uniformly random x‑coloring:

* **Type I** – an edge ``uv`` with ``f(u) = f(v)``  (probability 1/x);
* **Type II** – a copy of P_k colored properly with two colors
  (probability 1/x^{k−2}).

With weights ``y₁ = 1/(3d)`` and ``y₂ = 1/(2(k+1)d^{k−1})`` and the
dependency counts below, the Local Lemma conditions read::

    1/x       ≤ y₁ (1−y₁)^{2d} (1−y₂)^{(k+1)d^{k−1}}
    1/x^{k−2} ≤ y₂ (1−y₁)^{kd} (1−y₂)^{(k/2)(k+1)d^{k−1}}

Dependency counts per event (row: event type, column: neighbor type)::

             I            II
    I       2d        (k+1)d^{k−1}
    II      kd     (k/2)(k+1)d^{k−1}

A vertex lies on at most ⌈k/2⌉·d^{k−1} copies of P_k
(:func:`type2_counts_per_vertex`); the conditions use the matrix above.

:func:`check_lll_conditions` evaluates both conditions in log space
(the exponents reach ``10^{28}`` for d = 1000, k = 10) and the simplified
sufficient forms exactly, with rationals.  :func:`sample_coloring` is
the Moser–Tardos resampling counterpart: it actually produces a
coloring with the same color budget.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bounds import DEFAULT_A_SQUARED, ceil_power_bound
from .errors import BudgetExhausted, GuardExceeded, InternalError, InvalidArgument, PrecisionError
from .graph import Graph
from .models import Coloring, Family, Witness, round_sig
from .settings import PRNG_NAME, settings
from .verifier import find_bicolored_path, is_proper, verify

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class LllParameters:
    """Leading constant, color count and event weights for one (d, k)."""
    d: int
    k: int
    a: float
    a_squared: Fraction
    x: int
    y1: Fraction
    y2: Fraction

    def to_json(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "k": self.k,
            "a": round_sig(self.a),
            "x": self.x,
            "y1": str(self.y1),
            "y2": str(self.y2),
        }


def lll_parameters(d: int, k: int, a: Optional[float] = None) -> LllParameters:
    """
    Derive x, y₁, y₂.  ``a=None`` means exactly 6√10 (a² = 360); any
    other *a* is taken at its exact float value.
    """
    if d < 2 or k < 4:
        raise InvalidArgument(f"Local Lemma parameters need d >= 2 and k >= 4, got d={d}, k={k}")
    if a is None:
        a_squared = DEFAULT_A_SQUARED
        a = math.sqrt(360)
    else:
        if not (a > 0 and math.isfinite(a)):
            raise InvalidArgument(f"leading constant a must be a positive real, got {a}")
        a_squared = Fraction(a) ** 2
    return LllParameters(
        d=d,
        k=k,
        a=float(a),
        a_squared=a_squared,
        x=ceil_power_bound(a_squared, d, k),
        y1=Fraction(1, 3 * d),
        y2=Fraction(1, 2 * (k + 1) * d ** (k - 1)),
    )


@dataclass(frozen=True)
class DependencyMatrix:
    """Upper bounds on the number of type‑j neighbors of a type‑i event."""
    i_i: Fraction
    i_ii: Fraction
    ii_i: Fraction
    ii_ii: Fraction

    def to_json(self) -> Dict[str, Any]:
        return {
            "I": {"I": str(self.i_i), "II": str(self.i_ii)},
            "II": {"I": str(self.ii_i), "II": str(self.ii_ii)},
        }


def dependency_bounds(d: int, k: int) -> DependencyMatrix:
    big = (k + 1) * d ** (k - 1)
    return DependencyMatrix(
        i_i=Fraction(2 * d),
        i_ii=Fraction(big),
        ii_i=Fraction(k * d),
        ii_ii=Fraction(k, 2) * big,
    )


def event_probabilities(x: int, k: int) -> Tuple[Fraction, Fraction]:
    """(Pr[Type I], Pr[Type II]) = (1/x, 1/x^{k−2})."""
    return Fraction(1, x), Fraction(1, x ** (k - 2))


# ---------------------------------------------------------------------
# Condition checking
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class ConditionReport:
    """Both Local Lemma conditions and their simplified sufficient forms, side by side."""
    params: LllParameters
    ineq1_lhs: float
    ineq1_rhs: float
    ineq2_lhs: float
    ineq2_rhs: float
    log_ineq1_lhs: float
    log_ineq1_rhs: float
    log_ineq2_lhs: float
    log_ineq2_rhs: float
    ineq1_holds: bool
    ineq2_holds: bool
    sufficient_ineq1_lhs: float
    sufficient_ineq1_rhs: float
    sufficient_ineq2_lhs: float
    sufficient_ineq2_rhs: float
    sufficient_ineq1_holds: bool
    sufficient_ineq2_holds: bool

    @property
    def all_hold(self) -> bool:
        return (self.ineq1_holds and self.ineq2_holds
                and self.sufficient_ineq1_holds and self.sufficient_ineq2_holds)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"params": self.params.to_json(), "all_hold": self.all_hold}
        for name in (
            "ineq1_lhs", "ineq1_rhs", "ineq2_lhs", "ineq2_rhs",
            "log_ineq1_lhs", "log_ineq1_rhs", "log_ineq2_lhs", "log_ineq2_rhs",
            "sufficient_ineq1_lhs", "sufficient_ineq1_rhs",
            "sufficient_ineq2_lhs", "sufficient_ineq2_rhs",
        ):
            out[name] = round_sig(getattr(self, name))
        for name in ("ineq1_holds", "ineq2_holds", "sufficient_ineq1_holds", "sufficient_ineq2_holds"):
            out[name] = getattr(self, name)
        return out


def _log_pow_one_minus(log_eps: float, scaled_count: float) -> float:
    """
    log((1 − ε)^N) given log ε and N·ε.

    Written as (N·ε)·(log1p(−ε)/ε) so neither N nor ε has to be
    representable on its own; the ratio tends to −1 as ε underflows.
    """
    eps = math.exp(log_eps)
    ratio = -1.0 if eps == 0.0 else math.log1p(-eps) / eps
    return scaled_count * ratio


def check_lll_conditions(params: LllParameters) -> ConditionReport:
    """Evaluate both conditions (log space) and both sufficient forms (exact)."""
    d, k, x = params.d, params.k, params.x
    log_x = math.log(x)
    log_y1 = -math.log(3 * d)
    log_y2 = -(math.log(2 * (k + 1)) + (k - 1) * math.log(d))

    # N·y₂ is exactly 1/2 for the first condition and k/4 for the second.
    log1_lhs = -log_x
    log1_rhs = log_y1 + 2 * d * math.log1p(-1 / (3 * d)) + _log_pow_one_minus(log_y2, 0.5)
    log2_lhs = -(k - 2) * log_x
    log2_rhs = log_y2 + k * d * math.log1p(-1 / (3 * d)) + _log_pow_one_minus(log_y2, k / 4)
    logs = (log1_lhs, log1_rhs, log2_lhs, log2_rhs)
    if not all(math.isfinite(v) for v in logs):
        raise PrecisionError(f"log-space evaluation overflowed for d={d}, k={k}, x={x}")

    # Sufficient forms, squared and raised to the (k−2)th power to stay rational.
    a2, e = params.a_squared, k - 2
    product = (1 - Fraction(k, 3 * e)) * (1 - Fraction(k, 4 * e))
    suff1 = a2 ** e * d * d >= Fraction(324) ** e
    suff2 = product > 0 and (a2 * product * product) ** e >= 4 * (k + 1) ** 2

    return ConditionReport(
        params=params,
        ineq1_lhs=math.exp(log1_lhs),
        ineq1_rhs=math.exp(log1_rhs),
        ineq2_lhs=math.exp(log2_lhs),
        ineq2_rhs=math.exp(log2_rhs),
        log_ineq1_lhs=log1_lhs,
        log_ineq1_rhs=log1_rhs,
        log_ineq2_lhs=log2_lhs,
        log_ineq2_rhs=log2_rhs,
        ineq1_holds=log1_lhs <= log1_rhs,
        ineq2_holds=log2_lhs <= log2_rhs,
        sufficient_ineq1_lhs=1 / (params.a * d ** ((k - 1) / e)),
        sufficient_ineq1_rhs=1 / (18 * d),
        sufficient_ineq2_lhs=1 / params.a,
        sufficient_ineq2_rhs=(2 * (k + 1)) ** (-1 / e) * float(product),
        sufficient_ineq1_holds=suff1,
        sufficient_ineq2_holds=bool(suff2),
    )


# ---------------------------------------------------------------------
# Bad events
# ---------------------------------------------------------------------
class EventKind(Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BadEvent:
    """Type I: the 2 endpoints of an edge.  Type II: the k vertices of a P_k, in path order."""
    kind: EventKind
    vertices: Tuple[int, ...]

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


def _simple_paths(g: Graph, k: int) -> List[Tuple[int, ...]]:
    """Every P_k subgraph once, oriented so the first vertex is the smaller end."""
    out: List[Tuple[int, ...]] = []
    adj = g.adjacency
    for s in range(g.n):
        path = [s]
        on_path = {s}
        frames = [iter(adj[s])]
        while frames:
            for w in frames[-1]:
                if w in on_path:
                    continue
                if len(path) + 1 == k:
                    if s < w:
                        out.append(tuple(path) + (w,))
                    continue
                path.append(w)
                on_path.add(w)
                frames.append(iter(adj[w]))
                break
            else:
                frames.pop()
                on_path.discard(path.pop())
    return out


def enumerate_bad_events(g: Graph, k: int) -> List[BadEvent]:
    """All Type I events (one per edge) followed by all Type II events (one per P_k copy)."""
    if k < 4:
        raise InvalidArgument(f"bad events are defined for k >= 4, got {k}")
    estimate = g.n * max(g.max_degree, 1) ** (k - 1)
    if estimate > settings.event_guard:
        raise GuardExceeded(
            f"about {estimate} path events exceeds event guard {settings.event_guard}"
        )
    events = [BadEvent(EventKind.TYPE_I, e) for e in g.sorted_edges()]
    events += [BadEvent(EventKind.TYPE_II, p) for p in _simple_paths(g, k)]
    logger.debug(f"{len(events)} bad events for n={g.n}, k={k}")
    return events


def type2_counts_per_vertex(events: Sequence[BadEvent], n: int) -> List[int]:
    counts = [0] * n
    for ev in events:
        if ev.kind is EventKind.TYPE_II:
            for v in ev.vertices:
                counts[v] += 1
    return counts


def dependency_degrees(events: Sequence[BadEvent]) -> Dict[str, Dict[str, int]]:
    """
    Observed maximum number of type‑j events sharing a vertex with one
    type‑i event (the event itself excluded).
    """
    by_vertex: Dict[int, List[int]] = {}
    for idx, ev in enumerate(events):
        for v in ev.vertices:
            by_vertex.setdefault(v, []).append(idx)
    worst = {a.value: {b.value: 0 for b in EventKind} for a in EventKind}
    for idx, ev in enumerate(events):
        neighbors = {j for v in ev.vertex_set for j in by_vertex[v]} - {idx}
        row = worst[ev.kind.value]
        for kind in EventKind:
            count = sum(1 for j in neighbors if events[j].kind is kind)
            row[kind.value] = max(row[kind.value], count)
    return worst


# ---------------------------------------------------------------------
# Moser–Tardos sampler
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class SampleResult:
    coloring: Coloring
    seed: int
    resamples: int
    colors_requested: int
    colors_budget: int
    prng: str = PRNG_NAME

    def to_json(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "resamples": self.resamples,
            "prng": self.prng,
            "colors_requested": self.colors_requested,
            "colors_budget": self.colors_budget,
            "coloring": self.coloring.to_json(),
        }


def _first_violated(g: Graph, colors: Sequence[int], k: int) -> Optional[Witness]:
    """Least violated event: monochromatic edges first, then the verifier's first bicolored P_k."""
    c = Coloring(tuple(colors))
    bad = is_proper(g, c)
    if bad is not None:
        return bad
    return find_bicolored_path(g, c, k)


def sample_coloring(
    g: Graph,
    k: int,
    x: int,
    seed: int = 0,
    max_resamples: Optional[int] = None,
) -> SampleResult:
    """
    Resample bad events until none holds.

    Colors are drawn uniformly from ``min(x, n)`` values by a PCG64
    generator seeded with *seed*.  Each round resamples every vertex of
    the least violated event.  Raises :class:`BudgetExhausted` after
    *max_resamples* rounds; never returns an invalid coloring.
    """
    if k < 4:
        raise InvalidArgument(f"sampler targets P_k-colorings with k >= 4, got {k}")
    if x < 2:
        raise InvalidArgument(f"sampler needs x >= 2 colors, got {x}")
    limit = settings.max_resamples if max_resamples is None else max_resamples
    budget = min(x, g.n)
    rng = np.random.Generator(np.random.PCG64(seed))
    colors = [int(c) for c in rng.integers(0, budget, size=g.n)]
    resamples = 0
    while True:
        event = _first_violated(g, colors, k)
        if event is None:
            break
        if resamples >= limit:
            logger.warning(f"sampler seed={seed} hit {limit} resamples without success")
            raise BudgetExhausted(f"no valid coloring within {limit} resamples", spent=resamples)
        for v, c in zip(event.vertices, rng.integers(0, budget, size=len(event.vertices))):
            colors[v] = int(c)
        resamples += 1

    coloring = Coloring(tuple(colors), k, Family.PATH)
    if not verify(g, coloring, k, Family.PATH).valid:
        raise InternalError("sampler produced a coloring that fails verification")
    logger.info(f"sampler seed={seed} succeeded after {resamples} resamples with {budget} colors")
    return SampleResult(coloring, seed, resamples, x, budget)
