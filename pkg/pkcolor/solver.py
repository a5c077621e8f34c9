"""
pkcolor.solver
==============

Exact computation of ``s_k(G)`` and ``a_k(G)``.

:func:`exists_coloring` is a backtracking decision procedure:

* vertices are colored in a fixed order (descending degree, ties by
  index);
* after each assignment only forbidden structures through the newest
  vertex are searched (:func:`pkcolor.verifier.path_through` /
  :func:`~pkcolor.verifier.cycle_through`), because the partial coloring
  before it was already clean;
* color symmetry is broken by allowing a vertex at most color
  ``max_used + 1``.

:func:`chromatic_exact` climbs from the closed‑form lower bound,
proving infeasibility at each x before accepting the first feasible
one.  :func:`brute_force_oracle` enumerates every assignment and checks
it with :func:`pkcolor.verifier.verify`; it shares no search code with
the backtracking and exists to cross‑check it.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

from .bounds import ak_lower_bound, sk_lower_bound
from .errors import BudgetExhausted, GuardExceeded, InvalidArgument
from .graph import Graph
from .models import Coloring, Family, round_sig
from .settings import settings
from .verifier import StepCounter, cycle_through, path_through, verify

logger = logging.getLogger(__name__)


@dataclass
class SearchStats:
    """Counters accumulated over one or more searches."""
    nodes_expanded: int = 0
    prunes_forbidden_subgraph: int = 0
    prunes_symmetry: int = 0
    wall_time: float = 0.0
    budget_exhausted: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "nodes_expanded": self.nodes_expanded,
            "prunes_forbidden_subgraph": self.prunes_forbidden_subgraph,
            "prunes_symmetry": self.prunes_symmetry,
            "wall_time": round_sig(self.wall_time, 6),
            "budget_exhausted": self.budget_exhausted,
        }


@dataclass(frozen=True)
class ExactResult:
    """
    Outcome of :func:`chromatic_exact`.

    When ``proven`` is True, ``chromatic_value`` is the exact parameter,
    ``certificate`` is a valid coloring using exactly that many colors,
    and every smaller color count was refuted exhaustively.  When the
    budget ran out, ``chromatic_value`` is None, ``lower_bound`` is the
    least color count not yet refuted and ``certificate`` is the best
    coloring known (the rainbow coloring).
    """
    k: int
    family: Family
    chromatic_value: Optional[int]
    lower_bound: int
    certificate: Optional[Coloring]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def proven(self) -> bool:
        return self.chromatic_value is not None

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "family": self.family.value,
            "proven": self.proven,
            "chromatic_value": self.chromatic_value,
            "lower_bound": self.lower_bound,
            "best_found": self.certificate.distinct_colors if self.certificate else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "stats": self.stats.to_json(),
        }


def search_order(g: Graph) -> List[int]:
    """Static vertex order: descending degree, ties by vertex index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _check_params(k: int, x: int, family: Family) -> None:
    if x < 1:
        raise InvalidArgument(f"color count x must be >= 1, got {x}")
    if k < family.min_k:
        raise InvalidArgument(f"{family.value} family needs k >= {family.min_k}, got {k}")


class _Backtracker:
    """One exists‑coloring search; holds the partial assignment."""

    def __init__(self, g: Graph, k: int, x: int, family: Family,
                 nodes: StepCounter, stats: SearchStats) -> None:
        self.adj = g.adjacency
        self.k = k
        self.x = x
        self.through = path_through if family is Family.PATH else cycle_through
        self.order = search_order(g)
        self.colors = [-1] * g.n
        self.nodes = nodes
        self.stats = stats

    def run(self) -> Optional[List[int]]:
        """Depth‑first over ``self.order`` with one candidate queue per level."""
        n = len(self.order)
        if n == 0:
            return []
        colors = self.colors
        queues = [self._candidates(0, -1)]
        max_used = [-1]
        while queues:
            i = len(queues) - 1
            v = self.order[i]
            col = self._next_clean(v, queues[-1])
            if col is None:
                colors[v] = -1
                queues.pop()
                max_used.pop()
                continue
            if i + 1 == n:
                return list(colors)
            reached = max(max_used[-1], col)
            max_used.append(reached)
            queues.append(self._candidates(i + 1, reached))
        return None

    def _candidates(self, i: int, max_used: int) -> Iterator[int]:
        v = self.order[i]
        colors = self.colors
        blocked = {colors[w] for w in self.adj[v] if colors[w] >= 0}
        limit = min(max_used + 2, self.x)
        self.stats.prunes_symmetry += self.x - limit
        return iter([col for col in range(limit) if col not in blocked])

    def _next_clean(self, v: int, queue: Iterator[int]) -> Optional[int]:
        """Next color in *queue* that closes no forbidden structure through *v*."""
        for col in queue:
            self.nodes.tick()
            self.stats.nodes_expanded += 1
            self.colors[v] = col
            if self.through(self.adj, self.colors, v, self.k, StepCounter()) is not None:
                self.stats.prunes_forbidden_subgraph += 1
                continue
            return col
        return None


def exists_coloring(
    g: Graph,
    k: int,
    x: int,
    family: "Family | str" = Family.PATH,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
    _nodes: Optional[StepCounter] = None,
) -> Optional[Coloring]:
    """
    A valid coloring with at most *x* colors, or None when none exists.

    None is only returned after the search space is exhausted; running
    out of *budget* nodes raises :class:`BudgetExhausted` instead.
    """
    family = Family.parse(family)
    _check_params(k, x, family)
    stats = stats if stats is not None else SearchStats()
    nodes = _nodes if _nodes is not None else StepCounter(budget or settings.search_budget)
    started = time.perf_counter()
    try:
        found = _Backtracker(g, k, x, family, nodes, stats).run()
    except BudgetExhausted:
        stats.budget_exhausted = True
        raise
    finally:
        stats.wall_time += time.perf_counter() - started
    return Coloring(tuple(found), k, family) if found is not None else None


def lower_bound_for(g: Graph, k: int, family: Family) -> int:
    return sk_lower_bound(g, k) if family is Family.PATH else ak_lower_bound(g, k)


def chromatic_exact(
    g: Graph,
    k: int,
    family: "Family | str" = Family.PATH,
    budget: Optional[int] = None,
) -> ExactResult:
    """
    s_k(g) (``family='path'``) or a_k(g) (``family='cycle'``).

    The node *budget* is shared by every color count tried.  On
    exhaustion the result is inconclusive: ``chromatic_value`` is None.
    """
    family = Family.parse(family)
    if k < family.min_k:
        raise InvalidArgument(f"{family.value} family needs k >= {family.min_k}, got {k}")
    stats = SearchStats()
    nodes = StepCounter(budget or settings.search_budget)
    x = lower_bound_for(g, k, family)
    logger.info(f"{family.value} k={k}: n={g.n}, m={g.m}, starting from lower bound {x}")
    while True:
        try:
            found = exists_coloring(g, k, x, family, stats=stats, _nodes=nodes)
        except BudgetExhausted:
            logger.warning(
                f"budget of {nodes.budget} nodes exhausted at x={x}; result is inconclusive"
            )
            rainbow = Coloring(tuple(range(g.n)), k, family)
            return ExactResult(k, family, None, x, rainbow, stats)
        if found is not None:
            logger.info(f"x={x} feasible after {stats.nodes_expanded} nodes")
            return ExactResult(k, family, x, x, found, stats)
        logger.info(f"x={x} refuted after {stats.nodes_expanded} nodes")
        x += 1


def star_chromatic_number(g: Graph, budget: Optional[int] = None) -> ExactResult:
    """χ_s(G) = s_4(G)."""
    return chromatic_exact(g, 4, Family.PATH, budget)


def acyclic_chromatic_number(g: Graph, budget: Optional[int] = None) -> ExactResult:
    """a(G) = a_3(G)."""
    return chromatic_exact(g, 3, Family.CYCLE, budget)


def brute_force_oracle(
    g: Graph, k: int, x: int, family: "Family | str" = Family.PATH
) -> Optional[Coloring]:
    """
    First assignment in lexicographic order with colors < x that passes
    :func:`pkcolor.verifier.verify`, or None.  Refuses when
    ``x**n`` exceeds ``settings.brute_force_limit``.
    """
    family = Family.parse(family)
    _check_params(k, x, family)
    if x ** g.n > settings.brute_force_limit:
        raise GuardExceeded(
            f"brute force over {x}^{g.n} assignments exceeds limit {settings.brute_force_limit}"
        )
    edges = g.sorted_edges()
    for assignment in itertools.product(range(x), repeat=g.n):
        if any(assignment[u] == assignment[v] for u, v in edges):
            continue
        candidate = Coloring(assignment, k, family)
        if verify(g, candidate, k, family).valid:
            return candidate
    return None
