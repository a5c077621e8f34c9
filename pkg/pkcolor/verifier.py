"""
pkcolor.verifier
================

Decide whether an assignment is a valid P_k‑coloring or C_k‑coloring and
produce a :class:`~pkcolor.models.Witness` when it is not.

Path detection is a depth‑capped DFS that only extends a simple path
through the (at most two) colors already on it.  Long‑cycle detection
runs the same DFS inside each 2‑colored component, anchored at the
component's least vertex.  Both searches are exact and deterministic:
the witness starts at the least possible vertex and neighbors are
tried in sorted order.

The ``*_through`` helpers are the incremental checks used by the exact
solver: on a partial coloring they look only for forbidden structures
that contain the most recently colored vertex.  Uncolored vertices
carry color ``-1`` and are never entered.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import BudgetExhausted, GuardExceeded, InvalidArgument
from .graph import Graph
from .models import Coloring, Family, VerificationReport, Witness, WitnessKind
from .settings import settings

logger = logging.getLogger(__name__)

Adjacency = Sequence[Sequence[int]]


class StepCounter:
    """Counts DFS steps and raises :class:`BudgetExhausted` past *budget*."""

    __slots__ = ("budget", "spent")

    def __init__(self, budget: Optional[int] = None) -> None:
        self.budget = settings.verify_budget if budget is None else budget
        self.spent = 0

    def tick(self) -> None:
        self.spent += 1
        if self.spent > self.budget:
            raise BudgetExhausted(f"search exceeded {self.budget} steps", spent=self.spent)


# ---------------------------------------------------------------------
# Low-level searches on adjacency + color arrays
# ---------------------------------------------------------------------
def _dfs_path(
    adj: Adjacency,
    colors: Sequence[int],
    start: int,
    length: int,
    counter: StepCounter,
    allowed: Optional[Set[int]] = None,
    avoid: Optional[Set[int]] = None,
) -> Optional[List[int]]:
    """
    First simple alternating path of exactly *length* vertices from
    *start*, in neighbor order.  Vertices must be colored, lie in
    *allowed* (if given) and outside *avoid* (if given).
    """
    counter.tick()
    path = [start]
    if length <= 1:
        return path
    on_path = {start}
    frames = [iter(adj[start])]
    while frames:
        want = colors[path[-2]] if len(path) >= 2 else None
        for w in frames[-1]:
            cw = colors[w]
            if cw < 0 or w in on_path:
                continue
            if want is not None and cw != want:
                continue
            if allowed is not None and w not in allowed:
                continue
            if avoid is not None and w in avoid:
                continue
            counter.tick()
            path.append(w)
            on_path.add(w)
            if len(path) == length:
                return path
            frames.append(iter(adj[w]))
            break
        else:
            frames.pop()
            on_path.discard(path.pop())
    return None


def _dfs_cycle(
    adj: Adjacency,
    start: int,
    k: int,
    allowed: Set[int],
    counter: StepCounter,
) -> Optional[List[int]]:
    """First simple cycle through *start* with ≥ max(k, 3) vertices inside *allowed*."""
    target = max(k, 3)
    counter.tick()
    path = [start]
    on_path = {start}
    frames = [iter(adj[start])]
    while frames:
        for w in frames[-1]:
            if w in on_path or w not in allowed:
                continue
            counter.tick()
            path.append(w)
            on_path.add(w)
            if len(path) >= target and start in adj[w]:
                return path
            frames.append(iter(adj[w]))
            break
        else:
            frames.pop()
            on_path.discard(path.pop())
    return None


def bicolored_component(
    adj: Adjacency, colors: Sequence[int], v: int, other: int, min_vertex: int = 0
) -> Set[int]:
    """Vertices reachable from *v* using only colors ``{colors[v], other}`` and labels ≥ *min_vertex*."""
    pair = (colors[v], other)
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen and w >= min_vertex and colors[w] in pair:
                seen.add(w)
                stack.append(w)
    return seen


def _partner_colors(adj: Adjacency, colors: Sequence[int], v: int) -> List[int]:
    return sorted({colors[w] for w in adj[v] if colors[w] >= 0 and colors[w] != colors[v]})


def _join_arm(
    adj: Adjacency, colors: Sequence[int], arm: List[int], on_arm: Set[int],
    k: int, half: int, comp: Set[int], counter: StepCounter,
) -> Optional[List[int]]:
    """Close *arm* (which starts at ``arm[0]``) into a P_k with a disjoint second arm."""
    counter.tick()
    a = len(arm)
    if a < half:
        return None
    v = arm[0]
    rest = _dfs_path(adj, colors, v, k + 1 - a, counter, allowed=comp, avoid=on_arm - {v})
    return list(reversed(rest)) + arm[1:] if rest is not None else None


def path_through(
    adj: Adjacency, colors: Sequence[int], v: int, k: int, counter: StepCounter
) -> Optional[List[int]]:
    """
    A bicolored path on *k* vertices that contains *v*, or None.

    Any such path splits at *v* into two arms of ``a`` and ``k + 1 - a``
    vertices; the longer arm is enumerated first and the shorter one is
    searched disjoint from it.
    """
    half = (k + 2) // 2
    for other in _partner_colors(adj, colors, v):
        comp = bicolored_component(adj, colors, v, other)
        if len(comp) < k:
            continue
        arm = [v]
        on_arm = {v}
        found = _join_arm(adj, colors, arm, on_arm, k, half, comp, counter)
        if found is not None:
            return found
        frames = [iter(adj[v])] if k > 1 else []
        while frames:
            want = colors[arm[-2]] if len(arm) >= 2 else None
            for w in frames[-1]:
                if w in on_arm or w not in comp:
                    continue
                if want is not None and colors[w] != want:
                    continue
                arm.append(w)
                on_arm.add(w)
                found = _join_arm(adj, colors, arm, on_arm, k, half, comp, counter)
                if found is not None:
                    return found
                if len(arm) < k:
                    frames.append(iter(adj[w]))
                    break
                on_arm.discard(arm.pop())
            else:
                frames.pop()
                on_arm.discard(arm.pop())
    return None


def cycle_through(
    adj: Adjacency, colors: Sequence[int], v: int, k: int, counter: StepCounter
) -> Optional[List[int]]:
    """A bicolored cycle with ≥ k vertices that contains *v*, or None."""
    for other in _partner_colors(adj, colors, v):
        comp = bicolored_component(adj, colors, v, other)
        if len(comp) < max(k, 3):
            continue
        found = _dfs_cycle(adj, v, k, comp, counter)
        if found is not None:
            return found
    return None


# ---------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------
def _check_length(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise InvalidArgument(f"coloring has {len(c)} entries but the graph has {g.n} vertices")


def is_proper(g: Graph, c: Coloring) -> Optional[Witness]:
    """None if every edge is bichromatic, else the least monochromatic edge."""
    _check_length(g, c)
    for u, v in g.sorted_edges():
        if c[u] == c[v]:
            return Witness(WitnessKind.IMPROPER_EDGE, (u, v), (c[u],))
    return None


def _require_proper(g: Graph, c: Coloring) -> None:
    bad = is_proper(g, c)
    if bad is not None:
        raise InvalidArgument(
            f"coloring is improper on edge {bad.vertices}; bicolored search needs a proper coloring",
            witness=bad,
        )


def estimated_path_nodes(g: Graph, k: int) -> int:
    """Upper estimate of DFS nodes for path search: n · d · (d−1)^(k−2)."""
    d = g.max_degree
    return g.n * max(d, 1) * max(d - 1, 1) ** max(k - 2, 0)


def find_bicolored_path(
    g: Graph, c: Coloring, k: int, budget: Optional[int] = None
) -> Optional[Witness]:
    """
    A bicolored path on exactly *k* vertices, or None.

    The coloring must be proper; otherwise :class:`InvalidArgument` is
    raised carrying the improper‑edge witness.
    """
    if k < 2:
        raise InvalidArgument(f"path length k must be >= 2, got {k}")
    _require_proper(g, c)
    counter = StepCounter(budget)
    estimate = estimated_path_nodes(g, k)
    if estimate > counter.budget:
        raise GuardExceeded(
            f"path search estimated at {estimate} nodes exceeds budget {counter.budget}"
        )
    for s in range(g.n):
        found = _dfs_path(g.adjacency, c.colors, s, k, counter)
        if found is not None:
            logger.debug(f"bicolored P_{k} found from vertex {s} after {counter.spent} steps")
            return Witness(
                WitnessKind.BICOLORED_PATH, tuple(found), tuple(sorted({c[v] for v in found}))
            )
    return None


def find_bicolored_long_cycle(
    g: Graph, c: Coloring, k: int, budget: Optional[int] = None
) -> Optional[Witness]:
    """
    A bicolored cycle with at least *k* vertices, or None.

    For each start vertex *s* (ascending) and each partner color, the
    DFS stays inside the 2‑colored component of *s* restricted to
    vertices ≥ *s*, so every cycle is found from its least vertex.
    """
    if k < 3:
        raise InvalidArgument(f"cycle length k must be >= 3, got {k}")
    _require_proper(g, c)
    counter = StepCounter(budget)
    adj, colors = g.adjacency, c.colors
    for s in range(g.n):
        for other in _partner_colors(adj, colors, s):
            comp = bicolored_component(adj, colors, s, other, min_vertex=s)
            if len(comp) < k:
                continue
            found = _dfs_cycle(adj, s, k, comp, counter)
            if found is not None:
                return Witness(
                    WitnessKind.BICOLORED_CYCLE, tuple(found), tuple(sorted({colors[s], other}))
                )
    return None


def verify(
    g: Graph,
    c: Coloring,
    k: int,
    family: "Family | str" = Family.PATH,
    budget: Optional[int] = None,
) -> VerificationReport:
    """
    Check *c* as a P_k‑coloring (``family='path'``, k ≥ 4) or a
    C_k‑coloring (``family='cycle'``, k ≥ 3).
    """
    family = Family.parse(family)
    if k < family.min_k:
        raise InvalidArgument(f"{family.value} family needs k >= {family.min_k}, got {k}")
    witness = is_proper(g, c)
    if witness is None:
        if family is Family.PATH:
            witness = find_bicolored_path(g, c, k, budget)
        else:
            witness = find_bicolored_long_cycle(g, c, k, budget)
    return VerificationReport(k=k, family=family, witness=witness)


def witness_is_sound(g: Graph, c: Coloring, w: Witness, k: int) -> bool:
    """Re‑check a witness from scratch against the graph and the coloring."""
    vs = w.vertices
    if any(not 0 <= v < g.n for v in vs) or len(set(vs)) != len(vs):
        return False
    if w.kind is WitnessKind.IMPROPER_EDGE:
        return len(vs) == 2 and g.has_edge(*vs) and c[vs[0]] == c[vs[1]]
    if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return False
    if any(c[a] == c[b] for a, b in zip(vs, vs[1:])):
        return False
    if len({c[v] for v in vs}) != 2 or any(c[a] != c[b] for a, b in zip(vs, vs[2:])):
        return False
    if w.kind is WitnessKind.BICOLORED_PATH:
        return len(vs) == k
    return len(vs) >= max(k, 3) and g.has_edge(vs[-1], vs[0])


def color_pair_components(g: Graph, c: Coloring) -> Dict[Tuple[int, int], List[int]]:
    """
    Sizes (descending) of the connected components of every 2‑color
    induced subgraph.  A proper coloring whose components all have
    fewer than k vertices is trivially P_k‑free.
    """
    _check_length(g, c)
    nxg = g.to_networkx()
    used = sorted(set(c.colors))
    out: Dict[Tuple[int, int], List[int]] = {}
    for i, a in enumerate(used):
        for b in used[i + 1:]:
            sub = nxg.subgraph(v for v in range(g.n) if c[v] in (a, b))
            out[(a, b)] = sorted((len(cc) for cc in nx.connected_components(sub)), reverse=True)
    return out
