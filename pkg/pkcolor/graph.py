"""
pkcolor.graph
=============

Immutable simple undirected graphs and the generators for every graph
family the colorings are studied on: paths, cycles, complete graphs,
Cartesian products (grids ``G(n,m) = P_n □ P_m`` and tori ``C_p □ C_q``)
and seeded random graphs.

Vertices are dense integers ``0..n-1``.  Products use row‑major
indexing, ``(x, x') ↦ x·n_h + x'``, so a coloring matrix maps directly
onto the vertex array.

Generators are built on NetworkX and converted once into the frozen
:class:`Graph`; nothing downstream mutates a graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from .errors import InvalidArgument

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Vertex count (≥ 1).
    edges : frozenset[tuple[int, int]]
        Unordered vertex pairs; stored normalised as ``(u, v)`` with ``u < v``.

    ``adjacency`` (sorted neighbor tuples) is derived on construction.
    Self‑loops, out‑of‑range endpoints and duplicate edges are rejected.

    Example
    -------
    >>> g = Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> g.m, g.max_degree, g.adjacency
    (2, 2, ((1,), (0, 2), (1,)))
    """
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgument(f"a graph needs at least one vertex, got n={self.n}")
        normalised = _normalise_edges(self.n, self.edges)
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in normalised:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", frozenset(normalised))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build from any iterable of pairs; duplicates are an error, not merged."""
        return cls(n, _normalise_edges(n, edges))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """
        Convert a NetworkX graph.  Nodes are relabelled ``0..n-1`` in
        sorted order (so integer‑labelled graphs keep their labels).
        """
        nodes = sorted(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.sorted_edges())
        return h

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> List[int]:
        """Degrees sorted descending."""
        return sorted((len(a) for a in self.adjacency), reverse=True)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by *vertices*, relabelled by their position in the sequence."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidArgument("induced_subgraph vertices must be distinct")
        keep = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(vertices), keep)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "edges": [list(e) for e in self.sorted_edges()],
        }


def _normalise_edges(n: int, edges: Iterable[Edge]) -> List[Edge]:
    seen = set()
    out: List[Edge] = []
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InvalidArgument(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise InvalidArgument(f"duplicate edge {e}")
        seen.add(e)
        out.append(e)
    return out


# ---------------------------------------------------------------------
# Elementary families
# ---------------------------------------------------------------------
def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1, edges {i, i+1}."""
    if n < 1:
        raise InvalidArgument(f"path_graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    """C_n: vertices 0..n-1, edges {i, (i+1) mod n}."""
    if n < 3:
        raise InvalidArgument(f"cycle_graph needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"complete_graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"empty_graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [])


def random_graph(n: int, max_degree: int, seed: int = 0, p: float = 0.5) -> Graph:
    """
    Seeded G(n, p) with degrees trimmed to at most *max_degree*.

    Edges are considered in sorted order and kept only while both
    endpoints are below the cap, so equal arguments give equal graphs.
    """
    if n < 1:
        raise InvalidArgument(f"random_graph needs n >= 1, got {n}")
    if max_degree < 0:
        raise InvalidArgument(f"max_degree must be >= 0, got {max_degree}")
    if not 0.0 <= p <= 1.0:
        raise InvalidArgument(f"edge probability must lie in [0, 1], got {p}")
    raw = nx.gnp_random_graph(n, p, seed=seed)
    degree = [0] * n
    kept: List[Edge] = []
    for u, v in sorted((min(a, b), max(a, b)) for a, b in raw.edges()):
        if degree[u] < max_degree and degree[v] < max_degree:
            kept.append((u, v))
            degree[u] += 1
            degree[v] += 1
    logger.debug(f"random_graph(n={n}, d<={max_degree}, seed={seed}) kept {len(kept)} edges")
    return Graph.from_edges(n, kept)


# ---------------------------------------------------------------------
# Cartesian products
# ---------------------------------------------------------------------
def cartesian_product(g: Graph, h: Graph) -> Graph:
    """
    G □ H with vertex ``(x, x')`` indexed as ``x·h.n + x'``.

    ``(x,x')`` ~ ``(y,y')`` iff ``x = y`` and ``x'y' ∈ E(H)``, or
    ``x' = y'`` and ``xy ∈ E(G)``; hence ``m = n_g·m_h + n_h·m_g``.
    """
    prod = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    index = lambda node: node[0] * h.n + node[1]  # noqa: E731
    return Graph.from_edges(g.n * h.n, ((index(a), index(b)) for a, b in prod.edges()))


def grid(n: int, m: int) -> Graph:
    """G(n, m) = P_n □ P_m; cell (r, c) is vertex ``r·m + c``."""
    if n < 1 or m < 1:
        raise InvalidArgument(f"grid dimensions must be >= 1, got {n}x{m}")
    return cartesian_product(path_graph(n), path_graph(m))


def torus(p: int, q: int) -> Graph:
    """C_p □ C_q."""
    return cartesian_product(cycle_graph(p), cycle_graph(q))


class FactorKind(Enum):
    PATH = "path"
    CYCLE = "cycle"

    def __str__(self) -> str:
        return self.value

    @property
    def min_size(self) -> int:
        return 2 if self is FactorKind.PATH else 3


@dataclass(frozen=True)
class Factor:
    """One side of a product: a path or cycle of the given size."""
    kind: FactorKind
    size: int

    def __post_init__(self) -> None:
        if self.size < self.kind.min_size:
            raise InvalidArgument(
                f"{self.kind.value} factor needs size >= {self.kind.min_size}, got {self.size}"
            )

    def build(self) -> Graph:
        return path_graph(self.size) if self.kind is FactorKind.PATH else cycle_graph(self.size)

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.size}"


@dataclass(frozen=True)
class ProductSpec:
    """
    Product of two path/cycle factors; ``factor_a`` indexes rows and
    ``factor_b`` indexes columns.

    Example
    -------
    >>> ProductSpec.parse("cycle:7,path:9").cols
    9
    """
    factor_a: Factor
    factor_b: Factor

    @classmethod
    def of(cls, kind_a: str, size_a: int, kind_b: str, size_b: int) -> "ProductSpec":
        return cls(Factor(_kind(kind_a), size_a), Factor(_kind(kind_b), size_b))

    @classmethod
    def parse(cls, text: str) -> "ProductSpec":
        """Parse ``"kind:size,kind:size"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise InvalidArgument(f"product spec needs two factors, got {text!r}")
        factors = []
        for part in parts:
            kind, sep, size = part.partition(":")
            if not sep:
                raise InvalidArgument(f"factor {part!r} is not of the form kind:size")
            try:
                factors.append(Factor(_kind(kind), int(size)))
            except ValueError as exc:
                if isinstance(exc, InvalidArgument):
                    raise
                raise InvalidArgument(f"factor size {size!r} is not an integer") from None
        return cls(*factors)

    @property
    def rows(self) -> int:
        return self.factor_a.size

    @property
    def cols(self) -> int:
        return self.factor_b.size

    def __str__(self) -> str:
        return f"{self.factor_a},{self.factor_b}"


def _kind(name: str) -> FactorKind:
    try:
        return FactorKind(name.strip().lower())
    except ValueError:
        raise InvalidArgument(f"unknown factor kind {name!r}; expected 'path' or 'cycle'") from None


def build_product(spec: ProductSpec) -> Graph:
    """The Cartesian product described by *spec*, row‑major."""
    return cartesian_product(spec.factor_a.build(), spec.factor_b.build())
