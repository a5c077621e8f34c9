"""
tests/test_properties.py
========================

Property-based checks (hypothesis) of the verifier and bounds against
networkx as an independent oracle.
"""

import itertools

import networkx as nx
from hypothesis import given, settings as hsettings, strategies as st

from pkcolor.bounds import ak_lower_bound, erdos_gallai_threshold, sk_lower_bound
from pkcolor.graph import Graph
from pkcolor.models import Coloring, WitnessKind
from pkcolor.verifier import is_proper, verify, witness_is_sound


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def colored_graphs(draw, max_n=7, max_colors=3):
    """A graph with a proper coloring drawn vertex by vertex."""
    g = draw(small_graphs(max_n))
    colors = []
    for v in range(g.n):
        taken = {colors[w] for w in g.neighbors(v) if w < v}
        free = [x for x in range(max_colors) if x not in taken] or [max_colors + v]
        colors.append(draw(st.sampled_from(free)))
    return g, Coloring(tuple(colors))


def _two_color_subgraphs(g, c):
    nxg = g.to_networkx()
    for a, b in itertools.combinations(sorted(set(c.colors)), 2):
        yield nxg.subgraph(v for v in range(g.n) if c[v] in (a, b))


def _has_path_on(sub, k):
    for s, t in itertools.combinations(sub.nodes(), 2):
        for p in nx.all_simple_paths(sub, s, t, cutoff=k - 1):
            if len(p) == k:
                return True
    return False


def _has_long_cycle(sub, k):
    return any(len(cyc) >= k for cyc in nx.simple_cycles(sub))


@hsettings(max_examples=150, deadline=None)
@given(colored_graphs(), st.integers(min_value=4, max_value=6))
def test_path_verdict_matches_networkx(gc, k):
    """Path verdicts agree with networkx simple-path enumeration."""
    g, c = gc
    assert is_proper(g, c) is None
    expected = any(_has_path_on(sub, k) for sub in _two_color_subgraphs(g, c))
    report = verify(g, c, k, "path")
    assert report.valid is not expected
    if not report.valid:
        assert report.witness.kind is WitnessKind.BICOLORED_PATH
        assert witness_is_sound(g, c, report.witness, k)


@hsettings(max_examples=150, deadline=None)
@given(colored_graphs(), st.integers(min_value=3, max_value=6))
def test_cycle_verdict_matches_networkx(gc, k):
    """Cycle verdicts agree with networkx simple-cycle enumeration."""
    g, c = gc
    assert is_proper(g, c) is None
    expected = any(_has_long_cycle(sub, k) for sub in _two_color_subgraphs(g, c))
    report = verify(g, c, k, "cycle")
    assert report.valid is not expected
    if not report.valid:
        assert witness_is_sound(g, c, report.witness, k)


@hsettings(max_examples=100, deadline=None)
@given(colored_graphs(), st.integers(min_value=4, max_value=6))
def test_validity_is_monotone_in_k(gc, k):
    """Valid at k implies valid at k + 1."""
    g, c = gc
    if verify(g, c, k).valid:
        assert verify(g, c, k + 1).valid
    if verify(g, c, k, "cycle").valid:
        assert verify(g, c, k + 1, "cycle").valid


@hsettings(max_examples=100, deadline=None)
@given(colored_graphs(), st.data())
def test_validity_is_closed_under_induced_subgraphs(gc, data):
    """Restricting a valid coloring to an induced subgraph keeps it valid."""
    g, c = gc
    if not verify(g, c, 4).valid:
        return
    keep = data.draw(st.lists(st.sampled_from(range(g.n)), min_size=1, unique=True))
    sub = g.induced_subgraph(keep)
    assert verify(sub, Coloring(tuple(c[v] for v in keep)), 4).valid


@hsettings(max_examples=100, deadline=None)
@given(small_graphs(max_n=7), st.integers(min_value=4, max_value=8))
def test_lower_bounds_are_sane(g, k):
    """Lower bounds lie in [1, n]; above the edge threshold a P_k exists."""
    assert 1 <= sk_lower_bound(g, k) <= g.n
    assert 1 <= ak_lower_bound(g, k) <= g.n
    if g.m > erdos_gallai_threshold(g.n, k, "path"):
        nxg = g.to_networkx()
        assert any(
            len(p) == k
            for s, t in itertools.combinations(range(g.n), 2)
            for p in nx.all_simple_paths(nxg, s, t, cutoff=k - 1)
        )
