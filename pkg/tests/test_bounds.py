"""
tests/test_bounds.py
====================

Closed-form bounds in pkcolor.bounds, evaluated exactly.
"""

import math
from fractions import Fraction

import pytest

from pkcolor.bounds import (
    DEFAULT_A_SQUARED,
    ak_delta,
    ak_lower_bound,
    bounds_report,
    ceil_power_bound,
    erdos_gallai_threshold,
    iroot,
    long_cycle_guaranteed,
    path_guaranteed,
    sk_lower_bound,
    sk_upper_bound_for_graph,
    sk_upper_bound_lll,
)
from pkcolor.errors import InvalidArgument
from pkcolor.graph import ProductSpec, build_product, complete_graph, cycle_graph, empty_graph, grid, path_graph


# ---------------------------------------------------------------------
# Thresholds
# ---------------------------------------------------------------------
def test_erdos_gallai_examples():
    """Thresholds for P_5 on 9 vertices, long cycles on 5, and a single vertex."""
    assert erdos_gallai_threshold(9, 5, "path") == Fraction(27, 2)
    assert erdos_gallai_threshold(5, 3, "cycle") == 4
    assert erdos_gallai_threshold(1, 2, "path") == 0


def test_erdos_gallai_ranges():
    """k too small for its family, or n = 0, is invalid."""
    with pytest.raises(InvalidArgument):
        erdos_gallai_threshold(5, 1, "path")
    with pytest.raises(InvalidArgument):
        erdos_gallai_threshold(5, 2, "cycle")
    with pytest.raises(InvalidArgument):
        erdos_gallai_threshold(0, 4, "path")


def test_guarantees_on_complete_graphs():
    """K_5 has 10 > 3·5/2 edges, so it contains P_5 and a cycle of length ≥ 4."""
    assert path_guaranteed(complete_graph(5), 5)
    assert long_cycle_guaranteed(complete_graph(5), 4)
    assert not path_guaranteed(path_graph(5), 5)


# ---------------------------------------------------------------------
# Lower bounds
# ---------------------------------------------------------------------
@pytest.mark.parametrize(
    "g, k, expected",
    [
        (grid(3, 3), 5, 2),
        (complete_graph(5), 4, 3),
        (build_product(ProductSpec.parse("cycle:4,cycle:4")), 5, 3),
    ],
)
def test_sk_lower_bound(g, k, expected):
    """Ceiling of 2m / (n(k-2)) + 1 on grids, tori and cliques."""
    assert sk_lower_bound(g, k) == expected


def test_sk_lower_bound_integral_raw_value_is_kept():
    """K_5 at k=4 has raw value exactly 3; the ceiling must not bump it."""
    assert sk_lower_bound(complete_graph(5), 4) == 3


def test_sk_lower_bound_needs_k4():
    """The path family starts at k = 4."""
    with pytest.raises(InvalidArgument):
        sk_lower_bound(grid(2, 2), 3)


def test_ak_lower_bound_examples():
    """K_4 and C_5 are tight; empty graphs give a perfect-square delta and bound 1."""
    assert ak_delta(complete_graph(4), 3) == 1
    assert ak_lower_bound(complete_graph(4), 3) == 4
    assert ak_lower_bound(cycle_graph(5), 3) == 3
    for n in (1, 4, 9):
        assert ak_delta(empty_graph(n), 5) == (2 * n - 1) ** 2
        assert ak_lower_bound(empty_graph(n), 5) == 1


def test_sk_lower_bound_non_increasing_in_k(corpus):
    """A longer forbidden path never raises the lower bound."""
    for name, g in corpus.items():
        values = [sk_lower_bound(g, k) for k in range(4, 12)]
        assert values == sorted(values, reverse=True), name


def test_ak_lower_bound_at_least_two_with_an_edge(corpus):
    """Any edge forces delta below (2n - 1)^2, so the bound reaches 2."""
    for name, g in corpus.items():
        for k in range(3, 9):
            if g.m > 0:
                assert ak_lower_bound(g, k) >= 2, (name, k)
            else:
                assert ak_lower_bound(g, k) == 1, (name, k)


def test_ak_lower_bound_matches_float_formula_on_corpus(corpus):
    """The exact ceiling agrees with the float formula on the corpus."""
    for g in corpus.values():
        for k in (3, 4, 5):
            raw = (2 * g.n + 1 - math.sqrt(ak_delta(g, k))) / 2
            assert ak_lower_bound(g, k) == max(math.ceil(raw - 1e-12), 1)


# ---------------------------------------------------------------------
# Local Lemma upper bound
# ---------------------------------------------------------------------
def test_sk_upper_bound_examples():
    """Known values of the Local Lemma bound."""
    assert sk_upper_bound_lll(2, 4) == 54
    assert sk_upper_bound_lll(3, 5) == 83
    assert sk_upper_bound_lll(10, 4) == 600


def test_sk_upper_bound_large_k_tends_to_twelve_root_ten():
    """For d = 2 and huge k the bound is ceil(12 sqrt 10)."""
    assert sk_upper_bound_lll(2, 1000) == math.ceil(12 * math.sqrt(10)) == 38


@pytest.mark.parametrize("d", [2, 3, 4, 7, 10, 50])
def test_sk_upper_bound_non_increasing_in_k(d):
    """The exponent (k-1)/(k-2) falls with k, and so does the bound."""
    values = [sk_upper_bound_lll(d, k) for k in range(4, 40)]
    assert values == sorted(values, reverse=True)


def test_sk_upper_bound_range():
    """d < 2 and k < 4 are outside the bound's range."""
    with pytest.raises(InvalidArgument):
        sk_upper_bound_lll(1, 5)
    with pytest.raises(InvalidArgument):
        sk_upper_bound_lll(3, 3)


def test_sk_upper_bound_for_graph():
    """The graph form uses the maximum degree."""
    assert sk_upper_bound_for_graph(grid(3, 3), 5) == sk_upper_bound_lll(4, 5)


def test_iroot_and_ceiling():
    """Integer roots and exact power ceilings."""
    assert iroot(80, 4) == 2
    assert iroot(81, 4) == 3
    assert iroot(10**40, 8) == 10**5
    assert ceil_power_bound(Fraction(1), 2, 4) == 3
    assert ceil_power_bound(DEFAULT_A_SQUARED, 10, 4) == 600


# ---------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------
def test_bounds_report_grid():
    """The report for G(3,3) at k = 5."""
    report = bounds_report(grid(3, 3), 5)
    doc = report.to_json()
    assert doc["graph_stats"] == {"n": 9, "m": 12, "d": 4}
    assert doc["sk_lower"] == 2
    assert doc["sk_upper_lll"] == sk_upper_bound_lll(4, 5)
    assert abs(doc["exponent"] - 4 / 3) < 1e-11


def test_bounds_report_without_degree_two():
    """A single edge has no Local Lemma bound."""
    report = bounds_report(path_graph(2), 4)
    assert report.sk_upper_lll is None
    assert report.to_json()["raw_sk_upper"] is None
