"""
tests/test_lll.py
=================

Local Lemma parameters, condition checks, bad events and the
Moser–Tardos sampler in pkcolor.lll.
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from pkcolor.bounds import sk_upper_bound_lll
from pkcolor.errors import BudgetExhausted, GuardExceeded, InvalidArgument
from pkcolor.graph import complete_graph, cycle_graph, grid, path_graph, random_graph, torus
from pkcolor.lll import (
    EventKind,
    check_lll_conditions,
    dependency_bounds,
    dependency_degrees,
    enumerate_bad_events,
    event_probabilities,
    lll_parameters,
    sample_coloring,
    type2_counts_per_vertex,
)
from pkcolor.settings import PRNG_NAME, settings
from pkcolor.verifier import verify


# ---------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------
def test_parameter_examples():
    """x, y1 and y2 for small d and k, and for a custom constant."""
    p = lll_parameters(2, 4)
    assert (p.x, p.y1, p.y2) == (54, Fraction(1, 6), Fraction(1, 80))
    p = lll_parameters(3, 5)
    assert (p.x, p.y1, p.y2) == (83, Fraction(1, 9), Fraction(1, 972))
    assert lll_parameters(2, 4, a=1).x == 3


def test_parameters_match_upper_bound():
    """The chosen x is the closed-form upper bound."""
    for d in (2, 3, 7, 50):
        for k in (4, 5, 9):
            assert lll_parameters(d, k).x == sk_upper_bound_lll(d, k)


@pytest.mark.parametrize("d, k, a", [(1, 4, None), (2, 3, None), (2, 4, 0.0), (2, 4, -3.0)])
def test_parameter_ranges(d, k, a):
    """Out-of-range d, k or constant is invalid."""
    with pytest.raises(InvalidArgument):
        lll_parameters(d, k, a)


def test_dependency_matrix_and_probabilities():
    """Dependency counts and event probabilities for d = 3, k = 5."""
    dep = dependency_bounds(3, 5)
    assert (dep.i_i, dep.i_ii, dep.ii_i, dep.ii_ii) == (6, 6 * 81, 15, Fraction(5, 2) * 6 * 81)
    assert event_probabilities(54, 4) == (Fraction(1, 54), Fraction(1, 54 ** 2))
    assert dep.to_json()["II"]["II"] == "1215"


# ---------------------------------------------------------------------
# Condition checks
# ---------------------------------------------------------------------
def test_conditions_hold_at_small_degree():
    """d = 2, k = 4 satisfies both exact and both sufficient conditions."""
    report = check_lll_conditions(lll_parameters(2, 4))
    assert report.ineq1_holds and report.ineq2_holds
    assert report.sufficient_ineq1_holds and report.sufficient_ineq2_holds
    assert report.all_hold


def test_sufficient_condition_fails_for_tiny_constant():
    """a = 1 is far too small for the first sufficient form."""
    report = check_lll_conditions(lll_parameters(2, 4, a=1))
    assert not report.sufficient_ineq1_holds
    assert report.sufficient_ineq1_lhs > report.sufficient_ineq1_rhs
    assert not report.all_hold


def test_conditions_hold_at_large_degree():
    """Log-space evaluation stays finite for d = 1000, k = 10."""
    report = check_lll_conditions(lll_parameters(1000, 10))
    assert report.all_hold
    assert math.isfinite(report.log_ineq2_rhs)


def test_default_constant_meets_second_sufficient_form_with_equality_at_k4():
    """a = 6√10, k = 4 is exactly on the boundary; rational arithmetic keeps it."""
    assert check_lll_conditions(lll_parameters(5, 4)).sufficient_ineq2_holds
    assert not check_lll_conditions(lll_parameters(5, 4, a=18.97)).sufficient_ineq2_holds


def test_condition_sweep_over_degrees_and_lengths():
    """The default constant works across a log-spaced degree sweep."""
    degrees = sorted({int(round(v)) for v in np.logspace(math.log10(2), 3, 50)})
    for d in degrees:
        for k in range(4, 11):
            assert check_lll_conditions(lll_parameters(d, k)).all_hold, (d, k)


def test_sufficient_forms_imply_exact_conditions():
    """A sufficient form never holds where its exact condition fails."""
    rng = np.random.default_rng(2024)
    for _ in range(500):
        d = int(rng.integers(2, 1001))
        k = int(rng.integers(4, 11))
        a = float(np.exp(rng.uniform(0.0, math.log(200.0))))
        report = check_lll_conditions(lll_parameters(d, k, a))
        if report.sufficient_ineq1_holds:
            assert report.ineq1_holds, (d, k, a)
        if report.sufficient_ineq2_holds:
            assert report.ineq2_holds, (d, k, a)


def test_condition_report_json():
    """The report serialises fractions as strings."""
    doc = check_lll_conditions(lll_parameters(2, 4)).to_json()
    assert doc["all_hold"] is True
    assert doc["params"]["x"] == 54
    assert doc["params"]["y2"] == "1/80"


# ---------------------------------------------------------------------
# Bad events
# ---------------------------------------------------------------------
@pytest.mark.parametrize(
    "g, k, n_type1, n_type2",
    [(path_graph(4), 4, 3, 1), (cycle_graph(5), 5, 5, 5), (complete_graph(3), 4, 3, 0)],
)
def test_event_counts(g, k, n_type1, n_type2):
    """One Type I event per edge and one Type II event per P_k copy."""
    events = enumerate_bad_events(g, k)
    kinds = [e.kind for e in events]
    assert kinds.count(EventKind.TYPE_I) == n_type1
    assert kinds.count(EventKind.TYPE_II) == n_type2


def test_type2_events_are_oriented_once():
    """Each path is listed from its smaller end."""
    for e in enumerate_bad_events(cycle_graph(6), 4):
        if e.kind is EventKind.TYPE_II:
            assert e.vertices[0] < e.vertices[-1]


def test_event_guard(monkeypatch):
    """Enumeration refuses past the configured guard."""
    monkeypatch.setattr(settings, "event_guard", 5)
    with pytest.raises(GuardExceeded):
        enumerate_bad_events(grid(3, 3), 5)


def test_per_vertex_event_count_and_dependency_degrees():
    """Observed counts on C4xC4 stay within the analytic bounds."""
    g, k = torus(4, 4), 4
    d = g.max_degree
    events = enumerate_bad_events(g, k)
    assert max(type2_counts_per_vertex(events, g.n)) <= -(-k // 2) * d ** (k - 1)
    observed = dependency_degrees(events)
    bound = dependency_bounds(d, k)
    assert observed["TypeI"]["TypeI"] <= bound.i_i
    assert observed["TypeI"]["TypeII"] <= bound.i_ii
    assert observed["TypeII"]["TypeI"] <= bound.ii_i
    assert observed["TypeII"]["TypeII"] <= bound.ii_ii


# ---------------------------------------------------------------------
# Sampler
# ---------------------------------------------------------------------
def test_sampler_on_grid_with_capped_budget():
    """The color budget is capped at n and the result verifies."""
    x = sk_upper_bound_lll(3, 5)
    result = sample_coloring(grid(3, 3), 5, x, seed=42)
    assert result.colors_requested == 83
    assert result.colors_budget == 9
    assert result.prng == PRNG_NAME
    assert verify(grid(3, 3), result.coloring, 5).valid


def test_sampler_on_cycle_with_four_colors():
    """Four colors suffice on C_8 at k = 5."""
    result = sample_coloring(cycle_graph(8), 5, 4, seed=1)
    assert verify(cycle_graph(8), result.coloring, 5).valid
    assert result.coloring.num_colors <= 4


def test_sampler_is_reproducible():
    """Same seed, same coloring and resample count."""
    a = sample_coloring(torus(3, 4), 5, 12, seed=7)
    b = sample_coloring(torus(3, 4), 5, 12, seed=7)
    assert a.to_json() == b.to_json()


def test_sampler_exhaustion_never_returns_invalid():
    """K_5 has no proper 2-coloring, so every round finds a violated event."""
    with pytest.raises(BudgetExhausted) as info:
        sample_coloring(complete_graph(5), 5, 2, seed=0, max_resamples=3)
    assert info.value.spent == 3


def test_sampler_rejects_bad_arguments():
    """k below 4 or a single color is invalid."""
    with pytest.raises(InvalidArgument):
        sample_coloring(grid(3, 3), 3, 9)
    with pytest.raises(InvalidArgument):
        sample_coloring(grid(3, 3), 5, 1)


@hsettings(max_examples=100, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=40),
    graph_seed=st.integers(min_value=0, max_value=10_000),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_sampler_terminates_with_valid_colorings(n, graph_seed, seed):
    """Random bounded-degree graphs always get a valid coloring."""
    g = random_graph(n, 4, seed=graph_seed)
    x = min(sk_upper_bound_lll(max(g.max_degree, 2), 5), n)
    result = sample_coloring(g, 5, x, seed=seed, max_resamples=10_000)
    assert result.resamples <= 10_000
    assert verify(g, result.coloring, 5).valid
