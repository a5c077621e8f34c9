"""
Ensure project root is on sys.path so `import pkcolor` works during tests,
and collect the small graph corpus shared by the oracle and bounds suites.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent  # tests/.. → project root
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from pkcolor.graph import complete_graph, cycle_graph, grid, path_graph, random_graph  # noqa: E402


def small_corpus():
    """Paths P_2..P_8, cycles C_3..C_8, grids up to 3x3, K_2..K_5, 20 seeded random graphs (n ≤ 8)."""
    graphs = {}
    for n in range(2, 9):
        graphs[f"P{n}"] = path_graph(n)
    for n in range(3, 9):
        graphs[f"C{n}"] = cycle_graph(n)
    for r, c in [(2, 2), (2, 3), (3, 3)]:
        graphs[f"G{r}x{c}"] = grid(r, c)
    for n in range(2, 6):
        graphs[f"K{n}"] = complete_graph(n)
    for seed in range(20):
        n = 4 + seed % 5
        graphs[f"R{seed}"] = random_graph(n, 3, seed=seed)
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
