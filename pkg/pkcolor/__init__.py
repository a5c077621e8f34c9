"""
pkcolor
=======

A toolkit for computing, constructing, verifying and bounding the
P_k‑chromatic number ``s_k(G)`` and the C_k‑chromatic number ``a_k(G)``
of small graphs.

A P_k‑coloring is a proper vertex coloring with no bicolored copy of the
path on *k* vertices; a C_k‑coloring forbids bicolored cycles of length
at least *k*.  ``s_4`` is the star chromatic number and ``a_3`` the
acyclic chromatic number.

Import structure
----------------
`import pkcolor` is intentionally cheap: sub‑modules are imported on
demand.  *networkx* is only touched by :pymod:`pkcolor.graph` generators
and *numpy* only by the resampling engine in :pymod:`pkcolor.lll`.

Sub‑modules
~~~~~~~~~~~
- :pymod:`pkcolor.graph`          – immutable ``Graph`` + path/cycle/grid/product generators
- :pymod:`pkcolor.models`         – ``Coloring``, ``Witness``, ``VerificationReport`` + enums
- :pymod:`pkcolor.verifier`       – bicolored path / long‑cycle detection with witnesses
- :pymod:`pkcolor.bounds`         – closed‑form lower and upper bounds
- :pymod:`pkcolor.solver`         – exact backtracking search + brute‑force oracle
- :pymod:`pkcolor.constructions`  – explicit 3/4‑color patterns for grids and tori
- :pymod:`pkcolor.lll`            – Local Lemma condition checker + Moser–Tardos sampler
- :pymod:`pkcolor.formats`        – edge‑list, DOT and JSON file formats
- :pymod:`pkcolor.cli`            – ``pkcolor`` command line front end
- :pymod:`pkcolor.settings`       – environment‑driven configuration

Quick start
-----------
>>> from pkcolor.graph import grid
>>> from pkcolor.solver import chromatic_exact
>>> chromatic_exact(grid(3, 3), k=5).chromatic_value
4

"""

__all__ = [
    "graph",
    "models",
    "verifier",
    "bounds",
    "solver",
    "constructions",
    "lll",
    "formats",
    "cli",
    "settings",
    "errors",
]

__version__ = "0.1.0"
