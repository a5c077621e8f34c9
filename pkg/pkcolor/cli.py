"""
pkcolor.cli
===========

Command‑line front end::

    pkcolor gen --type grid --rows 3 --cols 3 > g33.el
    pkcolor exact --graph g33.el --k 5
    pkcolor construct --type product-p5 --spec cycle:7,cycle:9 --render matrix
    pkcolor lll-check --d 10 --k 4

Structured output is JSON (sorted keys) on stdout or ``--output``;
graphs are edge lists.  Logging goes to stderr.

Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
3 unsupported instance, 4 budget exhausted or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import textwrap
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from . import __version__
from .bounds import bounds_report, sk_upper_bound_for_graph
from .constructions import color_narrow_grid, color_product_p5, known_chromatic_value, render_matrix
from .errors import (
    BudgetExhausted,
    InvalidArgument,
    PkColorError,
    PrecisionError,
    UnsupportedInstance,
)
from .formats import BatchSpec, dumps, format_dot, format_edge_list, read_batch, read_coloring, read_edge_list
from .graph import ProductSpec, build_product, cycle_graph, grid, path_graph, random_graph, torus
from .lll import check_lll_conditions, dependency_bounds, event_probabilities, lll_parameters, sample_coloring
from .models import Family
from .settings import settings
from .solver import chromatic_exact
from .verifier import verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4

Outcome = Tuple[int, str]


def exit_code_for(exc: BaseException) -> int:
    """Map a library exception onto the exit‑code contract."""
    if isinstance(exc, BudgetExhausted):
        return EXIT_BUDGET
    if isinstance(exc, (UnsupportedInstance, PrecisionError)):
        return EXIT_UNSUPPORTED
    if isinstance(exc, InvalidArgument):
        return EXIT_USAGE
    return EXIT_INVALID


# ---------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------
def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidArgument(f"gen --type {args.type} requires {', '.join(missing)}")


def cmd_gen(args: argparse.Namespace) -> Outcome:
    kind = args.type
    if kind == "path":
        _require(args, "n")
        g = path_graph(args.n)
    elif kind == "cycle":
        _require(args, "n")
        g = cycle_graph(args.n)
    elif kind == "grid":
        _require(args, "rows", "cols")
        g = grid(args.rows, args.cols)
    elif kind == "torus":
        _require(args, "p", "q")
        g = torus(args.p, args.q)
    elif kind == "product":
        _require(args, "spec")
        g = build_product(ProductSpec.parse(args.spec))
    else:
        _require(args, "n", "degree")
        g = random_graph(args.n, args.degree, seed=args.seed, p=args.prob)

    if args.format == "dot":
        return EXIT_OK, format_dot(g)
    if args.format == "json":
        return EXIT_OK, dumps(g.to_json())
    return EXIT_OK, format_edge_list(g)


def cmd_verify(args: argparse.Namespace) -> Outcome:
    g = read_edge_list(args.graph)
    c = read_coloring(args.coloring)
    report = verify(g, c, args.k, args.family)
    if not report.valid:
        logger.info(f"coloring rejected: {report.witness.kind} on {report.witness.vertices}")
    return (EXIT_OK if report.valid else EXIT_INVALID), dumps(report.to_json())


def cmd_bounds(args: argparse.Namespace) -> Outcome:
    g = read_edge_list(args.graph)
    return EXIT_OK, dumps(bounds_report(g, args.k).to_json())


def _solve_one(graph: str, k: int, family: str, budget: Optional[int]) -> Dict[str, Any]:
    result = chromatic_exact(read_edge_list(graph), k, family, budget)
    return result.to_json()


def _solve_batch_item(spec: BatchSpec) -> Tuple[int, Dict[str, Any]]:
    """Worker entry point; errors are returned, not raised, so one bad line does not stop the batch."""
    try:
        out = _solve_one(spec.graph, spec.k, spec.family, spec.budget)
    except PkColorError as exc:
        return exit_code_for(exc), {"graph": spec.graph, "error": str(exc)}
    out["graph"] = spec.graph
    return (EXIT_OK if out["proven"] else EXIT_BUDGET), out


def cmd_exact(args: argparse.Namespace) -> Outcome:
    if (args.graph is None) == (args.batch is None):
        raise InvalidArgument("exact needs exactly one of --graph or --batch")
    if args.graph is not None:
        if args.k is None:
            raise InvalidArgument("exact --graph requires --k")
        out = _solve_one(args.graph, args.k, args.family, args.budget)
        return (EXIT_OK if out["proven"] else EXIT_BUDGET), dumps(out)

    specs = read_batch(args.batch)
    jobs = args.jobs or settings.jobs
    logger.info(f"solving {len(specs)} batch instances with {jobs} worker(s)")
    if jobs == 1:
        results = [_solve_batch_item(s) for s in specs]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_batch_item, specs))
    code = max((c for c, _ in results), default=EXIT_OK)
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for _, r in results)
    return code, text


def cmd_construct(args: argparse.Namespace) -> Outcome:
    if args.type == "product-p5":
        if args.spec is None:
            raise InvalidArgument("construct --type product-p5 requires --spec")
        spec = ProductSpec.parse(args.spec)
        coloring = color_product_p5(spec, tiling=args.tiling)
        rows, cols, label = spec.rows, spec.cols, str(spec)
        known = known_chromatic_value(spec, 5)
    else:
        if args.rows is None or args.m is None or args.k is None:
            raise InvalidArgument("construct --type narrow requires --rows, --m and --k")
        coloring = color_narrow_grid(args.rows, args.m, args.k)
        rows, cols, label = args.rows, args.m, f"path:{args.rows},path:{args.m}"
        known = known_chromatic_value(ProductSpec.parse(label), args.k)

    if args.render == "matrix":
        return EXIT_OK, render_matrix(coloring, rows, cols) + "\n"
    return EXIT_OK, dumps({
        "spec": label,
        "rows": rows,
        "cols": cols,
        "known_value": known,
        "coloring": coloring.to_json(),
    })


def cmd_sample(args: argparse.Namespace) -> Outcome:
    g = read_edge_list(args.graph)
    x = args.colors if args.colors is not None else sk_upper_bound_for_graph(g, args.k)
    result = sample_coloring(g, args.k, x, seed=args.seed, max_resamples=args.max_resamples)
    return EXIT_OK, dumps(result.to_json())


def cmd_lll_check(args: argparse.Namespace) -> Outcome:
    params = lll_parameters(args.d, args.k, args.a)
    report = check_lll_conditions(params)
    p1, p2 = event_probabilities(params.x, params.k)
    payload = report.to_json()
    payload["dependency_bounds"] = dependency_bounds(params.d, params.k).to_json()
    payload["probabilities"] = {"TypeI": str(p1), "TypeII": str(p2)}
    return (EXIT_OK if report.all_hold else EXIT_INVALID), dumps(payload)


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pkcolor",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=textwrap.dedent(
            """\
            P_k- and C_k-colorings of graphs
            --------------------------------
            gen        generate a graph (edge list, DOT or JSON)
            verify     check a coloring, emit a witness when invalid
            bounds     closed-form lower/upper bounds
            exact      exact s_k / a_k by backtracking
            construct  explicit colorings of path/cycle products
            sample     Moser-Tardos resampling
            lll-check  Local Lemma conditions for (d, k, a)
            """
        ),
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress (INFO), -vv for DEBUG")
    parser.add_argument("--version", action="version", version=f"pkcolor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        return p

    families = [f.value for f in Family]

    p = add("gen", cmd_gen, "generate a graph")
    p.add_argument("--type", required=True,
                   choices=["path", "cycle", "grid", "torus", "product", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--spec", help='product factors, e.g. "cycle:7,cycle:9"')
    p.add_argument("--degree", type=int, help="maximum degree for --type random")
    p.add_argument("--prob", type=float, default=0.5, help="edge probability for --type random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "dot", "json"], default="edgelist")

    p = add("verify", cmd_verify, "verify a coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", choices=families, default="path")

    p = add("bounds", cmd_bounds, "closed-form bounds")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("exact", cmd_exact, "exact chromatic parameter")
    p.add_argument("--graph")
    p.add_argument("--batch", help="JSON-lines file of {graph, k, family, budget}")
    p.add_argument("--k", type=int)
    p.add_argument("--family", choices=families, default="path")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--jobs", type=int, help="worker processes for --batch")

    p = add("construct", cmd_construct, "explicit constructions")
    p.add_argument("--type", required=True, choices=["product-p5", "narrow"])
    p.add_argument("--spec", help='product factors, e.g. "cycle:7,cycle:9"')
    p.add_argument("--tiling", choices=["mixed", "threes"], default="mixed")
    p.add_argument("--rows", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--render", choices=["json", "matrix"], default="json")

    p = add("sample", cmd_sample, "Moser-Tardos sampler")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", type=int, help="color budget (default: Local Lemma bound)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-resamples", type=int, dest="max_resamples")

    p = add("lll-check", cmd_lll_check, "check Local Lemma conditions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=float, help="leading constant (default 6*sqrt(10))")
    return parser


def _configure_logging(verbose: int) -> None:
    level = settings.log_level.upper()
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse *argv*, run one subcommand, return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    _configure_logging(args.verbose)
    try:
        code, text = args.func(args)
    except PkColorError as exc:
        code = exit_code_for(exc)
        print(f"pkcolor {args.command}: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(dumps({"error": str(exc), "witness": witness.to_json()}), end="")
        return code

    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(run())
