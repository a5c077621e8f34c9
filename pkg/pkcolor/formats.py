"""
pkcolor.formats
===============

Readers and writers for the on‑disk formats.

* **Edge list** – first non‑comment line ``"n m"``, then *m* lines
  ``"u v"`` with ``0 ≤ u < v < n``.  Lines starting with ``#`` are
  ignored.  Duplicate edges and self‑loops are parse errors.
* **Coloring JSON** – ``{"n": 9, "k": 5, "family": "path", "colors": [...]}``;
  only ``colors`` is required.
* **Batch JSON lines** – one :class:`BatchSpec` per line for ``exact --batch``.
* **DOT** – ``graph { ... }`` for external viewers, optionally with
  colors attached as node labels.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import InvalidArgument, ParseError
from .graph import Graph
from .models import Coloring, Family

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


# ---------------------------------------------------------------------
# Edge list
# ---------------------------------------------------------------------
def _ints(line: str, lineno: int, expected: int) -> List[int]:
    parts = line.split()
    if len(parts) != expected:
        raise ParseError(f"line {lineno}: expected {expected} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token in {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse edge‑list text into a :class:`Graph`."""
    rows = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ParseError("edge list is empty; expected a header line 'n m'")
    header_no, header = rows[0]
    n, m = _ints(header, header_no, 2)
    if n < 1 or m < 0:
        raise ParseError(f"line {header_no}: invalid header n={n}, m={m}")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")

    edges = []
    for no, line in body:
        u, v = _ints(line, no, 2)
        if not (0 <= u < v < n):
            raise ParseError(f"line {no}: edge ({u}, {v}) violates 0 <= u < v < {n}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from None


def read_edge_list(path: PathLike) -> Graph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read edge list {path}: {exc}") from None
    g = parse_edge_list(text)
    logger.debug(f"read {path}: n={g.n}, m={g.m}")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g), encoding="ascii")


# ---------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------
def format_dot(g: Graph, coloring: Optional[Coloring] = None) -> str:
    """Undirected DOT; with a coloring each node is labelled ``v:color``."""
    lines = ["graph G {"]
    for v in range(g.n):
        if coloring is not None:
            lines.append(f'  {v} [label="{v}:{coloring[v]}"];')
        elif not g.adjacency[v]:
            lines.append(f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------
# JSON documents
# ---------------------------------------------------------------------
class ColoringDoc(BaseModel):
    """Coloring file as written by ``verify``/``exact``/``sample`` output or by hand."""
    colors: List[int]
    n: Optional[int] = None
    k: Optional[int] = None
    family: Optional[str] = None

    @field_validator("colors")
    @classmethod
    def _nonnegative(cls, v: List[int]) -> List[int]:
        if any(c < 0 for c in v):
            raise ValueError("color indices must be nonnegative")
        return v

    def to_coloring(self) -> Coloring:
        if self.n is not None and self.n != len(self.colors):
            raise ParseError(f"coloring declares n={self.n} but lists {len(self.colors)} colors")
        try:
            return Coloring.of(self.colors, self.k, self.family)
        except InvalidArgument as exc:
            raise ParseError(str(exc)) from None


def parse_coloring(text: str) -> Coloring:
    """Accepts a bare coloring document or any output object carrying one under ``certificate``/``coloring``."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"coloring is not valid JSON: {exc}") from None
    if isinstance(raw, dict) and "colors" not in raw:
        raw = raw.get("certificate") or raw.get("coloring") or raw
    try:
        return ColoringDoc.model_validate(raw).to_coloring()
    except ValidationError as exc:
        raise ParseError(f"invalid coloring document: {exc.errors()[0]['msg']}") from None


def read_coloring(path: PathLike) -> Coloring:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read coloring {path}: {exc}") from None
    return parse_coloring(text)


class BatchSpec(BaseModel):
    """One ``exact`` instance; ``graph`` is resolved relative to the batch file."""
    graph: str
    k: int = Field(..., ge=3)
    family: str = "path"
    budget: Optional[int] = Field(None, ge=1)

    @field_validator("family")
    @classmethod
    def _known_family(cls, v: str) -> str:
        return Family.parse(v).value


def read_batch(path: PathLike) -> List[BatchSpec]:
    base = Path(path).resolve().parent
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read batch file {path}: {exc}") from None
    specs = []
    for no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            spec = BatchSpec.model_validate_json(line)
        except ValidationError as exc:
            raise ParseError(f"batch line {no}: {exc.errors()[0]['msg']}") from None
        graph = Path(spec.graph)
        if not graph.is_absolute():
            spec = spec.model_copy(update={"graph": str(base / graph)})
        specs.append(spec)
    return specs


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, two‑space indent, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
