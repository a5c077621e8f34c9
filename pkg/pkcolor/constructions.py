"""
pkcolor.constructions
=====================

Explicit colorings for products of paths and cycles.

* 4‑color P_5‑colorings of ``P_n □ P_m``, ``P_i □ C_j`` and ``C_p □ C_q``
  (factors ≥ 3, cycle factors ≠ 5) by tiling each axis with blocks of 3
  and 4 and coloring every block with the upper‑left corner of the 4×4
  base pattern::

      0 1 2 3
      1 0 3 2
      2 3 0 1
      3 2 1 0

* 3‑color patterns for the narrow grids ``G(2, m)`` (k ≥ 5) and
  ``G(3, m)`` (k ≥ 6).

Every emitted coloring is checked with :func:`pkcolor.verifier.verify`
before it is returned; a failure raises :class:`ConstructionFailed`
instead of handing out an unchecked coloring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionFailed, InvalidArgument, NoDecomposition, UnsupportedInstance
from .graph import Factor, FactorKind, ProductSpec, build_product, grid
from .models import Coloring, Family
from .verifier import verify

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

# ---------------------------------------------------------------------
# Base patterns
# ---------------------------------------------------------------------
CANONICAL_BASE: Matrix = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

# "a b c / c a b / b c a": the forced shape of any 3-coloring of G(3,3)
# without a long bicolored path; it always contains a bicolored P_5.
LATIN_3: Matrix = (
    (0, 1, 2),
    (2, 0, 1),
    (1, 2, 0),
)

# Period-3 patterns for the narrow grids.
NARROW_2: Matrix = ((0, 2, 1), (1, 0, 2))
NARROW_3: Matrix = ((0, 1, 2), (1, 2, 0), (0, 1, 2))


@dataclass(frozen=True)
class PatternMatrix:
    """A rectangular block of colors; row ``r``, column ``c`` is ``entries[r][c]``."""
    entries: Matrix

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def flatten(self) -> Tuple[int, ...]:
        return tuple(c for row in self.entries for c in row)

    def render(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.entries)

    def to_json(self) -> Dict[str, Any]:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}


def base_pattern(rows: int, cols: int) -> PatternMatrix:
    """Upper‑left ``rows × cols`` corner of the 4×4 base; dimensions in {3, 4}."""
    if rows not in (3, 4) or cols not in (3, 4):
        raise InvalidArgument(f"base pattern dimensions must be 3 or 4, got {rows}x{cols}")
    return PatternMatrix(tuple(row[:cols] for row in CANONICAL_BASE[:rows]))


def latin_pattern_3() -> PatternMatrix:
    return PatternMatrix(LATIN_3)


# ---------------------------------------------------------------------
# 3/4 decompositions
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class SylvesterDecomposition:
    """t = 3·alpha + 4·beta with alpha, beta ≥ 0."""
    t: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0 or 3 * self.alpha + 4 * self.beta != self.t:
            raise InvalidArgument(f"{self.t} != 3*{self.alpha} + 4*{self.beta}")

    def blocks(self) -> List[int]:
        """Block sizes in layout order: all 3‑blocks, then all 4‑blocks."""
        return [3] * self.alpha + [4] * self.beta


def sylvester_34(t: int) -> SylvesterDecomposition:
    """
    Write *t* as ``3α + 4β`` maximising α.  Exists exactly for
    ``t ∈ {3, 4} ∪ {t ≥ 6}``.
    """
    if t < 1:
        raise InvalidArgument(f"t must be positive, got {t}")
    beta = t % 3
    alpha = (t - 4 * beta) // 3
    if alpha < 0:
        raise NoDecomposition(f"{t} is not a nonnegative combination of 3 and 4")
    return SylvesterDecomposition(t, alpha, beta)


def _axis_blocks(factor: Factor, tiling: str) -> List[int]:
    """Block sizes covering *factor*; path factors may be over‑covered and truncated."""
    size = factor.size
    if factor.kind is FactorKind.CYCLE:
        if tiling == "threes":
            if size % 3:
                raise UnsupportedInstance(
                    f"cycle factor {size} is not a multiple of 3; use the mixed tiling"
                )
            return [3] * (size // 3)
        try:
            return sylvester_34(size).blocks()
        except NoDecomposition:
            raise UnsupportedInstance(
                f"no 3/4 tiling of a cycle factor of size {size}; this case is open"
            ) from None
    if tiling == "threes":
        return [3] * (-(-size // 3))
    return sylvester_34(size if size != 5 else 6).blocks()


def tile_coloring(row_blocks: Sequence[int], col_blocks: Sequence[int]) -> PatternMatrix:
    """Color each block independently with :func:`base_pattern` of its size."""
    row_local = [i for b in row_blocks for i in range(b)]
    col_local = [j for b in col_blocks for j in range(b)]
    return PatternMatrix(
        tuple(tuple(CANONICAL_BASE[i][j] for j in col_local) for i in row_local)
    )


def color_product_p5(spec: ProductSpec, tiling: str = "mixed") -> Coloring:
    """
    4‑color P_5‑coloring of the product described by *spec*.

    ``tiling='mixed'`` uses 3‑ and 4‑blocks; ``tiling='threes'`` repeats
    the 3×3 corner and needs cycle factors divisible by 3.
    """
    if tiling not in ("mixed", "threes"):
        raise InvalidArgument(f"tiling must be 'mixed' or 'threes', got {tiling!r}")
    for factor in (spec.factor_a, spec.factor_b):
        if factor.size < 3:
            raise InvalidArgument(
                f"factor {factor} is smaller than 3; use color_narrow_grid for 2-row grids"
            )
        if factor.kind is FactorKind.CYCLE and factor.size == 5:
            raise UnsupportedInstance(f"cycle factor of size 5 in {spec} has no known construction")

    full = tile_coloring(_axis_blocks(spec.factor_a, tiling), _axis_blocks(spec.factor_b, tiling))
    matrix = PatternMatrix(tuple(row[: spec.cols] for row in full.entries[: spec.rows]))
    coloring = Coloring(matrix.flatten(), 5, Family.PATH)
    _post_verify(build_product(spec), coloring, 5, str(spec))
    return coloring


def color_narrow_grid(rows: int, m: int, k: int) -> Coloring:
    """
    3‑color P_k‑coloring of ``G(rows, m)``, period 3 along the long axis.

    ``rows=2`` needs k ≥ 5.  ``rows=3`` needs k ≥ 6; at k = 5 four colors
    are necessary, so that case is unsupported.
    """
    if rows not in (2, 3):
        raise InvalidArgument(f"narrow grids have 2 or 3 rows, got {rows}")
    if m < 3:
        raise InvalidArgument(f"narrow grid needs m >= 3, got {m}")
    if rows == 3 and k == 5:
        raise UnsupportedInstance("G(3, m) needs 4 colors at k = 5")
    threshold = 5 if rows == 2 else 6
    if k < threshold:
        raise InvalidArgument(f"G({rows}, m) pattern needs k >= {threshold}, got {k}")
    pattern = NARROW_2 if rows == 2 else NARROW_3
    colors = tuple(pattern[r][c % 3] for r in range(rows) for c in range(m))
    coloring = Coloring(colors, k, Family.PATH)
    _post_verify(grid(rows, m), coloring, k, f"G({rows},{m})")
    return coloring


def _post_verify(g, coloring: Coloring, k: int, label: str) -> None:
    report = verify(g, coloring, k, Family.PATH)
    if not report.valid:
        logger.error(f"construction for {label} failed verification: {report.witness}")
        raise ConstructionFailed(f"construction for {label} contains {report.witness}")
    logger.debug(f"construction for {label} verified at k={k}")


# ---------------------------------------------------------------------
# Catalog + rendering
# ---------------------------------------------------------------------
def known_chromatic_value(spec: ProductSpec, k: int) -> Optional[int]:
    """
    The exact s_k of a path/cycle product when it is established, else None.

    * k = 5, both factors ≥ 3, no cycle factor of size 5 → 4;
    * k = 6, both factors ≥ 4, no cycle factor of size 5 → 4;
    * ``G(2, m)``, m ≥ 3, k ≥ 5 → 3;  ``G(3, m)``, m ≥ 3, k ≥ 6 → 3;
      a narrow grid with fewer than k vertices has no P_k and is 2.
    """
    a, b = spec.factor_a, spec.factor_b
    both_paths = a.kind is FactorKind.PATH and b.kind is FactorKind.PATH
    if both_paths:
        small, large = sorted((a.size, b.size))
        narrow = (small == 2 and large >= 3 and k >= 5) or (small == 3 and k >= 6)
        if narrow:
            return 2 if k > small * large else 3
    no_c5 = all(not (f.kind is FactorKind.CYCLE and f.size == 5) for f in (a, b))
    if k == 5 and min(a.size, b.size) >= 3 and no_c5:
        return 4
    if k == 6 and min(a.size, b.size) >= 4 and no_c5:
        return 4
    return None


def render_matrix(coloring: Coloring, rows: int, cols: int) -> str:
    """Rows of space‑separated colors, for diffing against printed patterns."""
    if rows * cols != len(coloring):
        raise InvalidArgument(f"{rows}x{cols} does not match a coloring of {len(coloring)} vertices")
    c = coloring.colors
    return PatternMatrix(tuple(tuple(c[r * cols:(r + 1) * cols]) for r in range(rows))).render()
