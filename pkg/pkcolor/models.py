"""
pkcolor.models
==============

Dataclasses and enums describing colorings and the evidence produced
when a coloring is checked.  These objects carry **no** external‑library
dependencies so that importing them stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple

from .errors import InvalidArgument


class Family(Enum):
    """Which forbidden bicolored subgraphs a coloring must avoid."""
    PATH = "path"
    CYCLE = "cycle"

    def __str__(self) -> str:        # nicer REPL display
        return self.value

    @property
    def min_k(self) -> int:
        """Smallest k for which the chromatic parameter is defined (s_k: 4, a_k: 3)."""
        return 4 if self is Family.PATH else 3

    @classmethod
    def parse(cls, value: "Family | str") -> "Family":
        if isinstance(value, Family):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidArgument(f"unknown family {value!r}; expected 'path' or 'cycle'") from None


class WitnessKind(Enum):
    """Shape of the forbidden structure a witness exhibits."""
    IMPROPER_EDGE = "improper-edge"
    BICOLORED_PATH = "bicolored-path"
    BICOLORED_CYCLE = "bicolored-cycle"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Coloring:
    """
    Total assignment vertex → color index.

    Parameters
    ----------
    colors : tuple[int, ...]
        ``colors[v]`` is the color of vertex *v*; entries are ≥ 0.
    k : int | None
        Forbidden‑subgraph parameter the coloring targets, if known.
    family : Family | None
        Path or cycle family the coloring targets, if known.
    """
    colors: Tuple[int, ...]
    k: Optional[int] = None
    family: Optional[Family] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise InvalidArgument("color indices must be nonnegative")

    # Convenience helpers -------------------------------------------------
    @classmethod
    def of(cls, colors: Sequence[int], k: Optional[int] = None,
           family: "Family | str | None" = None) -> "Coloring":
        return cls(tuple(colors), k, Family.parse(family) if family is not None else None)

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        """x = 1 + the largest color index used."""
        return 1 + max(self.colors) if self.colors else 0

    @property
    def distinct_colors(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "family": self.family.value if self.family else None,
            "colors": list(self.colors),
        }


@dataclass(frozen=True)
class Witness:
    """
    Concrete forbidden structure certifying that a coloring is invalid.

    ``vertices`` is ordered: consecutive entries are adjacent, and for a
    bicolored cycle the last vertex is also adjacent to the first.
    """
    kind: WitnessKind
    vertices: Tuple[int, ...]
    colors_used: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "colors_used": list(self.colors_used),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :pyfunc:`pkcolor.verifier.verify`; ``valid`` iff ``witness`` is None."""
    k: int
    family: Family
    witness: Optional[Witness] = None
    valid: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "valid", self.witness is None)

    def to_json(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "k": self.k,
            "family": self.family.value,
            "witness": self.witness.to_json() if self.witness else None,
        }


def round_sig(value: float, digits: Optional[int] = None) -> float:
    """Round *value* to ``settings.float_digits`` (or *digits*) significant digits for JSON output."""
    from .settings import settings

    return float(f"{value:.{digits or settings.float_digits}g}")
