"""Configuration universes searched by the mft algorithms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .grid import Config, PathConfig, RegionConfig, radius


class Kind(Enum):
    TWO_PATH = "2path"
    G_TWO_PATH = "g2path"
    LINE_AB = "line-ab"
    TWO_REG = "2reg"


@dataclass(frozen=True)
class Variation:
    kind: Kind

    @property
    def path_shaped(self) -> bool:
        return self.kind is not Kind.TWO_REG

    @property
    def name(self) -> str:
        return self.kind.value

    def member(self, C: Config) -> bool:
        if self.kind is Kind.TWO_REG:
            return isinstance(C, RegionConfig)
        if not isinstance(C, PathConfig):
            return False
        if self.kind is Kind.G_TWO_PATH:
            return True
        if self.kind is Kind.TWO_PATH:
            return C.r == 0 or C.s == 0
        return line_shape(C) is not None

    def cell_ok(self, cell) -> bool:
        """Cheap per-cell filter usable while growing a configuration."""
        return self.kind is not Kind.LINE_AB or cell[1] == 0

    def upper_bound(self, C: Config) -> int:
        return firing_upper_bound(self, C)

    def __str__(self) -> str:
        return self.kind.value


TWO_PATH = Variation(Kind.TWO_PATH)
G_TWO_PATH = Variation(Kind.G_TWO_PATH)
LINE_AB = Variation(Kind.LINE_AB)
TWO_REG = Variation(Kind.TWO_REG)

BY_NAME = {v.name: v for v in (TWO_PATH, G_TWO_PATH, LINE_AB, TWO_REG)}


def member(variation: Variation, C: Config) -> bool:
    return variation.member(C)


def line_shape(C: PathConfig):
    """(a, b) when C is the horizontal line with a cells west and b east
    of the general and 0 <= a <= b <= a + 2, else None."""
    cells = C.cells
    if any(y != 0 for _, y in cells):
        return None
    a = -min(x for x, _ in cells)
    b = max(x for x, _ in cells)
    if a <= b <= a + 2:
        return a, b
    return None


def line(a: int, b: int) -> PathConfig:
    """Horizontal line with a cells west and b cells east of the general."""
    return PathConfig("W" * a, "E" * b)


def firing_upper_bound(variation: Variation, C: Config) -> int:
    if isinstance(C, PathConfig):
        return -C.r + C.s + max(-C.r, C.s)
    return 3 * radius(C) + 1
