"""Local-map partial solution A_lm,T.

Each node carries its available information and fires the first time it
is unsafe, provided that happens by T; after T every node falls quiescent.
Because safeness of the available information does not depend on the node,
all nodes of a configuration share one firing time.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..grid import Config, radius
from ..mft.localmap import DEFAULT_BUDGET, is_safe, mft_localmap
from ..variations import Variation
from .signals import SimOutcome


@dataclass(frozen=True)
class LmSpec:
    variation: Variation
    t: int

    def in_domain(self, D: Config, budget: int = DEFAULT_BUDGET) -> bool:
        return mft_localmap(D, self.variation, budget).value <= self.t


def build_lm(C: Config, variation: Variation, T: int | None = None,
             budget: int = DEFAULT_BUDGET) -> LmSpec:
    if T is None:
        T = mft_localmap(C, variation, budget).value
    return LmSpec(variation, T)


def simulate_lm(spec: LmSpec, D: Config, budget: int = DEFAULT_BUDGET) -> SimOutcome:
    for t in range(0, spec.t + 1):
        if t < radius(D):
            continue  # some node is still quiescent, which is safe
        if not is_safe(D, t, spec.variation, budget).safe:
            return SimOutcome(True, t, frozenset(D.cells))
    return SimOutcome(False)
