"""Synchronous signal primitives shared by the partial-solution simulators."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..grid import Config, boundary_condition, neighbors


class Status(Enum):
    FIRES = "FIRES"
    NEVER_FIRES = "NEVER_FIRES"


@dataclass(frozen=True)
class SimOutcome:
    fired: bool
    fire_time: Optional[int] = None
    fired_nodes: frozenset = frozenset()
    trace: tuple = ()  # per time step: frozenset of nodes carrying a signal

    @property
    def status(self) -> Status:
        return Status.FIRES if self.fired else Status.NEVER_FIRES

    def __str__(self) -> str:
        if self.fired:
            return f"FIRES {self.fire_time}"
        return "NEVER_FIRES"


def checker_arrival(C: Config, route, expected_bcs) -> Optional[int]:
    """Walk a checking signal from the general along ``route`` (cells in
    order, starting at the origin), one cell per step, verifying each
    boundary condition.  Returns the arrival time at the last cell, or
    None when the signal vanishes on a mismatch."""
    for cell, bc in zip(route, expected_bcs):
        if cell not in C.cells or boundary_condition(C, cell) != bc:
            return None
    return len(route) - 1


def wave(C: Config, source, start: int, horizon: int):
    """Arrival time at each node of a signal emitted at ``source`` at time
    ``start`` that copies itself to every neighbour each step, simulated
    step by step up to ``horizon``."""
    arrived = {source: start}
    frontier = [source]
    t = start
    while frontier and t < horizon:
        t += 1
        nxt = []
        for p in frontier:
            for q in neighbors(p):
                if q in C.cells and q not in arrived:
                    arrived[q] = t
                    nxt.append(q)
        frontier = nxt
    return arrived
