"""Reflection partial solution.

Two checking signals leave the general: R walks to p_{i0} and R' to p_{j0},
each verifying the cells and boundary conditions of the window
y = p_{i0}..p_{j0}.  On arrival they emit the flood signals S and S'.  A
node fires at T~ exactly when it holds both floods.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..extensions import FgTable, Window, enumerate_left_extensions, enumerate_right_extensions
from ..grid import Config, PathConfig, boundary_condition, config_key, validate
from ..mft.formulas import t_tilde
from .signals import SimOutcome, checker_arrival, wave


@dataclass(frozen=True)
class ReflectionSpec:
    C: PathConfig = field(repr=False)
    i0: int
    j0: int
    t_tilde: int
    y: tuple  # ((cell, bc), ...) for p_{i0}..p_{j0}
    domain_finite: bool
    state_count_bound: int

    def in_domain(self, D: Config) -> bool:
        """D is a consistent extension of y."""
        return all(c in D.cells and boundary_condition(D, c) == bc for c, bc in self.y)

    def _route(self, lo: int, hi: int):
        pairs = dict(zip(range(self.i0, self.j0 + 1), self.y))
        step = -1 if hi < lo else 1
        seq = [pairs[k] for k in range(lo, hi + step, step)]
        return [c for c, _ in seq], [bc for _, bc in seq]

    def domain(self) -> Optional[list]:
        """Every consistent extension of y, or None when there are infinitely many."""
        if not self.domain_finite:
            return None
        w = Window(self.i0, self.j0)
        lefts = enumerate_left_extensions(self.C, w).paths
        rights = enumerate_right_extensions(self.C, w).paths
        core = self.C.positions[self.i0 - self.C.r: self.j0 - self.C.r + 1]
        out = {}
        for x0 in lefts:
            for x1 in rights:
                cells = list(reversed(x0)) + list(core) + list(x1)
                D = PathConfig.from_positions(cells, len(x0) - self.i0)
                if validate(D) is None:
                    out.setdefault(config_key(D), D.canonical())
        return [out[k] for k in sorted(out)]


def build_reflection(C: PathConfig, table: Optional[FgTable] = None) -> ReflectionSpec:
    T = table if table is not None else FgTable(C)
    value, argmin = t_tilde(C, T)
    w = argmin[0]
    y = tuple((C.p(k), boundary_condition(C, C.p(k))) for k in range(w.i, w.j + 1))
    general_at_end = C.r == 0 or C.s == 0
    bound = value + 2 if general_at_end else 4 * value + 8
    return ReflectionSpec(C, w.i, w.j, value, y, T.finite(w.i, w.j), bound)


def simulate_reflection(spec: ReflectionSpec, D: Config, trace: bool = False) -> SimOutcome:
    horizon = spec.t_tilde
    cells_l, bcs_l = spec._route(0, spec.i0)
    cells_r, bcs_r = spec._route(0, spec.j0)
    t_left = checker_arrival(D, cells_l, bcs_l)
    t_right = checker_arrival(D, cells_r, bcs_r)
    s_wave = wave(D, cells_l[-1], t_left, horizon) if t_left is not None else {}
    s2_wave = wave(D, cells_r[-1], t_right, horizon) if t_right is not None else {}
    fired = frozenset(v for v in D.cells
                      if s_wave.get(v, horizon + 1) <= horizon and s2_wave.get(v, horizon + 1) <= horizon)
    steps = ()
    if trace:
        steps = tuple(frozenset(v for v in D.cells if s_wave.get(v, horizon + 1) <= t
                                and s2_wave.get(v, horizon + 1) <= t) for t in range(horizon + 1))
    if fired == D.cells:
        return SimOutcome(True, horizon, fired, steps)
    return SimOutcome(False, None, fired, steps)
