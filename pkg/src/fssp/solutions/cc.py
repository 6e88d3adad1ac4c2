"""Consistency-checking partial solution.

With T = mft(C), every member C_k of the equivalence class of C at time T
and every node p_u of C_k give a small automaton A1(a, b, C_k) that checks
the window p_a..p_b = M(p_u, T, C_k) and fires the nodes p_z with
a' <= z <= b'.  A greedy interval cover per class member keeps only the
automata needed to fire every node; identical automata are merged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..grid import Config, PathConfig, boundary_condition
from ..mft.localmap import DEFAULT_BUDGET, mft_localmap, window
from ..variations import Variation
from .signals import SimOutcome, checker_arrival, wave


@dataclass(frozen=True)
class Automaton:
    """A1(a, b, C_k): checks window p_a..p_b of C_k with its boundary conditions."""

    a: int
    b: int
    cells: tuple  # p_a..p_b
    bcs: tuple

    @property
    def key(self) -> frozenset:
        return frozenset(zip(self.cells, self.bcs))

    def matches(self, D: Config) -> bool:
        return all(c in D.cells and boundary_condition(D, c) == bc
                   for c, bc in zip(self.cells, self.bcs))


@dataclass(frozen=True)
class CcEntry:
    member: int  # index k of C_k
    automaton: Automaton
    interval: tuple  # (a', b')


@dataclass(frozen=True)
class CcSpec:
    t: int
    members: tuple = field(repr=False)
    entries: tuple = field(repr=False)  # distinct (k, a, b) in class order
    covers: tuple = field(repr=False)  # per member: tuple of chosen CcEntry
    selected: tuple = field(repr=False)  # merged automata actually simulated

    @property
    def n(self) -> int:
        return len(self.selected)

    @property
    def state_count(self) -> int:
        return 4 ** self.n * (self.t + 2)


def firing_interval(a: int, b: int, T: int, r: int, s: int) -> tuple[int, int]:
    """Indices z whose node p_z receives both signals of A1(a, b, .) by T."""
    return max(r, 2 * b - T), min(s, T + 2 * a)


def greedy_cover(intervals, r: int, s: int) -> list:
    """Indices of a covering subset of [r, s]: from the leftmost uncovered
    point, take the interval reaching furthest right (first on ties)."""
    chosen = []
    point = r
    while point <= s:
        best = None
        for k, (lo, hi) in enumerate(intervals):
            if lo <= point and hi >= point and (best is None or hi > intervals[best][1]):
                best = k
        if best is None:
            raise RuntimeError(f"point {point} of [{r}, {s}] is not covered")
        chosen.append(best)
        point = intervals[best][1] + 1
    return chosen


def build_cc(C: PathConfig, variation: Variation, budget: int = DEFAULT_BUDGET) -> CcSpec:
    if not variation.path_shaped:
        raise NotImplementedError("consistency checking is only built for path variations")
    result = mft_localmap(C, variation, budget)
    T = result.value
    members = result.unsafe_class
    entries = []
    covers = []
    for k, D in enumerate(members):
        per = {}
        for u in range(D.r, D.s + 1):
            a, b = window(D, u, T)
            if (a, b) in per:
                continue
            cells = D.positions[a - D.r: b - D.r + 1]
            aut = Automaton(a, b, cells, tuple(boundary_condition(D, c) for c in cells))
            per[(a, b)] = CcEntry(k, aut, firing_interval(a, b, T, D.r, D.s))
        rows = [per[ab] for ab in sorted(per)]
        entries.extend(rows)
        picks = greedy_cover([e.interval for e in rows], D.r, D.s)
        covers.append(tuple(rows[p] for p in picks))
    merged = {}
    for cover in covers:
        for e in cover:
            merged.setdefault(e.automaton.key, e.automaton)
    return CcSpec(T, members, tuple(entries), tuple(covers), tuple(merged.values()))


def simulate_cc(spec: CcSpec, D: Config) -> SimOutcome:
    T = spec.t
    fired = set()
    for aut in spec.selected:
        if not aut.matches(D):
            continue
        # walk the checkers out to both window ends, then flood back
        idx = {c: aut.a + k for k, c in enumerate(aut.cells)}
        origin = idx[(0, 0)]
        left = [aut.cells[k - aut.a] for k in range(origin, aut.a - 1, -1)]
        right = [aut.cells[k - aut.a] for k in range(origin, aut.b + 1)]
        bcs = dict(zip(aut.cells, aut.bcs))
        t_l = checker_arrival(D, left, [bcs[c] for c in left])
        t_r = checker_arrival(D, right, [bcs[c] for c in right])
        if t_l is None or t_r is None:
            continue
        s1 = wave(D, left[-1], t_l, T)
        s2 = wave(D, right[-1], t_r, T)
        fired.update(v for v in D.cells if s1.get(v, T + 1) <= T and s2.get(v, T + 1) <= T)
    fired = frozenset(fired)
    if fired and fired == D.cells:
        return SimOutcome(True, T, fired)
    return SimOutcome(False, None, fired)
