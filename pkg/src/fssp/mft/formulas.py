"""Closed-form minimum firing times for paths with the general anywhere.

Every formula is expressed through the extension lengths f and g.  When no
closed form applies the result is a bracket [lower, upper].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

from ..cni import ConfigType, Hand, cni_verdict, hand_status
from ..extensions import INFINITE, FgTable, Window
from ..grid import PathConfig


class Method(Enum):
    LOCALMAP = "localmap"
    T_TILDE = "t_tilde"
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    TWO_PATH_J0 = "two_path_j0"
    FREE_LEFT_J0 = "free_left_j0"
    BRACKET = "bracket"  # lower and upper bounds coincide
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MftResult:
    value: Optional[int]  # None when inconclusive
    method: Method
    lower: int
    upper: int
    witnesses: tuple = ()  # minimizing windows, or a safeness chain
    cross_checks: dict = field(default_factory=dict)

    @property
    def conclusive(self) -> bool:
        return self.value is not None


def t_tilde(C: PathConfig, table: Optional[FgTable] = None):
    """(T~, minimizing windows in (i, j) order)."""
    T = table if table is not None else FgTable(C)
    best = INFINITE
    argmin = []
    for i in range(C.r, 1):
        for j in range(0, C.s + 1):
            h = T.h(i, j)
            if h < best:
                best, argmin = h, [Window(i, j)]
            elif h == best:
                argmin.append(Window(i, j))
    return int(best), tuple(argmin)


def type_i_value(r: int, s: int) -> int:
    return -r + s + max(-r, s)


def type_ii_value(r: int, s: int) -> int:
    """Free left hand with -r >= s."""
    return -2 * r + s


def two_path_j0(g_row: Mapping[int, float]):
    """General at the left end: (mft, j0) from the row j -> g(0, j).

    j0 is the least j with g(0, j) <= j + 1.
    """
    for j in sorted(g_row):
        g = g_row[j]
        if g <= j + 1:
            return (2 * j + 1 if g == j + 1 else 2 * j), j
    raise ValueError("g row never drops to j + 1")


def free_left_j0(r: int, s: int, g_row: Mapping[int, float]):
    """Free left hand and noninterference: (mft, j0) from j -> g(r, j).

    j0 is None when -r > s, where the value is -2r + s outright.
    """
    if -r > s:
        return -2 * r + s, None
    for j in sorted(g_row):
        a = -r + g_row[j]
        if a <= j + 1:
            return (-r + 2 * j + 1 if a == j + 1 else -r + 2 * j), j
    raise ValueError("g row never satisfies -r + g <= j + 1")


def mft_bounds(C: PathConfig, table: Optional[FgTable] = None):
    T = table if table is not None else FgTable(C)
    status = hand_status(C, T)
    r, s = C.r, C.s
    lower = 0
    if status.left is Hand.FREE:
        lower = max(lower, -2 * r + s)
    if status.right is Hand.FREE:
        lower = max(lower, -r + 2 * s)
    upper = min(type_i_value(r, s), t_tilde(C, T)[0])
    return lower, upper


def mft_formula(C: PathConfig, table: Optional[FgTable] = None) -> MftResult:
    T = table if table is not None else FgTable(C)
    r, s = C.r, C.s
    status = hand_status(C, T)
    lower, upper = mft_bounds(C, T)
    if status.type is ConfigType.I:
        v = type_i_value(r, s)
        return MftResult(v, Method.TYPE_I, v, v)
    if status.type is ConfigType.II:
        if status.left is Hand.FREE and -r >= s:
            v = type_ii_value(r, s)
            return MftResult(v, Method.TYPE_II, v, v)
        if status.right is Hand.FREE and s >= -r:
            v = type_ii_value(-s, -r)
            return MftResult(v, Method.TYPE_II, v, v)
    value, argmin = t_tilde(C, T)
    if not cni_verdict(C, T).verdict:
        if lower == upper:
            return MftResult(lower, Method.BRACKET, lower, upper, argmin)
        return MftResult(None, Method.INCONCLUSIVE, lower, upper, argmin)
    checks = {}
    if r == 0:
        checks[Method.TWO_PATH_J0] = two_path_j0({j: T.g(0, j) for j in range(s + 1)})[0]
    if status.left is Hand.FREE:
        checks[Method.FREE_LEFT_J0] = free_left_j0(r, s, {j: T.g(r, j) for j in range(s + 1)})[0]
    return MftResult(value, Method.T_TILDE, value, value, argmin, checks)
