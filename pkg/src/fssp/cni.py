"""Noninterference of extensions and the free/closed hand classification.

K holds the windows with finitely many extension pairs; I and J hold the
windows that are infinite but become finite after growing the window by one
cell to the left (I) or right (J).  The noninterference condition holds
when every left extension combines with every right extension on all of
K, I and J.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .extensions import FgTable, Window, ni_witness
from .grid import PathConfig


class Hand(Enum):
    FREE = "FREE"
    CLOSED = "CLOSED"


class ConfigType(Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class HandStatus:
    left: Hand
    right: Hand

    @property
    def type(self) -> ConfigType:
        free = (self.left is Hand.FREE) + (self.right is Hand.FREE)
        return (ConfigType.III, ConfigType.II, ConfigType.I)[free]

    def __str__(self) -> str:
        return f"TYPE {self.type.value} left={self.left.value} right={self.right.value}"


@dataclass(frozen=True)
class Failure:
    window: Window
    clause: str  # 'K', 'I' or 'J'
    witness: tuple  # (x0, x1) conflicting extensions


@dataclass(frozen=True)
class CniReport:
    k_set: tuple
    i_set: tuple
    j_set: tuple
    failures: tuple

    @property
    def verdict(self) -> bool:
        return not self.failures


def _table(C: PathConfig, table: Optional[FgTable]) -> FgTable:
    return table if table is not None else FgTable(C)


def ijk_sets(C: PathConfig, table: Optional[FgTable] = None):
    """(I, J, K) as sorted tuples of windows."""
    T = _table(C, table)
    K, I, J = [], [], []
    for i in range(C.r, 1):
        for j in range(0, C.s + 1):
            if T.finite(i, j):
                K.append(Window(i, j))
                continue
            if C.r <= i - 1 and T.finite(i - 1, j):
                I.append(Window(i, j))
            if j + 1 <= C.s and T.finite(i, j + 1):
                J.append(Window(i, j))
    return tuple(I), tuple(J), tuple(K)


def cni_verdict(C: PathConfig, table: Optional[FgTable] = None) -> CniReport:
    I, J, K = ijk_sets(C, table)
    failures = []
    for clause, group in (("K", K), ("I", I), ("J", J)):
        for w in group:
            witness = ni_witness(C, w)
            if witness is not None:
                failures.append(Failure(w, clause, witness))
    return CniReport(K, I, J, tuple(failures))


def hand_status(C: PathConfig, table: Optional[FgTable] = None) -> HandStatus:
    T = _table(C, table)
    left = Hand.FREE if C.r == 0 or T.f_infinite(C.r + 1, C.s) else Hand.CLOSED
    right = Hand.FREE if C.s == 0 or T.g_infinite(C.r, C.s - 1) else Hand.CLOSED
    return HandStatus(left, right)


def free_left_first_finite(C: PathConfig, table: Optional[FgTable] = None) -> int:
    """Smallest j >= 0 with W(r, j) finite."""
    T = _table(C, table)
    for j in range(0, C.s + 1):
        if T.finite(C.r, j):
            return j
    raise AssertionError("W(r, s) is always finite")


def cni_type2_shortcut(C: PathConfig, table: Optional[FgTable] = None) -> bool:
    """Noninterference decided from the single window (r + 1, j0).

    Requires a free left hand, a closed right hand and r < 0.
    """
    T = _table(C, table)
    status = hand_status(C, T)
    if C.r == 0:
        raise ValueError("shortcut needs r < 0")
    if status.left is not Hand.FREE or status.right is not Hand.CLOSED:
        raise ValueError(f"shortcut needs a free left and closed right hand, got {status}")
    j0 = free_left_first_finite(C, T)
    return ni_witness(C, Window(C.r + 1, j0)) is None
