"""Exact state-count bounds for the partial solutions and the resulting
minimum-state-solution bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Optional

from ..cni import cni_verdict
from ..extensions import FgTable
from ..grid import Config, PathConfig
from ..mft.formulas import t_tilde
from ..mft.localmap import DEFAULT_BUDGET, mft_localmap
from ..variations import Kind, Variation

REGION_SOLUTION_STATES = 296  # known minimal-time solution for regions
PATH_SOLUTION_STATES = 6  # known minimal-time solution for paths


class BoundKind(Enum):
    REG_LM = "reg-lm"
    GPATH_LM = "gpath-lm"
    PATH_LM = "path-lm"
    REF_GPATH = "ref-gpath"
    REF_PATH = "ref-path"
    CC = "cc"


@dataclass(frozen=True)
class Bounds:
    lower: Optional[int]
    upper: int


def _geometric(T: int) -> int:
    return (4 ** (T + 1) - 1) // 3  # 1 + 4 + ... + 4^T


def _icbrt_ceil(n: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // 3 + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** 3 >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def state_bounds(T: int, kind: BoundKind, n: int | None = None) -> Bounds:
    if T < 0:
        raise ValueError("T must be nonnegative")
    if kind is BoundKind.REG_LM:
        upper = 1 + (T + 1) * (2 * T + 1) ** 2 * 2 ** (16 * (2 * T + 1) ** 2)
        lower = _icbrt_ceil(2 ** ((T - 3) ** 2))  # ceil(2^((T-3)^2 / 3))
        return Bounds(lower, upper)
    if kind is BoundKind.GPATH_LM:
        upper = 1 + (T + 1) * (2 * T + 1) ** 2 * _geometric(T) ** 2 * 16 ** 2
        h = T // 2
        return Bounds(comb(h, h // 2) ** 2, upper)
    if kind is BoundKind.PATH_LM:
        upper = 1 + (T + 1) * (2 * T + 1) ** 2 * _geometric(T) * 16
        h = T // 2
        return Bounds(comb(h, h // 2), upper)
    if kind is BoundKind.REF_GPATH:
        return Bounds(None, 4 * T + 8)
    if kind is BoundKind.REF_PATH:
        return Bounds(None, T + 2)
    if kind is BoundKind.CC:
        if n is None or n < 1:
            raise ValueError("cc bounds need the automaton count n >= 1")
        return Bounds(None, 4 ** n * (T + 2))
    raise ValueError(kind)


def cc_generic_bound(T: int) -> int:
    """Bound for the unreduced consistency-checking solution; only small T
    are materialized since the value has about 4^(2T) binary digits."""
    if T > 4:
        raise ValueError("value too large to materialize for T > 4")
    return 4 ** ((4 ** (T + 1) - 1) ** 2 // 9) * (T + 2)


def wrapper_factor(kind: BoundKind) -> int:
    return REGION_SOLUTION_STATES if kind is BoundKind.REG_LM else PATH_SOLUTION_STATES


def format_big(n: int) -> str:
    """Five significant digits (truncated) and the decimal exponent."""
    if n <= 0:
        raise ValueError("positive integers only")
    e = int((n.bit_length() - 1) * math.log10(2))
    while 10 ** (e + 1) <= n:
        e += 1
    while 10 ** e > n:
        e -= 1
    lead = n // 10 ** (e - 4) if e >= 4 else n * 10 ** (4 - e)
    text = str(lead)
    return f"{text[0]}.{text[1:]}e{e}"


def describe_big(n: int) -> str:
    text = format_big(n)
    if n <= 10 ** 24:
        text += f" ({n})"
    return text


@dataclass(frozen=True)
class MssBound:
    value: int
    source: str
    t: int


def mss_upper(C: Config, variation: Variation, budget: int = DEFAULT_BUDGET) -> MssBound:
    """Best available upper bound on the states of a solution firing C at mft(C)."""
    if variation.kind is Kind.TWO_REG:
        T = mft_localmap(C, variation, budget).value
        return MssBound(REGION_SOLUTION_STATES * state_bounds(T, BoundKind.REG_LM).upper, "reg-lm", T)
    assert isinstance(C, PathConfig)
    table = FgTable(C)
    value, _ = t_tilde(C, table)
    if variation.kind is Kind.TWO_PATH or C.r == 0 or C.s == 0:
        return MssBound(PATH_SOLUTION_STATES * state_bounds(value, BoundKind.REF_PATH).upper, "ref-path", value)
    T = None
    certified = variation.kind is Kind.G_TWO_PATH and cni_verdict(C, table).verdict
    if not certified:
        T = mft_localmap(C, variation, budget).value
        certified = variation.kind is Kind.G_TWO_PATH and T == value
    if certified:
        return MssBound(PATH_SOLUTION_STATES * state_bounds(value, BoundKind.REF_GPATH).upper, "ref-gpath", value)
    from .cc import build_cc

    spec = build_cc(C, variation, budget)
    cc = PATH_SOLUTION_STATES * spec.state_count
    lm = PATH_SOLUTION_STATES * state_bounds(spec.t, BoundKind.GPATH_LM).upper
    if cc <= lm:
        return MssBound(cc, "cc", spec.t)
    return MssBound(lm, "gpath-lm", spec.t)
