"""Left/right extensions of a path window and the quantities built on them.

For a path C = p_r..p_s and a window (i, j) with r <= i <= 0 <= j <= s, a
left extension x0 is a self-avoiding, non-touching walk that starts at the
forced cell p_{i-1} and makes x0 p_i..p_j p_{j+1} a valid path (x0 is empty
when i = r).  Right extensions are the mirror image.  f(i, j) and g(i, j)
are the longest left and right extension lengths, or INFINITE.

Extensions are returned as cell tuples ordered outward, starting with the
forced cell.

The set of cells covered by left extensions is found by a plain BFS: a
cell lies on some valid extension exactly when it is reachable from
p_{i-1} through cells that are neither fixed nor adjacent to a fixed cell,
because a shortest route in an induced grid subgraph never touches itself.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

from .grid import PathConfig, neighbors, serialize

INFINITE = math.inf
BOX_MARGIN = 3


def fmt_value(v) -> str:
    return "INF" if v == INFINITE else str(int(v))


@dataclass(frozen=True, order=True)
class Window:
    i: int
    j: int

    def check(self, C: PathConfig) -> None:
        if not (C.r <= self.i <= 0 <= self.j <= C.s):
            raise ValueError(f"window ({self.i},{self.j}) outside [{C.r},{C.s}]")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def windows(C: PathConfig):
    """All windows in deterministic (i, j) order."""
    return [Window(i, j) for i in range(C.r, 1) for j in range(0, C.s + 1)]


def box_half_width(C: PathConfig) -> int:
    return max(-C.r, C.s) + BOX_MARGIN


def _as_window(w) -> Window:
    return w if isinstance(w, Window) else Window(*w)


class _LeftSide:
    """Geometry of left extensions for one window."""

    def __init__(self, C: PathConfig, i: int, j: int, half_width: int | None = None):
        self.C = C
        self.empty = i == C.r
        hi = j + 1 if j < C.s else j
        self.fixed = frozenset(C.positions[i - C.r: hi - C.r + 1])
        blocked = set(self.fixed)
        for q in self.fixed:
            blocked.update(neighbors(q))
        self.blocked = frozenset(blocked)
        self.start = None if self.empty else C.p(i - 1)
        self.m = box_half_width(C) if half_width is None else half_width
        xs = [q[0] for q in C.positions]
        ys = [q[1] for q in C.positions]
        # cells outside this rectangle touch nothing of C and form one
        # connected unbounded area
        self.outer = (min(xs) - 2, max(xs) + 2, min(ys) - 2, max(ys) + 2)

    def in_box(self, q) -> bool:
        return max(abs(q[0]), abs(q[1])) <= self.m

    def on_rim(self, q) -> bool:
        return max(abs(q[0]), abs(q[1])) == self.m

    def outside(self, q) -> bool:
        x0, x1, y0, y1 = self.outer
        return not (x0 < q[0] < x1 and y0 < q[1] < y1)

    def free(self, q) -> bool:
        return q not in self.blocked

    def reach(self, clip_to_box: bool):
        """BFS from the start cell.  Returns (cells, parent, unbounded).

        With clip_to_box the search covers the box X; otherwise it stops as
        soon as the unbounded outer area is entered, which is enough to
        decide finiteness and interference.
        """
        if self.empty:
            return frozenset(), {}, False
        parent = {self.start: None}
        queue = deque([self.start])
        unbounded = False
        while queue:
            p = queue.popleft()
            for q in neighbors(p):
                if q in parent or not self.free(q):
                    continue
                if clip_to_box:
                    if not self.in_box(q):
                        continue
                    if self.on_rim(q):
                        unbounded = True
                else:
                    if self.outside(q):
                        unbounded = True
                        parent[q] = p
                        continue
                parent[q] = p
                queue.append(q)
        return frozenset(parent), parent, unbounded

    def extendable(self, path, used, q) -> bool:
        if q in used or not self.free(q):
            return False
        tip = path[-1]
        return not any(nb in used and nb != tip for nb in neighbors(q))

    def longest(self):
        """Exhaustive longest extension (only call when finite)."""
        if self.empty:
            return ()
        best = [(self.start,)]
        path = [self.start]
        used = {self.start}

        def bound() -> int:
            tip = path[-1]
            seen = {tip}
            queue = deque([tip])
            while queue:
                p = queue.popleft()
                for q in neighbors(p):
                    if q in seen or q in used or not self.free(q):
                        continue
                    seen.add(q)
                    queue.append(q)
            return len(path) + len(seen) - 1

        def rec():
            if len(path) > len(best[0]):
                best[0] = tuple(path)
            if bound() <= len(best[0]):
                return
            for q in neighbors(path[-1]):
                if self.extendable(path, used, q):
                    path.append(q)
                    used.add(q)
                    rec()
                    path.pop()
                    used.discard(q)

        rec()
        return best[0]


def walks(C: PathConfig, i: int, j: int, max_len: int, cell_ok=None):
    """Left extensions of window (i, j) with 1..max_len cells, unbounded
    plane, DFS order.  Yields nothing when i = r."""
    side = _LeftSide(C, i, j)
    if side.empty or max_len < 1:
        return
    if cell_ok is not None and not cell_ok(side.start):
        return
    path = [side.start]
    used = {side.start}

    def rec():
        yield tuple(path)
        if len(path) == max_len:
            return
        for q in neighbors(path[-1]):
            if (cell_ok is None or cell_ok(q)) and side.extendable(path, used, q):
                path.append(q)
                used.add(q)
                yield from rec()
                path.pop()
                used.discard(q)

    yield from rec()


def find_walk(C: PathConfig, i: int, j: int, length: int, cell_ok=None):
    """Some left extension of window (i, j) with exactly ``length`` cells,
    or None.  Depth-first with a reachable-area bound."""
    side = _LeftSide(C, i, j)
    if side.empty or length < 1:
        return None
    if cell_ok is not None and not cell_ok(side.start):
        return None
    path = [side.start]
    used = {side.start}

    def room() -> int:
        # free cells reachable from the tip, capped at what is still needed
        need = length - len(path)
        seen = {path[-1]}
        queue = deque([path[-1]])
        while queue and len(seen) - 1 < need:
            p = queue.popleft()
            for q in neighbors(p):
                if q in seen or q in used or not side.free(q):
                    continue
                if cell_ok is not None and not cell_ok(q):
                    continue
                seen.add(q)
                queue.append(q)
        return len(seen) - 1

    def rec():
        if len(path) == length:
            return tuple(path)
        if room() < length - len(path):
            return None
        for q in neighbors(path[-1]):
            if (cell_ok is None or cell_ok(q)) and side.extendable(path, used, q):
                path.append(q)
                used.add(q)
                found = rec()
                if found:
                    return found
                path.pop()
                used.discard(q)
        return None

    return rec()


def _mirror_window(C: PathConfig, i: int, j: int):
    return C.reversed(), -j, -i


class Enumeration(NamedTuple):
    paths: list
    infinite: bool
    truncated: bool


def enumerate_left_extensions(C: PathConfig, w, cap: int = 0) -> Enumeration:
    """Every left extension of window w in preorder DFS (E, N, W, S).

    When i = r the only extension is the empty one and ``paths == [()]``.
    With cap = 0 the search runs inside the box X and stops, flagging the
    set infinite, as soon as an extension reaches the rim X'.  With cap > 0
    at most cap extensions are produced; rim hits are still flagged.
    """
    w = _as_window(w)
    w.check(C)
    side = _LeftSide(C, w.i, w.j)
    if side.empty:
        return Enumeration([()], False, False)
    out = []
    infinite = False
    path = [side.start]
    used = {side.start}

    class _Stop(Exception):
        pass

    def rec():
        nonlocal infinite
        out.append(tuple(path))
        if cap and len(out) >= cap:
            raise _Stop
        for q in neighbors(path[-1]):
            if not side.in_box(q) or not side.extendable(path, used, q):
                continue
            if side.on_rim(q):
                infinite = True
                if not cap:
                    raise _Stop
            path.append(q)
            used.add(q)
            rec()
            path.pop()
            used.discard(q)

    truncated = False
    try:
        rec()
    except _Stop:
        truncated = bool(cap) and len(out) >= cap
    return Enumeration(out, infinite, truncated)


def enumerate_right_extensions(C: PathConfig, w, cap: int = 0) -> Enumeration:
    w = _as_window(w)
    w.check(C)
    R, i, j = _mirror_window(C, w.i, w.j)
    return enumerate_left_extensions(R, Window(i, j), cap)


@dataclass(frozen=True)
class ExtensionStats:
    """f/g values and covered cell sets for one window."""

    C: PathConfig = field(repr=False)
    window: Window
    f: float
    g: float
    f_witness: Optional[tuple] = field(default=None, repr=False)
    g_witness: Optional[tuple] = field(default=None, repr=False)

    @property
    def finite(self) -> bool:
        return self.f != INFINITE and self.g != INFINITE

    @cached_property
    def u_cells(self) -> frozenset:
        """Cells used by some left extension, clipped to the box X."""
        return _LeftSide(self.C, self.window.i, self.window.j).reach(True)[0]

    @cached_property
    def v_cells(self) -> frozenset:
        R, i, j = _mirror_window(self.C, self.window.i, self.window.j)
        return _LeftSide(R, i, j).reach(True)[0]

    @property
    def h(self) -> float:
        return h_value(self.window.i, self.window.j, self.f, self.g)


def h_value(i: int, j: int, f, g):
    return max(-2 * i + j + g, 2 * j - i + f)


def _side_value(side: _LeftSide):
    """(length, witness) for one side; length INFINITE when unbounded."""
    if side.empty:
        return 0, ()
    _, _, unbounded = side.reach(False)
    if unbounded:
        return INFINITE, None
    best = side.longest()
    return len(best), best


def left_value(C: PathConfig, i: int, j: int):
    Window(i, j).check(C)
    return _side_value(_LeftSide(C, i, j))


def right_value(C: PathConfig, i: int, j: int):
    Window(i, j).check(C)
    R, a, b = _mirror_window(C, i, j)
    return _side_value(_LeftSide(R, a, b))


def extension_stats(C: PathConfig, w) -> ExtensionStats:
    w = _as_window(w)
    w.check(C)
    f, fw = left_value(C, w.i, w.j)
    g, gw = right_value(C, w.i, w.j)
    return ExtensionStats(C, w, f, g, fw, gw)


def f_value(C: PathConfig, i: int, j: int):
    return left_value(C, i, j)[0]


def g_value(C: PathConfig, i: int, j: int):
    return right_value(C, i, j)[0]


# -- interference ------------------------------------------------------------

def _route(parent, cell) -> tuple:
    out = []
    while cell is not None:
        out.append(cell)
        cell = parent[cell]
    return tuple(reversed(out))


def ni_witness(C: PathConfig, w):
    """None when left and right extensions never interfere, otherwise a
    conflicting pair (x0, x1) of extensions."""
    w = _as_window(w)
    w.check(C)
    left = _LeftSide(C, w.i, w.j)
    R, a, b = _mirror_window(C, w.i, w.j)
    right = _LeftSide(R, a, b)
    u, upar, u_inf = left.reach(False)
    v, vpar, v_inf = right.reach(False)
    if not u or not v:
        return None
    if u_inf and v_inf:
        # both reach the unbounded outer area; search the box for a meeting cell
        u, upar, _ = left.reach(True)
        v, vpar, _ = right.reach(True)
    for c in sorted(u):
        for d in (c,) + neighbors(c):
            if d in v:
                return _route(upar, c), _route(vpar, d)
    return None


def ni_check(C: PathConfig, w) -> bool:
    return ni_witness(C, w) is None


@dataclass(frozen=True)
class BruteforceResult:
    holds: Optional[bool]  # None when a cap cut the enumeration short
    witness: Optional[tuple] = None


def combine(C: PathConfig, w, x0, x1) -> PathConfig:
    """The configuration x0 p_i..p_j x1 (extensions given outward)."""
    w = _as_window(w)
    core = list(C.positions[w.i - C.r: w.j - C.r + 1])
    cells = list(reversed(x0)) + core + list(x1)
    return PathConfig.from_positions(cells, len(x0) - w.i)


def ni_bruteforce(C: PathConfig, w, cap: int = 0) -> BruteforceResult:
    """Test every pair of enumerated left and right extensions."""
    from .grid import validate_bruteforce

    w = _as_window(w)
    lefts = enumerate_left_extensions(C, w, cap)
    rights = enumerate_right_extensions(C, w, cap)
    if not cap and (lefts.infinite or rights.infinite):
        raise ValueError("window has infinitely many extensions; pass a cap")
    for x0 in lefts.paths:
        for x1 in rights.paths:
            cells = list(reversed(x0)) + list(C.positions[w.i - C.r: w.j - C.r + 1]) + list(x1)
            trial = PathConfig.from_positions(cells, len(x0) - w.i)
            if validate_bruteforce(trial) is not None:
                return BruteforceResult(False, (x0, x1))
    if lefts.truncated or rights.truncated or lefts.infinite or rights.infinite:
        return BruteforceResult(None)
    return BruteforceResult(True)


# -- table -------------------------------------------------------------------

class FgTable:
    """f, g and h over the windows of C, computed on demand and cached.

    Finiteness needs only a BFS; exact finite values run the longest
    extension search, so callers that only ask about finiteness stay cheap.
    """

    def __init__(self, C: PathConfig):
        self.C = C
        self._left = {}
        self._right = {}
        self._left_inf = {}
        self._right_inf = {}

    def f_infinite(self, i: int, j: int) -> bool:
        key = (i, j)
        if key not in self._left_inf:
            side = _LeftSide(self.C, i, j)
            self._left_inf[key] = not side.empty and side.reach(False)[2]
        return self._left_inf[key]

    def g_infinite(self, i: int, j: int) -> bool:
        key = (i, j)
        if key not in self._right_inf:
            R, a, b = _mirror_window(self.C, i, j)
            side = _LeftSide(R, a, b)
            self._right_inf[key] = not side.empty and side.reach(False)[2]
        return self._right_inf[key]

    def finite(self, i: int, j: int) -> bool:
        """W(i, j) is finite."""
        return not self.f_infinite(i, j) and not self.g_infinite(i, j)

    def _f(self, i, j):
        if (i, j) not in self._left:
            if self.f_infinite(i, j):
                self._left[(i, j)] = (INFINITE, None)
            else:
                self._left[(i, j)] = _side_value(_LeftSide(self.C, i, j))
        return self._left[(i, j)]

    def _g(self, i, j):
        if (i, j) not in self._right:
            if self.g_infinite(i, j):
                self._right[(i, j)] = (INFINITE, None)
            else:
                R, a, b = _mirror_window(self.C, i, j)
                self._right[(i, j)] = _side_value(_LeftSide(R, a, b))
        return self._right[(i, j)]

    def f(self, i: int, j: int):
        return self._f(i, j)[0]

    def g(self, i: int, j: int):
        return self._g(i, j)[0]

    def h(self, i: int, j: int):
        if not self.finite(i, j):
            return INFINITE
        return h_value(i, j, self.f(i, j), self.g(i, j))

    def stats(self, w) -> ExtensionStats:
        w = _as_window(w)
        f, fw = self._f(w.i, w.j)
        g, gw = self._g(w.i, w.j)
        return ExtensionStats(self.C, w, f, g, fw, gw)

    def rows(self):
        for w in windows(self.C):
            yield w, self.stats(w)

    def to_tsv(self) -> str:
        lines = ["\t".join(("i", "j", "f", "g", "A", "B", "h"))]
        for w, st in self.rows():
            a = -2 * w.i + w.j + st.g
            b = 2 * w.j - w.i + st.f
            lines.append("\t".join([str(w.i), str(w.j)] + [fmt_value(v) for v in (st.f, st.g, a, b, st.h)]))
        return "\n".join(lines) + "\n"


def _row_values(args):
    text, i = args
    from .grid import parse_config
    C = parse_config(text)
    table = FgTable(C)
    return [(table._f(i, j), table._g(i, j)) for j in range(C.s + 1)]


def fg_table(C: PathConfig, threads: int = 1) -> FgTable:
    """Fully evaluated table.  threads > 1 spreads rows over a process pool;
    the result does not depend on the thread count."""
    table = FgTable(C)
    rows_i = list(range(C.r, 1))
    if threads > 1 and len(rows_i) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_row_values, [(serialize(C), i) for i in rows_i]))
        for i, row in zip(rows_i, results):
            for j, (fv, gv) in enumerate(row):
                table._left[(i, j)] = fv
                table._right[(i, j)] = gv
                table._left_inf[(i, j)] = fv[0] == INFINITE
                table._right_inf[(i, j)] = gv[0] == INFINITE
    else:
        for w in windows(C):
            table._f(w.i, w.j)
            table._g(w.i, w.j)
    return table
