"""Grid geometry and configuration types.

Configurations are either paths (``PathConfig``) written as two move strings
leading away from the general at the origin, or regions (``RegionConfig``)
given as a finite connected cell set.  Everything here is immutable.

Text format, one record per line::

    PATH <left>|<right>        moves in {E,N,W,S}, '.' for an empty side
    REG (x1,y1),(x2,y2),...    cells sorted by (x, y)
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Union

DIM = 2  # every algorithm in the package is planar


class Position(NamedTuple):
    x: int
    y: int


class Direction(IntEnum):
    E = 0
    N = 1
    W = 2
    S = 3

    @property
    def offset(self) -> tuple[int, int]:
        return OFFSETS[self]

    @property
    def letter(self) -> str:
        return self.name

    def turn(self, k: int) -> "Direction":
        return Direction((self + k) % 4)


OFFSETS = ((1, 0), (0, 1), (-1, 0), (0, -1))
LETTERS = "ENWS"
_LETTER_INDEX = {c: i for i, c in enumerate(LETTERS)}

BoundaryCondition = tuple  # 4-tuple of 0/1 in direction order E,N,W,S


def step(p, d: int) -> tuple[int, int]:
    dx, dy = OFFSETS[d]
    return (p[0] + dx, p[1] + dy)


def neighbors(p) -> tuple[tuple[int, int], ...]:
    x, y = p
    return ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1))


def adjacent(p, q) -> bool:
    return abs(p[0] - q[0]) + abs(p[1] - q[1]) == 1


def direction_between(p, q) -> int:
    """Direction index of the unit move p -> q."""
    return OFFSETS.index((q[0] - p[0], q[1] - p[1]))


class ConfigError(ValueError):
    """Base class for rejected configuration text or geometry."""


class ConfigSyntaxError(ConfigError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


@dataclass(frozen=True)
class Violation:
    """First broken invariant found by :func:`validate`."""

    kind: str  # 'adjacency' | 'duplicate' | 'touching' | 'origin' | 'connectivity'
    indices: tuple
    message: str

    def __str__(self) -> str:
        return self.message


class ConfigValidityError(ConfigError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def _walk(moves: str, start=(0, 0)) -> list[tuple[int, int]]:
    out = []
    p = start
    for c in moves:
        p = step(p, _LETTER_INDEX[c])
        out.append(p)
    return out


@dataclass(frozen=True)
class PathConfig:
    """Path p_r .. p_0 .. p_s with p_0 = (0, 0) the general.

    ``left`` holds the moves p_0 -> p_-1 -> ... -> p_r and ``right`` the moves
    p_0 -> p_1 -> ... -> p_s.  Positions are derived; construction does not
    validate (see :func:`validate`).
    """

    left: str = ""
    right: str = ""
    _positions: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for moves in (self.left, self.right):
            bad = [c for c in moves if c not in _LETTER_INDEX]
            if bad:
                raise ValueError(f"invalid move letter {bad[0]!r}")
        lhs = _walk(self.left)
        rhs = _walk(self.right)
        object.__setattr__(self, "_positions", tuple(reversed(lhs)) + ((0, 0),) + tuple(rhs))

    @classmethod
    def from_positions(cls, cells: Iterable, origin_index: int) -> "PathConfig":
        """Build from the sequence p_r..p_s where ``cells[origin_index]`` is the origin."""
        cells = [tuple(c) for c in cells]
        if cells[origin_index] != (0, 0):
            raise ValueError("the general must sit at the origin")
        left = "".join(LETTERS[direction_between(cells[k], cells[k - 1])]
                       for k in range(origin_index, 0, -1))
        right = "".join(LETTERS[direction_between(cells[k], cells[k + 1])]
                        for k in range(origin_index, len(cells) - 1))
        return cls(left, right)

    @property
    def r(self) -> int:
        return -len(self.left)

    @property
    def s(self) -> int:
        return len(self.right)

    @property
    def positions(self) -> tuple:
        """p_r, ..., p_s as coordinate tuples."""
        return self._positions

    def p(self, k: int) -> tuple[int, int]:
        if not self.r <= k <= self.s:
            raise IndexError(f"index {k} outside [{self.r}, {self.s}]")
        return self._positions[k - self.r]

    def __len__(self) -> int:
        return len(self._positions)

    @cached_property
    def cells(self) -> frozenset:
        return frozenset(self._positions)

    @cached_property
    def index_of(self) -> dict:
        return {q: k + self.r for k, q in enumerate(self._positions)}

    def reversed(self) -> "PathConfig":
        """The same cell set read in the opposite orientation."""
        return PathConfig(self.right, self.left)

    def canonical(self) -> "PathConfig":
        """Orientation with the lexicographically smaller text form."""
        other = self.reversed()
        return min(self, other, key=serialize)

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class RegionConfig:
    cells: frozenset

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def canonical(self) -> "RegionConfig":
        return self

    def __str__(self) -> str:
        return serialize(self)


Config = Union[PathConfig, RegionConfig]


def cells_of(C: Config) -> frozenset:
    return C.cells


# -- text format -------------------------------------------------------------

_PATH_RE = re.compile(r"PATH ([ENWS]+|\.)\|([ENWS]+|\.)\Z")
_CELL_RE = re.compile(r"\((-?\d+),(-?\d+)\)")


def serialize(C: Config) -> str:
    if isinstance(C, PathConfig):
        return f"PATH {C.left or '.'}|{C.right or '.'}"
    cells = sorted(C.cells)
    return "REG " + ",".join(f"({x},{y})" for x, y in cells)


def parse_config(text: str, check: bool = True) -> Config:
    """Parse one record and, unless ``check`` is false, validate it.

    Raises :class:`ConfigSyntaxError` for malformed text and
    :class:`ConfigValidityError` for a geometrically invalid configuration.
    """
    line = text[:-1] if text.endswith("\n") else text
    if line.startswith("PATH"):
        m = _PATH_RE.match(line)
        if not m:
            col = _first_bad_column(line, "PATH ", set("ENWS.|"))
            raise ConfigSyntaxError("malformed PATH record", col)
        left, right = (g if g != "." else "" for g in m.groups())
        C: Config = PathConfig(left, right)
    elif line.startswith("REG"):
        C = _parse_region(line)
    else:
        raise ConfigSyntaxError("record must start with PATH or REG", 0)
    v = validate(C) if check else None
    if v is not None:
        raise ConfigValidityError(v)
    return C


def _first_bad_column(line: str, prefix: str, allowed: set) -> int:
    if not line.startswith(prefix):
        return len(prefix) - 1
    for k, c in enumerate(line[len(prefix):], start=len(prefix)):
        if c not in allowed:
            return k
    return len(line)


def _parse_region(line: str) -> RegionConfig:
    if not line.startswith("REG "):
        raise ConfigSyntaxError("expected a space after REG", 3)
    body = line[4:]
    cells = []
    pos = 0
    while pos < len(body):
        m = _CELL_RE.match(body, pos)
        if not m:
            raise ConfigSyntaxError("expected (x,y)", pos + 4)
        cells.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise ConfigSyntaxError("expected ','", pos + 4)
            pos += 1
            if pos == len(body):
                raise ConfigSyntaxError("trailing ','", pos + 4)
    if not cells:
        raise ConfigSyntaxError("empty region", 4)
    if cells != sorted(cells) or len(set(cells)) != len(cells):
        raise ConfigSyntaxError("cells must be strictly sorted by (x, y)", 4)
    return RegionConfig(frozenset(cells))


def load_configs(text: str) -> list:
    """Parse every non-blank line of a file body."""
    return [parse_config(line) for line in text.splitlines() if line.strip()]


# -- validation --------------------------------------------------------------

def validate(C: Config) -> Violation | None:
    if isinstance(C, PathConfig):
        return _validate_path(C)
    return _validate_region(C)


def _validate_path(C: PathConfig) -> Violation | None:
    pos = C.positions
    r = C.r
    first = {}
    for k, q in enumerate(pos):
        if q in first:
            i, j = first[q] + r, k + r
            return Violation("duplicate", (i, j), f"p_{i} and p_{j} coincide at {q}")
        first[q] = k
    # touching: p_i adjacent to p_j with j >= i + 2
    for k, q in enumerate(pos):
        for nb in neighbors(q):
            m = first.get(nb)
            if m is not None and m >= k + 2:
                i, j = k + r, m + r
                return Violation("touching", (i, j), f"p_{i} touches p_{j}")
    return None


def _validate_region(C: RegionConfig) -> Violation | None:
    if (0, 0) not in C.cells:
        return Violation("origin", (), "region does not contain the origin")
    seen = _bfs_distances(C.cells, (0, 0))
    if len(seen) != len(C.cells):
        missing = min(set(C.cells) - set(seen))
        return Violation("connectivity", (missing,), f"cell {missing} not connected to the origin")
    return None


def validate_bruteforce(C: PathConfig) -> Violation | None:
    """All-pairs checker used to cross-check :func:`validate`."""
    pos = C.positions
    n = len(pos)
    for a in range(n):
        for b in range(a + 1, n):
            if pos[a] == pos[b]:
                return Violation("duplicate", (a + C.r, b + C.r), "")
            if b >= a + 2 and adjacent(pos[a], pos[b]):
                return Violation("touching", (a + C.r, b + C.r), "")
    return None


def is_valid(C: Config) -> bool:
    return validate(C) is None


# -- metric ------------------------------------------------------------------

def _bfs_distances(cells, source) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        p = queue.popleft()
        d = dist[p] + 1
        for q in neighbors(p):
            if q in cells and q not in dist:
                dist[q] = d
                queue.append(q)
    return dist


def distances_from(C: Config, p) -> dict:
    """Map cell -> distance inside C from p."""
    p = tuple(p)
    if p not in C.cells:
        raise ValueError(f"{p} is not a node of the configuration")
    if isinstance(C, PathConfig):
        k0 = C.index_of[p]
        return {q: abs(k - k0) for q, k in C.index_of.items()}
    return _bfs_distances(C.cells, p)


def boundary_condition(C: Config, p) -> tuple:
    p = tuple(p)
    cells = C.cells
    if p not in cells:
        raise ValueError(f"{p} is not a node of the configuration")
    return tuple(int(q in cells) for q in neighbors(p))


def distance(C: Config, p, q) -> int:
    p, q = tuple(p), tuple(q)
    for x in (p, q):
        if x not in C.cells:
            raise ValueError(f"{x} is not a node of the configuration")
    d = _bfs_distances(C.cells, p).get(q)
    if d is None:
        raise RuntimeError(f"{q} unreachable from {p}; configuration is disconnected")
    return d


def radius(C: Config) -> int:
    if isinstance(C, PathConfig):
        return max(-C.r, C.s)
    return max(_bfs_distances(C.cells, (0, 0)).values())


# -- rendering ---------------------------------------------------------------

def render_ascii(C: Config) -> str:
    cells = C.cells
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(min(xs), max(xs) + 1):
            if (x, y) == (0, 0):
                row.append("G")
            elif (x, y) in cells:
                row.append("#")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows)


# -- symmetries and enumeration ------------------------------------------------

_SYMMETRIES = (
    lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y), lambda x, y: (y, -x),
    lambda x, y: (-x, y), lambda x, y: (y, x), lambda x, y: (x, -y), lambda x, y: (-y, -x),
)


def transform(C: Config, k: int) -> Config:
    """Apply the k-th of the 8 grid symmetries fixing the origin."""
    f = _SYMMETRIES[k]
    if isinstance(C, PathConfig):
        return PathConfig.from_positions([f(*q) for q in C.positions], -C.r)
    return RegionConfig(frozenset(f(*q) for q in C.cells))


def iter_paths(n_cells: int) -> Iterator[PathConfig]:
    """Every g-2PATH configuration with exactly n cells, one orientation each.

    Walks are generated from one end and the general placed on every cell;
    a walk and its reversal describe the same cell sequences, so only
    the canonical orientation is kept.
    """
    seen = set()
    for walk in _iter_walks(n_cells):
        for k in range(n_cells):
            ox, oy = walk[k]
            cells = [(x - ox, y - oy) for x, y in walk]
            C = PathConfig.from_positions(cells, k).canonical()
            key = serialize(C)
            if key not in seen:
                seen.add(key)
                yield C


def iter_paths_upto(max_cells: int) -> Iterator[PathConfig]:
    for n in range(1, max_cells + 1):
        yield from iter_paths(n)


def _iter_walks(n: int):
    if n == 1:
        yield [(0, 0)]
        return
    path = [(0, 0)]
    used = {(0, 0)}

    def rec():
        if len(path) == n:
            yield list(path)
            return
        tip = path[-1]
        for q in neighbors(tip):
            if q in used:
                continue
            if any(nb in used and nb != tip for nb in neighbors(q)):
                continue
            path.append(q)
            used.add(q)
            yield from rec()
            path.pop()
            used.discard(q)

    yield from rec()


def config_key(C: Config) -> str:
    """Hashable identity of a configuration independent of path orientation."""
    return serialize(C.canonical())


def path_from_cells(cells) -> PathConfig | None:
    """The PathConfig whose cell set is ``cells`` (containing the origin), or
    None when the induced shape is not a simple non-touching path."""
    cells = frozenset(cells)
    if (0, 0) not in cells:
        return None
    deg = {c: sum(nb in cells for nb in neighbors(c)) for c in cells}
    if len(cells) == 1:
        return PathConfig()
    ends = sorted(c for c, d in deg.items() if d == 1)
    if len(ends) != 2 or any(d > 2 for d in deg.values()):
        return None
    order = [ends[0]]
    prev = None
    while True:
        nxt = [q for q in neighbors(order[-1]) if q in cells and q != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != len(cells):
        return None
    return PathConfig.from_positions(order, order.index((0, 0))).canonical()
