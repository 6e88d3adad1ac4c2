"""Available information, one-step equivalences and the safeness search.

A time t is safe for C when a chain C = C_0, C_1, ..., C_{m-1} exists in
which neighbouring configurations share the available information of some
node at time t and the last one has radius > t.  The minimum firing time is
the least unsafe t.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from ..extensions import find_walk, walks
from ..grid import (
    Config,
    PathConfig,
    RegionConfig,
    boundary_condition,
    config_key,
    distances_from,
    neighbors,
    path_from_cells,
    radius,
    serialize,
)
from ..variations import Kind, Variation

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """The generic enumeration visited more configurations than allowed."""


class _Quiescent:
    def __repr__(self) -> str:
        return "Q"


Q = _Quiescent()


@dataclass(frozen=True)
class AvailableInfo:
    t: int
    v: tuple
    x: frozenset  # of (cell, boundary condition)


def available_info(C: Config, v, t: int):
    v = tuple(v)
    if v not in C.cells:
        raise ValueError(f"{v} is not a node of the configuration")
    from_gen = distances_from(C, (0, 0))
    if from_gen[v] > t:
        return Q
    from_v = distances_from(C, v)
    x = frozenset((c, boundary_condition(C, c)) for c in C.cells if from_gen[c] + from_v[c] <= t)
    return AvailableInfo(t, v, x)


def window(C: PathConfig, u: int, t: int) -> tuple[int, int]:
    """Index range p_a..p_b of the cells whose information reaches p_u by t."""
    if abs(u) > t:
        raise ValueError(f"p_{u} has no information at time {t}")
    a = max(C.r, -((t - u) // 2))  # ceil((u - t) / 2)
    b = min(C.s, (u + t) // 2)
    return a, b


def _node_indices(C: PathConfig, t: int):
    return range(max(C.r, -t), min(C.s, t) + 1)


# -- path variations -----------------------------------------------------------

def _cell_ok(variation: Variation):
    return variation.cell_ok if variation.kind is Kind.LINE_AB else None


def _right_walks(C: PathConfig, a: int, b: int, max_len: int, cell_ok):
    yield from walks(C.reversed(), -b, -a, max_len, cell_ok)


def _compatible(x0, x1) -> bool:
    if not x0 or not x1:
        return True
    s0 = set(x0)
    for c in x1:
        if c in s0 or any(nb in s0 for nb in neighbors(c)):
            return False
    return True


def _assemble(C: PathConfig, a: int, b: int, x0, x1) -> PathConfig:
    core = C.positions[a - C.r: b - C.r + 1]
    cells = list(reversed(x0)) + list(core) + list(x1)
    return PathConfig.from_positions(cells, len(x0) - a)


def window_extensions(C: PathConfig, a: int, b: int, variation: Variation, max_rad: int):
    """Members of the variation that consistently extend p_a..p_b and have
    radius <= max_rad.  These are exactly the C' sharing with C the
    available information of any node whose window is (a, b)."""
    cell_ok = _cell_ok(variation)
    if a == C.r:
        lefts = [()]
    else:
        lefts = list(walks(C, a, b, max_rad + a, cell_ok))
    if b == C.s:
        rights = [()]
    else:
        rights = list(_right_walks(C, a, b, max_rad - b, cell_ok))
    for x0 in lefts:
        for x1 in rights:
            if _compatible(x0, x1):
                D = _assemble(C, a, b, x0, x1)
                if variation.member(D):
                    yield D


def _radius_extension(C: PathConfig, a: int, b: int, variation: Variation, target: int):
    """A member of the variation extending p_a..p_b with radius exactly target,
    or None.  Only valid for variations closed under truncating a hand."""
    x0_min = () if a == C.r else (C.p(a - 1),)
    x1_min = () if b == C.s else (C.p(b + 1),)
    if a > C.r:
        x0 = find_walk(C, a, b, target + a)
        if x0 is not None:
            D = _assemble(C, a, b, x0, x1_min)
            if variation.member(D):
                return D
    if b < C.s:
        x1 = find_walk(C.reversed(), -b, -a, target - b)
        if x1 is not None:
            D = _assemble(C, a, b, x0_min, x1)
            if variation.member(D):
                return D
    return None


def _path_windows(C: PathConfig, t: int):
    """Distinct windows of C at time t with a representative node index."""
    seen = {}
    for u in _node_indices(C, t):
        ab = window(C, u, t)
        seen.setdefault(ab, u)
    return seen


def equiv_step_path(C: PathConfig, t: int, variation: Variation) -> list:
    """All C' of the variation with C equivalent to C' at time t through a
    shared node and radius <= t + 1, sorted by canonical text."""
    if not variation.path_shaped:
        raise ValueError("path equivalence step needs a path variation")
    found = {}
    for (a, b) in _path_windows(C, t):
        for D in window_extensions(C, a, b, variation, t + 1):
            found.setdefault(config_key(D), D.canonical())
    return [found[k] for k in sorted(found)]


# -- generic enumeration (any variation) -------------------------------------------

def _grow(seed: frozenset, forbidden: frozenset, allowed, prune, budget: list):
    """Connected supersets of ``seed`` avoiding ``forbidden``, each once."""
    seen = set(seed) | set(forbidden)
    untried = []
    for c in sorted(seed):
        for q in neighbors(c):
            if q not in seen and allowed(q):
                seen.add(q)
                untried.append(q)

    def rec(S, untried, seen):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("configuration budget exhausted")
        yield S
        untried = list(untried)
        while untried:
            c = untried.pop()
            if not prune(S, c):
                continue
            new = [q for q in neighbors(c) if q not in seen and allowed(q)]
            yield from rec(S | {c}, untried + new, seen | set(new))

    yield from rec(frozenset(seed), untried, frozenset(seen))


def _path_prune(variation: Variation, max_rad: int):
    def prune(S, c) -> bool:
        if not variation.cell_ok(c):
            return False
        touching = [q for q in neighbors(c) if q in S]
        if len(touching) != 1:
            return False
        (q,) = touching
        deg = sum(nb in S for nb in neighbors(q))
        if deg >= 2:
            return False
        if variation.kind is Kind.TWO_PATH and q == (0, 0) and deg >= 1:
            return False
        # distance from the general grows by one along the path
        return _path_depth(S, c) <= max_rad
    return prune


def _path_depth(S, c) -> int:
    dist = {(0, 0): 0}
    queue = deque([(0, 0)])
    while queue:
        p = queue.popleft()
        for q in neighbors(p):
            if (q in S or q == c) and q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist.get(c, 0)


def _distances_within(cells, source) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        p = queue.popleft()
        for q in neighbors(p):
            if q in cells and q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def equiv_step_generic(C: Config, t: int, variation: Variation, v=None,
                       budget: int = DEFAULT_BUDGET) -> list:
    """C' of the variation with ai(v, t, C') = ai(v, t, C) != Q and radius
    <= t + 1, by enumerating connected supersets of the shared part.

    With v None every node of C is tried.  Raises BudgetExceeded when more
    than ``budget`` candidate cell sets are visited.
    """
    counter = [budget]
    nodes = sorted(C.cells) if v is None else [tuple(v)]
    found = {}
    for w in nodes:
        for D in _generic_for_node(C, t, variation, w, counter):
            found.setdefault(config_key(D), D.canonical())
    return [found[k] for k in sorted(found)]


def _generic_for_node(C: Config, t: int, variation: Variation, v, counter):
    info = available_info(C, v, t)
    if info is Q:
        return
    core = frozenset(c for c, _ in info.x)
    circles = set()
    crosses = set()
    for c, bc in info.x:
        for bit, q in zip(bc, neighbors(c)):
            if q in core:
                continue
            (circles if bit else crosses).add(q)
    seed = core | circles
    max_rad = t + 1

    def allowed(q) -> bool:
        return abs(q[0]) + abs(q[1]) <= max_rad and q not in crosses

    if variation.path_shaped:
        if path_from_cells(seed) is None:
            return
        shape_ok = _path_prune(variation, max_rad)
    else:
        def shape_ok(S, c) -> bool:
            return True

    # Growing a cell set only shortens distances, so once a cell outside the
    # shared part is seen by v in time, no superset can carry the same info.
    def prune(S, c) -> bool:
        if not shape_ok(S, c):
            return False
        T = S | {c}
        dg = _distances_within(T, (0, 0))
        dv = _distances_within(T, v)
        return all(q in core or dg[q] + dv[q] > t for q in T if q in dg and q in dv)

    for S in _grow(seed, frozenset(crosses), allowed, prune, counter):
        if variation.path_shaped:
            D = path_from_cells(S)
            if D is None:
                continue
        else:
            D = RegionConfig(S)
        if radius(D) > max_rad or not variation.member(D):
            continue
        if available_info(D, v, t) == info:
            yield D


# -- safeness ----------------------------------------------------------------

@dataclass(frozen=True)
class Link:
    t: int
    v: tuple


@dataclass(frozen=True)
class SafenessChain:
    configs: tuple  # C_0 = C, ..., C_{m-1}
    links: tuple  # Link between C_k and C_{k+1}

    @property
    def terminal_radius(self) -> int:
        return radius(self.configs[-1])


@dataclass(frozen=True)
class SafetyVerdict:
    t: int
    safe: bool
    chain: Optional[SafenessChain] = None
    class_size: int = 0
    members: tuple = field(default=(), repr=False)  # the whole class when unsafe


class _Search:
    """Breadth-first exploration of the equivalence class of C at time t,
    restricted to radius <= t + 1."""

    def __init__(self, t: int, variation: Variation, budget: int):
        self.t = t
        self.variation = variation
        self.counter = [budget]
        self.cache = {}
        self.targeted = variation.kind in (Kind.G_TWO_PATH, Kind.TWO_PATH)

    def successors(self, C: Config):
        """Yields (link node, D, radius_reached) for the one-step neighbours."""
        t = self.t
        if isinstance(C, PathConfig):
            for (a, b), u in _path_windows(C, t).items():
                v = C.p(u)
                key = (C.positions[a - C.r: b - C.r + 1], a == C.r, b == C.s,
                       None if a == C.r else C.p(a - 1), None if b == C.s else C.p(b + 1))
                if key not in self.cache:
                    self.cache[key] = self._path_class(C, a, b)
                hit, members = self.cache[key]
                if hit is not None:
                    yield v, hit, True
                    return
                for D in members:
                    yield v, D, False
        else:
            dist = distances_from(C, (0, 0))
            for v in sorted(C.cells):
                if dist[v] > t:
                    continue
                info = available_info(C, v, t)
                if info not in self.cache:
                    self.cache[info] = self._generic_class(C, v)
                hit, members = self.cache[info]
                if hit is not None:
                    yield v, hit, True
                    return
                for D in members:
                    yield v, D, False

    def _generic_class(self, C, v):
        members = []
        for D in _generic_for_node(C, self.t, self.variation, v, self.counter):
            if radius(D) == self.t + 1:
                return D, []
            members.append(D)
        return None, members

    def _path_class(self, C, a, b):
        t = self.t
        if self.targeted:
            hit = _radius_extension(C, a, b, self.variation, t + 1)
            if hit is not None:
                return hit, []
            return None, list(window_extensions(C, a, b, self.variation, t))
        hit = None
        members = []
        for D in window_extensions(C, a, b, self.variation, t + 1):
            if radius(D) == t + 1:
                return D, []
            members.append(D)
        return hit, members

    def run(self, start: list) -> SafetyVerdict:
        t = self.t
        parent = {}
        order = {}
        queue = deque()
        for C in start:
            k = config_key(C)
            if k not in order:
                order[k] = C
                parent[k] = None
                queue.append(k)
        while queue:
            k = queue.popleft()
            C = order[k]
            for v, D, reached in self.successors(C):
                if reached:
                    return SafetyVerdict(t, True, self._chain(parent, order, k, v, D), len(order))
                kd = config_key(D)
                if kd not in order:
                    order[kd] = D
                    parent[kd] = (k, v)
                    queue.append(kd)
        members = tuple(order[k] for k in sorted(order))
        return SafetyVerdict(t, False, None, len(order), members)

    def _chain(self, parent, order, k, v, D) -> SafenessChain:
        configs = [D]
        links = [Link(self.t, v)]
        while k is not None:
            configs.append(order[k])
            prev = parent[k]
            if prev is None:
                break
            k, w = prev
            links.append(Link(self.t, w))
        return SafenessChain(tuple(reversed(configs)), tuple(reversed(links)))


def is_safe(C: Config, t: int, variation: Variation, budget: int = DEFAULT_BUDGET) -> SafetyVerdict:
    if radius(C) >= t + 1:
        return SafetyVerdict(t, True, SafenessChain((C,), ()), 1)
    return _Search(t, variation, budget).run([C])


def ai_is_safe(C: Config, v, t: int, variation: Variation, budget: int = DEFAULT_BUDGET) -> bool:
    """Safeness of the available information of v at time t, searched from
    the set of all configurations carrying that information."""
    if available_info(C, v, t) is Q:
        return True
    if isinstance(C, PathConfig):
        u = C.index_of[tuple(v)]
        a, b = window(C, u, t)
        start = list(window_extensions(C, a, b, variation, t + 1))
    else:
        start = list(_generic_for_node(C, t, variation, tuple(v), [budget]))
    if any(radius(D) > t for D in start):
        return True
    return _Search(t, variation, budget).run(start).safe


@dataclass(frozen=True)
class LocalMapResult:
    value: int
    verdicts: tuple  # SafetyVerdict for t = 0..value
    chain: Optional[SafenessChain]  # witness that value - 1 is safe
    unsafe_class: tuple  # the closed class certifying value is unsafe


def mft_localmap(C: Config, variation: Variation, budget: int = DEFAULT_BUDGET) -> LocalMapResult:
    if not variation.member(C):
        raise ValueError(f"{serialize(C)} is not a member of {variation}")
    bound = variation.upper_bound(C)
    verdicts = []
    for t in range(0, bound + 1):
        verdict = is_safe(C, t, variation, budget)
        verdicts.append(verdict)
        if not verdict.safe:
            chain = verdicts[-2].chain if t > 0 else None
            return LocalMapResult(t, tuple(verdicts), chain, verdict.members)
    raise RuntimeError(f"no unsafe time up to the upper bound {bound}")
