"""Chordal, C4-free, asteroidal-triple-free and interval recognition with replayable witnesses.

Interval graphs are recognized through the Lekkerkerker-Boland criterion:
chordal and without an asteroidal triple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .digraph import iter_bits
from .errors import InstanceTooLarge
from .graph import SimpleGraph

HOLE_SEARCH_CAP = 32


@dataclass(frozen=True)
class HoleWitness:
    """Induced cycle of length >= 4, canonically rotated (see :func:`canonical_cycle`)."""

    cycle: tuple[str, ...]

    def __len__(self):
        return len(self.cycle)


@dataclass(frozen=True)
class ATWitness:
    """Asteroidal triple ``(x, y, z)``; ``paths[k]`` joins the two vertices other than
    ``triple[k]`` while avoiding the closed neighbourhood of ``triple[k]``."""

    triple: tuple[str, str, str]
    paths: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    peo: tuple[str, ...] | None = None
    hole: HoleWitness | None = None

    def __bool__(self):
        return self.chordal


@dataclass(frozen=True)
class C4Result:
    c4_free: bool
    hole: HoleWitness | None = None

    def __bool__(self):
        return self.c4_free


@dataclass(frozen=True)
class IntervalResult:
    interval: bool
    peo: tuple[str, ...] | None = None
    hole: HoleWitness | None = None
    asteroidal_triple: ATWitness | None = None

    def __bool__(self):
        return self.interval


def canonical_cycle(idx: list[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex and walk toward its smaller neighbour."""
    k = len(idx)
    s = idx.index(min(idx))
    fwd = [idx[(s + t) % k] for t in range(k)]
    if fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


def _hole(g: SimpleGraph, idx: list[int]) -> HoleWitness:
    return HoleWitness(tuple(g.vertex_ids[i] for i in canonical_cycle(idx)))


# ---------------------------------------------------------------------------
# chordality

def maximum_cardinality_search(g: SimpleGraph) -> list[int]:
    """Visit order of maximum cardinality search; ties go to the canonically smallest vertex."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(g.adj_mask(best) & ~visited):
            weight[u] += 1
    return order


def _shortest_path(g: SimpleGraph, src: int, dst: int, allowed: int) -> list[int] | None:
    """Shortest ``src``-``dst`` path using only vertices of ``allowed`` (endpoints included)."""
    prev = {src: src}
    q = deque([src])
    while q:
        x = q.popleft()
        if x == dst:
            path = [x]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in iter_bits(g.adj_mask(x) & allowed):
            if y not in prev:
                prev[y] = x
                q.append(y)
    return None


def _hole_through(g: SimpleGraph, v: int, a: int, b: int) -> list[int] | None:
    """Hole ``v, a, ..., b``: a shortest a-b path outside N[v], closed through ``v``."""
    allowed = g.full_mask & ~g.closed_mask(v) | 1 << a | 1 << b
    path = _shortest_path(g, a, b, allowed)
    if path is None:
        return None
    return [v] + path


def is_chordal(g: SimpleGraph) -> ChordalResult:
    """Chordality via maximum cardinality search and a perfect-elimination check.

    On failure the first violating vertex ``v`` of the elimination order has two
    non-adjacent later neighbours; a shortest path between them avoiding N[v]
    closes a hole through ``v``.
    """
    peo = maximum_cardinality_search(g)[::-1]
    pos = {v: p for p, v in enumerate(peo)}
    violations = []
    for p, v in enumerate(peo):
        later = [u for u in iter_bits(g.adj_mask(v)) if pos[u] > p]
        later.sort(key=pos.__getitem__)
        for x_pos, a in enumerate(later):
            for b in later[x_pos + 1:]:
                if not g.adj_mask(a) >> b & 1:
                    violations.append((v, a, b))
        if violations:
            break
    if not violations:
        return ChordalResult(True, tuple(g.vertex_ids[i] for i in peo))
    for v, a, b in violations:
        cyc = _hole_through(g, v, a, b)
        if cyc is not None:
            return ChordalResult(False, hole=_hole(g, cyc))
    # MCS guarantees a path for some violation; keep a total fallback anyway.
    for v in range(g.n):
        nb = list(iter_bits(g.adj_mask(v)))
        for x_pos, a in enumerate(nb):
            for b in nb[x_pos + 1:]:
                if not g.adj_mask(a) >> b & 1:
                    cyc = _hole_through(g, v, a, b)
                    if cyc is not None:
                        return ChordalResult(False, hole=_hole(g, cyc))
    raise AssertionError("elimination check failed but no hole exists")


def is_perfect_elimination_ordering(g: SimpleGraph, order) -> bool:
    pos = {g.index(v): p for p, v in enumerate(order)}
    if len(pos) != g.n:
        return False
    for v, p in pos.items():
        later = 0
        for u in iter_bits(g.adj_mask(v)):
            if pos[u] > p:
                later |= 1 << u
        if not g.is_clique(later):
            return False
    return True


# ---------------------------------------------------------------------------
# holes

def _holes_of_length(g: SimpleGraph, length: int) -> Iterator[list[int]]:
    """Induced cycles of exactly ``length`` >= 4, each once, smallest vertex first, in DFS order."""
    adj = g.adj_masks
    n = g.n
    for s in range(n):
        higher = g.full_mask & ~((2 << s) - 1)
        path = [s]
        # ``blocked`` holds vertices adjacent to an interior path vertex (or on the path).

        def extend(blocked: int) -> Iterator[list[int]]:
            last = path[-1]
            depth = len(path)
            cands = adj[last] & higher & ~blocked
            if depth == length - 1:
                cands &= adj[s]
            elif depth > 1:
                cands &= ~adj[s]
            for x in iter_bits(cands):
                if depth == length - 1:
                    if path[1] < x:
                        yield path + [x]
                    continue
                path.append(x)
                nb = blocked | 1 << x | (adj[last] if depth > 1 else 0)
                yield from extend(nb)
                path.pop()

        yield from extend(1 << s)


def holes(g: SimpleGraph, min_length: int = 4, max_length: int | None = None) -> Iterator[HoleWitness]:
    """Every hole with length in range, shortest first."""
    if g.n > HOLE_SEARCH_CAP:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the hole-search cap of {HOLE_SEARCH_CAP}")
    top = g.n if max_length is None else min(max_length, g.n)
    for length in range(max(4, min_length), top + 1):
        for cyc in _holes_of_length(g, length):
            yield _hole(g, cyc)


def find_hole(g: SimpleGraph, min_length: int = 4) -> HoleWitness | None:
    """A shortest hole of length at least ``min_length``, or None."""
    if min_length < 4:
        raise ValueError("holes have length at least 4")
    return next(holes(g, min_length), None)


def is_hole(g: SimpleGraph, cycle) -> bool:
    """Replay check: distinct vertices, length >= 4, consecutive adjacent, nothing else adjacent."""
    idx = [g.index(v) for v in cycle]
    k = len(idx)
    if k < 4 or len(set(idx)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if bool(g.adj_mask(idx[a]) >> idx[b] & 1) != consecutive:
                return False
    return True


def c4_holes(g: SimpleGraph) -> Iterator[HoleWitness]:
    """Every induced 4-cycle once, in canonical order."""
    adj = g.adj_masks
    for a in range(g.n):
        for c in iter_bits(g.full_mask & ~adj[a] & ~((2 << a) - 1)):
            common = adj[a] & adj[c] & ~((2 << a) - 1)
            for b in iter_bits(common):
                for d in iter_bits(common & ~adj[b] & ~((2 << b) - 1)):
                    yield _hole(g, [a, b, c, d])


def is_c4_free(g: SimpleGraph) -> C4Result:
    hole = min(c4_holes(g), key=lambda h: [g.index(v) for v in h.cycle], default=None)
    return C4Result(hole is None, hole)


# ---------------------------------------------------------------------------
# asteroidal triples

def _component_labels(g: SimpleGraph, removed: int) -> list[int]:
    """Component id per vertex of ``g - removed`` (-1 for removed vertices)."""
    comp = [-1] * g.n
    cid = 0
    alive = g.full_mask & ~removed
    for s in iter_bits(alive):
        if comp[s] >= 0:
            continue
        frontier = 1 << s
        comp[s] = cid
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= g.adj_mask(i)
            nxt &= alive
            new = 0
            for j in iter_bits(nxt):
                if comp[j] < 0:
                    comp[j] = cid
                    new |= 1 << j
            frontier = new
        cid += 1
    return comp


def asteroidal_triples(g: SimpleGraph) -> Iterator[tuple[int, int, int]]:
    """All asteroidal triples ``x < y < z`` (canonical indices), lexicographic order."""
    comps = [_component_labels(g, g.closed_mask(z)) for z in range(g.n)]
    adj = g.adj_masks
    for x in range(g.n):
        for y in iter_bits(g.full_mask & ~adj[x] & ~((2 << x) - 1)):
            cz = adj[x] | adj[y]
            for z in iter_bits(g.full_mask & ~cz & ~((2 << y) - 1)):
                if (comps[z][x] == comps[z][y] and comps[y][x] == comps[y][z]
                        and comps[x][y] == comps[x][z]):
                    yield x, y, z


def _at_witness(g: SimpleGraph, x: int, y: int, z: int) -> ATWitness:
    ids = g.vertex_ids
    paths = []
    for third, a, b in ((x, y, z), (y, x, z), (z, x, y)):
        p = _shortest_path(g, a, b, g.full_mask & ~g.closed_mask(third))
        paths.append(tuple(ids[i] for i in p))
    return ATWitness((ids[x], ids[y], ids[z]), tuple(paths))


def find_asteroidal_triple(g: SimpleGraph) -> ATWitness | None:
    """The lexicographically smallest asteroidal triple, with connecting paths, or None."""
    first = next(asteroidal_triples(g), None)
    return None if first is None else _at_witness(g, *first)


def is_asteroidal_witness(g: SimpleGraph, w: ATWitness) -> bool:
    idx = [g.index(v) for v in w.triple]
    if len(set(idx)) != 3:
        return False
    for a in range(3):
        for b in range(a + 1, 3):
            if g.adj_mask(idx[a]) >> idx[b] & 1:
                return False
    for k, path in enumerate(w.paths):
        others = {w.triple[t] for t in range(3) if t != k}
        p = [g.index(v) for v in path]
        if {path[0], path[-1]} != others or len(set(p)) != len(p):
            return False
        forbidden = g.closed_mask(idx[k])
        if any(forbidden >> i & 1 for i in p):
            return False
        if any(not g.adj_mask(p[t]) >> p[t + 1] & 1 for t in range(len(p) - 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# interval graphs

def is_interval(g: SimpleGraph) -> IntervalResult:
    """Chordal and asteroidal-triple-free."""
    ch = is_chordal(g)
    if not ch.chordal:
        return IntervalResult(False, hole=ch.hole)
    at = find_asteroidal_triple(g)
    if at is not None:
        return IntervalResult(False, peo=ch.peo, asteroidal_triple=at)
    return IntervalResult(True, peo=ch.peo)


__all__ = [
    "ATWitness",
    "C4Result",
    "ChordalResult",
    "HoleWitness",
    "IntervalResult",
    "asteroidal_triples",
    "c4_holes",
    "canonical_cycle",
    "find_asteroidal_triple",
    "find_hole",
    "holes",
    "is_asteroidal_witness",
    "is_c4_free",
    "is_chordal",
    "is_hole",
    "is_interval",
    "is_perfect_elimination_ordering",
    "maximum_cardinality_search",
]
