"""Tight/loose classification, the block decomposition of C_{1,2}(D), and exact small-graph invariants.

The block decomposition designates a non-competing partite set ``X1`` and a
second set ``X2`` and splits the vertices into

    U (sinks), F_i (non-sinks with N+(v) inside X_i), X1* = X1 - F - U, X2, ..., Xk

after which most blocks of the adjacency matrix are forced to be all-zero,
all-one, or all-one off the diagonal.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .digraph import iter_bits, lowest_bit
from .errors import InstanceTooLarge, NotLoose, SameVertex, VertexSetMismatch
from .graph import SimpleGraph
from .tournament import MultipartiteTournament

EXACT_SEARCH_CAP = 32


class PartFlag(enum.Enum):
    COMPETING = "competing"
    NON_COMPETING = "non-competing"


@dataclass(frozen=True)
class BlockVerdict:
    designation: tuple[str, str]  # names of the parts playing X1 and X2
    block: str
    pattern: str  # "O", "J" or "J-I"
    passed: bool
    violation: tuple[str, str] | None = None


@dataclass
class StructureReport:
    sinks: frozenset[str]
    part_names: tuple[str, ...]
    part_flags: tuple[PartFlag, ...]
    f_sets: dict[int, frozenset[str]]
    loose: bool
    x1_index: int | None = None
    x2_index: int | None = None
    x1_star: frozenset[str] | None = None
    block_verdicts: list[BlockVerdict] = field(default_factory=list)

    @property
    def non_competing(self) -> list[int]:
        return [i for i, f in enumerate(self.part_flags) if f is PartFlag.NON_COMPETING]

    @property
    def blocks_pass(self) -> bool:
        return all(b.passed for b in self.block_verdicts)


def _check_graph(t: MultipartiteTournament, g: SimpleGraph) -> None:
    if g.vertex_ids != t.vertex_ids:
        if set(g.vertex_ids) != set(t.vertex_ids):
            raise VertexSetMismatch("graph and tournament have different vertex sets")
        raise VertexSetMismatch("graph vertices are not in the tournament's canonical order")


def sink_mask(t: MultipartiteTournament) -> int:
    return t.sink_mask()


def sinks(t: MultipartiteTournament) -> frozenset[str]:
    """Vertices of out-degree zero."""
    return t.digraph.labels(t.sink_mask())


def f_masks(t: MultipartiteTournament) -> dict[int, int]:
    """Part index -> mask of non-sink vertices whose whole out-neighbourhood lies in that part."""
    out = {p: 0 for p in range(t.k)}
    for i in range(t.n):
        p = t.part_containing(t.out_mask(i))
        if p is not None:
            out[p] |= 1 << i
    return out


def f_sets(t: MultipartiteTournament) -> dict[int, frozenset[str]]:
    return {p: t.digraph.labels(m) for p, m in f_masks(t).items()}


def classify_parts(t: MultipartiteTournament, g: SimpleGraph) -> StructureReport:
    """Flag each partite set by whether it is a clique of ``g`` (= C_{1,2}(D))."""
    _check_graph(t, g)
    flags = tuple(PartFlag.COMPETING if g.is_clique(m) else PartFlag.NON_COMPETING
                  for m in t.part_masks)
    return StructureReport(
        sinks=sinks(t),
        part_names=t.partition.names,
        part_flags=flags,
        f_sets=f_sets(t),
        loose=PartFlag.NON_COMPETING in flags,
    )


def x2_candidates(t: MultipartiteTournament, g: SimpleGraph, x1: int) -> list[int]:
    """Possible roles for X2 given X1.

    Each non-adjacent pair of non-sinks inside X1 sends all its out-arcs into a
    single partite set; every such set qualifies. With no such pair (only
    possible when a sink is involved) the lowest-indexed other part is used.
    """
    sink = t.sink_mask()
    members = [i for i in iter_bits(t.part_mask(x1)) if not sink >> i & 1]
    found: set[int] = set()
    for a_pos, a in enumerate(members):
        for b in members[a_pos + 1:]:
            if not g.adj_mask(a) >> b & 1:
                p = t.part_containing(t.out_mask(a) | t.out_mask(b))
                if p is not None and p != x1:
                    found.add(p)
    if not found:
        found.add(min(p for p in range(t.k) if p != x1))
    return sorted(found)


def _block(g: SimpleGraph, a: int, b: int, pattern: str) -> tuple[int, int] | None:
    """First pair violating ``pattern`` between vertex masks ``a`` and ``b`` (distinct vertices only)."""
    for i in iter_bits(a):
        row = g.adj_mask(i) & b & ~(1 << i)
        want = b & ~(1 << i)
        if pattern == "O":
            if row:
                return i, lowest_bit(row)
        elif row != want:
            return i, lowest_bit(want & ~row)
    return None


def _designated_blocks(t, g, x1: int, x2: int, m_forced: bool) -> list[BlockVerdict]:
    names = t.partition.names
    ids = t.vertex_ids
    tag = (names[x1], names[x2])
    full = (1 << t.n) - 1
    u_mask = t.sink_mask()
    fm = f_masks(t)
    others = [x2] + [p for p in range(t.k) if p not in (x1, x2)]
    f_union = 0
    for p in others:
        f_union |= fm[p]
    x1_star = t.part_mask(x1) & ~f_union & ~u_mask

    verdicts: list[BlockVerdict] = []

    def add(block: str, a: int, b: int, pattern: str) -> None:
        bad = _block(g, a, b, pattern)
        verdicts.append(BlockVerdict(tag, block, pattern, bad is None,
                                     None if bad is None else (ids[bad[0]], ids[bad[1]])))

    # F_i and U must lie inside X1 for the rows to partition the vertex set.
    inside = (f_union | u_mask) & ~t.part_mask(x1)
    verdicts.append(BlockVerdict(tag, "U+F inside X1", "subset", inside == 0,
                                 None if not inside else (ids[lowest_bit(inside)], names[x1])))

    add("U x V", u_mask, full, "O")
    for a_pos, i in enumerate(others):
        for j in others[a_pos + 1:]:
            add(f"F[{names[i]}] x F[{names[j]}]", fm[i], fm[j], "J")
    for i in others:
        add(f"F[{names[i]}] x X1*", fm[i], x1_star, "J")
        for j in others:
            if j != i:
                add(f"F[{names[i]}] x {names[j]}", fm[i], t.part_mask(j), "J")
    add("X1* x X1*", x1_star, x1_star, "J-I")
    for j in others:
        add(f"X1* x {names[j]}", x1_star, t.part_mask(j), "J")
    for a_pos, i in enumerate(others):
        for j in others[a_pos + 1:]:
            add(f"{names[i]} x {names[j]}", t.part_mask(i), t.part_mask(j), "J")
    for i in others[1:]:
        add(f"{names[i]} x {names[i]}", t.part_mask(i), t.part_mask(i), "J-I")
    if m_forced:
        add(f"M = {names[x2]} x {names[x2]}", t.part_mask(x2), t.part_mask(x2), "J-I")
    return verdicts


def verify_block_structure(t: MultipartiteTournament, g: SimpleGraph) -> StructureReport:
    """Check every determined block of the decomposition.

    The lowest-indexed non-competing part plays X1; when a second part is
    non-competing the check is repeated with the two roles exchanged. Each
    admissible choice of X2 (see :func:`x2_candidates`) is checked. The M block
    is checked only when it is forced to be J - I, i.e. when D has a sink or
    X1 holds an anti-competing set of size three.
    """
    report = classify_parts(t, g)
    if not report.loose:
        raise NotLoose("every partite set is a clique of C_{1,2}(D)")
    noncomp = report.non_competing
    has_sink = bool(report.sinks)
    for pos, x1 in enumerate(noncomp[:2]):
        m_forced = has_sink or max_stable_mask(g, t.part_mask(x1)).bit_count() >= 3
        for x2 in x2_candidates(t, g, x1):
            if pos == 0 and report.x1_index is None:
                report.x1_index, report.x2_index = x1, x2
                fm = f_masks(t)
                f_union = 0
                for p, m in fm.items():
                    if p != x1:
                        f_union |= m
                report.x1_star = t.digraph.labels(t.part_mask(x1) & ~f_union & ~t.sink_mask())
            report.block_verdicts.extend(_designated_blocks(t, g, x1, x2, m_forced))
    return report


# ---------------------------------------------------------------------------
# components, domination, stable sets

def components_and_diameters(g: SimpleGraph) -> list[tuple[frozenset[str], int]]:
    """Connected components (in order of their smallest vertex) with exact diameters."""
    n = g.n
    seen = 0
    result = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= g.adj_mask(i)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        diameter = 0
        for v in iter_bits(comp):
            diameter = max(diameter, _eccentricity(g, v))
        result.append((g.labels(comp), diameter))
    return result


def _eccentricity(g: SimpleGraph, v: int) -> int:
    dist = {v: 0}
    q = deque([v])
    while q:
        x = q.popleft()
        for y in iter_bits(g.adj_mask(x)):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return max(dist.values())


def minimum_dominating_mask(g: SimpleGraph) -> int:
    """A minimum dominating set as a bitmask; exact branch and bound."""
    n = g.n
    if n > EXACT_SEARCH_CAP:
        raise InstanceTooLarge(f"{n} vertices exceeds the exact-search cap of {EXACT_SEARCH_CAP}")
    closed = [g.closed_mask(i) for i in range(n)]
    widest = max((c.bit_count() for c in closed), default=1)

    # Greedy start: repeatedly take the vertex covering most undominated vertices.
    best = 0
    undominated = g.full_mask
    while undominated:
        pick = max(range(n), key=lambda i: ((closed[i] & undominated).bit_count(), -i))
        best |= 1 << pick
        undominated &= ~closed[pick]
    best_size = best.bit_count()

    def search(undom: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if not undom:
            if size < best_size:
                best, best_size = chosen, size
            return
        if size + -(-undom.bit_count() // widest) >= best_size:
            return
        v = lowest_bit(undom)
        for u in iter_bits(closed[v]):
            search(undom & ~closed[u], chosen | 1 << u, size + 1)

    search(g.full_mask, 0, 0)
    return best


def domination_number(g: SimpleGraph) -> int:
    return minimum_dominating_mask(g).bit_count()


def max_stable_mask(g: SimpleGraph, within: int | None = None,
                    accept: Callable[[int], bool] | None = None) -> int:
    """Lexicographically first maximum stable set inside ``within`` satisfying ``accept``.

    ``accept`` must be upward closed on stable sets (true for S implies true for
    any stable superset); 0 is returned when nothing is accepted.
    """
    if g.n > EXACT_SEARCH_CAP:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the exact-search cap of {EXACT_SEARCH_CAP}")
    cand0 = g.full_mask if within is None else within & g.full_mask
    best, best_size = 0, 0
    adj = g.adj_masks

    def search(chosen: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        if not cand:
            if size > best_size and (accept is None or accept(chosen)):
                best, best_size = chosen, size
            return
        if size + cand.bit_count() <= best_size:
            return
        v = lowest_bit(cand)
        search(chosen | 1 << v, size + 1, cand & ~adj[v] & ~(1 << v))
        search(chosen, size, cand & ~(1 << v))

    search(0, 0, cand0)
    return best


def maximal_stable_sets(g: SimpleGraph, within: int | None = None) -> Iterator[int]:
    """Every maximal stable set of ``g[within]`` (Bron-Kerbosch with pivoting on the complement)."""
    full = g.full_mask if within is None else within & g.full_mask
    non_adj = [full & ~g.adj_mask(i) & ~(1 << i) for i in range(g.n)]

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(iter_bits(p | x), key=lambda u: (non_adj[u] & p).bit_count())
        for v in iter_bits(p & ~non_adj[pivot]):
            yield from bk(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if full:
        yield from bk(0, full, 0)


@dataclass(frozen=True)
class AntiCompetingSetResult:
    best_set: frozenset[str]
    size: int
    crosses_parts: bool
    star_shape_verified: bool | None = None


def parts_met(t: MultipartiteTournament, mask: int) -> int:
    return sum(1 for m in t.part_masks if m & mask)


def star_shape(t: MultipartiteTournament, g: SimpleGraph, mask: int) -> bool:
    """``mask`` has four vertices, two in each of two parts, and the non-edges of ``g`` are exactly its six pairs."""
    if mask.bit_count() != 4:
        return False
    counts = sorted((m & mask).bit_count() for m in t.part_masks if m & mask)
    if counts != [2, 2]:
        return False
    for i in range(g.n):
        want = g.full_mask & ~(1 << i)
        if mask >> i & 1:
            want &= ~mask
        if g.adj_mask(i) != want:
            return False
    return True


def max_anti_competing_set(t: MultipartiteTournament, g: SimpleGraph, scope: str = "any",
                           part: int | None = None) -> AntiCompetingSetResult:
    """Largest stable set of C_{1,2}(D) under a scope.

    ``scope`` is ``"any"``, ``"cross-part"`` (not inside a single partite set)
    or ``"within-part"`` (inside partite set ``part``). For a sinkless ``D`` and
    a cross-part optimum of size four the star shape is also verified.
    """
    _check_graph(t, g)
    if scope == "any":
        mask = max_stable_mask(g)
    elif scope == "cross-part":
        mask = max_stable_mask(g, accept=lambda m: parts_met(t, m) >= 2)
    elif scope == "within-part":
        if part is None or not 0 <= part < t.k:
            raise ValueError("scope 'within-part' needs a valid part index")
        mask = max_stable_mask(g, within=t.part_mask(part))
    else:
        raise ValueError(f"unknown scope {scope!r}")
    crosses = parts_met(t, mask) >= 2
    star = None
    if scope == "cross-part" and mask.bit_count() == 4 and not t.sink_mask():
        star = star_shape(t, g, mask)
    return AntiCompetingSetResult(t.digraph.labels(mask), mask.bit_count(), crosses, star)


# ---------------------------------------------------------------------------
# twins

def true_twins_digraph(t: MultipartiteTournament, u: str, v: str) -> bool:
    """Equal out-neighbourhoods and equal in-neighbourhoods."""
    i, j = t.index(u), t.index(v)
    if i == j:
        raise SameVertex(f"queried the same vertex {u!r} twice")
    return t.out_mask(i) == t.out_mask(j) and t.in_mask(i) == t.in_mask(j)


def true_twins_graph(g: SimpleGraph, u: str, v: str) -> bool:
    """Equal closed neighbourhoods."""
    i, j = g.index(u), g.index(v)
    if i == j:
        raise SameVertex(f"queried the same vertex {u!r} twice")
    return g.closed_mask(i) == g.closed_mask(j)
