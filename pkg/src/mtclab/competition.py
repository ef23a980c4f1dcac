"""{1,2}-competition between vertex pairs and the (1,2)-step competition graph.

Two independent routes are provided:

* the *oracle* route evaluates the bounded-distance definition directly with
  :meth:`Digraph.distance_at_most` and never looks at partite sets;
* the *fast* route decides adjacency from out-neighbourhood bitsets and the
  partition alone, with no path search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .digraph import lowest_bit
from .errors import SameVertex, UnsupportedBound
from .graph import SimpleGraph
from .tournament import MultipartiteTournament


class WitnessKind(enum.Enum):
    COMMON_OUT_NEIGHBOR = "common-out-neighbor"
    ONE_TWO_STEP = "one-two-step"


class Method(enum.Enum):
    ORACLE = "oracle"
    FAST = "fast"


@dataclass(frozen=True)
class AdjacencyWitness:
    """Why two vertices {1,2}-compete.

    For ``ONE_TWO_STEP`` the ``path`` is ``(start, middle, target)``: ``start``
    is one queried vertex, and the other queried vertex has the arc onto ``target``.
    """

    kind: WitnessKind
    target: str
    path: tuple[str, str, str] | None = None


def _pair(t: MultipartiteTournament, u: str, v: str) -> tuple[int, int]:
    i, j = t.index(u), t.index(v)
    if i == j:
        raise SameVertex(f"queried the same vertex {u!r} twice")
    return i, j


def competes(t: MultipartiteTournament, u: str, v: str) -> AdjacencyWitness | None:
    """Common out-neighbour of ``u`` and ``v`` (the canonically smallest), or None."""
    i, j = _pair(t, u, v)
    common = t.out_mask(i) & t.out_mask(j)
    if not common:
        return None
    return AdjacencyWitness(WitnessKind.COMMON_OUT_NEIGHBOR, t.vertex_ids[lowest_bit(common)])


def _two_step_middle(t, arc_tail: int, path_start: int, w: int) -> int | None:
    """Middle vertex of a ``path_start -> x -> w`` path avoiding ``arc_tail``, if ``arc_tail -> w``."""
    if not t.out_mask(arc_tail) >> w & 1:
        return None
    mids = t.out_mask(path_start) & t.in_mask(w) & ~(1 << arc_tail)
    return lowest_bit(mids) if mids else None


def one_two_competes(t: MultipartiteTournament, u: str, v: str) -> AdjacencyWitness | None:
    """A (1,2)-step common out-neighbour, or None.

    Candidates ``w`` are scanned in canonical order; for each, the arc ``u -> w``
    (with a 2-path from ``v``) is tried before the arc ``v -> w``.
    """
    i, j = _pair(t, u, v)
    ids = t.vertex_ids
    for w in range(t.n):
        if w == i or w == j:
            continue
        x = _two_step_middle(t, i, j, w)
        if x is not None:
            return AdjacencyWitness(WitnessKind.ONE_TWO_STEP, ids[w], (ids[j], ids[x], ids[w]))
        x = _two_step_middle(t, j, i, w)
        if x is not None:
            return AdjacencyWitness(WitnessKind.ONE_TWO_STEP, ids[w], (ids[i], ids[x], ids[w]))
    return None


def witness(t: MultipartiteTournament, u: str, v: str) -> AdjacencyWitness | None:
    """Evidence that ``u`` and ``v`` {1,2}-compete: a common out-neighbour if any, else a (1,2)-step one."""
    return competes(t, u, v) or one_two_competes(t, u, v)


def witness_is_valid(t: MultipartiteTournament, u: str, v: str, wit: AdjacencyWitness) -> bool:
    """Replay a witness against the raw arc set."""
    arcs = t.digraph.arcs
    w = wit.target
    if w in (u, v):
        return False
    if wit.kind is WitnessKind.COMMON_OUT_NEIGHBOR:
        return (u, w) in arcs and (v, w) in arcs and wit.path is None
    if wit.path is None or len(wit.path) != 3:
        return False
    start, mid, end = wit.path
    if end != w or start not in (u, v):
        return False
    other = v if start == u else u
    return ((other, w) in arcs and (start, mid) in arcs and (mid, w) in arcs
            and mid not in (other, start, w))


def _ij_adjacent(d, i: int, j: int, a: int, b: int) -> bool:
    """Definition of C_{a,b}: some third vertex w is within a of one and b of the other."""
    ids = d.vertex_ids
    u, v = ids[i], ids[j]
    for k, w in enumerate(ids):
        if k == i or k == j:
            continue
        if d.distance_at_most(u, w, v, a) and d.distance_at_most(v, w, u, b):
            return True
        if d.distance_at_most(v, w, u, a) and d.distance_at_most(u, w, v, b):
            return True
    return False


def adjacent_oracle(t: MultipartiteTournament, u: str, v: str) -> bool:
    """Ground truth: bounded distances in ``D - v`` and ``D - u`` with (i, j) = (1, 2)."""
    i, j = _pair(t, u, v)
    return _ij_adjacent(t.digraph, i, j, 1, 2)


def exclusive_out_conditions(t: MultipartiteTournament, i: int, j: int) -> bool:
    """The three out-neighbourhood conditions for non-sink vertices at positions ``i`` and ``j``.

    (1) ``j`` is not the only out-neighbour of ``i``; (2) vice versa;
    (3) no partite set X holds N+(j) while N+(i) fits in X + {j}, and vice versa.
    """
    oi, oj = t.out_mask(i), t.out_mask(j)
    bi, bj = 1 << i, 1 << j
    if oi == bj or oj == bi:
        return False
    x = t.part_containing(oj)
    if x is not None and oi & ~(t.part_mask(x) | bj) == 0:
        return False
    x = t.part_containing(oi)
    if x is not None and oj & ~(t.part_mask(x) | bi) == 0:
        return False
    return True


def adjacent_fast_index(t: MultipartiteTournament, i: int, j: int) -> bool:
    oi, oj = t.out_mask(i), t.out_mask(j)
    if not oi or not oj:
        return False
    if oi & oj:
        return True
    if t.part_index(i) == t.part_index(j):
        return t.part_containing(oi | oj) is None
    return exclusive_out_conditions(t, i, j)


def adjacent_fast(t: MultipartiteTournament, u: str, v: str) -> bool:
    """Adjacency in C_{1,2}(D) from out-neighbourhoods and the partition only.

    Sinks are never adjacent. A shared out-neighbour always gives an edge.
    Otherwise a same-part pair is adjacent iff its out-neighbourhoods do not
    fit in one partite set, and a cross pair iff the three out-neighbour
    conditions of :func:`exclusive_out_conditions` hold.
    """
    i, j = _pair(t, u, v)
    return adjacent_fast_index(t, i, j)


def competition_graph(t: MultipartiteTournament, method: Method | str = Method.FAST) -> SimpleGraph:
    """C_{1,2}(D) on ``t``'s canonical vertex order."""
    method = Method(method)
    n = t.n
    adj = [0] * n
    if method is Method.FAST:
        for i in range(n):
            for j in range(i + 1, n):
                if adjacent_fast_index(t, i, j):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    else:
        d = t.digraph
        for i in range(n):
            for j in range(i + 1, n):
                if _ij_adjacent(d, i, j, 1, 2):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    return SimpleGraph.from_masks(t.vertex_ids, adj)


def generic_ij_graph(t: MultipartiteTournament, i: int, j: int) -> SimpleGraph:
    """C_{i,j}(D) by the distance definition, for 1 <= i <= j <= 2. (1, 1) is the competition graph."""
    if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= j <= 2):
        raise UnsupportedBound(f"need 1 <= i <= j <= 2, got ({i!r}, {j!r})")
    d = t.digraph
    n = t.n
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if _ij_adjacent(d, a, b, i, j):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return SimpleGraph.from_masks(t.vertex_ids, adj)


def only_out_neighbor(t: MultipartiteTournament, i: int, j: int) -> bool:
    """``i *-> j``: vertex ``j`` is the unique out-neighbour of vertex ``i``."""
    return t.out_mask(i) == 1 << j


__all__ = [
    "AdjacencyWitness",
    "Method",
    "WitnessKind",
    "adjacent_fast",
    "adjacent_fast_index",
    "adjacent_oracle",
    "competes",
    "competition_graph",
    "exclusive_out_conditions",
    "generic_ij_graph",
    "one_two_competes",
    "only_out_neighbor",
    "witness",
    "witness_is_valid",
]
