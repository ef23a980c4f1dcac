"""Finite simple digraphs on opaque string labels, backed by integer bitsets.

Vertex ``i`` (position in ``vertex_ids``) is bit ``1 << i`` of every mask.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidExclusion, UnsupportedBound, VertexNotFound


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Digraph:
    """Immutable finite simple digraph.

    Parameters
    ----------
    vertex_ids : iterable of str
        Distinct vertex labels; their order is the canonical order.
    arcs : iterable of (str, str)
        Ordered pairs ``(u, v)`` meaning ``u -> v``. Loops and repeated arcs are rejected.
    """

    __slots__ = ("vertex_ids", "_index", "_out", "_in")

    def __init__(self, vertex_ids: Iterable[str], arcs: Iterable[tuple[str, str]] = ()):
        ids = tuple(vertex_ids)
        index = {v: i for i, v in enumerate(ids)}
        if len(index) != len(ids):
            raise ValueError("vertex labels must be distinct")
        out = [0] * len(ids)
        inn = [0] * len(ids)
        for u, v in arcs:
            if u not in index:
                raise VertexNotFound(u)
            if v not in index:
                raise VertexNotFound(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            i, j = index[u], index[v]
            if out[i] >> j & 1:
                raise ValueError(f"repeated arc ({u!r}, {v!r})")
            out[i] |= 1 << j
            inn[j] |= 1 << i
        self.vertex_ids = ids
        self._index = index
        self._out = tuple(out)
        self._in = tuple(inn)

    @classmethod
    def _from_masks(cls, ids: tuple[str, ...], out: Iterable[int]) -> "Digraph":
        d = cls.__new__(cls)
        d.vertex_ids = ids
        d._index = {v: i for i, v in enumerate(ids)}
        d._out = tuple(out)
        inn = [0] * len(ids)
        for i, m in enumerate(d._out):
            for j in iter_bits(m):
                inn[j] |= 1 << i
        d._in = tuple(inn)
        return d

    # -- basic accessors ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertex_ids)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return set(self.vertex_ids) == set(other.vertex_ids) and self.arcs == other.arcs

    def __hash__(self):
        return hash((frozenset(self.vertex_ids), self.arcs))

    def __repr__(self) -> str:
        return f"Digraph({len(self)} vertices, {self.arc_count()} arcs)"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise VertexNotFound(v) from None

    def label(self, i: int) -> str:
        return self.vertex_ids[i]

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(self.vertex_ids[i] for i in iter_bits(mask))

    def mask_of(self, vertices: Iterable[str]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.index(v)
        return m

    def out_mask(self, i: int) -> int:
        return self._out[i]

    def in_mask(self, i: int) -> int:
        return self._in[i]

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        ids = self.vertex_ids
        return frozenset((ids[i], ids[j]) for i, m in enumerate(self._out) for j in iter_bits(m))

    def sorted_arcs(self) -> list[tuple[str, str]]:
        """Arcs ordered by (tail, head) canonical position."""
        ids = self.vertex_ids
        return [(ids[i], ids[j]) for i, m in enumerate(self._out) for j in iter_bits(m)]

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def has_arc(self, u: str, v: str) -> bool:
        return bool(self._out[self.index(u)] >> self.index(v) & 1)

    def out_neighbors(self, v: str) -> frozenset[str]:
        return self.labels(self._out[self.index(v)])

    def in_neighbors(self, v: str) -> frozenset[str]:
        return self.labels(self._in[self.index(v)])

    def out_degree(self, v: str) -> int:
        return self._out[self.index(v)].bit_count()

    def in_degree(self, v: str) -> int:
        return self._in[self.index(v)].bit_count()

    # -- derived digraphs and distances ------------------------------------

    def delete_vertex(self, v: str) -> "Digraph":
        """Induced subdigraph on every vertex except ``v``."""
        drop = self.index(v)
        keep = [i for i in range(len(self)) if i != drop]
        ids = tuple(self.vertex_ids[i] for i in keep)
        arcs = [(self.vertex_ids[i], self.vertex_ids[j])
                for i in keep for j in iter_bits(self._out[i]) if j != drop]
        return Digraph(ids, arcs)

    def distance_at_most(self, u: str, w: str, excluded: str | None = None, bound: int = 2) -> bool:
        """Is there a directed ``u``-``w`` path of length <= ``bound`` avoiding ``excluded``?

        Breadth-first search truncated at depth ``bound`` inside ``D - excluded``.
        ``u == w`` counts as a path of length 0.
        """
        if bound not in (1, 2):
            raise UnsupportedBound(f"bound must be 1 or 2, got {bound!r}")
        ui, wi = self.index(u), self.index(w)
        blocked = 0
        if excluded is not None:
            xi = self.index(excluded)
            if xi in (ui, wi):
                raise InvalidExclusion(f"excluded vertex {excluded!r} is an endpoint")
            blocked = 1 << xi
        target = 1 << wi
        seen = 1 << ui
        frontier = seen
        for _ in range(bound):
            if seen & target:
                return True
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= self._out[i]
            frontier = nxt & ~blocked & ~seen
            if not frontier:
                break
            seen |= frontier
        return bool(seen & target)
