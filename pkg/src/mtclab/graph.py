"""Undirected simple graphs with bitset adjacency."""

from __future__ import annotations

from typing import Iterable

from .digraph import iter_bits
from .errors import VertexNotFound


class SimpleGraph:
    """Immutable undirected simple graph; ``vertex_ids`` fixes the canonical order."""

    __slots__ = ("vertex_ids", "_index", "_adj")

    def __init__(self, vertex_ids: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        ids = tuple(vertex_ids)
        index = {v: i for i, v in enumerate(ids)}
        if len(index) != len(ids):
            raise ValueError("vertex labels must be distinct")
        adj = [0] * len(ids)
        for e in edges:
            u, v = tuple(e)
            if u not in index:
                raise VertexNotFound(u)
            if v not in index:
                raise VertexNotFound(v)
            if u == v:
                raise ValueError(f"loop at {u!r}")
            i, j = index[u], index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.vertex_ids = ids
        self._index = index
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, vertex_ids: Iterable[str], adj: Iterable[int]) -> "SimpleGraph":
        g = cls.__new__(cls)
        g.vertex_ids = tuple(vertex_ids)
        g._index = {v: i for i, v in enumerate(g.vertex_ids)}
        g._adj = tuple(adj)
        if len(g._adj) != len(g.vertex_ids):
            raise ValueError("one adjacency mask per vertex is required")
        for i, m in enumerate(g._adj):
            if m >> i & 1:
                raise ValueError(f"loop at {g.vertex_ids[i]!r}")
            for j in iter_bits(m):
                if not g._adj[j] >> i & 1:
                    raise ValueError("adjacency masks are not symmetric")
        return g

    def __len__(self) -> int:
        return len(self.vertex_ids)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return set(self.vertex_ids) == set(other.vertex_ids) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertex_ids), self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({len(self)} vertices, {self.edge_count()} edges)"

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise VertexNotFound(v) from None

    def labels(self, mask: int) -> frozenset[str]:
        return frozenset(self.vertex_ids[i] for i in iter_bits(mask))

    def ordered_labels(self, mask: int) -> list[str]:
        return [self.vertex_ids[i] for i in iter_bits(mask)]

    def mask_of(self, vertices: Iterable[str]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.index(v)
        return m

    def adj_mask(self, i: int) -> int:
        return self._adj[i]

    @property
    def adj_masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertex_ids)) - 1

    @property
    def edges(self) -> frozenset[frozenset[str]]:
        ids = self.vertex_ids
        return frozenset(frozenset((ids[i], ids[j]))
                         for i, m in enumerate(self._adj) for j in iter_bits(m) if j > i)

    def sorted_edges(self) -> list[tuple[str, str]]:
        ids = self.vertex_ids
        return [(ids[i], ids[j]) for i, m in enumerate(self._adj) for j in iter_bits(m) if j > i]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def adjacent(self, u: str, v: str) -> bool:
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, v: str) -> frozenset[str]:
        return self.labels(self._adj[self.index(v)])

    def closed_mask(self, i: int) -> int:
        return self._adj[i] | 1 << i

    def is_clique(self, mask: int) -> bool:
        for i in iter_bits(mask):
            if (mask & ~(1 << i)) & ~self._adj[i]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self._adj[i] & mask) for i in iter_bits(mask))

    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        return SimpleGraph.from_masks(self.vertex_ids,
                                      [full & ~m & ~(1 << i) for i, m in enumerate(self._adj)])

    def induced(self, vertices: Iterable[str]) -> "SimpleGraph":
        kset = set(vertices)
        keep = [v for v in self.vertex_ids if v in kset]
        return SimpleGraph(keep, [e for e in self.sorted_edges() if e[0] in kset and e[1] in kset])
