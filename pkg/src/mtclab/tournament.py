"""Multipartite tournaments: validation, seeded generation, exhaustive enumeration, fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .digraph import Digraph
from .errors import (
    DoubleOrientation,
    EnumerationTooLarge,
    IntraPartArc,
    MissingCrossArc,
    PartitionError,
    TooFewParts,
)

MAX_ENUM_CROSS_PAIRS = 20
_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014). Pure integer arithmetic, identical everywhere."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def coin(self) -> int:
        """One fair bit: the most significant bit of the next output."""
        return self.next_u64() >> 63


@dataclass(frozen=True)
class Partition:
    """Ordered partite sets. ``names`` are the labels used by MTD files (default ``X1..Xk``)."""

    parts: tuple[tuple[str, ...], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"X{i + 1}" for i in range(len(parts))))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != len(parts):
            raise PartitionError("one name per partite set is required")
        if len(set(self.names)) != len(self.names):
            raise PartitionError("partite set names must be distinct")
        seen: set[str] = set()
        for name, p in zip(self.names, parts):
            if not p:
                raise PartitionError(f"partite set {name} is empty")
            for v in p:
                if v in seen:
                    raise PartitionError(f"vertex {v!r} appears in more than one partite set")
                seen.add(v)

    @property
    def k(self) -> int:
        return len(self.parts)

    def vertices(self) -> tuple[str, ...]:
        """Canonical vertex order: partition order, then declaration order within a part."""
        return tuple(v for p in self.parts for v in p)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


class MultipartiteTournament:
    """An orientation of a complete k-partite graph, k >= 3.

    Build one with :func:`validate` (or the generators below); the constructor
    assumes its inputs were already checked. The digraph's vertex order is the
    partition's canonical order, so bit ``i`` of any mask is the ``i``-th
    vertex of ``partition.vertices()``.
    """

    __slots__ = ("digraph", "partition", "_part_of", "_part_masks")

    def __init__(self, digraph: Digraph, partition: Partition):
        self.digraph = digraph
        self.partition = partition
        part_of = []
        masks = []
        pos = 0
        for pi, p in enumerate(partition.parts):
            masks.append(((1 << len(p)) - 1) << pos)
            part_of.extend([pi] * len(p))
            pos += len(p)
        self._part_of = tuple(part_of)
        self._part_masks = tuple(masks)

    def __repr__(self):
        return f"MultipartiteTournament(sizes={list(self.partition.sizes())}, arcs={self.digraph.arc_count()})"

    def __eq__(self, other):
        if not isinstance(other, MultipartiteTournament):
            return NotImplemented
        return self.partition.parts == other.partition.parts and self.digraph.arcs == other.digraph.arcs

    def __hash__(self):
        return hash((self.partition.parts, self.digraph.arcs))

    # Convenience delegation; everything else lives on ``digraph``.
    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return self.digraph.vertex_ids

    @property
    def n(self) -> int:
        return len(self.digraph)

    @property
    def k(self) -> int:
        return self.partition.k

    def index(self, v: str) -> int:
        return self.digraph.index(v)

    def out_mask(self, i: int) -> int:
        return self.digraph.out_mask(i)

    def in_mask(self, i: int) -> int:
        return self.digraph.in_mask(i)

    def part_index(self, i: int) -> int:
        """Partite-set index of the vertex at canonical position ``i``."""
        return self._part_of[i]

    def part_of(self, v: str) -> int:
        return self._part_of[self.index(v)]

    def part_mask(self, p: int) -> int:
        return self._part_masks[p]

    @property
    def part_masks(self) -> tuple[int, ...]:
        return self._part_masks

    def part_containing(self, mask: int) -> int | None:
        """Index of the partite set containing every vertex of a nonempty ``mask``, else None."""
        if not mask:
            return None
        p = self._part_of[(mask & -mask).bit_length() - 1]
        return p if mask & ~self._part_masks[p] == 0 else None

    def sink_mask(self) -> int:
        m = 0
        for i in range(self.n):
            if not self.digraph.out_mask(i):
                m |= 1 << i
        return m

    def cross_pairs(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)``, ``i < j``, lying in distinct parts, in canonical order."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self._part_of[i] != self._part_of[j]]


def validate(digraph: Digraph, partition: Partition) -> MultipartiteTournament:
    """Check that ``digraph`` orients the complete multipartite graph on ``partition``.

    The first violating pair in canonical order is reported.
    """
    order = partition.vertices()
    if set(order) != set(digraph.vertex_ids) or len(order) != len(digraph.vertex_ids):
        raise PartitionError("partition does not cover exactly the digraph's vertices")
    if partition.k < 3:
        raise TooFewParts(partition.k)
    part_of = {v: pi for pi, p in enumerate(partition.parts) for v in p}
    for a in range(len(order)):
        u = order[a]
        for b in range(a + 1, len(order)):
            v = order[b]
            uv, vu = digraph.has_arc(u, v), digraph.has_arc(v, u)
            if part_of[u] == part_of[v]:
                if uv or vu:
                    raise IntraPartArc(u, v)
            elif uv and vu:
                raise DoubleOrientation(u, v)
            elif not (uv or vu):
                raise MissingCrossArc(u, v)
    if digraph.vertex_ids != order:
        digraph = Digraph(order, digraph.sorted_arcs())
    return MultipartiteTournament(digraph, partition)


def _named_partition(part_sizes: Sequence[int]) -> Partition:
    sizes = list(part_sizes)
    if len(sizes) < 3:
        raise TooFewParts(len(sizes))
    for s in sizes:
        if int(s) != s or s < 1:
            raise PartitionError(f"part sizes must be positive integers, got {s!r}")
    return Partition(tuple(tuple(f"p{i + 1}v{j + 1}" for j in range(s)) for i, s in enumerate(sizes)))


def _oriented(partition: Partition, pairs: list[tuple[int, int]], flips) -> MultipartiteTournament:
    """Orient cross pair ``(i, j)`` as ``i -> j`` when its flip bit is 0, else ``j -> i``."""
    n = sum(partition.sizes())
    out = [0] * n
    for (i, j), f in zip(pairs, flips):
        if f:
            out[j] |= 1 << i
        else:
            out[i] |= 1 << j
    return MultipartiteTournament(Digraph._from_masks(partition.vertices(), out), partition)


def _cross_pairs(partition: Partition) -> list[tuple[int, int]]:
    part_of = [pi for pi, p in enumerate(partition.parts) for _ in p]
    n = len(part_of)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if part_of[i] != part_of[j]]


def random_tournament(part_sizes: Sequence[int], seed: int) -> MultipartiteTournament:
    """Uniformly random orientation; one SplitMix64 coin per cross pair in canonical order.

    Vertices are named ``p{i}v{j}`` (both 1-based). A coin of 0 orients the pair
    from the canonically earlier vertex to the later one.
    """
    partition = _named_partition(part_sizes)
    rng = SplitMix64(seed)
    pairs = _cross_pairs(partition)
    return _oriented(partition, pairs, [rng.coin() for _ in pairs])


def cross_pair_count(part_sizes: Sequence[int]) -> int:
    sizes = list(part_sizes)
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def orientation(part_sizes: Sequence[int], code: int) -> MultipartiteTournament:
    """The ``code``-th tournament of :func:`enumerate_tournaments` (0-based)."""
    partition = _named_partition(part_sizes)
    pairs = _cross_pairs(partition)
    m = len(pairs)
    if not 0 <= code < 1 << m:
        raise ValueError(f"code must lie in [0, 2**{m})")
    return _oriented(partition, pairs, [(code >> (m - 1 - t)) & 1 for t in range(m)])


def enumerate_tournaments(part_sizes: Sequence[int]) -> Iterator[MultipartiteTournament]:
    """Every orientation exactly once, in lexicographic order of the flip vector.

    The flip vector lists one bit per cross pair in canonical order (see
    :func:`random_tournament` for the bit convention); the all-zero vector comes first.
    """
    partition = _named_partition(part_sizes)
    pairs = _cross_pairs(partition)
    m = len(pairs)
    if m > MAX_ENUM_CROSS_PAIRS:
        raise EnumerationTooLarge(f"{m} cross pairs exceeds the limit of {MAX_ENUM_CROSS_PAIRS}")
    return _enumerate(partition, pairs)


def _enumerate(partition, pairs):
    m = len(pairs)
    for code in range(1 << m):
        yield _oriented(partition, pairs, [(code >> (m - 1 - t)) & 1 for t in range(m)])


_FIXTURES = {
    "T3": (
        (("a",), ("b",), ("c",)),
        [("a", "b"), ("b", "c"), ("c", "a")],
    ),
    "STAR5": (
        (("u1", "u2"), ("u3", "u4"), ("x",)),
        [("u1", "u3"), ("u3", "u2"), ("u2", "u4"), ("u4", "u1"),
         ("x", "u1"), ("x", "u2"), ("x", "u3"), ("x", "u4")],
    ),
    "SINK4": (
        (("s", "u"), ("v",), ("w",)),
        [("v", "s"), ("w", "s"), ("u", "v"), ("u", "w"), ("v", "w")],
    ),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> MultipartiteTournament:
    """The named hand-built instances ``T3``, ``STAR5`` and ``SINK4``."""
    try:
        parts, arcs = _FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}") from None
    partition = Partition(parts)
    return validate(Digraph(partition.vertices(), arcs), partition)

