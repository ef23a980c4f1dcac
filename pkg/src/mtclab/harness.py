"""Machine-checkable statements about C_{1,2}(D) and a deterministic fuzzer that runs them.

Each catalog entry pairs a hypothesis with a conclusion. A check reports
``NOT_APPLICABLE`` whenever its hypothesis fails on the instance, so it can
only ``FAIL`` on instances it is about. Every ``FAIL`` carries the instance in
MTD v1 form plus the violating tuple, and replaying it reproduces the ``FAIL``.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .competition import (
    Method,
    competition_graph,
    exclusive_out_conditions,
    generic_ij_graph,
    one_two_competes,
)
from .digraph import iter_bits
from .errors import ConfigError, InstanceTooLarge, UnknownTheorem
from .graph import SimpleGraph
from .mtd import serialize_mtd
from .recognition import asteroidal_triples, c4_holes, find_hole, holes, is_c4_free, is_chordal, is_interval
from .structure import (
    StructureReport,
    classify_parts,
    components_and_diameters,
    f_masks,
    max_anti_competing_set,
    max_stable_mask,
    maximal_stable_sets,
    minimum_dominating_mask,
    parts_met,
    star_shape,
    verify_block_structure,
    x2_candidates,
)
from .tournament import (
    MAX_ENUM_CROSS_PAIRS,
    MultipartiteTournament,
    cross_pair_count,
    orientation,
    random_tournament,
)

MAXIMAL_ENUM_CAP = 16
CYCLE_SCAN_CAP = 12
ORACLE_CAP = 12


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    SKIPPED_SIZE = "SKIPPED_SIZE"


@dataclass(frozen=True)
class Counterexample:
    instance: str  # MTD v1 text
    violation: str


@dataclass(frozen=True)
class CheckResult:
    id: str
    verdict: Verdict
    counterexample: Counterexample | None = None
    detail: str = ""
    observations: tuple[tuple[str, int], ...] = ()


class NotApplicable(Exception):
    pass


class SkippedSize(Exception):
    pass


class Violation(Exception):
    pass


# ---------------------------------------------------------------------------
# shared per-instance data

class Instance:
    """A tournament with C_{1,2}(D) and derived data computed at most once."""

    def __init__(self, t: MultipartiteTournament, g: SimpleGraph | None = None):
        self.t = t
        self.g = competition_graph(t, Method.FAST) if g is None else g
        self.observations: dict[str, Counter] = {}

    def observe(self, check_id: str, key: str) -> None:
        self.observations.setdefault(check_id, Counter())[key] += 1

    def name(self, i: int) -> str:
        return self.t.vertex_ids[i]

    def names(self, mask: int) -> str:
        return "{" + ",".join(self.name(i) for i in iter_bits(mask)) + "}"

    def part_name(self, p: int) -> str:
        return self.t.partition.names[p]

    @cached_property
    def oracle(self) -> SimpleGraph:
        return competition_graph(self.t, Method.ORACLE)

    @cached_property
    def c11(self) -> SimpleGraph:
        return generic_ij_graph(self.t, 1, 1)

    @cached_property
    def report(self) -> StructureReport:
        return classify_parts(self.t, self.g)

    @property
    def loose(self) -> bool:
        return self.report.loose

    @cached_property
    def noncomp(self) -> list[int]:
        return self.report.non_competing

    @cached_property
    def sinks(self) -> int:
        return self.t.sink_mask()

    @property
    def nonsinks(self) -> int:
        return ((1 << self.t.n) - 1) & ~self.sinks

    @cached_property
    def fm(self) -> dict[int, int]:
        return f_masks(self.t)

    @cached_property
    def maximal_stable(self) -> list[int]:
        if self.t.n > MAXIMAL_ENUM_CAP:
            raise SkippedSize(f"maximal stable set enumeration capped at n <= {MAXIMAL_ENUM_CAP}")
        return list(maximal_stable_sets(self.g))

    @cached_property
    def stable_triples(self) -> list[int]:
        adj = self.g.adj_masks
        out = []
        for a, b, c in itertools.combinations(range(self.t.n), 3):
            if not (adj[a] >> b & 1 or adj[a] >> c & 1 or adj[b] >> c & 1):
                out.append(1 << a | 1 << b | 1 << c)
        return out

    def same_part(self, mask: int) -> int | None:
        return self.t.part_containing(mask)

    def nonsink_pairs(self) -> Iterable[tuple[int, int]]:
        ns = [i for i in range(self.t.n) if not self.sinks >> i & 1]
        return itertools.combinations(ns, 2)

    def sim(self, a: int, b: int) -> int | None:
        """First non-adjacent pair (x in a, y in b - {x}); None means ``a ~ b``."""
        for x in iter_bits(a):
            miss = b & ~(1 << x) & ~self.g.adj_mask(x)
            if miss:
                return x, (miss & -miss).bit_length() - 1
        return None


def _need_loose(inst: Instance) -> None:
    if not inst.loose:
        raise NotApplicable("tight tournament")


def _require(cond: bool, message: Callable[[], str]) -> None:
    if not cond:
        raise Violation(message())


# ---------------------------------------------------------------------------
# adjacency characterizations

def _fast_vs_oracle(inst: Instance):
    if inst.t.n > ORACLE_CAP:
        raise SkippedSize(f"oracle cross-check capped at n <= {ORACLE_CAP}")
    g, o = inst.g, inst.oracle
    for i in range(inst.t.n):
        diff = g.adj_mask(i) ^ o.adj_mask(i)
        _require(not diff, lambda: f"pair ({inst.name(i)}, {inst.name((diff & -diff).bit_length() - 1)}): "
                                   f"fast={bool(g.adj_mask(i) & diff)} oracle={bool(o.adj_mask(i) & diff)}")


def _same_part_pairs(inst: Instance):
    pairs = [(i, j) for i, j in inst.nonsink_pairs() if inst.t.part_index(i) == inst.t.part_index(j)]
    if not pairs:
        raise NotApplicable("no same-part pair of non-sinks")
    return pairs


def _p_same_1(inst: Instance):
    t = inst.t
    for i, j in _same_part_pairs(inst):
        compete = bool(inst.c11.adj_mask(i) >> j & 1)
        disjoint = not t.out_mask(i) & t.out_mask(j)
        _require((not compete) == disjoint,
                 lambda: f"({inst.name(i)}, {inst.name(j)}): compete={compete} disjoint={disjoint}")


def _p_same_2(inst: Instance):
    t = inst.t
    for i, j in _same_part_pairs(inst):
        one_two = one_two_competes(t, inst.name(i), inst.name(j)) is not None
        in_one_part = inst.same_part(t.out_mask(i) | t.out_mask(j)) is not None
        _require((not one_two) == in_one_part,
                 lambda: f"({inst.name(i)}, {inst.name(j)}): (1,2)-compete={one_two} union-in-one-part={in_one_part}")


def _p_same_3(inst: Instance):
    t = inst.t
    for i, j in _same_part_pairs(inst):
        adjacent = bool(inst.oracle.adj_mask(i) >> j & 1)
        disjoint = not t.out_mask(i) & t.out_mask(j)
        in_one_part = inst.same_part(t.out_mask(i) | t.out_mask(j)) is not None
        _require((not adjacent) == (disjoint and in_one_part),
                 lambda: f"({inst.name(i)}, {inst.name(j)}): adjacent={adjacent} "
                         f"disjoint={disjoint} union-in-one-part={in_one_part}")


def _p_diff(inst: Instance):
    t = inst.t
    seen = False
    for a, b in inst.nonsink_pairs():
        if t.part_index(a) == t.part_index(b):
            continue
        u, v = (a, b) if t.out_mask(a) >> b & 1 else (b, a)
        seen = True
        ou, ov = t.out_mask(u), t.out_mask(v)
        x = inst.same_part(ov)
        fits = x is not None and ou & ~(t.part_mask(x) | 1 << v) == 0
        predicted = ou == 1 << v or (not ou & ov and fits)
        adjacent = bool(inst.oracle.adj_mask(u) >> v & 1)
        _require((not adjacent) == predicted,
                 lambda: f"arc ({inst.name(u)}, {inst.name(v)}): adjacent={adjacent} condition(ii)={predicted}")
    if not seen:
        raise NotApplicable("no cross-part pair of non-sinks")


def _c_adj(inst: Instance):
    t = inst.t
    seen = False
    for i, j in inst.nonsink_pairs():
        seen = True
        predicted = bool(t.out_mask(i) & t.out_mask(j)) or exclusive_out_conditions(t, i, j)
        adjacent = bool(inst.oracle.adj_mask(i) >> j & 1)
        _require(adjacent == predicted,
                 lambda: f"({inst.name(i)}, {inst.name(j)}): adjacent={adjacent} predicted={predicted}")
    if not seen:
        raise NotApplicable("fewer than two non-sinks")


# ---------------------------------------------------------------------------
# loose structure

def _p_sub_1(inst: Instance):
    _need_loose(inst)
    t = inst.t
    if t.n > MAXIMAL_ENUM_CAP:
        raise SkippedSize(f"stable set enumeration capped at n <= {MAXIMAL_ENUM_CAP}")
    seen = False
    for x in inst.noncomp:
        for s in maximal_stable_sets(inst.g, t.part_mask(x)):
            if s.bit_count() < 2 or (s & ~inst.sinks).bit_count() == 1:
                continue
            seen = True
            union = 0
            for i in iter_bits(s):
                union |= t.out_mask(i)
            _require(union == 0 or inst.same_part(union) is not None,
                     lambda: f"S={inst.names(s)} in {inst.part_name(x)}: union of out-neighbourhoods "
                             f"{inst.names(union)} spans several parts")
    if not seen:
        raise NotApplicable("no qualifying anti-competing set")


def _p_sub_2(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x in inst.noncomp:
        outside = [i for i in range(t.n) if not t.part_mask(x) >> i & 1]
        for s in inst.stable_triples:
            if s & ~t.part_mask(x):
                continue
            seen = True
            for a, b in itertools.combinations(outside, 2):
                _require(bool(t.out_mask(a) & t.out_mask(b) & s),
                         lambda: f"S={inst.names(s)}: {inst.name(a)}, {inst.name(b)} have no common out-neighbour in S")
    if not seen:
        raise NotApplicable("no anti-competing triple inside a non-competing part")


def _s_sink(inst: Instance):
    _need_loose(inst)
    if not inst.sinks:
        raise NotApplicable("no sinks")
    for x in inst.noncomp:
        stray = inst.sinks & ~inst.t.part_mask(x)
        _require(not stray, lambda: f"sink {inst.names(stray)} outside non-competing part {inst.part_name(x)}")


def _p_dist(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x in inst.noncomp:
        for v in iter_bits(t.part_mask(x)):
            ov = t.out_mask(v)
            if not ov or inst.same_part(ov) is not None:
                continue
            seen = True
            miss = inst.nonsinks & ~(1 << v) & ~inst.g.adj_mask(v)
            _require(not miss, lambda: f"{inst.name(v)} in {inst.part_name(x)} not adjacent to non-sink {inst.names(miss)}")
    if not seen:
        raise NotApplicable("no vertex of a non-competing part with out-neighbours in two parts")


def _t_nns_1(inst: Instance):
    _need_loose(inst)
    t = inst.t
    for x in inst.noncomp:
        for p in range(t.k):
            if p == x:
                continue
            stray = inst.fm[p] & ~t.part_mask(x)
            _require(not stray, lambda: f"X1={inst.part_name(x)}: F[{inst.part_name(p)}] has {inst.names(stray)} outside X1")


def _t_nns_2(inst: Instance):
    _need_loose(inst)
    t = inst.t
    for x in inst.noncomp:
        for x2 in x2_candidates(t, inst.g, x):
            rest = 0
            for p in range(t.k):
                if p not in (x, x2):
                    rest |= t.part_mask(p)
            _require(inst.g.is_clique(rest),
                     lambda: f"X1={inst.part_name(x)}, X2={inst.part_name(x2)}: {inst.names(rest)} is not a clique")
            bad = inst.sim(rest, t.part_mask(x2))
            _require(bad is None, lambda: f"X1={inst.part_name(x)}, X2={inst.part_name(x2)}: "
                                          f"{inst.name(bad[0])} not adjacent to {inst.name(bad[1])}")


def _t_nns_3(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x in inst.noncomp:
        for i, j in itertools.permutations([p for p in range(t.k) if p != x], 2):
            if not inst.fm[i]:
                continue
            seen = True
            bad = inst.sim(inst.fm[i], inst.fm[j] | t.part_mask(j))
            _require(bad is None, lambda: f"X1={inst.part_name(x)}: F[{inst.part_name(i)}] vs "
                                          f"F[{inst.part_name(j)}]+{inst.part_name(j)}: "
                                          f"{inst.name(bad[0])} not adjacent to {inst.name(bad[1])}")
    if not seen:
        raise NotApplicable("all F_i empty")


def _t_nns_4(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x in inst.noncomp:
        for p in range(t.k):
            if p == x:
                continue
            for a in iter_bits(inst.fm[p]):
                for b in iter_bits(t.part_mask(p)):
                    seen = True
                    adjacent = bool(inst.g.adj_mask(a) >> b & 1)
                    star = t.out_mask(a) == 1 << b or t.out_mask(b) == 1 << a
                    _require((not adjacent) == star,
                             lambda: f"x={inst.name(a)} in F[{inst.part_name(p)}], y={inst.name(b)}: "
                                     f"adjacent={adjacent} only-out-neighbour={star}")
    if not seen:
        raise NotApplicable("no (x, y) pair with x in F_i, y in X_i")


def _t_nns_5(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x in inst.noncomp:
        if not inst.sinks and max_stable_mask(inst.g, t.part_mask(x)).bit_count() < 3:
            continue
        seen = True
        rest = ((1 << t.n) - 1) & ~t.part_mask(x)
        bad = inst.sim(rest, rest)
        _require(bad is None, lambda: f"X1={inst.part_name(x)}: {inst.name(bad[0])} not adjacent to {inst.name(bad[1])}")
    if not seen:
        raise NotApplicable("no sink and no anti-competing triple in a non-competing part")


def _t_struct(inst: Instance):
    _need_loose(inst)
    rep = verify_block_structure(inst.t, inst.g)
    bad = [b for b in rep.block_verdicts if not b.passed]
    _require(not bad, lambda: "; ".join(f"[{b.designation[0]}/{b.designation[1]}] {b.block} "
                                         f"expected {b.pattern}, violated at {b.violation}" for b in bad))


def _t_ab_1(inst: Instance):
    _need_loose(inst)
    for comp, diam in components_and_diameters(inst.g):
        _require(diam <= 2, lambda: f"component {sorted(comp)} has diameter {diam}")


def _t_ab_2(inst: Instance):
    _need_loose(inst)
    connected = len(components_and_diameters(inst.g)) == 1
    _require(connected == (not inst.sinks),
             lambda: f"connected={connected} sinks={inst.names(inst.sinks)}")


def _t_ab_3(inst: Instance):
    _need_loose(inst)
    for s in inst.maximal_stable:
        _require(parts_met(inst.t, s) <= 2, lambda: f"maximal stable set {inst.names(s)} meets {parts_met(inst.t, s)} parts")


def _t_ab_4(inst: Instance):
    _need_loose(inst)
    _require(len(inst.noncomp) <= 2,
             lambda: f"{len(inst.noncomp)} non-competing parts: {[inst.part_name(p) for p in inst.noncomp]}")


def _t_ab_5(inst: Instance):
    _need_loose(inst)
    if inst.g.edge_count() == 0:
        raise NotApplicable("C_{1,2}(D) has no edges")
    m = inst.sinks.bit_count()
    dom = minimum_dominating_mask(inst.g)
    gamma = dom.bit_count()
    inst.observe("T-AB-5", f"gamma-m={gamma - m}")
    _require(gamma in (m + 1, m + 2), lambda: f"gamma={gamma} (dominating set {inst.names(dom)}), m={m}")


# ---------------------------------------------------------------------------
# cycles and anti-competing sets

def directed_short_cycles(t: MultipartiteTournament) -> list[tuple[int, ...]]:
    """Directed 3- and 4-cycles, each once, starting at their smallest vertex."""
    out = []
    n = t.n
    higher = lambda a: ((1 << n) - 1) & ~((2 << a) - 1)  # noqa: E731
    for a in range(n):
        h = higher(a)
        for b in iter_bits(t.out_mask(a) & h):
            for c in iter_bits(t.out_mask(b) & h):
                if t.out_mask(c) >> a & 1:
                    out.append((a, b, c))
                for d in iter_bits(t.out_mask(c) & h & ~(1 << b)):
                    if t.out_mask(d) >> a & 1:
                        out.append((a, b, c, d))
    return out


def _cycle_qualifies(t: MultipartiteTournament, u: int, cyc: tuple[int, ...]) -> bool:
    on = [p for p, c in enumerate(cyc) if t.out_mask(u) >> c & 1]
    if len(cyc) == 3:
        return len(on) >= 2
    return any((q - p) % 4 == 2 for p in on for q in on)


def _l_cyc(inst: Instance):
    t = inst.t
    if t.n > CYCLE_SCAN_CAP:
        raise SkippedSize(f"cycle scan capped at n <= {CYCLE_SCAN_CAP}")
    seen = False
    for cyc in directed_short_cycles(t):
        on = 0
        for c in cyc:
            on |= 1 << c
        q = 0
        for u in range(t.n):
            if not on >> u & 1 and _cycle_qualifies(t, u, cyc):
                q |= 1 << u
        if not q:
            continue
        seen = True
        bad = inst.sim(q, q | on)
        _require(bad is None, lambda: f"cycle {'->'.join(inst.name(c) for c in cyc)}: "
                                      f"{inst.name(bad[0])} not adjacent to {inst.name(bad[1])}")
    if not seen:
        raise NotApplicable("no directed 3-/4-cycle with a qualifying outside vertex")


def _l_p3(inst: Instance):
    if inst.sinks:
        raise NotApplicable("D has a sink")
    homes = {inst.same_part(s) for s in inst.stable_triples} - {None}
    if not homes:
        raise NotApplicable("no anti-competing triple inside a partite set")
    home = min(homes)
    for s in inst.stable_triples:
        _require(inst.same_part(s) == home,
                 lambda: f"triple inside {inst.part_name(home)} exists, yet {inst.names(s)} is not inside it")


def _t_s4(inst: Instance):
    _need_loose(inst)
    if inst.sinks:
        raise NotApplicable("D has a sink")
    res = max_anti_competing_set(inst.t, inst.g, "cross-part")
    if res.size == 0:
        raise NotApplicable("no anti-competing set meets two parts")
    _require(res.size <= 4, lambda: f"cross-part anti-competing set {sorted(res.best_set)} of size {res.size}")
    if res.size == 4:
        inst.observe("T-S4", "size-4")
        mask = inst.g.mask_of(res.best_set)
        _require(inst.t.n >= 5, lambda: f"n={inst.t.n} < 5")
        _require(star_shape(inst.t, inst.g, mask), lambda: f"S={sorted(res.best_set)}: not K_n - E(K_4) with a 2+2 split")


# ---------------------------------------------------------------------------
# interval section

def _l_at(inst: Instance):
    _need_loose(inst)
    seen = False
    for x, y, z in asteroidal_triples(inst.g):
        seen = True
        s = 1 << x | 1 << y | 1 << z
        _require(len(inst.noncomp) == 1 and inst.same_part(s) == inst.noncomp[0],
                 lambda: f"asteroidal triple {inst.names(s)}; non-competing parts "
                         f"{[inst.part_name(p) for p in inst.noncomp]}")
    if not seen:
        raise NotApplicable("no asteroidal triple")


def _l_tt(inst: Instance):
    t = inst.t
    seen = False
    for i, j in inst.nonsink_pairs():
        if t.out_mask(i) == t.out_mask(j) and t.in_mask(i) == t.in_mask(j):
            seen = True
            _require(inst.g.closed_mask(i) == inst.g.closed_mask(j),
                     lambda: f"{inst.name(i)}, {inst.name(j)} twins in D but not in C_{{1,2}}(D)")
    if not seen:
        raise NotApplicable("no non-sink true twins")


def _adjacent_nontwin_pairs(inst: Instance):
    for x in inst.noncomp:
        members = list(iter_bits(inst.t.part_mask(x)))
        for u, v in itertools.combinations(members, 2):
            if inst.g.adj_mask(u) >> v & 1 and inst.g.closed_mask(u) != inst.g.closed_mask(v):
                yield x, u, v


def _l_xi_1(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x, u, v in _adjacent_nontwin_pairs(inst):
        p = inst.same_part(t.out_mask(u) | t.out_mask(v))
        if p is None:
            continue
        seen = True
        miss = t.part_mask(p) & ~inst.g.adj_mask(u) & ~inst.g.adj_mask(v)
        _require(not miss, lambda: f"u={inst.name(u)}, v={inst.name(v)}: {inst.names(miss)} in "
                                   f"{inst.part_name(p)} adjacent to neither")
    if not seen:
        raise NotApplicable("no qualifying adjacent pair")


def _l_xi_2(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    for x, u, v in _adjacent_nontwin_pairs(inst):
        seen = True
        miss = ((1 << t.n) - 1) & ~(1 << u | 1 << v) & ~inst.g.adj_mask(u) & ~inst.g.adj_mask(v) & ~t.part_mask(x)
        _require(not miss, lambda: f"u={inst.name(u)}, v={inst.name(v)} in {inst.part_name(x)}: "
                                   f"{inst.names(miss)} outside {inst.part_name(x)} adjacent to neither")
    if not seen:
        raise NotApplicable("no adjacent non-twin pair in a non-competing part")


def _t_hole5(inst: Instance):
    _need_loose(inst)
    if find_hole(inst.g, 5) is None:
        raise NotApplicable("no hole of length >= 5")
    if inst.t.n > MAXIMAL_ENUM_CAP:
        raise SkippedSize(f"hole enumeration capped at n <= {MAXIMAL_ENUM_CAP}")
    t = inst.t
    _require(len(inst.noncomp) == 1,
             lambda: f"non-competing parts {[inst.part_name(p) for p in inst.noncomp]} (expected exactly one)")
    x = inst.noncomp[0]
    for hole in holes(inst.g, 5):
        hm = inst.g.mask_of(hole.cycle)
        ok = any(y != x and t.part_mask(y).bit_count() >= len(hole)
                 and hm & ~inst.fm[y] == 0 and inst.fm[y] & ~t.part_mask(x) == 0
                 for y in range(t.k))
        _require(ok, lambda: f"hole {'-'.join(hole.cycle)}: no partite set Y with |Y| >= {len(hole)} "
                             f"and V(L) within F_Y within {inst.part_name(x)}")


def _t_hole4_1(inst: Instance):
    _need_loose(inst)
    c4 = is_c4_free(inst.g)
    if c4.c4_free:
        raise NotApplicable("C_{1,2}(D) is C4-free")
    t = inst.t
    for x in inst.noncomp:
        others = [p for p in inst.noncomp if p != x]
        alone = not others
        pair = (len(others) == 1 and t.part_mask(x).bit_count() >= 4
                and t.part_mask(others[0]).bit_count() >= 4)
        _require(alone or pair, lambda: f"hole {'-'.join(c4.hole.cycle)}, X={inst.part_name(x)}: non-competing parts "
                                        f"{[(inst.part_name(p), t.part_mask(p).bit_count()) for p in inst.noncomp]}")


def _t_hole4_2(inst: Instance):
    _need_loose(inst)
    t = inst.t
    seen = False
    big_part = max(t.partition.sizes()) >= 4
    for hole in c4_holes(inst.g):
        seen = True
        v = [inst.g.index(a) for a in hole.cycle]
        same = []
        for a, b in ((v[0], v[2]), (v[1], v[3])):
            if t.part_index(a) != t.part_index(b):
                same.append(False)
                _require(t.out_mask(a) == 1 << b or t.out_mask(b) == 1 << a,
                         lambda: f"hole {'-'.join(hole.cycle)}: diagonal {inst.name(a)},{inst.name(b)} in distinct "
                                 f"parts without an only-out-neighbour arc")
            else:
                same.append(True)
        if all(same):
            _require(big_part, lambda: f"hole {'-'.join(hole.cycle)}: both diagonals inside parts but every part has size < 4")
        elif any(same):
            inst.observe("T-HOLE4-2", "mixed-diagonals")
    if not seen:
        raise NotApplicable("no hole of length four")


def _c_chord(inst: Instance):
    _need_loose(inst)
    t = inst.t
    if any(t.out_mask(i).bit_count() == 1 for i in range(t.n)):
        raise NotApplicable("some vertex has out-degree one")
    if max(t.partition.sizes()) > 3:
        raise NotApplicable("a partite set has more than three vertices")
    ch = is_chordal(inst.g)
    _require(ch.chordal, lambda: f"hole {'-'.join(ch.hole.cycle)}")


def _t_int2(inst: Instance):
    _need_loose(inst)
    if max(inst.t.partition.sizes()) > 2:
        raise NotApplicable("a partite set has more than two vertices")
    res = is_interval(inst.g)
    _require(res.interval, lambda: f"not interval: hole={res.hole} asteroidal triple={res.asteroidal_triple}")


def _t_c4eq(inst: Instance):
    if len(inst.noncomp) != 2:
        raise NotApplicable("not exactly two non-competing parts")
    interval = is_interval(inst.g).interval
    chordal = is_chordal(inst.g).chordal
    c4_free = is_c4_free(inst.g).c4_free
    _require(interval == chordal == c4_free,
             lambda: f"interval={interval} chordal={chordal} c4-free={c4_free}")
    sizes = sorted(inst.t.partition.sizes())
    if all(s <= 3 for s in sizes[:-1]):
        _require(interval, lambda: f"all but one part of size <= 3 (sizes {sizes}) yet not interval")


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    run: Callable[[Instance], None] = field(repr=False)


CATALOG: dict[str, TheoremCheck] = {c.id: c for c in [
    TheoremCheck("FAST-ORACLE", "fast adjacency equals the distance-based oracle (n <= 12)", _fast_vs_oracle),
    TheoremCheck("P-SAME-1", "u, v non-sinks in one part: no common out-neighbour <=> N+(u) & N+(v) empty", _p_same_1),
    TheoremCheck("P-SAME-2", "u, v non-sinks in one part: no (1,2)-competition <=> N+(u) | N+(v) inside one part", _p_same_2),
    TheoremCheck("P-SAME-3", "u, v non-sinks in one part: u !~ v <=> disjoint out-sets whose union sits in one part", _p_same_3),
    TheoremCheck("P-DIFF", "u -> v across parts: u !~ v <=> N+(u) = {v}, or disjoint, N+(v) in X, N+(u) in X + v", _p_diff),
    TheoremCheck("C-ADJ", "non-sinks: u ~ v <=> common out-neighbour, or the three only-out-neighbour / containment conditions", _c_adj),
    TheoremCheck("P-SUB-1", "stable S in a non-competing part, not one non-sink plus sinks: union of N+ inside one part", _p_sub_1),
    TheoremCheck("P-SUB-2", "stable S, |S| >= 3, in non-competing X: every pair outside X has a common out-neighbour in S", _p_sub_2),
    TheoremCheck("S-SINK", "loose: every sink lies in each non-competing part", _s_sink),
    TheoremCheck("P-DIST", "v in non-competing X1 with out-neighbours in two parts: v ~ every other non-sink", _p_dist),
    TheoremCheck("T-NNS-1", "F_i is inside X1 for every i != 1", _t_nns_1),
    TheoremCheck("T-NNS-2", "X3 | ... | Xk is a clique and is ~ X2", _t_nns_2),
    TheoremCheck("T-NNS-3", "F_i ~ (F_j | X_j) for distinct i, j != 1", _t_nns_3),
    TheoremCheck("T-NNS-4", "x in F_i, y in X_i: x !~ y <=> N+(x) = {y} or N+(y) = {x}", _t_nns_4),
    TheoremCheck("T-NNS-5", "sink, or stable triple in X1: V - X1 is a clique", _t_nns_5),
    TheoremCheck("T-STRUCT", "adjacency matrix has the U / F / X1* / X2..Xk block pattern", _t_struct),
    TheoremCheck("T-AB-1", "loose: every component has diameter <= 2", _t_ab_1),
    TheoremCheck("T-AB-2", "loose: connected <=> sink-free", _t_ab_2),
    TheoremCheck("T-AB-3", "loose: every stable set meets <= 2 parts", _t_ab_3),
    TheoremCheck("T-AB-4", "loose: <= 2 non-competing parts", _t_ab_4),
    TheoremCheck("T-AB-5", "loose, m sinks, at least one edge: gamma in {m + 1, m + 2}", _t_ab_5),
    TheoremCheck("L-CYC", "directed 3-/4-cycle C, outside vertices with two well-spaced out-neighbours on C: (X - C) ~ X", _l_cyc),
    TheoremCheck("L-P3", "sink-free, stable triple inside part X: every stable set of size >= 3 is inside X", _l_p3),
    TheoremCheck("T-S4", "loose, sink-free: cross-part stable S has |S| <= 4; at 4, 2+2 split, n >= 5, G = K_n - E(K_4)", _t_s4),
    TheoremCheck("L-AT", "loose: an asteroidal triple sits inside the unique non-competing part", _l_at),
    TheoremCheck("L-TT", "non-sink twins of D are closed twins of G", _l_tt),
    TheoremCheck("L-XI-1", "adjacent non-twins u, v of a non-competing part, N+(u) | N+(v) in X_i: X_i is dominated by {u, v}", _l_xi_1),
    TheoremCheck("L-XI-2", "adjacent non-twins u, v of non-competing X: any w adjacent to neither is in X", _l_xi_2),
    TheoremCheck("T-HOLE5", "loose, hole of length >= 5: unique non-competing X; each such hole L lies in F_Y inside X with |Y| >= |L|", _t_hole5),
    TheoremCheck("T-HOLE4-1", "loose, 4-hole: X is the only non-competing part, or there is one other and both have size >= 4", _t_hole4_1),
    TheoremCheck("T-HOLE4-2", "loose, 4-hole: cross-part diagonal is an only-out-neighbour arc; two in-part diagonals need a part of size >= 4", _t_hole4_2),
    TheoremCheck("C-CHORD", "loose, no out-degree 1, parts of size <= 3: chordal", _c_chord),
    TheoremCheck("T-INT2", "loose, parts of size <= 2: interval", _t_int2),
    TheoremCheck("T-C4EQ", "two non-competing parts: interval <=> chordal <=> C4-free; all parts but one of size <= 3: interval", _t_c4eq),
]}

THEOREM_IDS = tuple(CATALOG)


def run_check(check_id: str, inst: Instance) -> CheckResult:
    try:
        entry = CATALOG[check_id]
    except KeyError:
        raise UnknownTheorem(check_id) from None
    try:
        entry.run(inst)
        verdict, detail, cex = Verdict.PASS, "", None
    except NotApplicable as exc:
        verdict, detail, cex = Verdict.NOT_APPLICABLE, str(exc), None
    except (SkippedSize, InstanceTooLarge) as exc:
        verdict, detail, cex = Verdict.SKIPPED_SIZE, str(exc), None
    except Violation as exc:
        verdict, detail = Verdict.FAIL, str(exc)
        cex = Counterexample(serialize_mtd(inst.t), detail)
    except Exception as exc:  # an artifact bug still surfaces as a replayable FAIL
        verdict, detail = Verdict.FAIL, f"internal error: {type(exc).__name__}: {exc}"
        cex = Counterexample(serialize_mtd(inst.t), detail)
    obs = tuple(sorted(inst.observations.get(check_id, Counter()).items()))
    return CheckResult(check_id, verdict, cex, detail, obs)


def check(check_id: str, t: MultipartiteTournament) -> CheckResult:
    """Run one catalog entry on ``t``."""
    if check_id not in CATALOG:
        raise UnknownTheorem(check_id)
    return run_check(check_id, Instance(t))


def check_all(t: MultipartiteTournament) -> list[CheckResult]:
    """Every catalog entry, sharing one C_{1,2}(D).

    The shared graph comes from the fast route; for n <= 12 it is compared
    with the oracle (entry ``FAST-ORACLE``) and the oracle graph is used if
    they differ, so the remaining entries always see the true graph.
    """
    inst = Instance(t)
    results = [run_check("FAST-ORACLE", inst)]
    if results[0].verdict is Verdict.FAIL:
        inst = Instance(t, inst.oracle)
    results.extend(run_check(cid, inst) for cid in THEOREM_IDS if cid != "FAST-ORACLE")
    return results


# ---------------------------------------------------------------------------
# fuzzing

@dataclass(frozen=True)
class FuzzConfig:
    """``seeds=None`` means: enumerate every orientation of each size vector instead of sampling."""

    part_size_menu: tuple[tuple[int, ...], ...]
    seeds: range | None = range(0, 200)
    stop_on_fail: bool = False

    def __post_init__(self):
        menu = tuple(tuple(s) for s in self.part_size_menu)
        object.__setattr__(self, "part_size_menu", menu)
        if not menu:
            raise ConfigError("part_size_menu is empty")
        for sizes in menu:
            if len(sizes) < 3:
                raise ConfigError(f"size vector {list(sizes)} has fewer than 3 parts")
            if any(not isinstance(s, int) or s < 1 for s in sizes):
                raise ConfigError(f"size vector {list(sizes)} has a non-positive entry")
            if self.seeds is None and cross_pair_count(sizes) > MAX_ENUM_CROSS_PAIRS:
                raise ConfigError(f"size vector {list(sizes)} is too large to enumerate")
        if self.seeds is not None and (not isinstance(self.seeds, range) or len(self.seeds) == 0):
            raise ConfigError("seeds must be a non-empty range")

    def tasks(self) -> list[tuple[tuple[int, ...], str, int]]:
        out = []
        for sizes in sorted(set(self.part_size_menu)):
            if self.seeds is None:
                out.extend((sizes, "index", c) for c in range(1 << cross_pair_count(sizes)))
            else:
                out.extend((sizes, "seed", s) for s in self.seeds)
        return out


def build_instance(sizes: Sequence[int], kind: str, value: int) -> MultipartiteTournament:
    return orientation(sizes, value) if kind == "index" else random_tournament(sizes, value)


def _run_task(task):
    sizes, kind, value = task
    results = check_all(build_instance(sizes, kind, value))
    return task, [(r.id, r.verdict.value, r.detail if r.verdict is Verdict.FAIL else "",
                   r.counterexample.instance if r.counterexample else "", r.observations) for r in results]


@dataclass
class FuzzFailure:
    sizes: tuple[int, ...]
    kind: str
    value: int
    theorem: str
    violation: str
    instance: str


@dataclass
class FuzzReport:
    instances: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[FuzzFailure] = field(default_factory=list)
    observations: dict[str, dict[str, int]] = field(default_factory=dict)
    stopped_early: bool = False

    @property
    def fail_count(self) -> int:
        return sum(c.get("FAIL", 0) for c in self.counts.values())

    def to_dict(self) -> dict:
        return {
            "format": "mtclab-fuzz-report/1",
            "instances": self.instances,
            "stopped_early": self.stopped_early,
            "total_fail": self.fail_count,
            "counts": {k: {v: self.counts[k].get(v, 0) for v in (x.value for x in Verdict)}
                       for k in THEOREM_IDS if k in self.counts},
            "observations": {k: dict(sorted(v.items())) for k, v in sorted(self.observations.items())},
            "failures": [
                {"sizes": list(f.sizes), f.kind: f.value, "theorem": f.theorem,
                 "violation": f.violation, "instance": f.instance}
                for f in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def fuzz(config: FuzzConfig, jobs: int = 1) -> FuzzReport:
    """Run :func:`check_all` over every (size vector, seed) task, in canonical order.

    Results are merged in task order whatever ``jobs`` is, so the report is
    identical for any degree of parallelism.
    """
    if not isinstance(config, FuzzConfig):
        raise ConfigError("expected a FuzzConfig")
    if jobs < 1:
        raise ConfigError("jobs must be >= 1")
    tasks = config.tasks()
    report = FuzzReport(counts={cid: Counter() for cid in THEOREM_IDS})
    obs: dict[str, Counter] = {}

    def consume(stream) -> None:
        for (sizes, kind, value), rows in stream:
            report.instances += 1
            failed = False
            for cid, verdict, violation, instance, observations in rows:
                report.counts[cid][verdict] += 1
                for key, count in observations:
                    obs.setdefault(cid, Counter())[key] += count
                if verdict == Verdict.FAIL.value:
                    failed = True
                    report.failures.append(FuzzFailure(sizes, kind, value, cid, violation, instance))
            if failed and config.stop_on_fail:
                report.stopped_early = report.instances < len(tasks)
                return

    if jobs == 1:
        consume(map(_run_task, tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            consume(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (jobs * 8))))
            pool.shutdown(cancel_futures=True)
    report.counts = {k: dict(v) for k, v in report.counts.items()}
    report.observations = {k: dict(v) for k, v in obs.items()}
    return report
