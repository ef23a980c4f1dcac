"""Release acceptance suite.

Each test prints exactly one ``[C<n>] PASS|FAIL`` line to the terminal, even
under pytest's output capture. Independent references come from networkx and
the brute-force helpers in ``oracles``.
"""

import itertools
import json
import time

import networkx as nx
import pytest

from mtclab import (
    SimpleGraph,
    classify_parts,
    competition_graph,
    enumerate_tournaments,
    find_asteroidal_triple,
    fixture,
    is_c4_free,
    is_chordal,
    is_interval,
    max_anti_competing_set,
    parse_mtd,
    random_tournament,
)
from mtclab.cli import main
from mtclab.competition import adjacent_fast_index, adjacent_oracle
from mtclab.recognition import is_asteroidal_witness, is_perfect_elimination_ordering
from mtclab.structure import star_shape
from mtclab.tournament import SplitMix64

import oracles

ENUM_SIZES = ([1, 1, 1], [2, 1, 1], [2, 2, 1], [1, 1, 1, 1])
TARGETED_MENU = ([2, 2, 2], [2, 2, 2, 2], [3, 3, 2], [3, 3, 3])
FUZZ_MENU = ("2,2,1", "2,2,2", "3,2,1")

GEN_221_42 = (
    "mtd 1\n"
    "# gen --parts 2,2,1 --seed 42\n"
    "part X1 p1v1 p1v2\n"
    "part X2 p2v1 p2v2\n"
    "part X3 p3v1\n"
    "arc p1v1 p2v2\n"
    "arc p1v1 p3v1\n"
    "arc p1v2 p2v1\n"
    "arc p1v2 p2v2\n"
    "arc p2v1 p1v1\n"
    "arc p2v1 p3v1\n"
    "arc p3v1 p1v2\n"
    "arc p3v1 p2v2\n"
)


def random_size_vectors(count, seed=20240601):
    """Deterministic size vectors with k in {3, 4, 5} and n <= 12."""
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        k = 3 + rng.next_u64() % 3
        sizes = [1 + rng.next_u64() % 4 for _ in range(k)]
        if sum(sizes) <= 12:
            out.append(sizes)
    return out


def enumerated():
    return [t for sizes in ENUM_SIZES for t in enumerate_tournaments(sizes)]


def random_corpus():
    return [random_tournament(s, seed) for seed, s in enumerate(random_size_vectors(1000))]


@pytest.fixture(scope="module")
def corpus():
    ts = enumerated() + random_corpus()
    return [(t, competition_graph(t)) for t in ts]


@pytest.fixture
def report(capsys):
    def emit(label, violations, detail=""):
        status = "PASS" if not violations else "FAIL"
        line = f"[{label}] {status} {detail}".rstrip()
        if violations:
            line += f" | first: {violations[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not violations, line
    return emit


def _loose(t, g):
    return classify_parts(t, g).loose


def _induced_c4(h, quad):
    s = h.subgraph(quad)
    return s.number_of_edges() == 4 and all(d == 2 for _, d in s.degree)


def _edges(t, pairs):
    return {frozenset(p) for p in pairs}


def test_c1_oracle_equivalence(report):
    start = time.perf_counter()
    enum = enumerated()
    rand = random_corpus()
    assert len(enum) == 360 and len(rand) == 1000
    assert {t.k for t in rand} == {3, 4, 5} and max(t.n for t in rand) <= 12
    bad, pairs = [], 0
    for t in enum + rand:
        ids = t.vertex_ids
        for i, j in itertools.combinations(range(t.n), 2):
            pairs += 1
            if adjacent_fast_index(t, i, j) != adjacent_oracle(t, ids[i], ids[j]):
                bad.append((t.partition.sizes(), ids[i], ids[j]))
    elapsed = time.perf_counter() - start
    # the oracle itself against a shortest-path reading of the definition
    for t in enum[::7] + rand[::25]:
        if _edges(t, competition_graph(t, "oracle").edges) != oracles.c12_edges(t):
            bad.append(("oracle vs networkx", t.partition.sizes()))
    if elapsed >= 60:
        bad.append(f"runtime {elapsed:.1f}s")
    report("C1", bad, f"{len(enum) + len(rand)} instances, {pairs} pairs, 0 mismatches required, {elapsed:.1f}s")


def test_c2_fixture_exactness(report):
    bad = []
    want = {
        "T3": set(),
        "STAR5": {frozenset(p) for p in itertools.combinations(["u1", "u2", "u3", "u4", "x"], 2)}
        - {frozenset(p) for p in itertools.combinations(["u1", "u2", "u3", "u4"], 2)},
        "SINK4": {frozenset(p) for p in (("u", "v"), ("u", "w"), ("v", "w"))},
    }
    for name, edges in want.items():
        t = fixture(name)
        for method in ("fast", "oracle"):
            got = _edges(t, competition_graph(t, method).edges)
            if got != edges:
                bad.append((name, method, sorted(map(sorted, got))))
    t = fixture("STAR5")
    res = max_anti_competing_set(t, competition_graph(t), "cross-part")
    if res.best_set != {"u1", "u2", "u3", "u4"}:
        bad.append(("STAR5 stable set", sorted(res.best_set)))
    report("C2", bad, "T3 empty, STAR5 = K5 - E(K4), SINK4 = triangle + isolated sink")


def test_c3_structural_bounds(corpus, report):
    bad, loose = [], 0
    for t, g in corpus:
        rep = classify_parts(t, g)
        if not rep.loose:
            continue
        loose += 1
        h = oracles.to_nx(g)
        tag = (t.partition.sizes(), g.edges)
        for comp in nx.connected_components(h):
            if nx.diameter(h.subgraph(comp)) > 2:
                bad.append(("diameter", tag))
        if nx.is_connected(h) != (not rep.sinks):
            bad.append(("connected vs sinks", tag))
        if len(rep.non_competing) > 2:
            bad.append(("non-competing parts", tag))
        if t.n <= 16:
            for s in oracles.maximal_stable_brute(g):
                if len({t.part_of(v) for v in s}) > 2:
                    bad.append(("maximal stable set", tag, sorted(s)))
        if h.number_of_edges():
            m = len(rep.sinks)
            gamma = oracles.domination_number_brute(g)
            if gamma not in (m + 1, m + 2):
                bad.append(("domination", tag, gamma, m))
    assert loose > 0
    report("C3", bad, f"{loose} loose instances checked")


def test_c4_anti_competing_bound(corpus, report):
    bad, checked, fours = [], 0, 0
    for t, g in corpus:
        if t.sink_mask() or not _loose(t, g):
            continue
        checked += 1
        res = max_anti_competing_set(t, g, "cross-part")
        want = oracles.max_stable_brute(g, accept=lambda c: len({t.part_of(v) for v in c}) >= 2)
        if res.size != want:
            bad.append(("solver vs brute force", t.partition.sizes(), res.size, want))
        if res.size > 4:
            bad.append(("size", t.partition.sizes(), sorted(res.best_set)))
        if res.size == 4:
            fours += 1
            mask = g.mask_of(res.best_set)
            if t.n < 5 or not star_shape(t, g, mask) or res.star_shape_verified is not True:
                bad.append(("shape", t.partition.sizes(), sorted(res.best_set)))
    assert checked > 0
    report("C4", bad, f"{checked} sinkless loose instances, {fours} of size 4")


def test_c5_interval_statements(corpus, report):
    extra = []
    for sizes in TARGETED_MENU:
        for seed in range(125):
            t = random_tournament(sizes, seed)
            extra.append((t, competition_graph(t)))
    assert len(extra) == 500
    bad = {"interval": 0, "chordal": 0, "c4eq": 0}
    hits = {"interval": 0, "chordal": 0, "c4eq": 0}
    first = []
    for t, g in corpus + extra:
        rep = classify_parts(t, g)
        h = oracles.to_nx(g)
        sizes = t.partition.sizes()
        interval = oracles.interval_model(g) is not None
        chordal = nx.is_chordal(h)
        c4_free = not any(_induced_c4(h, q) for q in itertools.combinations(h.nodes, 4))
        checks = []
        if rep.loose and max(sizes) <= 2:
            checks.append(("interval", interval and is_interval(g).interval))
        if rep.loose and max(sizes) <= 3 and all(t.out_mask(i).bit_count() != 1 for i in range(t.n)):
            checks.append(("chordal", chordal and is_chordal(g).chordal))
        if len(rep.non_competing) == 2:
            ours = (is_interval(g).interval, is_chordal(g).chordal, is_c4_free(g).c4_free)
            checks.append(("c4eq", interval == chordal == c4_free and ours == (interval, chordal, c4_free)))
        for key, ok in checks:
            hits[key] += 1
            if not ok:
                bad[key] += 1
                first.append((key, sizes, g.edges))
    assert all(hits.values())
    summary = ", ".join(f"{k} {hits[k]} applicable / {bad[k]} violations" for k in hits)
    report("C5", first, f"{len(corpus) + len(extra)} instances: {summary}")


def test_c6_recognizer_cross_validation(report):
    graphs = {}
    for t in enumerated():
        g = competition_graph(t)
        if g.n <= 8:
            graphs.setdefault(g.edges, g)
    bad = []
    for g in graphs.values():
        h = oracles.to_nx(g)
        brute_holes = oracles.holes_brute(g)
        ch = is_chordal(g)
        if ch.chordal != (not brute_holes) or ch.chordal != nx.is_chordal(h):
            bad.append(("chordal", g.edges))
        elif ch.chordal and not is_perfect_elimination_ordering(g, ch.peo):
            bad.append(("peo", g.edges))
        triples = oracles.asteroidal_triples_brute(g)
        w = find_asteroidal_triple(g)
        if (w is None) != (not triples) or (w is not None and frozenset(w.triple) not in triples):
            bad.append(("asteroidal triple", g.edges))
        elif w is not None and not is_asteroidal_witness(g, w):
            bad.append(("at witness", g.edges))
        if is_interval(g).interval != (oracles.interval_model(g) is not None):
            bad.append(("interval", g.edges))
    report("C6", bad, f"{len(graphs)} distinct graphs")


def test_c7_full_harness(tmp_path, capsys, report):
    out = tmp_path / "fuzz.json"
    code = main(["fuzz", "--parts-menu", *FUZZ_MENU, "--seeds", "0..199", "--jobs", "4", "-o", str(out)])
    capsys.readouterr()
    data = json.loads(out.read_text())
    bad = []
    for f in data["failures"]:
        # a failure must replay from its embedded instance
        t = parse_mtd(f["instance"])
        bad.append((f["theorem"], f["violation"], t.partition.sizes()))
    if data["instances"] != 600 or data["format"] != "mtclab-fuzz-report/1":
        bad.append(("report", data["instances"], data["format"]))
    if code != (1 if data["total_fail"] else 0):
        bad.append(("exit code", code))
    report("C7", bad, f"{data['instances']} instances, {len(data['counts'])} statements, {data['total_fail']} FAIL")


def test_c8_reproducibility(tmp_path, capsys, report):
    bad = []
    gen = tmp_path / "g.mtd"
    main(["gen", "--parts", "2,2,1", "--seed", "42", "-o", str(gen)])
    if gen.read_bytes() != GEN_221_42.encode("ascii"):
        bad.append("gen output differs from the frozen file")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["fuzz", "--parts-menu", *FUZZ_MENU, "--seeds", "0..59"]
    main(args + ["--jobs", "1", "-o", str(a)])
    main(args + ["--jobs", "8", "-o", str(b)])
    capsys.readouterr()
    if a.read_bytes() != b.read_bytes():
        bad.append("fuzz report differs between --jobs 1 and --jobs 8")
    report("C8", bad, "gen byte-identical, fuzz --jobs 1 == --jobs 8")
