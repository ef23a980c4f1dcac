import pytest

from mtclab import (
    CATALOG,
    ConfigError,
    FuzzConfig,
    UnknownTheorem,
    Verdict,
    check,
    check_all,
    classify_parts,
    competition_graph,
    fixture,
    fuzz,
    parse_mtd,
    random_tournament,
)
from mtclab import harness
from mtclab.harness import THEOREM_IDS, TheoremCheck, Violation, directed_short_cycles

P, F, NA, SK = Verdict.PASS, Verdict.FAIL, Verdict.NOT_APPLICABLE, Verdict.SKIPPED_SIZE

LOOSE_ONLY = {"P-SUB-1", "P-SUB-2", "S-SINK", "P-DIST", "T-NNS-1", "T-NNS-2", "T-NNS-3", "T-NNS-4",
              "T-NNS-5", "T-STRUCT", "T-AB-1", "T-AB-2", "T-AB-3", "T-AB-4", "T-AB-5", "T-S4", "L-AT",
              "L-XI-1", "L-XI-2", "T-HOLE5", "T-HOLE4-1", "T-HOLE4-2", "C-CHORD", "T-INT2"}


def test_catalog_covers_every_statement():
    expected = {"P-SAME-1", "P-SAME-2", "P-SAME-3", "P-DIFF", "C-ADJ", "L-CYC", "L-P3", "L-TT", "T-C4EQ",
                "FAST-ORACLE"} | LOOSE_ONLY
    assert set(THEOREM_IDS) == expected
    assert all(CATALOG[k].description for k in THEOREM_IDS)


def test_check_examples():
    assert check("T-AB-1", fixture("STAR5")).verdict is P
    assert check("T-S4", fixture("STAR5")).verdict is P
    assert check("T-STRUCT", fixture("T3")).verdict is NA
    with pytest.raises(UnknownTheorem):
        check("NOPE", fixture("T3"))


@pytest.mark.parametrize("name", ["SINK4", "STAR5", "T3"])
def test_check_all_fixtures(name):
    results = check_all(fixture(name))
    assert [r.id for r in results] == list(THEOREM_IDS)
    assert all(r.verdict is not F for r in results)
    if name == "T3":
        by_id = {r.id: r.verdict for r in results}
        assert by_id["P-DIFF"] is P and by_id["C-ADJ"] is P
        assert all(by_id[k] is NA for k in LOOSE_ONLY)


def test_star5_observes_size_four():
    res = check("T-S4", fixture("STAR5"))
    assert ("size-4", 1) in res.observations


def test_skipped_size_beyond_caps():
    t = random_tournament([6, 6, 5], 3)
    results = {r.id: r.verdict for r in check_all(t)}
    assert results["FAST-ORACLE"] is SK
    assert results["L-CYC"] is SK
    assert results["T-AB-3"] in (SK, NA)


def test_fuzz_tiny_exhaustive():
    rep = fuzz(FuzzConfig(((1, 1, 1),), seeds=None))
    assert rep.instances == 8 and rep.fail_count == 0


def test_fuzz_config_errors():
    with pytest.raises(ConfigError):
        FuzzConfig(((2,),))
    with pytest.raises(ConfigError):
        FuzzConfig(())
    with pytest.raises(ConfigError):
        FuzzConfig(((3, 3, 3),), seeds=None)
    with pytest.raises(ConfigError):
        FuzzConfig(((1, 1, 1),), seeds=range(0))
    with pytest.raises(ConfigError):
        fuzz(FuzzConfig(((1, 1, 1),)), jobs=0)


def test_fuzz_parallel_is_identical():
    cfg = FuzzConfig(((2, 2, 1), (3, 1, 1)), seeds=range(0, 30))
    assert fuzz(cfg, jobs=1).to_json() == fuzz(cfg, jobs=3).to_json()


def _planted(inst):
    # a deliberately false statement: "no vertex has out-degree exactly one"
    for i in range(inst.t.n):
        if inst.t.out_mask(i).bit_count() == 1:
            raise Violation(f"{inst.name(i)} has out-degree one")


@pytest.fixture
def planted(monkeypatch):
    monkeypatch.setitem(harness.CATALOG, "PLANTED", TheoremCheck("PLANTED", "planted", _planted))
    monkeypatch.setattr(harness, "THEOREM_IDS", THEOREM_IDS + ("PLANTED",))


def test_fail_counterexample_replays(planted):
    rep = fuzz(FuzzConfig(((2, 2, 1),), seeds=range(0, 20)))
    fails = [f for f in rep.failures if f.theorem == "PLANTED"]
    assert fails and rep.fail_count == len(fails)
    for f in fails:
        t = parse_mtd(f.instance)
        assert t == random_tournament(f.sizes, f.value)
        replay = check("PLANTED", t)
        assert replay.verdict is F and replay.detail == f.violation
        assert parse_mtd(replay.counterexample.instance) == t


def test_stop_on_fail(planted):
    rep = fuzz(FuzzConfig(((2, 2, 1),), seeds=range(0, 50), stop_on_fail=True))
    assert rep.stopped_early and rep.instances < 50
    assert all(f.value == rep.failures[0].value for f in rep.failures)


def test_internal_errors_become_fail(monkeypatch):
    def boom(inst):
        raise RuntimeError("boom")

    monkeypatch.setitem(harness.CATALOG, "BOOM", TheoremCheck("BOOM", "", boom))
    res = check("BOOM", fixture("T3"))
    assert res.verdict is F and "RuntimeError" in res.detail
    assert parse_mtd(res.counterexample.instance) == fixture("T3")


def test_not_applicable_never_fails():
    # every check whose hypothesis needs looseness is NOT_APPLICABLE on every tight instance
    tight = 0
    for seed in range(40):
        t = random_tournament([2, 1, 1, 1], seed)
        loose = classify_parts(t, competition_graph(t)).loose
        tight += not loose
        for r in check_all(t):
            assert r.verdict is not F
            if r.id in LOOSE_ONLY and not loose:
                assert r.verdict is NA
    assert tight > 0


def test_directed_short_cycles():
    cycles = directed_short_cycles(fixture("STAR5"))
    t = fixture("STAR5")
    names = {tuple(t.vertex_ids[i] for i in c) for c in cycles}
    assert ("u1", "u3", "u2", "u4") in names
    assert all(len(c) in (3, 4) for c in cycles)
    assert len(names) == len(cycles)
