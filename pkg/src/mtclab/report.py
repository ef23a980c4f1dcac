"""Plain-text reports and Graphviz DOT output. Everything here is deterministic."""

from __future__ import annotations

from functools import singledispatch

from .graph import SimpleGraph
from .harness import CheckResult, FuzzReport, THEOREM_IDS, Verdict
from .recognition import ATWitness, C4Result, ChordalResult, HoleWitness, IntervalResult
from .structure import StructureReport
from .tournament import MultipartiteTournament


def _set(items) -> str:
    return "{" + ",".join(items) + "}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _hole(h: HoleWitness | None) -> str:
    return "none" if h is None else "-".join(h.cycle)


def _at(w: ATWitness | None) -> str:
    if w is None:
        return "none"
    paths = "; ".join("-".join(p) for p in w.paths)
    return f"{_set(w.triple)} paths: {paths}"


@singledispatch
def emit_report(obj) -> str:
    """Render a result object as ``key: value`` lines in a fixed order."""
    if isinstance(obj, (list, tuple)):
        return "".join(emit_report(x) for x in obj)
    raise TypeError(f"no report format for {type(obj).__name__}")


@emit_report.register
def _(rep: StructureReport) -> str:
    order = {n: i for i, n in enumerate(rep.part_names)}
    lines = [
        f"loose: {_flag(rep.loose)}",
        f"U={_set(sorted(rep.sinks))}",
    ]
    for i, (name, flag) in enumerate(zip(rep.part_names, rep.part_flags)):
        lines.append(f"part {name}: {flag.value}  F={_set(sorted(rep.f_sets.get(i, ())))}")
    if rep.x1_index is not None:
        lines.append(f"roles: X1:={rep.part_names[rep.x1_index]} X2:={rep.part_names[rep.x2_index]} "
                     f"X1*={_set(sorted(rep.x1_star))}")
    if rep.block_verdicts:
        lines.append(f"blocks: {'pass' if rep.blocks_pass else 'FAIL'}")
        for b in sorted(rep.block_verdicts, key=lambda b: (order[b.designation[0]], order[b.designation[1]])):
            status = "ok" if b.passed else f"violated at {b.violation}"
            lines.append(f"  [{b.designation[0]}/{b.designation[1]}] {b.block} = {b.pattern}: {status}")
    return "\n".join(lines) + "\n"


@emit_report.register
def _(res: CheckResult) -> str:
    line = f"{res.id}: {res.verdict.value}"
    if res.detail:
        line += f"  ({res.detail})"
    lines = [line]
    lines.extend(f"  observed {key} x{count}" for key, count in res.observations)
    if res.counterexample is not None:
        lines.append("  counterexample:")
        lines.extend("    " + ln for ln in res.counterexample.instance.splitlines())
    return "\n".join(lines) + "\n"


@emit_report.register
def _(rep: FuzzReport) -> str:
    lines = [f"instances: {rep.instances}", f"total FAIL: {rep.fail_count}"]
    if rep.stopped_early:
        lines.append("stopped early at first FAIL")
    cols = [v.value for v in Verdict]
    width = max(len(c) for c in THEOREM_IDS)
    lines.append(f"{'id':<{width}}  " + "  ".join(f"{c:>14}" for c in cols))
    for cid in THEOREM_IDS:
        counts = rep.counts.get(cid, {})
        lines.append(f"{cid:<{width}}  " + "  ".join(f"{counts.get(c, 0):>14}" for c in cols))
    for cid, obs in sorted(rep.observations.items()):
        lines.append(f"observed {cid}: " + ", ".join(f"{k} x{v}" for k, v in sorted(obs.items())))
    for f in rep.failures:
        lines.append(f"FAIL {f.theorem} sizes={list(f.sizes)} {f.kind}={f.value}: {f.violation}")
        lines.extend("    " + ln for ln in f.instance.splitlines())
    return "\n".join(lines) + "\n"


@emit_report.register
def _(res: ChordalResult) -> str:
    if res.chordal:
        return f"chordal: true\n  peo: {' '.join(res.peo)}\n"
    return f"chordal: false\n  hole: {_hole(res.hole)}\n"


@emit_report.register
def _(res: C4Result) -> str:
    return f"c4free: {_flag(res.c4_free)}\n" + ("" if res.c4_free else f"  hole: {_hole(res.hole)}\n")


@emit_report.register
def _(res: IntervalResult) -> str:
    if res.interval:
        return f"interval: true\n  peo: {' '.join(res.peo)}\n"
    if res.hole is not None:
        return f"interval: false\n  hole: {_hole(res.hole)}\n"
    return f"interval: false\n  asteroidal triple: {_at(res.asteroidal_triple)}\n"


def emit_graph(g: SimpleGraph) -> str:
    lines = [f"vertices: {g.n}", f"edges: {g.edge_count()}"]
    lines.extend(f"  {u} -- {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(t: MultipartiteTournament, g: SimpleGraph, name: str = "C12") -> str:
    """DOT for ``g`` with one cluster per partite set and sinks drawn dashed."""
    sink = t.sink_mask()
    lines = [f"graph {_q(name)} {{", "  node [shape=circle];"]
    for p, (pname, part) in enumerate(zip(t.partition.names, t.partition.parts)):
        lines.append(f"  subgraph {_q('cluster_' + pname)} {{")
        lines.append(f"    label={_q(pname)};")
        for v in part:
            style = " [style=dashed]" if sink >> t.index(v) & 1 else ""
            lines.append(f"    {_q(v)}{style};")
        lines.append("  }")
    lines.extend(f"  {_q(u)} -- {_q(v)};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
