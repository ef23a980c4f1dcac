"""MTD v1: a line-oriented text format for multipartite tournaments.

::

    mtd 1
    # comments and blank lines are ignored
    part X1 u1 u2
    part X2 u3 u4
    part X3 x
    arc u1 u3
    ...

The header comes first, then at least three ``part`` lines, then one ``arc``
line per cross pair (``arc u v`` means u -> v). Canonical serialization keeps
part and vertex declaration order and lists arcs by (tail, head) position.
"""

from __future__ import annotations

import re
from importlib import resources

from .digraph import Digraph
from .errors import MtcError, MtdSyntaxError, PartitionError
from .tournament import MultipartiteTournament, Partition, validate

NAME_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*\Z")


def parse_mtd(text: str) -> MultipartiteTournament:
    """Parse and validate an MTD v1 document.

    Grammar problems raise :class:`MtdSyntaxError`; tournament violations raise
    the usual validation errors with ``.line`` set to the offending arc line
    (or the last line when an arc is missing).
    """
    header_seen = False
    names: list[str] = []
    parts: list[tuple[str, ...]] = []
    part_line: dict[str, int] = {}
    vertex_line: dict[str, int] = {}
    arcs: list[tuple[str, str]] = []
    arc_line: dict[tuple[str, str], int] = {}
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        if not line.isascii():
            raise MtdSyntaxError(lineno, "non-ASCII content")
        tokens = line.split()
        if not header_seen:
            if tokens != ["mtd", "1"]:
                raise MtdSyntaxError(lineno, "expected header 'mtd 1'")
            header_seen = True
            continue
        kind = tokens[0]
        if kind == "part":
            if arcs:
                raise MtdSyntaxError(lineno, "'part' line after the first 'arc' line")
            if len(tokens) < 3:
                raise MtdSyntaxError(lineno, "'part' needs a name and at least one vertex")
            name, members = tokens[1], tokens[2:]
            for tok in [name, *members]:
                if not NAME_RE.match(tok):
                    raise MtdSyntaxError(lineno, f"invalid identifier {tok!r}")
            if name in part_line:
                raise MtdSyntaxError(lineno, f"duplicate part name {name!r}")
            for v in members:
                if v in vertex_line:
                    raise MtdSyntaxError(lineno, f"vertex {v!r} already declared on line {vertex_line[v]}")
                vertex_line[v] = lineno
            part_line[name] = lineno
            names.append(name)
            parts.append(tuple(members))
        elif kind == "arc":
            if not parts:
                raise MtdSyntaxError(lineno, "'arc' line before any 'part' line")
            if len(tokens) != 3:
                raise MtdSyntaxError(lineno, "'arc' needs exactly two vertices")
            u, v = tokens[1], tokens[2]
            for x in (u, v):
                if x not in vertex_line:
                    raise MtdSyntaxError(lineno, f"undeclared vertex {x!r}")
            if u == v:
                raise MtdSyntaxError(lineno, f"self-loop at {u!r}")
            if (u, v) in arcs:
                raise MtdSyntaxError(lineno, f"repeated arc {u} {v}")
            arcs.append((u, v))
            arc_line[(u, v)] = lineno
        else:
            raise MtdSyntaxError(lineno, f"unknown directive {kind!r}")

    if not header_seen:
        raise MtdSyntaxError(None, "empty document (missing 'mtd 1' header)")
    if not parts:
        raise MtdSyntaxError(last_line, "no 'part' lines")

    try:
        partition = Partition(tuple(parts), tuple(names))
        vertices = partition.vertices()
        return validate(Digraph(vertices, arcs), partition)
    except PartitionError as exc:
        exc.line = last_line
        raise
    except MtcError as exc:
        u, v = getattr(exc, "u", None), getattr(exc, "v", None)
        exc.line = arc_line.get((u, v)) or arc_line.get((v, u)) or last_line
        raise


def serialize_mtd(t: MultipartiteTournament, comments: tuple[str, ...] = ()) -> str:
    """Canonical MTD v1 text (trailing newline, no comments unless given)."""
    lines = ["mtd 1"]
    lines.extend(f"# {c}" for c in comments)
    for name, part in zip(t.partition.names, t.partition.parts):
        lines.append(f"part {name} {' '.join(part)}")
    lines.extend(f"arc {u} {v}" for u, v in t.digraph.sorted_arcs())
    return "\n".join(lines) + "\n"


def read_mtd(path) -> MultipartiteTournament:
    with open(path, encoding="utf-8") as fh:
        return parse_mtd(fh.read())


def fixture_text(name: str) -> str:
    """The shipped MTD file for a named fixture."""
    return resources.files("mtclab").joinpath("data", f"{name}.mtd").read_text(encoding="utf-8")
