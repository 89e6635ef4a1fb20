"""Reading and writing the ``planegraph v1`` text format.

Example (a triangle)::

    planegraph v1
    3 3
    0: (1,0) (2,2)
    1: (2,1) (0,0)
    2: (0,2) (1,1)

Each vertex line lists its incident darts clockwise as ``(neighbor,edge)``.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from collections import Counter
from pathlib import Path

from .embedding import PlaneGraph
from .exceptions import InvalidEmbedding, ParseError

__all__ = ["HEADER", "loads", "dumps", "load", "dump"]

HEADER = "planegraph v1"

_VERTEX_LINE = re.compile(r"^(\d+)\s*:(.*)$")
_DART = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def loads(text: str) -> PlaneGraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines or lines[0][1] != HEADER:
        raise ParseError(f"expected header {HEADER!r}", lines[0][0] if lines else None)
    if len(lines) < 2:
        raise ParseError("missing '<vertex_count> <edge_count>' line")
    lineno, counts = lines[1]
    parts = counts.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("expected '<vertex_count> <edge_count>'", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 1:
        raise ParseError("vertex_count must be at least 1", lineno)

    vertex_lines = lines[2:]
    if len(vertex_lines) != n:
        raise ParseError(f"expected {n} vertex lines, found {len(vertex_lines)}")
    adjacency = []
    for expected, (lineno, body) in enumerate(vertex_lines):
        match = _VERTEX_LINE.match(body)
        if not match:
            raise ParseError("expected '<vertex_id>: (<neighbor>,<edge>) ...'", lineno)
        if int(match.group(1)) != expected:
            raise ParseError(f"vertex lines must be in id order; expected {expected}", lineno)
        rest = match.group(2)
        darts = [(int(a), int(b)) for a, b in _DART.findall(rest)]
        if _DART.sub("", rest).strip():
            raise ParseError(f"unparseable dart list {rest.strip()!r}", lineno)
        for nbr, e in darts:
            if nbr >= n:
                raise ParseError(f"neighbor {nbr} out of range", lineno)
            if e >= m:
                raise ParseError(f"edge id {e} out of range (edge_count {m})", lineno)
        adjacency.append(darts)

    counts_by_edge = Counter(e for row in adjacency for _, e in row)
    for e in range(m):
        if counts_by_edge[e] != 2:
            raise ParseError(f"edge {e} appears {counts_by_edge[e]} times, expected exactly 2")
    try:
        return PlaneGraph.from_adjacency(adjacency)
    except InvalidEmbedding as exc:
        raise ParseError(str(exc)) from exc


def dumps(g: PlaneGraph, comment: str | None = None) -> str:
    out = [HEADER]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.vertex_count} {g.edge_count}")
    for v, row in enumerate(g.adjacency()):
        darts = " ".join(f"({w},{e})" for w, e in row)
        out.append(f"{v}: {darts}".rstrip())
    return "\n".join(out) + "\n"


def load(path) -> PlaneGraph:
    return loads(Path(path).read_text())


def dump(g: PlaneGraph, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(g, comment))
