"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 conjecture or bound violation detected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fileformat
from .bounds import CSV_COLUMNS, bound_report
from .coloring import DEFAULT_GUARD, chi_c_exact, color_constructive, color_decomposed, verify_cyclic
from .corpus import standard_corpus
from .embedding import (
    delta,
    delta_star,
    is_cycle,
    is_three_connected_simple,
    is_two_connected,
    k_star,
    small_delta,
    t_of,
    validate,
)
from .exceptions import CyclicColoringError, ParseError
from .generators import (
    cycle,
    platonic,
    prism,
    prism_subdiv,
    regular_subdivide,
    subdivide_edges,
    theta,
    thm6_prism,
    wheel,
)
from .reduction import classify, reduce, subdivision_multigraph

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_VIOLATION = 0, 1, 2, 3

GRAPH_SUFFIXES = (".pg", ".txt")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _connectivity_class(g) -> str:
    if is_three_connected_simple(g):
        return "simple_3_connected"
    if is_two_connected(g):
        return "2_connected"
    return "connected"


def _graph_paths(inputs: list[str]) -> list[Path]:
    paths = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            paths += sorted(q for q in p.iterdir() if q.suffix in GRAPH_SUFFIXES)
        else:
            paths.append(p)
    return paths


def _load(path) -> "fileformat.PlaneGraph":
    g = fileformat.load(path)
    report = validate(g)
    if not report.ok:
        raise ParseError(f"{path}: invalid embedding: {'; '.join(report.violations)}")
    return g


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_faces(args) -> int:
    g = _load(args.path)
    faces = g.faces
    payload = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "faces": [
            {"index": f.index, "degree": f.degree, "length": f.length, "vertices": list(f.vertex_walk)} for f in faces
        ],
        "delta_star": delta_star(g),
        "delta": delta(g),
        "min_degree": small_delta(g),
        "k_star": k_star(g) if len(faces) >= 2 else None,
        "t": None if is_cycle(g) else t_of(g),
        "connectivity": _connectivity_class(g),
    }
    if args.format == "text":
        lines = [f"V={g.vertex_count} E={g.edge_count} F={len(faces)}"]
        lines += [f"face {f.index}: degree {f.degree} vertices {list(f.vertex_walk)}" for f in faces]
        lines += [f"{k}: {payload[k]}" for k in ("delta_star", "delta", "min_degree", "k_star", "t", "connectivity")]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump_json(payload), args.out)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load(args.path)
    if args.method == "exact":
        _, coloring = chi_c_exact(g, args.guard)
    elif args.method == "constructive":
        coloring = color_constructive(g, args.guard)
    else:
        coloring = color_decomposed(g, args.budget, args.guard)
    ok = verify_cyclic(g, coloring)
    payload = coloring.to_json()
    payload["verified"] = ok
    payload["ccc_bound"] = 3 * delta_star(g) // 2
    if args.format == "text":
        _emit(f"{coloring.method.value}: {coloring.colors_used} colours (floor(3*Delta*/2) = "
              f"{payload['ccc_bound']}), verified={ok}\n", args.out)
    else:
        _emit(_dump_json(payload), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_reduce(args) -> int:
    g = _load(args.path)
    result = reduce(g)
    structure = classify(result)
    s = subdivision_multigraph(g, result)
    payload = {
        "kept_vertices": list(result.kept_vertices),
        "face_map": list(result.face_map),
        "paths": [list(p) for p in result.edge_to_path],
        "structure": {
            "tag": structure.tag.value,
            "u": None if structure.u is None else result.kept_vertices[structure.u],
            "v": None if structure.v is None else result.kept_vertices[structure.v],
            "component": sorted(result.kept_vertices[x] for x in structure.component),
        },
        "subdivision_multigraph": {
            "vertices": s.host_faces,
            "links": [list(p) for p in s.links],
            "link_vertices": list(s.link_vertices),
            "max_degree": s.max_degree,
            "multiplicity": s.multiplicity,
        },
    }
    _emit(_dump_json(payload), args.out)
    return EXIT_OK


def _report_for(job):
    path, guard = job
    g = _load(path)
    return bound_report(g, graph_id=str(path), guard=guard)


def cmd_bounds(args) -> int:
    paths = _graph_paths(args.paths)
    if not paths:
        raise ParseError("no graph files given")
    jobs = [(p, args.guard) for p in paths]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_report_for, jobs))
    else:
        reports = [_report_for(j) for j in jobs]

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            writer.writerow(rep.csv_row())
        _emit(buf.getvalue(), args.out)
    elif args.format == "text":
        lines = []
        for rep in reports:
            vals = ", ".join(f"{k}={v}" for k, v in rep.applicable_values().items())
            flags = ", ".join(f"{n}:{f.verdict.value}" for n, f in rep.conjectures.items())
            lines.append(f"{rep.graph_id}: Delta*={rep.delta_star} t={rep.t} k*={rep.k_star} exact={rep.exact}")
            lines.append(f"  bounds: {vals}")
            lines.append(f"  conjectures: {flags}")
            if rep.violations:
                lines.append(f"  VIOLATIONS: {rep.violations}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = [rep.to_json() for rep in reports]
        _emit(_dump_json(payload[0] if len(payload) == 1 else payload), args.out)
    return EXIT_VIOLATION if any(rep.violations for rep in reports) else EXIT_OK


def _build(family: str, params: list[str]):
    ints = lambda: [int(p) for p in params]  # noqa: E731
    if family == "theta":
        return theta(*ints())
    if family == "prism-subdiv":
        return prism_subdiv(*ints())
    if family == "thm6-prism":
        return thm6_prism(*ints())
    if family == "prism":
        return prism()
    if family == "platonic":
        return platonic(*params)
    if family == "wheel":
        return wheel(*ints())
    if family == "cycle":
        return cycle(*ints())
    if family == "regular-subdiv":
        base, k = params
        return regular_subdivide(prism() if base == "prism" else platonic(base), int(k))
    if family == "subdivide":
        base, *plan = params
        g = prism() if base == "prism" else platonic(base)
        return subdivide_edges(g, {int(a): int(b) for a, b in (item.split(":") for item in plan)})
    raise ParseError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    if args.family == "corpus":
        if not args.out:
            raise ParseError("gen corpus needs --out DIRECTORY")
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, g in standard_corpus().items():
            fileformat.dump(g, out / f"{name}.pg", comment=name)
        return EXIT_OK
    try:
        g = _build(args.family, args.params)
    except TypeError as exc:
        raise ParseError(f"bad parameters for {args.family}: {exc}") from exc
    comment = " ".join([args.family, *args.params])
    _emit(fileformat.dumps(g, comment), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest instance for exact search")
    common.add_argument("--budget", type=int, default=None, help="palette budget for decompose")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = _Parser(prog="cyclic-coloring", description="Cyclic colouring toolkit for plane graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("faces", parents=[common], help="faces and scalar parameters")
    p.add_argument("path")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("color", parents=[common], help="cyclic colouring")
    p.add_argument("path")
    p.add_argument("--method", choices=("exact", "constructive", "decompose"), default="exact")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("reduce", parents=[common], help="reduction and subdivision multigraph")
    p.add_argument("path")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bounds", parents=[common], help="bound report for files or directories")
    p.add_argument("paths", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph")
    p.add_argument("family", help="theta | prism | prism-subdiv | thm6-prism | platonic | wheel | cycle | "
                                  "regular-subdiv | subdivide | corpus")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.guard < 1:
        parser.error("--guard must be at least 1")
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CyclicColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
