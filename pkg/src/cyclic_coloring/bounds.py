"""Upper bounds on the cyclic chromatic number and conjecture checks.

Every bound function returns an integer or raises :class:`HypothesisError`
naming the unmet hypothesis.  :func:`bound_report` evaluates all of them on
one graph, optionally against the exact value, and flags any violation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .coloring import DEFAULT_GUARD, chi_c_exact
from .edgecolor import DEFAULT_EDGE_GUARD, chromatic_index, default_budget
from .embedding import (
    PlaneGraph,
    delta_star,
    faces_ge4_pairwise_disjoint,
    is_connected,
    is_cycle,
    is_locally_connected,
    is_three_connected_simple,
    is_two_connected,
    k_star,
    small_delta,
    t_of,
)
from .exceptions import GuardExceeded, HypothesisError
from .reduction import ReductionResult, reduce, subdivision_multigraph

__all__ = [
    "Verdict",
    "BoundEntry",
    "ConjectureFlag",
    "CorollaryCheck",
    "BoundReport",
    "SubdivisionData",
    "subdivision_data",
    "bound_ccc",
    "bound_bbgh",
    "plummer_toft_r",
    "bound_plus_r",
    "bound_thm4",
    "bound_thm6",
    "bound_thm7",
    "bound_thm8",
    "bound_cor9",
    "literature_bounds",
    "check_conjectures",
    "corollary_checks",
    "bound_report",
    "CSV_COLUMNS",
]


class Verdict(enum.Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"
    UNKNOWN = "UNKNOWN"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    REPORTED = "REPORTED"


# ---------------------------------------------------------------------------
# Shared ingredients for the subdivision bounds
# ---------------------------------------------------------------------------


class SubdivisionData(NamedTuple):
    """What the subdivision bounds need, with the provenance of each value."""

    result: ReductionResult
    s_max_degree: int
    s_multiplicity: int
    t: int
    chi_index: int
    chi_index_source: str
    chi_c_reduced: int
    chi_c_reduced_source: str


def _require_subdivision(g: PlaneGraph) -> ReductionResult:
    if not is_two_connected(g) or is_cycle(g):
        raise HypothesisError("not a subdivision of a simple 3-connected plane graph (needs 2-connected, not a cycle)")
    result = reduce(g)
    if not is_three_connected_simple(result.reduced):
        raise HypothesisError("reduction is not a simple 3-connected plane graph")
    return result


def subdivision_data(
    g: PlaneGraph, guard: int = DEFAULT_GUARD, edge_guard: int = DEFAULT_EDGE_GUARD
) -> SubdivisionData:
    """Gather chi'(S), chi_c(R), Delta(S), mu(S) and t for ``g``.

    chi'(S) is exact when S has at most ``edge_guard`` edges, otherwise the
    Shannon / Vizing--Gupta budget.  chi_c(R) is exact when R has at most
    ``guard`` vertices, otherwise Delta*(R) + r.  Both fallbacks are upper
    bounds, so every bound built on them stays valid.
    """
    result = _require_subdivision(g)
    s = subdivision_multigraph(g, result)
    m = s.to_multigraph()
    if len(m.edges) <= edge_guard:
        chi_index, _ = chromatic_index(m, edge_guard)
        index_source = "exact"
    else:
        chi_index = default_budget(m)
        index_source = "min(floor(3*Delta(S)/2), Delta(S)+mu(S))"
    r = result.reduced
    if r.vertex_count <= guard:
        chi_r, _ = chi_c_exact(r, guard)
        r_source = "exact"
    else:
        chi_r = delta_star(r) + plummer_toft_r(r)
        r_source = "Delta*(R)+r"
    return SubdivisionData(result, s.max_degree, s.multiplicity, t_of(g), chi_index, index_source, chi_r, r_source)


# ---------------------------------------------------------------------------
# Individual bounds
# ---------------------------------------------------------------------------


def bound_ccc(g: PlaneGraph) -> int:
    if not is_connected(g):
        raise HypothesisError("graph is not connected")
    return 3 * delta_star(g) // 2


def bound_bbgh(g: PlaneGraph) -> int:
    """max{Delta* + 3k* + 2, Delta* + 14}, for Delta* >= 5."""
    ds = delta_star(g)
    if ds < 5:
        raise HypothesisError(f"needs Delta* >= 5, got {ds}")
    return max(ds + 3 * k_star(g) + 2, ds + 14)


def plummer_toft_clauses(r_graph: PlaneGraph) -> list[tuple[int, str]]:
    """All satisfied clauses of the case list, as ``(r, description)``."""
    if not is_three_connected_simple(r_graph):
        raise HypothesisError("needs a simple 3-connected plane graph")
    ds = delta_star(r_graph)
    mindeg = small_delta(r_graph)
    clauses = [
        (1, "Delta* >= 60", ds >= 60),
        (1, "Delta* = 3", ds == 3),
        (1, "faces of degree >= 4 pairwise vertex-disjoint", faces_ge4_pairwise_disjoint(r_graph)),
        (2, "Delta* >= 16", ds >= 16),
        (2, "Delta* = 4", ds == 4),
        (2, "delta = 4 and Delta* >= 6", mindeg == 4 and ds >= 6),
        (2, "delta = 5", mindeg == 5),
        (2, "locally connected", is_locally_connected(r_graph)),
        (3, "5 <= Delta* <= 6", 5 <= ds <= 6),
        (4, "Delta* = 7", ds == 7),
        (5, "remaining cases", True),
    ]
    return [(r, text) for r, text, ok in clauses if ok]


def plummer_toft_r(r_graph: PlaneGraph) -> int:
    """Smallest r with chi_c <= Delta* + r among the satisfied clauses."""
    return min(r for r, _ in plummer_toft_clauses(r_graph))


def bound_plus_r(g: PlaneGraph) -> int:
    return delta_star(g) + plummer_toft_r(g)


def bound_thm4(g: PlaneGraph) -> int:
    """max{Delta* + 3t + 8, Delta* + 14} for subdivisions of simple 3-connected graphs."""
    _require_subdivision(g)
    ds = delta_star(g)
    if ds < 5:
        raise HypothesisError(f"needs Delta* >= 5, got {ds}")
    t = t_of(g)
    return max(ds + 3 * t + 8, ds + 14)


def bound_thm6(g: PlaneGraph, guard: int = DEFAULT_GUARD, data: SubdivisionData | None = None) -> int:
    """chi'(S) + chi_c(R)."""
    data = data or subdivision_data(g, guard)
    return data.chi_index + data.chi_c_reduced


def bound_thm7(g: PlaneGraph, guard: int = DEFAULT_GUARD, data: SubdivisionData | None = None) -> int:
    """floor(3/2 * max_f(deg_G f - deg_R f')) + chi_c(R)."""
    data = data or subdivision_data(g, guard)
    return 3 * data.s_max_degree // 2 + data.chi_c_reduced


def bound_thm8(g: PlaneGraph, guard: int = DEFAULT_GUARD, data: SubdivisionData | None = None) -> int:
    """max_f(deg_G f - deg_R f') + t + chi_c(R)."""
    data = data or subdivision_data(g, guard)
    return data.s_max_degree + data.t + data.chi_c_reduced


def bound_cor9(g: PlaneGraph) -> int:
    """Delta* + t + r for regular subdivisions of simple 3-connected graphs."""
    result = _require_subdivision(g)
    if result.regular_k() is None:
        raise HypothesisError("not a regular subdivision: edge paths have different lengths")
    return delta_star(g) + t_of(g) + plummer_toft_r(result.reduced)


def literature_bounds(g: PlaneGraph) -> list[tuple[str, int, str]]:
    """Published bounds depending on Delta* alone, as ``(name, value, source)``."""
    ds = delta_star(g)
    out = [
        ("ore_plummer", 2 * ds, "2*Delta*"),
        ("borodin_sanders_zhao", 9 * ds // 5, "floor(9*Delta*/5)"),
        ("sanders_zhao", -(-5 * ds // 3), "ceil(5*Delta*/3)"),
    ]
    small = {3: (4, "four colour theorem"), 4: (6, "Borodin, Delta* <= 4"), 5: (8, "Borodin-Sanders-Zhao, Delta* = 5"),
             6: (9, "Hebdige-Kral, Delta* = 6"), 7: (11, "Havet-Sereni-Skrekovski, Delta* = 7")}
    if ds in small:
        value, source = small[ds]
        out.append(("small_delta_star", value, source))
    return out


# ---------------------------------------------------------------------------
# Conjectures and corollaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureFlag:
    name: str
    bound: int | None
    verdict: Verdict
    note: str = ""


def _verdict(exact: int | None, bound: int) -> Verdict:
    if exact is None:
        return Verdict.UNKNOWN
    return Verdict.HOLDS if exact <= bound else Verdict.VIOLATED


def check_conjectures(g: PlaneGraph, exact: int | None = None) -> dict[str, ConjectureFlag]:
    """Verdicts for the cyclic colouring conjectures given the exact value.

    ``BBC`` (chi_c <= Delta* + k* for large Delta*, k*) has no stated
    thresholds, so only the raw comparison is reported.
    """
    ds = delta_star(g)
    ccc = 3 * ds // 2
    flags = {"CCC": ConjectureFlag("CCC", ccc, _verdict(exact, ccc))}
    try:
        _require_subdivision(g)
        subdiv = True
        t = t_of(g)
    except HypothesisError as exc:
        subdiv = False
        reason = str(exc)
    if subdiv:
        flags["CCC-subdiv"] = ConjectureFlag("CCC-subdiv", ccc, _verdict(exact, ccc))
        flags["Conjecture-5"] = ConjectureFlag("Conjecture-5", ds + t + 2, _verdict(exact, ds + t + 2))
    else:
        flags["CCC-subdiv"] = ConjectureFlag("CCC-subdiv", None, Verdict.NOT_APPLICABLE, reason)
        flags["Conjecture-5"] = ConjectureFlag("Conjecture-5", None, Verdict.NOT_APPLICABLE, reason)
    if len(g.faces) >= 2:
        bbc = ds + k_star(g)
        note = "no threshold stated"
        if exact is not None:
            note = f"exact {'<=' if exact <= bbc else '>'} Delta* + k*; no threshold stated"
        flags["BBC"] = ConjectureFlag("BBC", bbc, Verdict.REPORTED, note)
    else:
        flags["BBC"] = ConjectureFlag("BBC", None, Verdict.NOT_APPLICABLE, "fewer than two faces")
    return flags


@dataclass(frozen=True)
class CorollaryCheck:
    name: str
    hypothesis_met: bool
    conclusion_holds: bool | None


def corollary_checks(g: PlaneGraph, data: SubdivisionData | None = None) -> list[CorollaryCheck]:
    """Evaluate each corollary's hypothesis and its promised conclusion.

    A conclusion is ``None`` when the hypothesis fails; otherwise it says
    whether the underlying theorem bound lands at or below floor(3*Delta*/2).
    """
    ds = delta_star(g)
    ccc = 3 * ds // 2
    try:
        data = data or subdivision_data(g)
    except (HypothesisError, GuardExceeded):
        return []
    t = data.t
    r = data.result.reduced
    checks = []

    met = ds >= max(6 * t + 16, 28)
    checks.append(CorollaryCheck("cor1", met, bound_thm4(g) <= ccc if met else None))

    met = ds >= 2 * data.chi_c_reduced + 2 * t - 6
    checks.append(CorollaryCheck("cor2", met, bound_thm8(g, data=data) <= ccc if met else None))

    face_degrees = {f.degree for f in r.faces}
    even_pent = face_degrees == {5} and ds % 2 == 0
    met = face_degrees == {3} or face_degrees == {4} or even_pent
    checks.append(CorollaryCheck("cor_tri_quad_pent", met, bound_thm7(g, data=data) <= ccc if met else None))

    k = data.result.regular_k()
    met = k is not None and k >= 1
    checks.append(CorollaryCheck("cor10", met, bound_cor9(g) <= ccc if met else None))
    return checks


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    note: str = ""


@dataclass
class BoundReport:
    graph_id: str
    delta_star: int
    t: int | None
    k_star: int | None
    exact: int | None
    entries: list[BoundEntry] = field(default_factory=list)
    conjectures: dict[str, ConjectureFlag] = field(default_factory=dict)
    corollaries: list[CorollaryCheck] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        return next(e for e in self.entries if e.name == name)

    def applicable_values(self) -> dict[str, int]:
        return {e.name: e.value for e in self.entries if e.applicable}

    @property
    def violations(self) -> list[str]:
        """Bounds or conjectures the exact value exceeds, plus failed corollaries."""
        out = []
        if self.exact is not None:
            out += [f"bound {e.name}={e.value} < exact {self.exact}" for e in self.entries if e.applicable and e.value < self.exact]
        out += [f"conjecture {f.name}" for f in self.conjectures.values() if f.verdict is Verdict.VIOLATED]
        out += [f"corollary {c.name}" for c in self.corollaries if c.conclusion_holds is False]
        return out

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "delta_star": self.delta_star,
            "t": self.t,
            "k_star": self.k_star,
            "exact": self.exact,
            "entries": [
                {"name": e.name, "value": e.value, "applicable": e.applicable, "note": e.note} for e in self.entries
            ],
            "conjectures": {
                name: {"bound": f.bound, "verdict": f.verdict.value, "note": f.note} for name, f in self.conjectures.items()
            },
            "corollaries": [
                {"name": c.name, "hypothesis_met": c.hypothesis_met, "conclusion_holds": c.conclusion_holds}
                for c in self.corollaries
            ],
            "violations": self.violations,
        }

    def csv_row(self) -> list:
        def value(name):
            e = self.entry(name)
            return e.value if e.applicable else ""

        flags = ";".join(f"{name}={f.verdict.value}" for name, f in self.conjectures.items())
        return [self.graph_id, self.delta_star, "" if self.t is None else self.t,
                "" if self.k_star is None else self.k_star, "" if self.exact is None else self.exact,
                value("ccc"), value("bbgh"), value("thm4"), value("thm6"), value("thm7"), value("thm8"),
                value("cor9"), flags]


CSV_COLUMNS = ["graph_id", "delta_star", "t", "k_star", "exact", "ccc", "bbgh", "thm4", "thm6", "thm7",
               "thm8", "cor9", "flags"]


def bound_report(
    g: PlaneGraph,
    graph_id: str = "",
    exact: int | None = None,
    guard: int = DEFAULT_GUARD,
    compute_exact: bool = True,
) -> BoundReport:
    """Evaluate every bound on ``g``; computes the exact value when it fits ``guard``."""
    if exact is None and compute_exact and g.vertex_count <= guard:
        exact, _ = chi_c_exact(g, guard)
    t = None if is_cycle(g) else t_of(g)
    ks = k_star(g) if len(g.faces) >= 2 else None
    report = BoundReport(graph_id, delta_star(g), t, ks, exact)

    try:
        data = subdivision_data(g, guard)
        data_error = None
    except (HypothesisError, GuardExceeded) as exc:
        data, data_error = None, str(exc)

    def attempt(name, fn, note=""):
        try:
            report.entries.append(BoundEntry(name, fn(), True, note))
        except (HypothesisError, GuardExceeded) as exc:
            report.entries.append(BoundEntry(name, None, False, str(exc)))

    def with_data(fn):
        def run():
            if data is None:
                raise HypothesisError(data_error)
            return fn(g, data=data)
        return run

    provenance = ""
    if data is not None:
        provenance = f"chi'(S) {data.chi_index_source}, chi_c(R) {data.chi_c_reduced_source}"
    attempt("ccc", lambda: bound_ccc(g))
    attempt("bbgh", lambda: bound_bbgh(g))
    attempt("plus_r", lambda: bound_plus_r(g))
    attempt("thm4", lambda: bound_thm4(g))
    attempt("thm6", with_data(bound_thm6), provenance)
    attempt("thm7", with_data(bound_thm7), provenance)
    attempt("thm8", with_data(bound_thm8), provenance)
    attempt("cor9", lambda: bound_cor9(g))
    for name, value, source in literature_bounds(g):
        report.entries.append(BoundEntry(name, value, True, source))

    report.conjectures = check_conjectures(g, exact)
    if data is not None:
        report.corollaries = corollary_checks(g, data)
    return report
