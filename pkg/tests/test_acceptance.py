"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or under pytest,
where the lines are printed even with output capture on.
"""

import random
import sys
import time
from pathlib import Path

import pytest

from cyclic_coloring.bounds import bound_thm6, bound_thm7, bound_thm8, subdivision_data
from cyclic_coloring.cli import main as cli_main
from cyclic_coloring.coloring import chi_c_exact, color_constructive, color_decomposed, verify_cyclic
from cyclic_coloring.corpus import glued_instances, multigraph_corpus, standard_corpus
from cyclic_coloring.edgecolor import Multigraph, chromatic_index, edge_color, is_proper
from cyclic_coloring.embedding import delta_star, is_cycle
from cyclic_coloring.generators import platonic, prism, prism_subdiv, subdivide_edges, theta, thm6_prism
from cyclic_coloring.reduction import (
    find_separating_cycle,
    is_subdivision_of_simple_3_connected,
    reduce,
    split_along_cycle,
    subdivision_multigraph,
)

sys.path.insert(0, str(Path(__file__).parent))
from oracles import brute_chromatic_index, is_jordan_split  # noqa: E402
from test_properties import check_embedding_invariants, check_subdivision_invariants  # noqa: E402


def ccc(g):
    return 3 * delta_star(g) // 2


def criterion_1():
    details = []
    for t in range(4):
        g = prism_subdiv(t)
        start = time.perf_counter()
        k, col = chi_c_exact(g)
        elapsed = time.perf_counter() - start
        ds = delta_star(g)
        if not (k == 3 * t + 6 == ds + t + 2 == ccc(g) and verify_cyclic(g, col) and elapsed < 60):
            return False, f"t={t}: chi_c={k}, Delta*={ds}, {elapsed:.2f}s"
        details.append(f"t={t}:{k}")
    return True, "prism_subdiv chi_c = 3t+6 = floor(3Delta*/2) for " + ", ".join(details)


def criterion_2():
    count = 0
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(b, 5):
                g = theta(a, b, c)
                k, _ = chi_c_exact(g)
                if k != a + b + c - 1 or k > ccc(g):
                    return False, f"theta({a},{b},{c}): chi_c={k}"
                count += 1
    return True, f"chi_c(theta(a,b,c)) = a+b+c-1 <= floor(3Delta*/2) on {count} triples"


def criterion_3():
    g = thm6_prism(2, 2, 2)
    k, _ = chi_c_exact(g)
    data = subdivision_data(g)
    s = subdivision_multigraph(g).to_multigraph()
    brute = brute_chromatic_index(s.n, list(s.edges))
    r_exact, _ = chi_c_exact(prism())
    ok = k == 12 and bound_thm6(g, data=data) == 12 and data.chi_index == brute == 6 and r_exact == 6
    return ok, f"chi_c={k}, thm6={bound_thm6(g, data=data)}, chi'(S)={data.chi_index} (brute {brute}), chi_c(R)={r_exact}"


def criterion_4():
    parts = []
    for t in (2, 3):
        g = thm6_prism(t, t, t)
        k, _ = chi_c_exact(g)
        b = bound_thm8(g)
        if not k == b == 3 * t + 6:
            return False, f"t={t}: thm8={b}, chi_c={k}"
        parts.append(f"t={t}:{k}")
    return True, "thm8 = chi_c = 3t+6 for " + ", ".join(parts)


def _criterion_5_instances():
    rng = random.Random(5)
    octa, cube, dodeca = platonic("octahedron"), platonic("cube"), platonic("dodecahedron")
    out = [subdivide_edges(octa, {e: k for e in range(12)}) for k in (1, 2)]
    out += [subdivide_edges(octa, {e: rng.randint(0, 2) for e in range(12)}) for _ in range(30)]
    out += [subdivide_edges(cube, {e: k for e in range(12)}) for k in (1, 2)]
    out += [subdivide_edges(cube, {e: rng.randint(0, 2) for e in range(12)}) for _ in range(20)]
    even = 0
    while even < 20:
        g = subdivide_edges(dodeca, {e: rng.randint(0, 2) for e in range(30)})
        if delta_star(g) % 2 == 0:
            out.append(g)
            even += 1
    return out


def criterion_5():
    graphs = _criterion_5_instances()
    for g in graphs:
        col = color_constructive(g)
        b = bound_thm7(g)
        if not (b <= ccc(g) and verify_cyclic(g, col) and col.colors_used <= ccc(g)):
            return False, f"thm7={b}, constructive={col.colors_used}, floor(3Delta*/2)={ccc(g)}"
    return True, f"thm7 <= floor(3Delta*/2) and verified constructive colouring within it on {len(graphs)} subdivisions"


def criterion_6():
    glued = glued_instances()
    if len(glued) < 5:
        return False, f"only {len(glued)} glued instances"
    for name, g in glued.items():
        cyc = find_separating_cycle(g)
        inner, outer = split_along_cycle(g, cyc)
        if not (cyc.length <= delta_star(g) and cyc.inside_edges and cyc.outside_edges):
            return False, f"{name}: cycle length {cyc.length}"
        if not is_jordan_split(g, cyc.vertices, cyc.inside_edges, cyc.outside_edges):
            return False, f"{name}: cycle sides are inconsistent"
        col = color_decomposed(g)
        if not verify_cyclic(g, col):
            return False, f"{name}: decomposed colouring not cyclic"
        fits = max(inner.graph.vertex_count, outer.graph.vertex_count) <= 40
        if fits and col.colors_used > ccc(g):
            return False, f"{name}: {col.colors_used} colours > {ccc(g)}"
    return True, f"separating cycles and decomposed colourings on {len(glued)} glued instances"


def criterion_7():
    for mu in (1, 2, 3):
        m = Multigraph(3, [(0, 1)] * mu + [(1, 2)] * mu + [(0, 2)] * mu)
        k, _ = chromatic_index(m)
        if k != 3 * mu or k != 3 * m.max_degree // 2:
            return False, f"fat triangle mu={mu}: chi'={k}"
    corpus = multigraph_corpus(200)
    if len(corpus) != 200:
        return False, f"corpus has {len(corpus)} multigraphs"
    for name, m in corpus:
        col = edge_color(m)
        if not is_proper(m, col.color):
            return False, f"{name}: improper edge colouring"
    return True, "fat triangles chi' = 3mu; default budget succeeded on 200 corpus multigraphs"


def criterion_8(tmp_dir):
    start = time.perf_counter()
    corpus = standard_corpus()
    for name, g in corpus.items():
        if g.vertex_count > 40:
            return False, f"{name} exceeds the oracle guard"
        k, _ = chi_c_exact(g)
        if k < delta_star(g):
            return False, f"{name}: chi_c={k} < Delta*"
    out_dir = Path(tmp_dir) / "corpus"
    if cli_main(["gen", "corpus", "--out", str(out_dir)]) != 0:
        return False, "gen corpus failed"
    csv_path = Path(tmp_dir) / "sweep.csv"
    code = cli_main(["bounds", str(out_dir), "--format", "csv", "--out", str(csv_path), "--jobs", "4"])
    rows = csv_path.read_text().strip().splitlines()[1:]
    elapsed = time.perf_counter() - start
    ok = code == 0 and len(rows) == len(corpus) and elapsed < 600
    return ok, f"{len(rows)} instances, bounds sweep exit code {code}, {elapsed:.1f}s"


def criterion_9():
    corpus = standard_corpus()
    subdivs = 0
    for name, g in corpus.items():
        check_embedding_invariants(g)
        if is_subdivision_of_simple_3_connected(g):
            check_subdivision_invariants(g)
            subdivs += 1
        elif not is_cycle(g) and g.vertex_count > 2:
            # still exercise the reduction on 2-connected non-subdivisions
            res = reduce(g)
            if len(res.reduced.faces) != len(g.faces) or res.round_trip_isomorphism() is None:
                return False, f"{name}: reduction invariants fail"
    return True, f"invariants hold on all {len(corpus)} instances ({subdivs} subdivisions of 3-connected graphs)"


CRITERIA = {
    1: ("prism subdivision tightness", criterion_1),
    2: ("theta graphs", criterion_2),
    3: ("thm6 prism tightness", criterion_3),
    4: ("thm8 tightness", criterion_4),
    5: ("triangulation/quadrangulation/pentagulation subdivisions", criterion_5),
    6: ("separating cycles and decomposition", criterion_6),
    7: ("edge colouring budgets", criterion_7),
    8: ("oracle sandwich sweep", criterion_8),
    9: ("structural invariants", criterion_9),
}


def _run(number, tmp_dir=None):
    title, fn = CRITERIA[number]
    try:
        ok, detail = fn(tmp_dir) if number == 8 else fn()
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, tmp_path, capsys):
    ok, line = _run(number, tmp_path)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import tempfile

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for n in sorted(CRITERIA):
            ok, line = _run(n, tmp)
            print(line)
            failures += not ok
    sys.exit(1 if failures else 0)
