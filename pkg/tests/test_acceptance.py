"""Exit criteria. Each test prints one PASS/FAIL line with its timing."""

import json
import time

import pytest

from chargraph.arith import prime_powers
from chargraph.cli import main
from chargraph.degrees import FAMILIES, abelian, bundled_corpus, direct_product, gen_psl2
from chargraph.domination import domination_number
from chargraph.graph import (
    build_character_graph,
    complement,
    connected_components,
    is_bipartite,
    odd_cycle_vertices,
)
from chargraph.oracle import (
    all_graphs,
    brute_domination_number,
    brute_odd_cycle_vertices,
    random_graphs,
)
from chargraph.theorem import (
    OBSTRUCTION,
    alternation_check,
    check_equivalence,
    condition_a,
    condition_b,
    condition_c,
)


@pytest.fixture
def verdict(capsys, request):
    state = {}
    start = time.perf_counter()
    yield state
    elapsed = time.perf_counter() - start
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    with capsys.disabled():
        status = "FAIL" if failed else "PASS"
        print(f"\n[{status}] criterion {state.get('id', '?')}: {state.get('title', '')} "
              f"({elapsed:.2f}s)")


def all_family_records():
    for name, gen in FAMILIES.items():
        for q in prime_powers(4, 1000):
            if name != "psl2" and (q % 2 == 0 or q < 5):
                continue
            yield gen(q)


def test_1_golden_family_reports(verdict):
    verdict.update(id=1, title="golden PSL2(4), (5), (7), (9), (13) reports")
    for q in (4, 5):
        t = time.perf_counter()
        g = build_character_graph(gen_psl2(q))
        r = check_equivalence(g)
        assert len(r.c.components) == 3
        assert complement(g).edges() == [(2, 3), (2, 5), (3, 5)]
        assert (r.a.holds, r.b.holds, r.c.holds) == (True, True, True)
        assert len(r.a.odd_dominating_set.set) == 1
        assert time.perf_counter() - t < 1.0
    for q in (7, 9):
        t = time.perf_counter()
        r = check_equivalence(build_character_graph(gen_psl2(q)))
        assert len(r.c.components) == 2
        assert r.c.complement_bipartite.bipartite
        assert (r.a.holds, r.b.holds, r.c.holds) == (False, False, False)
        assert time.perf_counter() - t < 1.0
    t = time.perf_counter()
    r = check_equivalence(build_character_graph(gen_psl2(13)))
    assert (r.a.holds, r.b.holds, r.c.holds) == (True, True, True)
    assert r.a.odd_dominating_set.set == (13,)
    w = r.psl2_witness
    assert (w.u, w.alpha, w.pi) == (13, 1, (3, 7, 13))
    assert time.perf_counter() - t < 1.0


def test_2_equivalence_on_generated_records(verdict):
    verdict.update(id=2, title="a <=> b <=> c on families q <= 1000 and abelian products")
    t = time.perf_counter()
    count = 0
    records = list(all_family_records())
    psl2 = [ms for ms in records if ms.name.startswith("PSL2")]
    products = [direct_product(ms, abelian(k)) for ms in psl2 for k in (2, 6)]
    for ms in records + products + bundled_corpus():
        r = check_equivalence(build_character_graph(ms))
        assert r.equivalent, ms.name
        count += 1
    assert count > 900
    assert time.perf_counter() - t < 30.0


def test_3_graph_theoretic_implications(verdict):
    verdict.update(id=3, title="(a => complement non-bipartite), (b => c) on 32768 + 10^4 graphs")
    t = time.perf_counter()
    graphs = 0
    sources = [g for n in range(6) for g in all_graphs(n)]
    for g in [*sources, *all_graphs(6), *random_graphs(10_000, 12, seed=12)]:
        graphs += 1
        if condition_a(g).holds:
            assert not is_bipartite(complement(g)).bipartite, g.edges()
        if condition_b(g).holds:
            assert condition_c(g).holds, g.edges()
    assert graphs >= 32768 + 10_000
    assert time.perf_counter() - t < 60.0


def test_4_oracle_equivalence(verdict):
    verdict.update(id=4, title="odd_cycle_vertices and domination_number vs brute force")
    mismatches = 0
    checked = 0
    for n in range(7):
        for g in all_graphs(n):
            checked += 1
            if set(odd_cycle_vertices(g)) != brute_odd_cycle_vertices(g):
                mismatches += 1
            if domination_number(g)[0] != brute_domination_number(g):
                mismatches += 1
    assert checked >= 32768
    assert mismatches == 0


def test_5_obstruction_detection(verdict, tmp_path, capsys):
    verdict.update(id=5, title="C5 edge list flagged as non-character graph, exit 3")
    path = tmp_path / "c5.txt"
    path.write_text("1 2 3 4 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    code = main(["analyze", "--input", str(path)])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert code == 3
    assert doc["conditions"] == {"a": True, "b": False, "c": False}
    assert OBSTRUCTION == "not the character graph of any finite group"
    assert OBSTRUCTION in doc["obstruction"]


def test_6_degree_generator_soundness(verdict):
    verdict.update(id=6, title="sum of squared degrees equals group order, q <= 1000")
    for ms in all_family_records():
        assert ms.sum_of_squares() == ms.group_order, ms.name
    expected = {
        5: (1, 3, 4, 5),
        7: (1, 3, 6, 7, 8),
        9: (1, 5, 8, 9, 10),
        13: (1, 7, 12, 13, 14),
    }
    for q, support in expected.items():
        assert gen_psl2(q).support == support


def test_7_isolated_vertex_and_witness(verdict):
    verdict.update(id=7, title="condition c => isolated vertex and validating PSL2 witness")
    hits = 0
    for ms in all_family_records():
        g = build_character_graph(ms)
        r = check_equivalence(g)
        if not r.c.holds:
            continue
        hits += 1
        assert any(len(comp) == 1 for comp in connected_components(g)), ms.name
        assert r.psl2_witness is not None, ms.name
        assert alternation_check(complement(g), r.psl2_witness), ms.name
    assert hits > 100


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "psl2", "--q-min", "4", "--q-max", "200"],
    ["analyze", "--family", "sl2", "--q-min", "5", "--q-max", "200", "--emit", "json",
     "--emit", "dot", "--emit", "table"],
    ["check"],
    ["sweep", "--family", "pgl2", "--q-min", "5", "--q-max", "300"],
    ["oracle", "--max-vertices", "4", "--random", "500", "--vertices", "9", "--seed", "7"],
])
def test_8_determinism(verdict, tmp_path, argv):
    verdict.update(id=8, title=f"byte-identical output for `{argv[0]}`")
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.out"
        code = main([*argv, "--output", str(path)])
        outs.append((code, path.read_bytes()))
    assert outs[0] == outs[1]
    assert outs[0][1]
