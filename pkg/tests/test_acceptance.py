"""End-to-end acceptance suite.

Each test covers one acceptance criterion, asserts exact integer equality
(and the stated time budget where one applies), and prints a PASS line;
run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import subprocess
import sys
import time

from hexpolarity.benzenoid import classify_external_hexagons, random_benzenoid
from hexpolarity.graph import MolGraph, build_graph, component_shape, girth
from hexpolarity.lattice import Direction, HexCoord, hex_neighbors
from hexpolarity.benzenoid import cut_stats, internal_vertex_count
from hexpolarity.polarity import (
    wp_armchair_closed,
    wp_benzenoid_closed,
    wp_bruteforce,
    wp_cut_method,
    wp_cycle_formula,
    wp_path_formula,
    wp_zigzag_closed,
)
from hexpolarity.tubulene import build_armchair, build_zigzag, classify_external_hexagons_tub

DIRS = list(Direction)


def _report(num, text):
    print(f"ACCEPTANCE {num}: PASS — {text}")


def test_criterion_1_closed_formula_example():
    assert wp_benzenoid_closed(8, 1, 1, 1) == 72
    _report(1, "closed benzenoid formula on (h,h1,h2,h3)=(8,1,1,1) gives 72")


def test_criterion_2_nanotube_formulas():
    t0 = time.perf_counter()
    for r in range(1, 7):
        for h in range(3, 9):
            t = build_zigzag(r, h)
            tally = classify_external_hexagons_tub(t)
            brute = wp_bruteforce(t.graph)
            assert brute == wp_cut_method(t.graph, t.hexagon_count, tally)
            assert brute == wp_zigzag_closed(r, h)
            assert wp_zigzag_closed(r, h) == (24 * r - 3 if h == 3 else 9 * r * h)
    for r in (4, 6, 8):
        for h in range(1, 7):
            t = build_armchair(r, h)
            tally = classify_external_hexagons_tub(t)
            brute = wp_bruteforce(t.graph)
            assert brute == wp_cut_method(t.graph, t.hexagon_count, tally)
            assert brute == 9 * r * h + r
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _report(2, f"ZT/AT grids: brute = cut = closed formula, {elapsed:.2f} s")


def _corpus():
    import random

    rng = random.Random(2024)
    for _ in range(200):
        yield random_benzenoid(rng.randint(1, 30), rng.getrandbits(32))


def test_criterion_3_benzenoid_triple_agreement():
    t0 = time.perf_counter()
    for b in _corpus():
        tally = classify_external_hexagons(b)
        brute = wp_bruteforce(b.graph)
        assert brute == wp_cut_method(b.graph, b.hexagon_count, tally)
        assert brute == wp_benzenoid_closed(b.hexagon_count, tally.h1, tally.h2, tally.h3)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report(3, f"200 random benzenoids: brute = cut = closed, {elapsed:.2f} s")


def test_criterion_4_structural_invariants():
    for b in _corpus():
        g = b.graph
        alpha = cut_stats(b).alpha
        assert g.n == 4 * b.hexagon_count + 2 - internal_vertex_count(b)
        assert len(b.boundary) == 2 * sum(alpha)
        for d, a in zip(DIRS, alpha):
            gd = g.delete_direction(d)
            comps = gd.connected_components()
            assert len(comps) == a + 1
            for c in comps:
                s = component_shape(gd, c)
                assert s.kind == "path" and s.size >= 3
    for t in [build_zigzag(r, h) for r in (1, 3) for h in (3, 5)] + [
        build_armchair(r, h) for r in (4, 6) for h in (1, 3)
    ]:
        for d in DIRS:
            gd = t.graph.delete_direction(d)
            for c in gd.connected_components():
                assert component_shape(gd, c).kind in ("path", "cycle")
        assert girth(t.graph) >= 6
    _report(4, "vertex-count identity, boundary/cut counts, component shapes, girth >= 6")


def test_criterion_5_small_graph_formula_oracle():
    def path_graph(n):
        return MolGraph(
            [(i, 0) for i in range(n)],
            [(i, i + 1, DIRS[i % 3]) for i in range(n - 1)],
        )

    def cycle_graph(n):
        return MolGraph(
            [(i, 0) for i in range(n)],
            [(i, (i + 1) % n, DIRS[i % 3]) for i in range(n)],
        )

    for n in range(1, 41):
        assert wp_path_formula(n) == wp_bruteforce(path_graph(n))
    for n in range(3, 41):
        assert wp_cycle_formula(n) == wp_bruteforce(cycle_graph(n))
    _report(5, "path/cycle formulas match brute force for all n <= 40")


def test_criterion_6_known_molecules():
    benzene = build_graph([HexCoord(0, 0)])
    naphthalene = build_graph([HexCoord(0, 0), HexCoord(1, 0)])
    coronene = build_graph([HexCoord(0, 0)] + hex_neighbors(HexCoord(0, 0)))
    assert wp_bruteforce(benzene) == 3
    assert wp_bruteforce(naphthalene) == 12
    assert wp_bruteforce(coronene) == 57
    _report(6, "benzene 3, naphthalene 12, coronene 57 via brute force")


def _run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "hexpolarity.cli", *argv],
        capture_output=True,
        text=True,
    )


def test_criterion_7_verify_determinism():
    a = _run_cli("verify", "--count", "25", "--max-h", "12", "--seed", "7")
    b = _run_cli("verify", "--count", "25", "--max-h", "12", "--seed", "7")
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout != ""
    _report(7, "verify --seed 7 is byte-identical across runs")


def test_criterion_8_benchmark_sanity():
    import json

    res = _run_cli("bench", "--sizes", "50,200,800", "--json", "--repeats", "3")
    assert res.returncode == 0
    rows = json.loads(res.stdout)["results"]
    assert [row["h"] for row in rows] == [50, 200, 800]
    for row in rows:
        assert row["agree"] is True
        assert row["formula_s"] <= row["brute_s"]
    _report(8, "bench up to h=800: methods agree, formula never slower than brute")
