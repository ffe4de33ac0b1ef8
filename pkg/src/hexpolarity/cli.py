# Command-line front end: generate structures, compute the Wiener polarity
# index by any method, cross-validate the whole corpus, and benchmark.
#
# Exit codes: 0 success/agreement, 1 disagreement or violation, 2 input error.
from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from pathlib import Path

from .benzenoid import (
    BenzenoidError,
    BenzenoidSystem,
    benzenoid_stats,
    classify_external_hexagons,
    cut_stats,
    internal_vertex_count,
    random_benzenoid,
    build_benzenoid,
)
from .graph import GraphError, MolGraph, component_shape, girth
from .lattice import Direction, HexFileError, LatticeError, parse_hex_file
from .polarity import (
    FormulaUnavailable,
    MalformedComponent,
    distance_distribution,
    wp_armchair_closed,
    wp_benzenoid_closed,
    wp_bruteforce,
    wp_cut_method,
    wp_zigzag_closed,
)
from .tubulene import (
    Tubulene,
    TubuleneError,
    build_armchair,
    build_zigzag,
    classify_external_hexagons_tub,
    tubulene_stats,
)

INPUT_ERRORS = (BenzenoidError, TubuleneError, GraphError, LatticeError, FormulaUnavailable)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _fail_input(exc: Exception) -> int:
    _emit({"error": type(exc).__name__, "message": str(exc)})
    return 2


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


class Structure:
    """A parsed CLI structure: benzenoid system, tubulene, or raw graph."""

    def __init__(self, descriptor: dict, graph: MolGraph, system=None):
        self.descriptor = descriptor
        self.graph = graph
        self.system = system  # BenzenoidSystem | Tubulene | None

    def stats(self) -> dict | None:
        if isinstance(self.system, BenzenoidSystem):
            return benzenoid_stats(self.system)
        if isinstance(self.system, Tubulene):
            return tubulene_stats(self.system)
        return None


def load_structure(tokens: list[str], hexes: str | None, seed: int) -> Structure:
    if not tokens:
        raise GraphError("no structure given")
    kind, rest = tokens[0], tokens[1:]
    if kind == "zigzag" or kind == "armchair":
        if len(rest) != 2:
            raise GraphError(f"{kind} takes two integer arguments R H")
        r, h = int(rest[0]), int(rest[1])
        t = build_zigzag(r, h) if kind == "zigzag" else build_armchair(r, h)
        return Structure({"kind": kind, "r": r, "h": h}, t.graph, t)
    if kind == "random":
        if len(rest) != 1:
            raise GraphError("random takes one integer argument H")
        b = random_benzenoid(int(rest[0]), seed)
        return Structure({"kind": "random", "h": int(rest[0]), "seed": seed}, b.graph, b)
    if kind == "benzenoid":
        if hexes is None:
            raise GraphError("benzenoid requires --hexes PATH")
        b = build_benzenoid(parse_hex_file(_read_text(hexes)))
        return Structure({"kind": "benzenoid", "hexes": hexes}, b.graph, b)
    if kind == "graph":
        if len(rest) != 1:
            raise GraphError("graph takes one argument: PATH or -")
        g = MolGraph.from_json_obj(json.loads(_read_text(rest[0])))
        return Structure({"kind": "graph", "path": rest[0]}, g)
    raise GraphError(f"unknown structure kind {kind!r}")


# ---------------------------------------------------------------- generate


def cmd_generate(args) -> int:
    try:
        s = load_structure(args.struct, args.hexes, args.seed)
    except INPUT_ERRORS as exc:
        return _fail_input(exc)
    _emit(s.graph.to_json_obj())
    _emit(s.stats())
    return 0


def cmd_stats(args) -> int:
    try:
        s = load_structure(args.struct, args.hexes, args.seed)
    except INPUT_ERRORS as exc:
        return _fail_input(exc)
    st = s.stats()
    if st is None:
        st = {"kind": "graph", "n": s.graph.n, "m": s.graph.m}
    _emit(st)
    return 0


# ---------------------------------------------------------------------- wp


def _available_methods(s: Structure) -> dict:
    """Map method name -> zero-arg callable for the given structure."""
    methods = {"brute": lambda: wp_bruteforce(s.graph)}
    sysobj = s.system
    if isinstance(sysobj, BenzenoidSystem):
        tally = classify_external_hexagons(sysobj)
        methods["cut"] = lambda: wp_cut_method(s.graph, sysobj.hexagon_count, tally)
        methods["formula"] = lambda: wp_benzenoid_closed(
            sysobj.hexagon_count, tally.h1, tally.h2, tally.h3
        )
    elif isinstance(sysobj, Tubulene):
        tally = classify_external_hexagons_tub(sysobj)
        methods["cut"] = lambda: wp_cut_method(s.graph, sysobj.hexagon_count, tally)
        closed = wp_zigzag_closed if sysobj.kind == "zigzag" else wp_armchair_closed
        methods["formula"] = lambda: closed(sysobj.r, sysobj.h)
    return methods


def cmd_wp(args) -> int:
    try:
        if args.benzenoid_params is not None:
            if args.method not in ("formula", "all"):
                raise FormulaUnavailable("--benzenoid-params only supports --method formula")
            h, h1, h2, h3 = args.benzenoid_params
            report = {
                "structure": {"kind": "benzenoid-params", "h": h, "external": [h1, h2, h3]},
                "results": {"formula": {"value": wp_benzenoid_closed(h, h1, h2, h3)}},
                "agreement": True,
                "stats": None,
            }
            return _finish_wp(report, args)
        s = load_structure(args.struct, args.hexes, args.seed)
        methods = _available_methods(s)
        wanted = list(methods) if args.method == "all" else [args.method]
        for name in wanted:
            if name not in methods:
                raise FormulaUnavailable(
                    f"method {name!r} is unavailable for this input (no family metadata)"
                )
    except INPUT_ERRORS as exc:
        return _fail_input(exc)

    results = {}
    try:
        for name in wanted:
            t0 = time.perf_counter()
            value = methods[name]()
            results[name] = {"value": value, "seconds": time.perf_counter() - t0}
    except MalformedComponent as exc:
        _emit({"error": "MalformedComponent", "message": str(exc)})
        return 1
    values = {r["value"] for r in results.values()}
    report = {
        "structure": s.descriptor,
        "results": results,
        "agreement": len(values) == 1,
        "stats": s.stats(),
    }
    return _finish_wp(report, args)


def _finish_wp(report: dict, args) -> int:
    if args.json:
        _emit(report)
    else:
        for name, r in report["results"].items():
            suffix = f"  ({r['seconds']:.6f} s)" if "seconds" in r else ""
            print(f"{name}: {r['value']}{suffix}")
        print(f"agreement: {str(report['agreement']).lower()}")
    return 0 if report["agreement"] else 1


# ------------------------------------------------------------------ verify


class _Checks:
    def __init__(self):
        self.ok: dict[str, int] = {}
        self.violations: list[tuple[str, str]] = []

    def record(self, name: str, passed: bool, instance: str) -> None:
        if passed:
            self.ok[name] = self.ok.get(name, 0) + 1
        else:
            self.violations.append((name, instance))

    def report(self) -> int:
        names = sorted(set(self.ok) | {n for n, _ in self.violations})
        for name in names:
            bad = sum(1 for n, _ in self.violations if n == name)
            print(f"{name}: {self.ok.get(name, 0)} ok, {bad} violations")
        for name, inst in self.violations:
            print(f"VIOLATION {name} on {inst}")
        print(f"total violations: {len(self.violations)}")
        return 0 if not self.violations else 1


def _verify_benzenoid(b: BenzenoidSystem, inst: str, checks: _Checks) -> None:
    g = b.graph
    h = b.hexagon_count
    ni = internal_vertex_count(b)
    alpha = cut_stats(b).alpha
    checks.record("vertex_count_identity", g.n == 4 * h + 2 - ni, inst)
    checks.record("boundary_twice_cut_count", len(b.boundary) == 2 * sum(alpha), inst)
    comp_ok = True
    count_ok = True
    identity_ok = True
    for d, a in zip(Direction, alpha):
        gd = g.delete_direction(d)
        comps = gd.connected_components()
        count_ok &= len(comps) == a + 1
        shapes = [component_shape(gd, c) for c in comps]
        comp_ok &= all(s.kind == "path" and s.size >= 3 for s in shapes)
        identity_ok &= sum(s.size - 3 for s in shapes) == g.n - 3 * (a + 1)
    checks.record("cut_component_count", count_ok, inst)
    checks.record("benzenoid_components_paths_ge_3", comp_ok, inst)
    checks.record("path_term_identity", identity_ok, inst)
    tally = classify_external_hexagons(b)
    brute = wp_bruteforce(g)
    cut = wp_cut_method(g, h, tally)
    closed = wp_benzenoid_closed(h, tally.h1, tally.h2, tally.h3)
    checks.record("method_agreement", brute == cut == closed, inst)
    checks.record("hosoya_x3_coefficient", distance_distribution(g, 3)[2] == brute, inst)


def _verify_tubulene(t: Tubulene, inst: str, checks: _Checks) -> None:
    g = t.graph
    shape_ok = True
    for d in Direction:
        gd = g.delete_direction(d)
        for c in gd.connected_components():
            shape_ok &= component_shape(gd, c).kind in ("path", "cycle")
    checks.record("tubulene_components_path_or_cycle", shape_ok, inst)
    checks.record("girth_at_least_6", girth(g) >= 6, inst)
    tally = classify_external_hexagons_tub(t)
    expected = (0, 0, 0) if t.kind == "zigzag" else (t.r, 0, 0)
    checks.record("external_hexagon_tally", tuple(tally.as_list()) == expected, inst)
    brute = wp_bruteforce(g)
    cut = wp_cut_method(g, t.hexagon_count, tally)
    closed = (
        wp_zigzag_closed(t.r, t.h) if t.kind == "zigzag" else wp_armchair_closed(t.r, t.h)
    )
    checks.record("method_agreement", brute == cut == closed, inst)


def _verify_raw_graph(g: MolGraph) -> int:
    for d in Direction:
        gd = g.delete_direction(d)
        for c in gd.connected_components():
            if component_shape(gd, c).kind == "other":
                _emit(
                    {
                        "error": "MalformedComponent",
                        "message": f"component of {len(c)} vertices in G-{d.value} is neither a path nor a cycle",
                    }
                )
                return 1
    endpoint_classes: set[tuple[int, Direction]] = set()
    for u, v, d in g.edges:
        for w in (u, v):
            if (w, d) in endpoint_classes:
                _emit(
                    {
                        "error": "MalformedComponent",
                        "message": f"two {d.value} edges share vertex {w}",
                    }
                )
                return 1
            endpoint_classes.add((w, d))
    print("graph ok: all direction-deleted components are paths or cycles")
    return 0


def cmd_verify(args) -> int:
    if args.graph is not None:
        try:
            g = MolGraph.from_json_obj(json.loads(_read_text(args.graph)))
        except (GraphError, json.JSONDecodeError, ValueError) as exc:
            return _fail_input(exc)
        return _verify_raw_graph(g)

    if args.count < 1:
        return _fail_input(GraphError("--count must be >= 1"))
    rng = random.Random(args.seed)
    checks = _Checks()
    for i in range(args.count):
        h = rng.randint(1, args.max_h)
        inst_seed = rng.getrandbits(32)
        b = random_benzenoid(h, inst_seed)
        _verify_benzenoid(b, f"benzenoid(h={h}, seed={inst_seed})", checks)
    for r in (1, 2, 3):
        for h in (3, 4, 5):
            _verify_tubulene(build_zigzag(r, h), f"zigzag({r},{h})", checks)
    for r in (4, 6):
        for h in (1, 2, 3):
            _verify_tubulene(build_armchair(r, h), f"armchair({r},{h})", checks)
    return checks.report()


# ------------------------------------------------------------------- bench


def cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
        if not sizes:
            raise GraphError("--sizes must list at least one h value")
    except ValueError as exc:
        return _fail_input(GraphError(str(exc)))

    rows = []
    for h in sizes:
        b = random_benzenoid(h, args.seed)
        tally = classify_external_hexagons(b)
        hc = b.hexagon_count

        def timed(fn):
            samples = []
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                value = fn()
                samples.append(time.perf_counter() - t0)
            return value, statistics.median(samples)

        v_brute, t_brute = timed(lambda: wp_bruteforce(b.graph))
        v_cut, t_cut = timed(lambda: wp_cut_method(b.graph, hc, tally))
        v_formula, t_formula = timed(
            lambda: wp_benzenoid_closed(hc, tally.h1, tally.h2, tally.h3)
        )
        rows.append(
            {
                "h": h,
                "n": b.graph.n,
                "wp": v_brute,
                "agree": v_brute == v_cut == v_formula,
                "brute_s": t_brute,
                "cut_s": t_cut,
                "formula_s": t_formula,
            }
        )
    if args.json:
        _emit({"results": rows})
    else:
        print(f"{'h':>6} {'n':>7} {'wp':>9} {'brute_s':>12} {'cut_s':>12} {'formula_s':>12}")
        for row in rows:
            print(
                f"{row['h']:>6} {row['n']:>7} {row['wp']:>9}"
                f" {row['brute_s']:>12.6f} {row['cut_s']:>12.6f} {row['formula_s']:>12.6f}"
            )
    return 0 if all(row["agree"] for row in rows) else 1


# -------------------------------------------------------------------- main


def _add_struct_options(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "struct",
        nargs="*",
        help="structure spec: 'zigzag R H' | 'armchair R H' | 'random H' | "
        "'benzenoid --hexes PATH' | 'graph PATH|-'",
    )
    p.add_argument("--hexes", help="hexagon-set text file (one 'q r' pair per line)")
    p.add_argument("--seed", type=int, default=0, help="seed for random structures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexpolarity",
        description="Wiener polarity index of benzenoid systems and nanotube graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="emit graph JSON and stats JSON")
    _add_struct_options(p_gen)
    p_gen.add_argument("--json", action="store_true", help="output is always JSON")
    p_gen.set_defaults(func=cmd_generate)

    p_stats = sub.add_parser("stats", help="emit the stats record only")
    _add_struct_options(p_stats)
    p_stats.add_argument("--json", action="store_true")
    p_stats.set_defaults(func=cmd_stats)

    p_wp = sub.add_parser("wp", help="compute the Wiener polarity index")
    _add_struct_options(p_wp)
    p_wp.add_argument(
        "--method", choices=("brute", "cut", "formula", "all"), default="all"
    )
    p_wp.add_argument(
        "--benzenoid-params",
        nargs=4,
        type=int,
        metavar=("H", "H1", "H2", "H3"),
        help="evaluate the closed benzenoid formula directly",
    )
    p_wp.add_argument("--json", action="store_true")
    p_wp.set_defaults(func=cmd_wp)

    p_ver = sub.add_parser("verify", help="cross-validate a seeded corpus")
    p_ver.add_argument("--count", type=int, default=50)
    p_ver.add_argument("--max-h", type=int, default=20)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--graph", help="verify a single graph JSON file ('-' = stdin)")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time brute vs cut vs closed formula")
    p_bench.add_argument("--sizes", required=True, help="comma-separated h values")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
