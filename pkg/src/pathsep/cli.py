"""Command line interface: ``pathsep <command> ...``."""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import generators
from .bounds import bounds_report, entropy_lower_bound
from .constructors import METHODS, construct
from .exact import InstanceTooLarge, exact_psn
from .faultsim import campaign
from .io import ParseError, emit_family, emit_graph, read_family, read_graph, write_atomic
from .verify import check_separator

SEEDED = {"gnp", "tree", "forest", "tree-chords"}


def _number(s: str):
    try:
        return int(s)
    except ValueError:
        return float(s)


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _table(rows: dict, stream=None) -> None:
    stream = stream or sys.stdout
    width = max(len(k) for k in rows)
    for k, v in rows.items():
        if isinstance(v, float):
            v = f"{v:.4f}"
        print(f"{k:<{width}}  {v}", file=stream)


def cmd_gen(args) -> int:
    fn = generators.FAMILIES[args.family]
    params = [_number(x) for x in args.params]
    if args.family in SEEDED:
        g = fn(*params, rng_seed=args.seed)
    else:
        g = fn(*params)
    _emit(emit_graph(g), args.output)
    return 0


def construct_report(g, res, seed, runtime_ms) -> dict:
    ent = entropy_lower_bound(g.n, g.m)[0] if g.n >= 2 and g.m >= g.n else None
    return {
        "method": res.method,
        "n": g.n,
        "m": g.m,
        "t": res.size,
        "claimed_bound": res.claimed_bound,
        "entropy_lb": ent,
        "verified": check_separator(g, res.family).is_separator,
        "retries": res.retries,
        "patched": res.patched,
        "seed": seed,
        "runtime_ms": runtime_ms,
    }


def cmd_construct(args) -> int:
    g = read_graph(args.graph)
    start = time.perf_counter()
    res = construct(g, args.method, args.seed, args.p)
    runtime_ms = round((time.perf_counter() - start) * 1000, 3)
    report = construct_report(g, res, args.seed, runtime_ms)
    _emit(emit_family(res.family), args.output)
    stream = sys.stdout if args.output else sys.stderr
    if args.json:
        print(json.dumps(report, sort_keys=True), file=stream)
    else:
        _table(report, stream)
    return 0 if report["verified"] else 1


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    fam = read_family(args.family, g)
    rep = check_separator(g, fam)
    data = {
        "is_separator": rep.is_separator,
        "is_test_set": rep.is_test_set,
        "t": len(fam),
        "unseparated_pairs": len(rep.unseparated_pairs),
        "uncovered_edges": len(rep.uncovered_edges),
    }
    if args.json:
        data["unseparated_pairs"] = [list(x) for x in rep.unseparated_pairs]
        data["uncovered_edges"] = rep.uncovered_edges
        print(json.dumps(data, sort_keys=True))
    else:
        _table(data)
        for e, f, direction in rep.unseparated_pairs[: args.show]:
            print(f"  unseparated {e} {g.edges[e]} / {f} {g.edges[f]} ({direction})")
    return 0 if rep.is_separator else 1


def cmd_bounds(args) -> int:
    rep = bounds_report(read_graph(args.graph))
    if args.json:
        print(json.dumps(rep.as_dict(), sort_keys=True))
    else:
        _table({k: ("-" if v is None else v) for k, v in rep.as_dict().items()})
    return 0


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    try:
        psn, fam = exact_psn(g)
    except InstanceTooLarge as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"psn": psn, "witness": fam.vertex_lists()}))
    else:
        print(f"psn {psn}")
        sys.stdout.write(emit_family(fam))
    return 0


def cmd_simulate(args) -> int:
    g = read_graph(args.graph)
    fam = read_family(args.family, g)
    fail = None
    if args.fail is not None:
        if args.fail == "none":
            fail = "none"
        else:
            fail = int(args.fail)
    if fail == "none":
        rep = campaign(g, fam, trials=0, rng_seed=args.seed)
    else:
        rep = campaign(g, fam, args.trials, args.seed, fail)
    data = {
        "trials": rep.trials,
        "family_size": rep.family_size,
        "info_lb": rep.info_lb,
        "identification_rate": rep.identification_rate,
        "ambiguity_rate": rep.ambiguity_rate,
        "intersection_identification_rate": rep.intersection_rate,
        "no_fault_correct": rep.no_fault_correct,
        "no_fault_correct_intersection": rep.no_fault_correct_intersection,
        "tests_per_edge_mean": rep.tests_per_edge_mean,
        "tests_per_edge_max": rep.tests_per_edge_max,
    }
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        _table(data)
    return 0


def bench_suite(name: str) -> list[tuple[str, object, str]]:
    g = generators
    if name == "trees":
        return [(f"tree{n}", g.gen_random_tree(n, n), "forest") for n in (10, 50, 200)]
    if name == "complete":
        return [(f"K{n}", g.gen_complete(n), "complete") for n in (5, 10, 20, 40, 60)]
    if name == "hypercube":
        return [(f"Q{d}", g.gen_hypercube(d), "hypercube") for d in range(2, 9)]
    if name == "general":
        return [("petersen", g.gen_petersen(), "general"), ("K8", g.gen_complete(8), "general"),
                ("tree+chords", g.gen_tree_plus_chords(100, 60, 1), "general"),
                ("gnp150", g.gen_gnp(150, 0.2, 1), "general")]
    if name == "acceptance":
        return bench_suite("trees") + bench_suite("complete") + bench_suite("hypercube") + bench_suite("general")
    raise ValueError(f"unknown suite {name!r}")


def cmd_bench(args) -> int:
    rows = []
    for label, graph, method in bench_suite(args.suite):
        start = time.perf_counter()
        res = construct(graph, method, args.seed)
        ms = (time.perf_counter() - start) * 1000
        rep = construct_report(graph, res, args.seed, round(ms, 1))
        rep["instance"] = label
        rows.append(rep)
    if args.json:
        print(json.dumps(rows, sort_keys=True))
        return 0
    head = f"{'instance':<12} {'method':<10} {'n':>5} {'m':>6} {'t':>6} {'bound':>6} {'entropy':>8} {'t/n':>6} ok   ms"
    print(head)
    for r in rows:
        ent = "-" if r["entropy_lb"] is None else f"{r['entropy_lb']:.2f}"
        print(f"{r['instance']:<12} {r['method']:<10} {r['n']:>5} {r['m']:>6} {r['t']:>6} "
              f"{r['claimed_bound']:>6} {ent:>8} {r['t'] / r['n']:>6.2f} "
              f"{'yes' if r['verified'] else 'NO':<4} {r['runtime_ms']:.0f}")
    return 0 if all(r["verified"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathsep", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="build a verified path separator")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, help="edge probability for --method gnp")
    p.add_argument("-o", "--output", help="family file (default: stdout, report on stderr)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the separator property")
    p.add_argument("graph")
    p.add_argument("family")
    p.add_argument("--json", action="store_true")
    p.add_argument("--show", type=int, default=10, help="unseparated pairs to list")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="lower and upper bounds")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", help="exact psn for tiny graphs")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("simulate", help="single-fault localisation campaign")
    p.add_argument("graph")
    p.add_argument("family")
    p.add_argument("--trials", type=int, help="sampled faults (default: every edge once)")
    p.add_argument("--fail", help="edge id to fail, or 'none'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bench", help="size-vs-bound table")
    p.add_argument("suite", choices=["trees", "complete", "hypercube", "general", "acceptance"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
