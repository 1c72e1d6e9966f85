"""Command-line front end: solve, tabulate, verify, probe, export.

Subcommands
    solve          exact value of one or more graphs
    table          per-n value table for paths (csv/json/table)
    verify         run a named verification fixture; exit 1 on failure
    probe-balance  sample random connected graphs and report signed values
    mb             maker-breaker value vs. game value, or family export
    trees          list unlabeled trees of a given order as graph6

Exit codes: 0 success / all pass, 1 verification failure, 2 input error,
3 resource refusal (graph above the hard cap without --force).
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from multiprocessing import Pool

from .game import Objective, VARIANT_CODES, ZERO_STARTS, ONE_STARTS, ONE_STARTS_WITH_PASS
from .graph6 import Graph6Error, emit_graph6, parse_edge_list, parse_graph6_file
from .graphs import Graph, GraphError, path_graph, random_connected_graph, spider_graph, star_graph
from .harness import worst_case_line, worst_case_vs_optimal
from .makerbreaker import export_hypergraph, maker_breaker_value, winning_family
from .branching import find_branch
from .solver import SolveOptions, SolverCapError, SYMMETRY_PATH_REVERSAL, game_number, solve
from .strategies import (
    balance_maximizer_strategy,
    small_path_strategy,
    path_bound,
    path_bound_mod6,
    path_strategy,
    suffix_pair_edge,
    tree_bound,
    tree_strategy,
)
from .trees import enumerate_trees, prufer_decode

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_REFUSED = 3

FIXTURES = ("small-paths", "path-bound", "tree-bound", "balance-bound", "mb-equiv")


class InputError(ValueError):
    pass


def make_graph(spec: str) -> list[Graph]:
    """Expand a generator spec: path:N, star:N, spider:a,b,.., trees:N, prufer:a,b,.."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "path":
            return [path_graph(int(arg))]
        if kind == "star":
            return [star_graph(int(arg))]
        if kind == "spider":
            return [spider_graph([int(x) for x in arg.split(",")])]
        if kind == "trees":
            return list(enumerate_trees(int(arg)))
        if kind == "prufer":
            seq = [int(x) for x in arg.split(",")] if arg else []
            return [prufer_decode(seq, len(seq) + 2)]
    except (ValueError, GraphError) as exc:
        raise InputError(f"bad generator spec {spec!r}: {exc}") from exc
    raise InputError(f"unknown generator {kind!r}; use path/star/spider/trees/prufer")


def load_graphs(args) -> list[Graph]:
    if getattr(args, "graph", None):
        return make_graph(args.graph)
    path = args.file
    try:
        with open(path, "r", encoding="ascii") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        if getattr(args, "edge_list", False):
            return [parse_edge_list(text)]
        return parse_graph6_file(text)
    except (Graph6Error, GraphError) as exc:
        raise InputError(str(exc)) from exc


def solve_options(args) -> SolveOptions:
    symmetry = SYMMETRY_PATH_REVERSAL if getattr(args, "symmetry", "none") == "path-reversal" else "none"
    return SolveOptions(
        use_alpha_beta=not getattr(args, "no_alpha_beta", False),
        parallel_root=getattr(args, "parallel", False),
        symmetry=symmetry,
        max_n=getattr(args, "force_max_n", None),
    )


def emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for record in records:
            out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    if not records:
        return
    fields = list(records[0].keys())
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        for record in records:
            writer.writerow(record)
        return
    widths = {f: max(len(f), *(len(str(r.get(f, ""))) for r in records)) for f in fields}
    out.write("  ".join(f.ljust(widths[f]) for f in fields) + "\n")
    for record in records:
        out.write("  ".join(str(record.get(f, "")).ljust(widths[f]) for f in fields) + "\n")


def _solve_worker(payload):
    n, edges, variant_code, objective_value, opts_fields = payload
    from .graphs import from_edges

    g = from_edges(n, list(edges))
    variant = VARIANT_CODES[variant_code]
    objective = Objective(objective_value)
    opts = SolveOptions(**opts_fields)
    result = solve(g, variant, objective, opts)
    return {
        "graph": emit_graph6(g),
        "n": g.n,
        "variant": variant_code,
        "objective": objective_value,
        "value": result.value,
        "nodes": result.nodes,
        "principal_line": [m.to_json() for m in result.principal_line or []],
    }


def cmd_solve(args, out) -> int:
    graphs = load_graphs(args)
    variant = VARIANT_CODES[args.variant]
    objective = Objective(args.objective)
    opts = solve_options(args)
    records = []
    if args.jobs > 1 and len(graphs) > 1:
        opts_fields = {
            "use_alpha_beta": opts.use_alpha_beta,
            "symmetry": opts.symmetry,
            "max_n": opts.max_n,
        }
        payloads = [
            (g.n, g.edges, args.variant, args.objective, opts_fields) for g in graphs
        ]
        with Pool(processes=args.jobs) as pool:
            records = pool.map(_solve_worker, payloads)
    else:
        for g in graphs:
            result = solve(g, variant, objective, opts)
            records.append(
                {
                    "graph": emit_graph6(g),
                    "n": g.n,
                    "variant": args.variant,
                    "objective": args.objective,
                    "value": result.value,
                    "nodes": result.nodes,
                    "principal_line": [m.to_json() for m in result.principal_line or []],
                }
            )
    emit_records(records, args.format, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    records = []
    for n in range(args.min_n, args.max_n + 1):
        g = path_graph(n)
        row: dict = {"n": n}
        try:
            opts = SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL)
            row["cg"] = solve(g, ZERO_STARTS, Objective.CORDIALITY, opts).value
            row["cg_i"] = solve(g, ONE_STARTS, Objective.CORDIALITY, opts).value
            row["cg_ip"] = solve(g, ONE_STARTS_WITH_PASS, Objective.CORDIALITY, opts).value
            row["bg"] = solve(g, ZERO_STARTS, Objective.BALANCE, opts).value
        except SolverCapError:
            row.update({"cg": "", "cg_i": "", "cg_ip": "", "bg": "", "skipped": True})
            records.append(row)
            continue
        row["path_bound"] = path_bound(n)
        row["bound_ok"] = row["cg"] <= path_bound(n) and row["cg"] <= path_bound_mod6(n)
        parity = (g.edge_count) % 2
        row["parity_ok"] = all(
            row[k] % 2 == parity for k in ("cg", "cg_i", "cg_ip")
        ) and row["bg"] % 2 == parity
        row["skipped"] = False
        records.append(row)
    emit_records(records, args.format, out)
    return EXIT_OK


def _strategy_record(fixture, g, tag, variant, objective, bound, worst, ok, witness=None):
    record = {
        "fixture": fixture,
        "graph": emit_graph6(g),
        "strategy": tag,
        "claimed_bound": bound,
        "worst_case": worst,
        "pass": ok,
    }
    if witness is not None:
        record["witness_line"] = [m.to_json() for m in witness]
    return record


def _verify_small_paths(records) -> bool:
    all_ok = True
    expected = {3: 0, 4: 1, 5: 2, 6: 1}
    for n, value in expected.items():
        g = path_graph(n)
        for variant in (ZERO_STARTS, ONE_STARTS, ONE_STARTS_WITH_PASS):
            got = solve(g, variant, Objective.CORDIALITY).value
            ok = got == value
            records.append(
                {
                    "fixture": "small-paths",
                    "graph": emit_graph6(g),
                    "variant": variant.code,
                    "expected": value,
                    "got": got,
                    "pass": ok,
                }
            )
            all_ok &= ok
            strategy = small_path_strategy(n, variant)
            worst = worst_case_vs_optimal(g, strategy, variant, Objective.CORDIALITY)
            ok = worst <= value
            witness = None
            if not ok:
                _, witness = worst_case_line(g, strategy, variant, Objective.CORDIALITY)
            records.append(
                _strategy_record("small-paths", g, strategy.provenance, variant,
                                 Objective.CORDIALITY, value, worst, ok, witness)
            )
            all_ok &= ok
    return all_ok


def _verify_path_bound(records, max_n) -> bool:
    all_ok = True
    for n in range(3, max_n + 1):
        g = path_graph(n)
        bound = path_bound(n)
        value = solve(g, ZERO_STARTS, Objective.CORDIALITY,
                      SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL)).value
        ok = value <= bound and value <= path_bound_mod6(n)
        records.append(
            {
                "fixture": "path-bound",
                "graph": emit_graph6(g),
                "value": value,
                "claimed_bound": bound,
                "pass": ok,
            }
        )
        all_ok &= ok
        strategy = path_strategy(n)
        worst = worst_case_vs_optimal(g, strategy, ZERO_STARTS, Objective.CORDIALITY)
        ok = worst <= bound
        witness = None
        if not ok:
            _, witness = worst_case_line(g, strategy, ZERO_STARTS, Objective.CORDIALITY)
        records.append(
            _strategy_record("path-bound", g, strategy.provenance, ZERO_STARTS,
                             Objective.CORDIALITY, bound, worst, ok, witness)
        )
        all_ok &= ok
    return all_ok


def _verify_tree_bound(records, max_n) -> bool:
    all_ok = True
    for n in range(2, max_n + 1):
        for g in enumerate_trees(n):
            bound = tree_bound(n)
            value = solve(g, ZERO_STARTS, Objective.CORDIALITY).value
            strategy = tree_strategy(g)
            worst = worst_case_vs_optimal(g, strategy, ZERO_STARTS, Objective.CORDIALITY)
            ok = value <= bound and worst <= bound
            if any(g.degree(v) >= 3 for v in range(g.n)):
                ok &= find_branch(g).case_id in range(1, 8)
            witness = None
            if not ok:
                _, witness = worst_case_line(g, strategy, ZERO_STARTS, Objective.CORDIALITY)
            records.append(
                _strategy_record("tree-bound", g, strategy.provenance, ZERO_STARTS,
                                 Objective.CORDIALITY, bound, worst, ok, witness)
            )
            all_ok &= ok
    return all_ok


def _verify_balance_bound(records, max_n) -> bool:
    all_ok = True
    for n in range(2, max_n + 1):
        g = path_graph(n)
        value = solve(g, ZERO_STARTS, Objective.BALANCE).value
        strategy = balance_maximizer_strategy(n)
        a, b = suffix_pair_edge(n)

        def suffix_edge_cut(state, a=a, b=b):
            if (a in state.zero) == (b in state.zero):
                raise AssertionError("suffix edge not labeled 1")

        worst = worst_case_vs_optimal(g, strategy, ZERO_STARTS, Objective.BALANCE,
                                      terminal_check=suffix_edge_cut)
        ok = value >= 0 and worst >= 0
        witness = None
        if not ok:
            _, witness = worst_case_line(g, strategy, ZERO_STARTS, Objective.BALANCE)
        records.append(
            _strategy_record("balance-bound", g, strategy.provenance, ZERO_STARTS,
                             Objective.BALANCE, 0, worst, ok, witness)
        )
        all_ok &= ok
    return all_ok


def _verify_mb_equiv(records, max_n) -> bool:
    all_ok = True
    combos = (
        ("cg", ZERO_STARTS, Objective.CORDIALITY),
        ("cg_i", ONE_STARTS, Objective.CORDIALITY),
        ("cg_ip", ONE_STARTS_WITH_PASS, Objective.CORDIALITY),
        ("bg", ZERO_STARTS, Objective.BALANCE),
    )
    subjects = [path_graph(n) for n in range(2, max_n + 1)]
    for n in range(2, min(max_n, 6) + 1):
        subjects.extend(enumerate_trees(n))
    for g in subjects:
        for name, variant, objective in combos:
            mb = maker_breaker_value(g, variant, objective)
            sv = solve(g, variant, objective).value
            ok = mb == sv
            records.append(
                {
                    "fixture": "mb-equiv",
                    "graph": emit_graph6(g),
                    "which": name,
                    "mb_value": mb,
                    "game_value": sv,
                    "pass": ok,
                }
            )
            all_ok &= ok
    return all_ok


def cmd_verify(args, out) -> int:
    names = FIXTURES if args.fixture == "all" else (args.fixture,)
    records: list[dict] = []
    all_ok = True
    for name in names:
        if name == "small-paths":
            all_ok &= _verify_small_paths(records)
        elif name == "path-bound":
            all_ok &= _verify_path_bound(records, args.max_n or 12)
        elif name == "tree-bound":
            all_ok &= _verify_tree_bound(records, args.max_n or 8)
        elif name == "balance-bound":
            all_ok &= _verify_balance_bound(records, args.max_n or 10)
        elif name == "mb-equiv":
            all_ok &= _verify_mb_equiv(records, args.max_n or 8)
        else:
            raise InputError(f"unknown fixture {name!r}; pick from {FIXTURES + ('all',)}")
    emit_records(records, args.format, out)
    summary = "all fixtures passed" if all_ok else "FAILURES above"
    print(summary, file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_probe_balance(args, out) -> int:
    rng = random.Random(args.seed)
    records = []
    for index in range(args.count):
        n = rng.randint(args.min_n, args.max_n)
        g = random_connected_graph(n, args.p, rng)
        try:
            value = game_number(g, "bg")
        except SolverCapError:
            records.append(
                {"index": index, "graph": emit_graph6(g), "n": n, "skipped": True}
            )
            continue
        records.append(
            {
                "index": index,
                "graph": emit_graph6(g),
                "n": n,
                "bg": value,
                "counterexample_candidate": value < 0,
            }
        )
    emit_records(records, args.format, out)
    negatives = [r for r in records if r.get("counterexample_candidate")]
    print(
        f"{len(records)} graphs probed, {len(negatives)} negative signed values",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_mb(args, out) -> int:
    graphs = load_graphs(args)
    variant = VARIANT_CODES[args.variant]
    objective = Objective(args.objective)
    records = []
    for g in graphs:
        if args.family_k is not None:
            out.write(export_hypergraph(winning_family(g, args.family_k, objective)))
            continue
        mb = maker_breaker_value(g, variant, objective, exact_membership=args.semantics == "exact")
        sv = solve(g, variant, objective).value
        records.append(
            {
                "graph": emit_graph6(g),
                "variant": args.variant,
                "objective": args.objective,
                "semantics": args.semantics,
                "mb_value": mb,
                "game_value": sv,
                "match": mb == sv,
            }
        )
    if records:
        emit_records(records, args.format, out)
    return EXIT_OK


def cmd_trees(args, out) -> int:
    for g in enumerate_trees(args.n):
        out.write(emit_graph6(g) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordiality",
        description="Exact solving and strategy verification for the cordiality and balance games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--graph", help="generator spec, e.g. path:9, star:5, spider:1,2,3, trees:8, prufer:0,1")
            src.add_argument("--file", help="graph6 file, one graph per line")
            p.add_argument("--edge-list", action="store_true",
                           help="treat --file as an edge list ('u v' per line, # comments)")
        p.add_argument("--variant", choices=sorted(VARIANT_CODES), default="A",
                       help="who starts: A = 0-labeling minimizer, I = 1-labeling maximizer, "
                            "I+pass = maximizer starts and may pass once")
        p.add_argument("--objective", choices=["cordiality", "balance"], default="cordiality")
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        p.add_argument("--jobs", type=int, default=1)

    p_solve = sub.add_parser("solve", help="exact game value of each input graph")
    add_common(p_solve)
    p_solve.add_argument("--no-alpha-beta", action="store_true")
    p_solve.add_argument("--parallel", action="store_true", help="split root moves across processes")
    p_solve.add_argument("--symmetry", choices=["none", "path-reversal"], default="none")
    p_solve.add_argument("--force", dest="force", action="store_true",
                         help="lift the vertex-count cap for this run")
    p_solve.set_defaults(func=cmd_solve)

    p_table = sub.add_parser("table", help="value table for paths")
    p_table.add_argument("--min-n", type=int, default=3)
    p_table.add_argument("--max-n", type=int, default=12)
    p_table.add_argument("--format", choices=["json", "csv", "table"], default="csv")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a named verification fixture")
    p_verify.add_argument("fixture", choices=FIXTURES + ("all",))
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_probe = sub.add_parser("probe-balance", help="sample random connected graphs, report signed values")
    p_probe.add_argument("--count", type=int, default=20)
    p_probe.add_argument("--min-n", type=int, default=4)
    p_probe.add_argument("--max-n", type=int, default=9)
    p_probe.add_argument("--p", type=float, default=0.4, help="edge probability")
    p_probe.add_argument("--seed", type=int, default=0)
    p_probe.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p_probe.set_defaults(func=cmd_probe_balance)

    p_mb = sub.add_parser("mb", help="maker-breaker value vs. game value, or family export")
    add_common(p_mb)
    p_mb.add_argument("--semantics", choices=["exact", "superset"], default="exact")
    p_mb.add_argument("--family-k", type=int, default=None,
                      help="export the winning family at this threshold instead of solving")
    p_mb.set_defaults(func=cmd_mb)

    p_trees = sub.add_parser("trees", help="unlabeled trees of order N as graph6 lines")
    p_trees.add_argument("n", type=int)
    p_trees.set_defaults(func=cmd_trees)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.force_max_n = 10_000 if getattr(args, "force", False) else None
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (Graph6Error, GraphError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except SolverCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP_REFUSED
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
