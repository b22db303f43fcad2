"""Command-line entry point.

Exit codes: 0 success, 1 a verification found a discrepancy, 2 invalid
input, 3 instance too large for exhaustive search.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, formats, reductions
from .core import InstanceTooLarge, InvalidInstance, Money, NotApplicable, evaluate_list
from .generate import InfeasibleSpec, RandomSpec, gen_random
from .solvers import DEFAULT_EXACT_LIMIT, METHODS, solve_auto, solve_exact

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_TOO_LARGE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    inst = formats.parse_instance(_read(args.file))
    if args.target is not None:
        inst = type(inst)(inst.catalog, inst.buyers, Money.parse(args.target))
    if args.method == "auto":
        sol = solve_auto(inst, args.exact_limit, args.workers)
    elif args.method == "exact":
        sol = solve_exact(inst, args.exact_limit, stop_at_target=args.stop_at_target,
                          prune=args.prune, workers=args.workers)
    else:
        sol = METHODS[args.method](inst)
    print("\n".join(sol.describe(inst)))
    return EXIT_OK


def cmd_evaluate(args) -> int:
    inst = formats.parse_instance(_read(args.file))
    order = inst.list_from_names([x for x in args.list.split(",") if x])
    value = evaluate_list(inst, order)
    decision = "n/a" if inst.target is None else ("yes" if value >= inst.target else "no")
    print(f"decision={decision}")
    print(f"value={value}")
    print("list=" + ",".join(inst.names_of(order)))
    return EXIT_OK


def cmd_reduce(args) -> int:
    source = formats.parse_betweenness(_read(args.file))
    _write(args.output, formats.serialize_instance(reductions.reduce(source, args.target)))
    return EXIT_OK


def cmd_check_betweenness(args) -> int:
    source = formats.parse_betweenness(_read(args.file))
    sol = reductions.solve_betweenness_exhaustive(source, args.limit)
    print(f"satisfiable={'yes' if sol.satisfiable else 'no'}")
    print("order=" + (",".join(sol.order) if sol.order else "-"))
    return EXIT_OK


def cmd_verify_gadgets(args) -> int:
    lib = reductions.derive_gadgets()
    for role in lib.roles:
        edges = " ".join(f"{a}>{b}" for a, b in role.edges)
        print(f"role={role.table}/{role.name} multiplicity={role.multiplicity} "
              f"consistent={role.candidates} edges={edges}")
    mismatches = reductions.verify_gadget_tables(lib)
    for line in mismatches:
        print(line, file=sys.stderr)
    print(f"mismatches={len(mismatches)}")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def cmd_verify_reduction(args) -> int:
    source = formats.parse_betweenness(_read(args.file))
    report = reductions.verify_reduction_equivalence(source, args.target, args.limit, args.exact_limit)
    print("\n".join(report.lines()))
    return EXIT_OK if report.equivalent else EXIT_MISMATCH


def cmd_gen_random(args) -> int:
    tc = None if args.tc_size == "any" else int(args.tc_size)
    spec = RandomSpec(args.n, args.m, args.rule, args.direction, args.p_left, tc,
                      args.profit_min, args.profit_max, args.seed)
    _write(args.output, formats.serialize_instance(gen_random(spec)))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = bench.bench_scaling(args.methods.split(","), _ints(args.n), _ints(args.m),
                               args.reps, args.seed, args.exact_limit)
    if args.csv:
        print("n,m,method,t_us")
    for row in rows:
        print(row.csv() if args.csv else row.line())
    return EXIT_OK


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shelflist", description="Product arrangement solvers and reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximise total profit over shelf arrangements")
    p.add_argument("file")
    p.add_argument("--method", default="auto", choices=["auto", *METHODS])
    p.add_argument("--target", help="decision bound R (overrides the file)")
    p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--stop-at-target", action="store_true", help="exact: stop at the first list reaching R")
    p.add_argument("--prune", action="store_true", help="exact: branch and bound instead of full enumeration")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("evaluate", help="total profit of one shelf")
    p.add_argument("file")
    p.add_argument("--list", required=True, help="comma-separated product names, left to right")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("reduce", help="compile a betweenness file into an instance")
    p.add_argument("file")
    p.add_argument("--target", required=True, choices=reductions.REDUCTIONS)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check-betweenness", help="solve a betweenness file by brute force")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=reductions.DEFAULT_BETWEENNESS_LIMIT)
    p.set_defaults(func=cmd_check_betweenness)

    p = sub.add_parser("verify-gadgets", help="rebuild gadget tournaments and replay the tables")
    p.set_defaults(func=cmd_verify_gadgets)

    p = sub.add_parser("verify-reduction", help="compare betweenness and reduced answers")
    p.add_argument("file")
    p.add_argument("--target", required=True, choices=reductions.REDUCTIONS)
    p.add_argument("--limit", type=int, default=reductions.DEFAULT_BETWEENNESS_LIMIT)
    p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.set_defaults(func=cmd_verify_reduction)

    p = sub.add_parser("gen-random", help="write a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rule", choices=["rc", "sat", "sc"], default="sc")
    p.add_argument("--direction", choices=["L", "R", "mixed"], default="L")
    p.add_argument("--p-left", type=float, default=0.5)
    p.add_argument("--tc-size", choices=["1", "3", "any"], default="any")
    p.add_argument("--profit-min", type=int, default=0)
    p.add_argument("--profit-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("bench", help="time the solvers over a size grid")
    p.add_argument("--methods", default="rc,pa-sc-t1,sepa-sat,sepa-sc-t3")
    p.add_argument("--n", default="10,20,40,80")
    p.add_argument("--m", default="100,200,400")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-limit", type=int, default=8)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (InvalidInstance, NotApplicable, InfeasibleSpec) as exc:
        problems = getattr(exc, "problems", [str(exc)])
        for problem in problems:
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())
