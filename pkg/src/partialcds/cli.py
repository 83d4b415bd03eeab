"""Command line front end.

Exit codes: 0 ok, 2 usage, 3 infeasible, 4 verification failed, 5 size cap.
"""
from __future__ import annotations

import argparse
import csv
import math
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import instances as io
from .errors import BudgetTooSmall, Infeasible, ParseError, TooLarge
from .graph import max_degree
from .oracles import CACHE_ENV, ORACLE_LIMIT, opt_bgcds, opt_pgcds
from .pipelines import (COVER_FRACTION, lookahead_greedy_bcds, solve_bcds, solve_bgcds,
                        solve_pcds, solve_pgcds)
from .profits import capacitated_domination, domination_count, weighted_domination
from .trees import RootedTree, decompose
from .verify import verify

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_VIOLATION, EXIT_TOO_LARGE = 0, 2, 3, 4, 5
PROBLEMS = ("pcds", "bcds", "pgcds", "bgcds")
CSV_COLUMNS = ["instance", "label", "problem", "param", "objective", "size",
               "opt", "bound", "ratio", "engine", "ms"]


class UsageError(Exception):
    pass


def load_instance(path) -> io.Instance:
    return io.parse_instance(Path(path).read_text())


def profile_for(inst: io.Instance, problem: str, profile: str, semantics: str = "claim"):
    g = inst.graph
    if problem in ("pcds", "bcds") or profile == "dom":
        if problem in ("pcds", "bcds") and profile != "dom":
            raise UsageError(f"{problem} only supports the 'dom' profile")
        return domination_count(g)
    if profile == "weighted":
        if inst.weights is None:
            raise UsageError("instance file has no weights ('w' flag)")
        return weighted_domination(g, inst.weights)
    if profile == "capacitated":
        if inst.capacities is None:
            raise UsageError("instance file has no capacities ('c' flag)")
        return capacitated_domination(g, inst.capacities, semantics)
    raise UsageError(f"unknown profile {profile!r}")


def param_of(args) -> int:
    if args.problem in ("pcds", "pgcds"):
        if args.quota is None:
            raise UsageError(f"{args.problem} needs --quota")
        return args.quota
    if args.k is None:
        raise UsageError(f"{args.problem} needs --k")
    return args.k


def run_solver(inst, problem, param, profile="dom", mode="auto", semantics="claim"):
    g = inst.graph
    f = profile_for(inst, problem, profile, semantics)
    if problem == "pcds":
        sol = solve_pcds(g, param, mode)
    elif problem == "bcds":
        sol = solve_bcds(g, param, mode)
    elif problem == "pgcds":
        sol = solve_pgcds(g, f, param, mode)
    else:
        sol = solve_bgcds(g, f, param, mode)
    sol.meta["profile"] = profile
    return sol


def run_oracle(inst, problem, param, profile="dom", semantics="claim"):
    f = profile_for(inst, problem, profile, semantics)
    if problem in ("pcds", "pgcds"):
        return opt_pgcds(inst.graph, f, param, problem=problem)
    return opt_bgcds(inst.graph, f, param, problem=problem)


def guarantee(problem, g, param, opt) -> float:
    """Bound the solver must respect given the oracle optimum: an upper
    bound on size for quota problems, a lower bound on objective otherwise."""
    if problem == "pcds":
        return 2 * opt.size * math.log(max(max_degree(g), 1)) + opt.size + 2
    if problem == "pgcds":
        return 2 * opt.size * math.log(max(param, 1)) + opt.size + 2
    return math.ceil(COVER_FRACTION / 13 * opt.objective)


# commands


def cmd_gen(args):
    if args.kind == "spider":
        inst = io.gen_spider(args.heads, args.c, args.legs, args.leg_len)
    elif args.kind == "gnp":
        inst = io.gen_gnp(args.n, args.p, args.seed)
    else:
        inst = io.gen_unit_disk(args.n, args.r, args.seed)
    if args.profiles:
        inst = io.with_profiles(inst, args.seed if hasattr(args, "seed") else 0)
    text = io.serialize_instance(inst)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args):
    inst = load_instance(args.instance)
    param = param_of(args)
    start = time.perf_counter()
    sol = run_solver(inst, args.problem, param, args.profile, args.mode, args.semantics)
    ms = (time.perf_counter() - start) * 1000
    text = io.serialize_solution(sol)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{args.problem} objective={sol.objective} size={sol.size} "
          f"engine={sol.meta.get('engine')} ms={ms:.1f}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_oracle(args):
    inst = load_instance(args.instance)
    param = param_of(args)
    opt = run_oracle(inst, args.problem, param, args.profile, args.semantics)
    print(f"opt {args.problem} objective={opt.objective} size={opt.size} "
          f"vertices={' '.join(map(str, sorted(opt.chosen)))}")
    return EXIT_OK


def cmd_verify(args):
    inst = load_instance(args.instance)
    sol = io.parse_solution(Path(args.solution).read_text())
    param = param_of(args)
    issues = verify(inst, sol, args.problem, param, args.profile, args.semantics)
    if issues:
        for issue in issues:
            print(f"violation: {issue}")
        return EXIT_VIOLATION
    print("ok")
    return EXIT_OK


def _bench_one(job):
    path, problem, param_arg, profile, mode, oracle_limit, semantics = job
    inst = load_instance(path)
    g = inst.graph
    rows = []
    f = profile_for(inst, problem, profile, semantics)
    if problem in ("pcds", "pgcds"):
        param = math.ceil(param_arg * (g.n if problem == "pcds" else f.total()))
    else:
        param = int(param_arg)
    row = {"instance": Path(path).name, "label": inst.label, "problem": problem, "param": param}
    start = time.perf_counter()
    try:
        sol = run_solver(inst, problem, param, profile, mode, semantics)
    except Infeasible as exc:
        row.update(objective="", size="", opt="", bound="", ratio="", engine=f"infeasible: {exc}", ms="")
        return [row]
    row.update(objective=sol.objective, size=sol.size, engine=sol.meta.get("engine"),
               ms=f"{(time.perf_counter() - start) * 1000:.1f}", opt="", bound="", ratio="")
    if g.n <= min(oracle_limit, ORACLE_LIMIT):
        opt = run_oracle(inst, problem, param, profile, semantics)
        if problem in ("pcds", "pgcds"):
            row.update(opt=opt.size, ratio=f"{sol.size / max(opt.size, 1):.4f}")
        else:
            row.update(opt=opt.objective, ratio=f"{sol.objective / max(opt.objective, 1):.4f}")
        # bound in ratio units: PCDS/PGCDS ratio must stay <= it, BCDS/BGCDS ratio >= it
        row["bound"] = f"{guarantee(problem, g, param, opt) / max(opt.size if problem in ('pcds', 'pgcds') else opt.objective, 1):.4f}"
    rows.append(row)
    m = re.match(r"spider-h(\d+)-c(\d+)-m(\d+)-l(\d+)", inst.label)
    if problem == "bcds" and m:
        start = time.perf_counter()
        base = lookahead_greedy_bcds(g, param, int(m.group(2)))
        rows.append({"instance": Path(path).name, "label": inst.label, "problem": "lookahead-bcds",
                     "param": param, "objective": base.objective, "size": base.size, "opt": "",
                     "bound": "", "ratio": f"{base.objective / max(sol.objective, 1):.4f}",
                     "engine": "lookahead", "ms": f"{(time.perf_counter() - start) * 1000:.1f}"})
    return rows


def run_bench(corpus_dir, problem, param, profile="dom", mode="auto", oracle_limit=12,
              jobs=1, semantics="claim"):
    paths = sorted(str(p) for p in Path(corpus_dir).glob("*.cds"))
    work = [(p, problem, param, profile, mode, oracle_limit, semantics) for p in paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_bench_one, work))
    else:
        chunks = [_bench_one(w) for w in work]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r["instance"], r["problem"]))
    return rows


def cmd_bench(args):
    if args.problem in ("pcds", "pgcds"):
        amount = args.quota_frac
    else:
        if args.k is None:
            raise UsageError(f"{args.problem} needs --k")
        amount = args.k
    rows = run_bench(args.corpus, args.problem, amount, args.profile, args.mode,
                     args.oracle_limit, args.jobs, args.semantics)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_decompose(args):
    inst = load_instance(args.instance)
    g = inst.graph
    if g.m != g.n - 1:
        raise UsageError("instance is not a tree")
    t = RootedTree.from_edges(range(g.n), g.edges(), args.root)
    d = decompose(t, args.k)
    if d.case is None:
        print(f"no split needed: {t.size} <= k = {args.k}")
    else:
        print(f"case {d.case}: |T1| = {d.first_sizes[0]}, |T2| = {d.first_sizes[1]}, 3k-1 = {3 * args.k - 1}")
    print(f"parts: {len(d.parts)}")
    for i, part in enumerate(d.parts):
        print(f"  part {i}: size {part.size} root {part.root}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="partialcds", description=__doc__.splitlines()[0])
    ap.add_argument("--cache-dir", help=f"oracle cache directory (also ${CACHE_ENV})")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    sp = gsub.add_parser("spider")
    sp.add_argument("--heads", type=int, required=True)
    sp.add_argument("--c", type=int, required=True, help="connector paths have c+1 edges")
    sp.add_argument("--legs", type=int, required=True)
    sp.add_argument("--leg-len", type=int, default=1)
    gn = gsub.add_parser("gnp")
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--p", type=float, required=True)
    gn.add_argument("--seed", type=int, default=0)
    ud = gsub.add_parser("unitdisk")
    ud.add_argument("--n", type=int, required=True)
    ud.add_argument("--r", type=float, required=True)
    ud.add_argument("--seed", type=int, default=0)
    for p in (sp, gn, ud):
        p.add_argument("-o", "--out")
        p.add_argument("--profiles", action="store_true",
                       help="attach random weights in [0,9] and capacities in [1,3]")
    gen.set_defaults(func=cmd_gen)

    def problem_args(p, need_param=True):
        p.add_argument("--quota", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--profile", choices=("dom", "weighted", "capacitated"), default="dom")
        p.add_argument("--semantics", choices=("claim", "assignment"), default="claim",
                       help="capacity model for the capacitated profile")

    s = sub.add_parser("solve", help="run a solver pipeline")
    s.add_argument("problem", choices=PROBLEMS)
    s.add_argument("instance")
    problem_args(s)
    s.add_argument("--mode", choices=("exact", "heuristic", "auto"), default="auto")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exhaustive optimum (small graphs)")
    o.add_argument("problem", choices=PROBLEMS)
    o.add_argument("instance")
    problem_args(o)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="audit a solution file")
    v.add_argument("instance")
    v.add_argument("solution")
    v.add_argument("problem", choices=PROBLEMS)
    problem_args(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run a solver over a directory of .cds files")
    b.add_argument("corpus")
    b.add_argument("problem", choices=PROBLEMS)
    b.add_argument("--k", type=int)
    b.add_argument("--quota-frac", type=float, default=0.5,
                   help="quota as a fraction of n (pcds) or f(V) (pgcds)")
    b.add_argument("--profile", choices=("dom", "weighted", "capacitated"), default="dom")
    b.add_argument("--semantics", choices=("claim", "assignment"), default="claim")
    b.add_argument("--mode", choices=("exact", "heuristic", "auto"), default="auto")
    b.add_argument("--oracle-limit", type=int, default=12)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_bench)

    d = sub.add_parser("decompose", help="split a tree instance into budget-k parts")
    d.add_argument("instance")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--root", type=int, default=0)
    d.set_defaults(func=cmd_decompose)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.cache_dir:
        os.environ[CACHE_ENV] = args.cache_dir
    try:
        return args.func(args)
    except (UsageError, BudgetTooSmall, ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
