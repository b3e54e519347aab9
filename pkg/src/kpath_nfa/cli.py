"""Command-line front end: ``kpath-nfa <command> ...``.

Exit codes: 0 found / all checks passed, 1 not found / a check failed,
2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from itertools import product

from . import __version__, oracle
from .errors import KPathError
from .graph import random_graph, read_graph, write_graph
from .lkn import build_lkn, check_fooling_separation, fooling_pairs
from .nfa import dumps_nfa, reachable_trim
from .nxa import covering_random, verify_covering
from .search import shortest_accepting, weighted_product
from .solvers import SolveConfig, simple_kpath_exists_nxa, solve_kpath, solve_st_kpath
from .universal import (AutoProvider, GreedyProvider, RandomProvider, UniversalFamily,
                        string_to_mask, verify_universal)

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


def _emit(args, report: dict, human: str):
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def _run_report(args, config: dict, result: dict, statistics: dict, gadgets: dict) -> dict:
    if getattr(args, "no_timing", False):
        statistics = {k: v for k, v in statistics.items() if not k.endswith("_ms")}
        if "automaton" in statistics:
            statistics["automaton"] = dict(statistics["automaton"])
    return {
        "command": list(args.argv),
        "version": __version__,
        "config": config,
        "result": result,
        "statistics": statistics,
        "gadgets": gadgets,
    }


def _config(args, method) -> SolveConfig:
    return SolveConfig(method=method, seed=args.seed, universal_mode=args.universal,
                       threads=args.threads)


def cmd_solve(args) -> int:
    if (args.source is None) != (args.target is None):
        raise KPathError("--source and --target must be given together")
    G = read_graph(args.graph)
    cfg = _config(args, args.method)
    t0 = time.perf_counter()
    if args.source is not None:
        res, stats = solve_st_kpath(G, args.source, args.target, args.k, cfg)
    else:
        res, stats = solve_kpath(G, args.k, cfg)
    statistics = stats.as_dict()
    statistics["wall_ms"] = (time.perf_counter() - t0) * 1000
    automaton = statistics.get("automaton") or {}
    gadgets = {
        "universal_mode": cfg.universal_mode,
        "seed": cfg.seed,
        "families_verified": automaton.get("all_families_verified"),
        "family_provenance": automaton.get("family_provenance"),
    }
    result = {"found": res is not None,
              "weight": res.weight if res else None,
              "path": list(res.vertices) if res else None}
    human = (f"FOUND weight={res.weight} path={','.join(map(str, res.vertices))}"
             if res else "NOT FOUND")
    _emit(args, _run_report(args, cfg.as_dict(), result, statistics, gadgets), human)
    return EXIT_OK if res else EXIT_NO


def cmd_decide(args) -> int:
    G = read_graph(args.graph)
    t0 = time.perf_counter()
    if args.method == "nxa":
        cfg = _config(args, "nxa")
        found, rep = simple_kpath_exists_nxa(G, args.k, cfg)
        gadgets = {"covering_seed": rep.family_seed, "covering_size": rep.family_size,
                   "covering_verified": rep.family_verified,
                   "verification_attempts": rep.verification_attempts}
        statistics = {"member_empty": rep.member_empty, "product_states": rep.product_states,
                      "k_internal": rep.k_internal}
        result = {"found": found, "witness_word": list(rep.witness) if rep.witness else None,
                  "one_sided": not rep.family_verified}
    else:
        cfg = _config(args, args.method)
        res, stats = solve_kpath(G, args.k, cfg)
        found = res is not None
        statistics = stats.as_dict()
        gadgets = {"universal_mode": cfg.universal_mode, "seed": cfg.seed}
        result = {"found": found, "path": list(res.vertices) if res else None}
    statistics["wall_ms"] = (time.perf_counter() - t0) * 1000
    human = f"{'FOUND' if found else 'NOT FOUND'} k={args.k} method={args.method}"
    _emit(args, _run_report(args, cfg.as_dict(), result, statistics, gadgets), human)
    return EXIT_OK if found else EXIT_NO


def _provider(args):
    if args.greedy:
        return GreedyProvider()
    if args.seed is not None:
        return RandomProvider(args.seed)
    return AutoProvider(0)


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    M, report = build_lkn(args.n, args.k, _provider(args), args.family_mode,
                          with_unshared=args.unshared)
    build_ms = (time.perf_counter() - t0) * 1000
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(dumps_nfa(M))
    if args.report:
        d = report.as_dict()
        if not args.no_timing:
            d["build_ms"] = build_ms
        print(json.dumps(d, sort_keys=True, separators=(",", ":")))
    else:
        print(f"L_{args.k}({args.n}): states={report.states} transitions={report.transitions} "
              f"size={report.size} depth={report.recursion_depth}")
    return EXIT_OK


def cmd_gen(args) -> int:
    G = random_graph(args.n, args.m, args.wmin, args.wmax, args.seed)
    write_graph(G, args.out)
    return EXIT_OK


def _line(ok: bool, label: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {label}")
    return ok


def cmd_verify_lkn(args) -> int:
    all_ok = True
    for n in range(1, args.max_n + 1):
        for k in range(1, min(n, args.max_k) + 1):
            M, rep = build_lkn(n, k, _provider(args))
            lang = oracle.enumerate_language(M, n, k)
            ok = lang == oracle.lkn_reference(n, k)
            ok &= not any(oracle.naive_accepts(M, w)
                          for L in (k - 1, k + 1) if L >= 0 and n**L <= 20000
                          for w in product(range(1, n + 1), repeat=L))
            ok &= reachable_trim(M).num_states >= 2**k
            ok &= check_fooling_separation(M, fooling_pairs(k, n))
            all_ok &= _line(ok, f"lkn n={n} k={k} size={rep.size}")
    return EXIT_OK if all_ok else EXIT_NO


def cmd_verify_universal(args) -> int:
    with open(args.file) as fh:
        members = tuple(string_to_mask(ln) for ln in fh if ln.strip())
    bad = [i for i, ln in enumerate(members) if ln >> args.n]
    if bad:
        raise KPathError(f"line {bad[0] + 1}: string longer than n={args.n}")
    ok = verify_universal(UniversalFamily(args.n, args.k, members, "file"))
    _line(ok, f"({args.n},{args.k})-universal, {len(members)} strings")
    return EXIT_OK if ok else EXIT_NO


def cmd_verify_covering(args) -> int:
    fam = covering_random(args.n, args.k, args.seed)
    ok = verify_covering(fam)
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(fam.dumps())
    _line(ok, f"({args.n},{args.k})-covering, {len(fam)} matrices, seed={args.seed}")
    return EXIT_OK if ok else EXIT_NO


def cmd_verify_solver(args) -> int:
    import random
    rng = random.Random(args.seed)
    all_ok = True
    for i in range(args.instances):
        n = rng.randint(1, args.max_n)
        m = rng.randint(0, n * (n - 1) // 2)
        k = rng.randint(1, args.max_k)
        G = random_graph(n, m, -10, 10, args.seed * 100_003 + i)
        s, t = rng.randint(1, n), rng.randint(1, n)
        res, _ = solve_st_kpath(G, s, t, k, SolveConfig(seed=args.seed))
        ref = oracle.brute_min_wt_simple_kpath(G, k, s, t)
        ok = (res is None) == (ref is None) and (res is None or res.weight == ref[0])
        all_ok &= ok
        if not ok or args.verbose:
            _line(ok, f"instance {i}: n={n} m={m} k={k} s={s} t={t}")
    _line(all_ok, f"{args.instances} solver instances against brute force")
    return EXIT_OK if all_ok else EXIT_NO


def bench_rows(min_k: int, max_k: int, seed: int = 0):
    """One row per k: L_k(2k) automaton size and build/solve times."""
    for k in range(min_k, max_k + 1):
        n = 2 * k
        t0 = time.perf_counter()
        M, rep = build_lkn(n, k, AutoProvider(seed))
        t1 = time.perf_counter()
        G = random_graph(n, n * (n - 1) // 2, 0, 100, seed + k)
        shortest_accepting(weighted_product(M, G, 1, n))
        t2 = time.perf_counter()
        yield {"k": k, "n": n, "states": rep.states, "transitions": rep.transitions,
               "size": rep.size, "build_ms": round((t1 - t0) * 1000, 1),
               "solve_ms": round((t2 - t1) * 1000, 1)}
        del M


BENCH_COLUMNS = ["k", "n", "states", "transitions", "size", "build_ms", "solve_ms"]


def cmd_bench(args) -> int:
    writer = None
    fh = open(args.out, "w", newline="") if args.out else None
    try:
        if fh:
            writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
            writer.writeheader()
        print(" ".join(f"{c:>12}" for c in BENCH_COLUMNS))
        for row in bench_rows(args.min_k, args.max_k, args.seed):
            print(" ".join(f"{row[c]:>12}" for c in BENCH_COLUMNS), flush=True)
            if writer:
                writer.writerow(row)
                fh.flush()
    finally:
        if fh:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kpath-nfa", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--threads", type=int, default=1, help="worker cap for parallel checks")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, methods, default):
        sp.add_argument("--graph", required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--method", choices=methods, default=default)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--universal", choices=["auto", "greedy", "randomized"], default="auto")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--no-timing", action="store_true",
                        help="omit wall-clock fields so reports are byte-for-byte reproducible")

    sp = sub.add_parser("solve", help="minimum-weight simple k-path")
    common(sp, ["nfa", "oracle"], "nfa")
    sp.add_argument("--source", type=int)
    sp.add_argument("--target", type=int)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("decide", help="does a simple k-path exist")
    common(sp, ["nxa", "nfa", "oracle"], "nxa")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("build", help="construct an automaton")
    bsub = sp.add_subparsers(dest="what", required=True)
    b = bsub.add_parser("lkn", help="the L_k(n) automaton")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    g = b.add_mutually_exclusive_group()
    g.add_argument("--greedy", action="store_true")
    g.add_argument("--seed", type=int)
    b.add_argument("--family-mode", choices=["per_level", "reuse"], default="per_level")
    b.add_argument("--dump")
    b.add_argument("--report", action="store_true")
    b.add_argument("--unshared", action="store_true", help="also compute the copy-per-branch size")
    b.add_argument("--no-timing", action="store_true")
    b.set_defaults(func=cmd_build)

    sp = sub.add_parser("gen", help="random instance")
    for name in ("n", "m", "wmin", "wmax", "seed"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="cross-checks against brute force")
    vsub = sp.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("lkn")
    v.add_argument("--max-n", type=int, default=5)
    v.add_argument("--max-k", type=int, default=4)
    v.add_argument("--greedy", action="store_true")
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify_lkn)
    v = vsub.add_parser("universal")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--file", required=True)
    v.set_defaults(func=cmd_verify_universal)
    v = vsub.add_parser("covering")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--dump")
    v.set_defaults(func=cmd_verify_covering)
    v = vsub.add_parser("solver")
    v.add_argument("--instances", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--max-k", type=int, default=5)
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify_solver)

    sp = sub.add_parser("bench", help="automaton size and timing table")
    sp.add_argument("--max-k", type=int, required=True)
    sp.add_argument("--min-k", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERR if exc.code else EXIT_OK
    args.argv = argv
    try:
        return args.func(args)
    except (KPathError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERR


if __name__ == "__main__":
    sys.exit(main())
