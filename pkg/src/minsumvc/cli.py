"""Command-line front end: solve one instance or cross-check solvers.

Graph files: header line `n m`, then m lines `u v` with 1-based labels;
`#` starts a comment, blank lines are ignored.  Reports are JSON objects
on stdout; failures exit nonzero with a JSON error object.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .clique_modulator import find_clique_modulator, solve_cm_fpt
from .errors import BudgetExceeded, ParameterExceeded
from .graphs import Graph, Ordering, evaluate_cost, random_graph
from .iqp import DEFAULT_NODE_BUDGET
from .oracle import DEFAULT_BRUTE_LIMIT, brute_force_msvc, greedy_msvc
from .vertex_cover import DEFAULT_CONFIG_BUDGET, min_vertex_cover, solve_vc_fpt

EXACT_ALGOS = ("brute", "vc", "cm")
ALL_ALGOS = EXACT_ALGOS + ("greedy",)


class GraphParseError(ValueError):
    pass


def parse_graph(text: str, source: str = "<input>"):
    """Parse the edge-list format into (Graph, labels).

    Labels are the original 1-based vertex names, indexed by internal id.
    """
    header = None
    edges = []
    edge_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphParseError(
                    f"{source}:{lineno}: expected header 'n m', got {raw!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise GraphParseError(
                    f"{source}:{lineno}: non-integer header {raw!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise GraphParseError(
                    f"{source}:{lineno}: negative header values")
            continue
        if len(fields) != 2:
            raise GraphParseError(
                f"{source}:{lineno}: expected edge 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(
                f"{source}:{lineno}: non-integer edge {raw!r}") from None
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(
                f"{source}:{lineno}: vertex out of range 1..{n}")
        if u == v:
            raise GraphParseError(f"{source}:{lineno}: self-loop at line {lineno}")
        pair = (min(u, v) - 1, max(u, v) - 1)
        if pair in edges:
            raise GraphParseError(
                f"{source}:{lineno}: duplicate edge at line {lineno}")
        edges.append(pair)
        edge_lines.append(lineno)
    if header is None:
        raise GraphParseError(f"{source}: empty input, expected 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphParseError(
            f"{source}: header promises {m} edges but {len(edges)} were given")
    return Graph(n, edges), list(range(1, n + 1))


def _load_graph(args):
    if args.random is not None:
        if args.seed is None:
            raise GraphParseError("--random requires --seed for reproducibility")
        n, p = args.random
        g = random_graph(int(n), float(p), int(args.seed))
        return g, list(range(1, g.n + 1)), f"random({n},{p},seed={args.seed})"
    if args.graph is None:
        raise GraphParseError("either a graph file or --random is required")
    with open(args.graph) as fh:
        text = fh.read()
    g, labels = parse_graph(text, source=args.graph)
    return g, labels, args.graph


def _run_algo(algo: str, g: Graph, args):
    """Returns (ordering, cost, k, stats)."""
    stats: dict = {}
    if algo == "brute":
        ordering, cost = brute_force_msvc(g, limit_n=args.brute_cap,
                                          stats=stats)
        return ordering, cost, None, stats
    if algo == "greedy":
        ordering, cost = greedy_msvc(g)
        return ordering, cost, None, stats
    if algo == "vc":
        budget = args.budget if args.budget else DEFAULT_CONFIG_BUDGET
        ordering, cost = solve_vc_fpt(g, k_max=args.max_k, budget=budget,
                                      stats=stats)
        return ordering, cost, stats.get("k"), stats
    if algo == "cm":
        budget = args.budget if args.budget else DEFAULT_NODE_BUDGET
        ordering, cost = solve_cm_fpt(g, k_max=args.max_k, iqp_budget=budget,
                                      stats=stats)
        return ordering, cost, stats.get("k"), stats
    raise ValueError(f"unknown algorithm {algo!r}")


def _pick_auto(g: Graph, args) -> str:
    if min_vertex_cover(g, args.max_k) is not None:
        return "vc"
    if find_clique_modulator(g, args.max_k) is not None:
        return "cm"
    if g.n <= args.brute_cap:
        return "brute"
    raise ParameterExceeded(
        f"no algorithm applicable: both parameters exceed {args.max_k} "
        f"and n={g.n} is above the exhaustive cap {args.brute_cap}")


def _report(algo, k, cost, ordering: Ordering, labels, stats, elapsed_ms,
            g: Graph) -> dict:
    # recompute before emitting; a mismatch is an internal bug
    assert evaluate_cost(g, ordering) == cost, "reported cost failed self-check"
    return {
        "algorithm": algo,
        "k": k,
        "cost": cost,
        "ordering": [labels[v] for v in ordering.seq],
        "stats": stats,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(json.dumps(obj, indent=2))


def cmd_solve(args) -> int:
    g, labels, _ = _load_graph(args)
    algo = args.algo
    if algo == "auto":
        algo = _pick_auto(g, args)
    start = time.perf_counter()
    ordering, cost, k, stats = _run_algo(algo, g, args)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(_report(algo, k, cost, ordering, labels, stats, elapsed, g),
          args.json)
    return 0


def cmd_verify(args) -> int:
    g, labels, source = _load_graph(args)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALL_ALGOS:
            raise GraphParseError(f"unknown algorithm {a!r} in --algos")
    results = {}
    for a in algos:
        start = time.perf_counter()
        ordering, cost, k, stats = _run_algo(a, g, args)
        elapsed = (time.perf_counter() - start) * 1000.0
        results[a] = _report(a, k, cost, ordering, labels, stats, elapsed, g)

    exact = [a for a in algos if a in EXACT_ALGOS]
    ok = True
    lines = []
    for a in algos:
        rep = results[a]
        lines.append(f"{a}: cost={rep['cost']} k={rep['k']} "
                     f"({rep['elapsed_ms']} ms)")
    if exact:
        costs = {a: results[a]["cost"] for a in exact}
        if len(set(costs.values())) != 1:
            ok = False
            lines.append(f"MISMATCH among exact solvers: {costs}")
            for a in exact:
                lines.append(f"  {a} ordering: {results[a]['ordering']}")
        else:
            lines.append(f"exact solvers agree: cost={costs[exact[0]]}")
    if "greedy" in algos and exact:
        opt = results[exact[0]]["cost"]
        gcost = results["greedy"]["cost"]
        ratio = gcost / opt if opt else 1.0
        if gcost > 4 * opt:
            ok = False
            lines.append(f"greedy ratio {ratio:.3f} exceeds 4")
        else:
            lines.append(f"greedy ratio {ratio:.3f} <= 4")
    verdict = "PASS" if ok else "FAIL"
    if args.json:
        print(json.dumps({"graph": source, "n": g.n, "m": g.m,
                          "results": results, "pass": ok},
                         separators=(",", ":")))
    else:
        for line in lines:
            print(line)
        print(verdict)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msvc",
        description="Exact minimum-sum-vertex-cover solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("graph", nargs="?", help="edge-list file (n m header)")
        p.add_argument("--random", nargs=2, metavar=("N", "P"),
                       help="solve a random G(n,p) instance instead of a file")
        p.add_argument("--seed", type=int, help="RNG seed (required with --random)")
        p.add_argument("--max-k", type=int, default=6,
                       help="largest parameter value to accept (default 6)")
        p.add_argument("--brute-cap", type=int, default=DEFAULT_BRUTE_LIMIT,
                       help="largest n for exhaustive search (default 10)")
        p.add_argument("--budget", type=int, default=0,
                       help="search budget override for vc/cm solvers")
        p.add_argument("--json", action="store_true",
                       help="compact single-line JSON output")

    p_solve = sub.add_parser("solve", help="run one solver, print a report")
    common(p_solve)
    p_solve.add_argument("--algo", choices=ALL_ALGOS + ("auto",),
                         default="auto")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser(
        "verify", help="run several solvers and cross-check their results")
    common(p_verify)
    p_verify.add_argument("--algos", default="brute,vc,cm",
                          help="comma-separated list (default brute,vc,cm)")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, ParameterExceeded, BudgetExceeded, ValueError,
            OSError) as exc:
        kind = {
            GraphParseError: "parse-error",
            ParameterExceeded: "parameter-exceeded",
            BudgetExceeded: "budget-exceeded",
        }.get(type(exc), "error")
        print(json.dumps({"error": {"kind": kind, "message": str(exc)}}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
