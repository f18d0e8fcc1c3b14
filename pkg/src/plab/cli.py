"""``plab`` command line: graphs, solving, arena play and verification, the suite, the cache.

Exit codes: 0 success or PASS, 1 FAIL (robber escapes, counterexample,
failed suite), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Sequence

from . import __version__
from . import graphs as G
from .arena import exhaustive_verify_cop, exhaustive_verify_robber, play
from .cache import TableCache, default_cache_dir, export_json
from .generators import random_connected, random_maximal_outerplanar, random_tree
from .graphs import Graph, GraphError, load_graph, save_graph
from .rules import FULLY_ACTIVE, PASSIVE, PRESETS, parse_rule
from .solver import SolverError, cop_number, solve
from .strategies import (
    BlowupRobber,
    DoublingAdapter,
    OptimalCop,
    OptimalRobber,
    OuterplanarCop,
    ShadowPassiveAdapter,
    StrategyError,
    TreeProductCop,
    TreeProductRobber,
    odd_cycle_product_strategy,
)
from .suite import SuiteConfig, run_paper_suite


class UsageError(Exception):
    pass


FAMILY_CHOICES = sorted(G.FAMILIES) + [
    "petersen", "vab", "product", "random-tree", "random-connected", "random-outerplanar",
]
_FACTOR = re.compile(r"^([PCKQ])(\d+)$")


def parse_factor(tok: str) -> Graph:
    """``P3``, ``C4``, ``K2``, ``Q3`` -> path, cycle, complete graph, hypercube."""
    m = _FACTOR.match(tok.strip().upper())
    if not m:
        raise UsageError(f"bad factor {tok!r}; use P<n>, C<n>, K<n> or Q<n>, e.g. P3,C4")
    kind, n = m.group(1), int(m.group(2))
    return {"P": G.path, "C": G.cycle, "K": G.complete, "Q": G.hypercube}[kind](n)


def parse_factors(text: str) -> list[Graph]:
    return [parse_factor(t) for t in text.split(",") if t.strip()]


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {' and '.join(missing)}")


def graph_from_args(args) -> Graph:
    if args.graph and args.family:
        raise UsageError("give either --graph or --family, not both")
    if args.graph:
        g = load_graph(args.graph)
    elif args.family:
        f = args.family.replace("_", "-")
        if f == "petersen":
            g = G.petersen()
        elif f == "vab":
            _need(args, "n", "m")
            g = G.vab_graph(args.n, args.m)
        elif f == "product":
            _need(args, "factors")
            g = G.cartesian_product(parse_factors(args.factors))
        elif f == "random-tree":
            _need(args, "n")
            g = random_tree(args.n, args.seed)
        elif f == "random-connected":
            _need(args, "n")
            g = random_connected(args.n, args.p, args.seed)
        elif f == "random-outerplanar":
            _need(args, "n")
            g = random_maximal_outerplanar(args.n, args.seed)[0]
        elif f == "complete-bipartite":
            _need(args, "n", "m")
            g = G.complete_bipartite(args.m, args.n)
        else:
            _need(args, "n")
            g = G.build_family(f, args.n)
    else:
        raise UsageError("no graph given; use --graph FILE or --family NAME (see --help)")
    if args.blowup:
        g = G.blowup(g, args.blowup)
    return g


def add_graph_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_argument_group("graph")
    grp.add_argument("--graph", help="graph file (.json or edge list)")
    grp.add_argument("--family", choices=FAMILY_CHOICES, metavar="NAME",
                     help=f"built-in family: {', '.join(FAMILY_CHOICES)}")
    grp.add_argument("--n", type=int, help="size parameter")
    grp.add_argument("--m", type=int, help="second size (complete-bipartite m, vab |A| = n, |B| = m)")
    grp.add_argument("--factors", help="product factors, e.g. P3,C4,K2")
    grp.add_argument("--blowup", type=int, metavar="T", help="replace the graph by its T-blowup")
    grp.add_argument("--seed", type=int, default=0, help="seed for random families")
    grp.add_argument("--p", type=float, default=0.5, help="edge probability for random-connected")


def _rule(text: str):
    try:
        return parse_rule(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cache(args) -> TableCache | None:
    return TableCache(args.cache_dir) if getattr(args, "cache_dir", None) else None


# -- controllers ----------------------------------------------------------------

def parse_spec(spec: str) -> tuple[str, dict[str, str]]:
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"controller parameter {item!r} is not key=value")
        params[key.strip()] = val.strip()
    return name.strip(), params


def _int(params: dict, key: str, default: int | None = None) -> int | None:
    if key not in params:
        return default
    try:
        return int(params[key])
    except ValueError as exc:
        raise UsageError(f"parameter {key}={params[key]!r} is not an integer") from exc


def _check_keys(name: str, params: dict, allowed: set[str]) -> None:
    extra = set(params) - allowed
    if extra:
        raise UsageError(f"controller {name!r} takes {sorted(allowed) or 'no parameters'}, got {sorted(extra)}")


def _factors(args, name: str) -> list[Graph]:
    if not args.factors:
        raise UsageError(f"controller {name!r} needs --factors (e.g. --factors P3,P3)")
    return parse_factors(args.factors)


def _same_graph(g: Graph, ctrl, name: str):
    if ctrl.graph.n != g.n or ctrl.graph.adj != g.adj:
        raise UsageError(f"controller {name!r} builds its own board, which differs from the given graph")
    return ctrl


COP_CONTROLLERS = ("optimal", "outerplanar", "doubling", "shadow", "tree-product", "odd-cycle-product")
ROBBER_CONTROLLERS = ("optimal", "tree-product-robber", "blowup-robber")


def cop_factory(spec: str, g: Graph, rule, args):
    """A zero-argument factory for the named cop controller on ``g``."""
    name, params = parse_spec(spec)
    cache = _cache(args)
    if name == "optimal":
        _check_keys(name, params, {"rule", "k"})
        r = _rule(params["rule"]) if "rule" in params else rule
        k = _int(params, "k") or _least_k(g, r, cache)
        table = solve(g, k, r, cache)
        return lambda: OptimalCop(table)
    if name == "outerplanar":
        _check_keys(name, params, set())
        proto = OuterplanarCop(g, rule=rule)
        return proto.clone
    if name == "doubling":
        _check_keys(name, params, {"k"})
        k = _int(params, "k") or _least_k(g, PASSIVE, cache)
        table = solve(g, k, PASSIVE, cache)
        return lambda: DoublingAdapter(OptimalCop(table), rule)
    if name == "shadow":
        _check_keys(name, params, {"k"})
        k = _int(params, "k") or _least_k(g, FULLY_ACTIVE, cache)
        table = solve(g, k, FULLY_ACTIVE, cache)
        return lambda: ShadowPassiveAdapter(OptimalCop(table), rule)
    if name == "tree-product":
        _check_keys(name, params, {"k"})
        fs = _factors(args, name)
        proto = _same_graph(g, TreeProductCop(fs, n_cops=_int(params, "k")), name)
        return proto.clone
    if name == "odd-cycle-product":
        _check_keys(name, params, set())
        fs = _factors(args, name)
        if any(not f.name or not f.name.startswith("C") for f in fs):
            raise UsageError("odd-cycle-product needs cycle factors, e.g. --factors C3,C4")
        proto = odd_cycle_product_strategy([f.n for f in fs], cache=cache)
        return _same_graph(g, proto, name).clone
    raise UsageError(f"unknown cop controller {name!r}; choose from {', '.join(COP_CONTROLLERS)}")


def robber_factory(spec: str, g: Graph, rule, k: int, args):
    name, params = parse_spec(spec)
    if name == "optimal":
        _check_keys(name, params, {"rule", "k"})
        r = _rule(params["rule"]) if "rule" in params else rule
        table = solve(g, _int(params, "k", k), r, _cache(args))
        return lambda: OptimalRobber(table)
    if name == "tree-product-robber":
        _check_keys(name, params, set())
        proto = _same_graph(g, TreeProductRobber(_factors(args, name)), name)
        return proto.clone
    if name == "blowup-robber":
        _check_keys(name, params, {"k", "t"})
        if args.factors:
            fs = parse_factors(args.factors)
        else:
            kk = _int(params, "k")
            if kk is None:
                raise UsageError("blowup-robber needs k=<int> or --factors")
            fs = [G.complete(2)] * (2 * kk - 1)
        t = _int(params, "t") or args.blowup or 2 * ((len(fs) + 1) // 2)
        proto = _same_graph(g, BlowupRobber(fs, t), name)
        return proto.clone
    raise UsageError(f"unknown robber controller {name!r}; choose from {', '.join(ROBBER_CONTROLLERS)}")


def _least_k(g: Graph, rule, cache) -> int:
    k = cop_number(g, rule, g.n, cache)
    if not isinstance(k, int):
        raise UsageError(f"no cop count up to {g.n} wins under {rule.name}")
    return k


# -- subcommands ------------------------------------------------------------------

def cmd_graph(args) -> int:
    if args.action == "build":
        g = graph_from_args(args)
        if args.out:
            save_graph(g, args.out)
            print(f"wrote {args.out} ({g.n} vertices, {g.num_edges} edges)")
        elif args.format == "edgelist":
            sys.stdout.write(g.to_edgelist())
        else:
            print(json.dumps(g.to_json()))
        return 0
    if args.action == "convert":
        g = load_graph(args.input)
        save_graph(g, args.output)
        print(f"wrote {args.output} ({g.n} vertices, {g.num_edges} edges)")
        return 0
    raise UsageError(f"unknown graph action {args.action!r}")


def cmd_solve(args) -> int:
    g = graph_from_args(args)
    rule = _rule(args.rule)
    cache = _cache(args)
    if (args.cops is None) == (args.max_cops is None):
        raise UsageError("give exactly one of --cops K or --max-cops K")
    if args.max_cops is not None:
        print(cop_number(g, rule, args.max_cops, cache))
        return 0
    table = solve(g, args.cops, rule, cache)
    if args.export:
        export_json(table, args.export)
    wins = bool(table.initial.all(axis=1).any())
    print("cop-win" if wins else "robber-win")
    return 0


def cmd_arena(args) -> int:
    g = graph_from_args(args)
    rule = _rule(args.rule)
    if args.action == "play":
        cops = cop_factory(args.cop, g, rule, args)()
        robber = robber_factory(args.robber, g, rule, cops.k, args)()
        tr = play(g, rule, cops, robber, args.rounds or 20 * g.n * g.n)
        if args.artifacts_dir:
            tr.save(args.artifacts_dir, "play")
        print(json.dumps(tr.to_json()) if args.json else
              f"{tr.outcome} after {len(tr.rounds)} rounds "
              f"(cops start {list(tr.cop_placement)}, robber starts {tr.robber_placement})")
        return 0 if tr.captured else 1
    if args.action == "verify-cop":
        res = exhaustive_verify_cop(g, rule, cop_factory(args.cop, g, rule, args), round_bound=args.rounds,
                                    check_determinism=True, artifacts_dir=args.artifacts_dir)
    else:
        if args.cops is None:
            raise UsageError("verify-robber needs --cops K")
        res = exhaustive_verify_robber(g, rule, args.cops, robber_factory(args.robber, g, rule, args.cops, args),
                                       artifacts_dir=args.artifacts_dir)
    if res:
        print(f"Verified (worst case {res.worst_rounds} rounds, {res.nodes} nodes)"
              if res.worst_rounds is not None else f"Verified ({res.nodes} nodes)")
        return 0
    print(f"Counterexample: {res.reason}")
    print(json.dumps(res.transcript.to_json()))
    return 1


def cmd_verify(args) -> int:
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite!r}; the only suite is 'paper'")
    only = None
    if args.only:
        try:
            only = tuple(int(x) for x in args.only.split(","))
        except ValueError as exc:
            raise UsageError(f"--only takes check ids like 1,4,9: {exc}") from exc
    log = None if args.quiet else (lambda s: print(s, file=sys.stderr))
    report = run_paper_suite(SuiteConfig(seed=args.seed, heavy=args.heavy, cache_dir=args.cache_dir,
                                         only=only, log=log))
    report.write(args.out)
    t = report.totals
    print(f"{'PASS' if report.passed else 'FAIL'}: {t['pass']}/{t['records']} records; report in {args.out}")
    return 0 if report.passed else 1


def cmd_cache(args) -> int:
    cache = TableCache(args.cache_dir)
    if args.action == "ls":
        for p in cache.entries():
            print(f"{p.name}\t{p.stat().st_size}")
        return 0
    n = cache.clear()
    print(f"removed {n} entries from {default_cache_dir(args.cache_dir)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plab", description="Exact solver and strategy workbench for "
                                 "cops and robbers under passive, fully active, active and lazy rules.")
    ap.add_argument("--version", action="version", version=f"plab {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build or convert graph files")
    p.add_argument("action", choices=["build", "convert"])
    p.add_argument("input", nargs="?", help="convert: input file")
    p.add_argument("output", nargs="?", help="convert: output file (.json or edge list)")
    p.add_argument("--out", help="build: output file (.json or edge list); default prints JSON")
    p.add_argument("--format", choices=["json", "edgelist"], default="json", help="build: stdout format")
    add_graph_args(p)
    p.set_defaults(fn=cmd_graph)

    rules = ", ".join(PRESETS)
    p = sub.add_parser("solve", help="solve a game exactly")
    add_graph_args(p)
    p.add_argument("--rule", default="fully-active", help=f"movement rule: {rules}")
    p.add_argument("--cops", type=int, help="solve with exactly K cops; prints cop-win or robber-win")
    p.add_argument("--max-cops", type=int, help="print the cop number if at most K, else >K")
    p.add_argument("--cache-dir", help="solve-table cache (default $PLAB_CACHE_DIR or ./plab-cache)")
    p.add_argument("--export", help="write the solved table as JSON")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("arena", help="play or exhaustively verify named controllers")
    p.add_argument("action", choices=["play", "verify-cop", "verify-robber"])
    add_graph_args(p)
    p.add_argument("--rule", default="fully-active", help=f"movement rule: {rules}")
    p.add_argument("--cop", default="optimal", help=f"cop controller: {', '.join(COP_CONTROLLERS)}; "
                   "parameters as name:key=val,... (e.g. optimal:rule=passive,k=2)")
    p.add_argument("--robber", default="optimal", help=f"robber controller: {', '.join(ROBBER_CONTROLLERS)}")
    p.add_argument("--cops", type=int, help="verify-robber: number of cops")
    p.add_argument("--rounds", type=int, help="round bound (default 20 n^2)")
    p.add_argument("--artifacts-dir", help="write counterexample or play transcripts here")
    p.add_argument("--cache-dir", help="solve-table cache")
    p.add_argument("--json", action="store_true", help="play: print the full transcript")
    p.set_defaults(fn=cmd_arena)

    p = sub.add_parser("verify", help="run the theorem-reproduction suite")
    p.add_argument("--suite", default="paper")
    p.add_argument("--heavy", action="store_true", help="include the 32-vertex blowup check")
    p.add_argument("--only", help="comma-separated check ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="plab-report", help="report directory")
    p.add_argument("--cache-dir", help="solve-table cache")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("cache", help="list or clear cached solve tables")
    p.add_argument("action", choices=["ls", "rm"])
    p.add_argument("--cache-dir", help="cache directory (default $PLAB_CACHE_DIR or ./plab-cache)")
    p.set_defaults(fn=cmd_cache)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.command == "graph" and args.action == "convert" and not (args.input and args.output):
        print("plab: error: graph convert needs INPUT and OUTPUT files", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (UsageError, GraphError, SolverError, StrategyError, ValueError, OSError) as exc:
        print(f"plab: error: {exc}", file=sys.stderr)
        return 2


cli = main

if __name__ == "__main__":
    sys.exit(main())
