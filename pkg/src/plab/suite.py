"""Theorem-reproduction suite: every acceptance check, with Markdown/CSV/JSON reports.

Each check appends integer or boolean records.  A record passes iff the
computed value equals the expected one (range checks carry their own
predicate).  Report files hold no timings, so a fixed seed gives identical
bytes; per-check runtimes go to ``timings.json`` next to them.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
import traceback
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import ceil
from pathlib import Path
from typing import Any, Callable

from . import __version__
from . import graphs as G
from .arena import exhaustive_verify_cop, exhaustive_verify_robber
from .cache import TableCache
from .covering import doubled_cycle_cover, validate_covering
from .generators import random_connected, random_maximal_outerplanar, random_tree
from .naive import joint_solve
from .rules import ALL_RULES, FULLY_ACTIVE, PASSIVE
from .solver import cop_number, solve, wins_from_all_placements
from .strategies import (
    BlowupRobber,
    CoverLiftAdapter,
    DoublingAdapter,
    OptimalCop,
    OuterplanarCop,
    SamePartiteAdapter,
    ShadowPassiveAdapter,
    TreeProductCop,
    TreeProductRobber,
    odd_cycle_product_strategy,
)

PASS, FAIL = "PASS", "FAIL"


@dataclass
class CheckRecord:
    check: int
    id: str
    anchor: str
    instance: str
    expected: Any
    computed: Any
    verdict: str
    runtime: float = 0.0

    def row(self) -> dict:
        out = {k: getattr(self, k) for k in ("check", "id", "anchor", "instance", "expected", "computed", "verdict")}
        for k in ("expected", "computed"):
            if not isinstance(out[k], (bool, int, str)):
                out[k] = str(out[k])  # e.g. Unknown(k_max) prints as ">k_max"
        return out


@dataclass
class SuiteConfig:
    seed: int = 0
    heavy: bool = False
    cache_dir: str | Path | None = None
    only: tuple[int, ...] | None = None
    log: Callable[[str], None] | None = None


@dataclass
class SuiteReport:
    records: list[CheckRecord]
    seed: int
    version: str = __version__
    timings: dict[int, float] = field(default_factory=dict)

    @property
    def totals(self) -> dict[str, int]:
        passed = sum(r.verdict == PASS for r in self.records)
        return {"records": len(self.records), "pass": passed, "fail": len(self.records) - passed}

    @property
    def passed(self) -> bool:
        return all(r.verdict == PASS for r in self.records)

    def by_check(self) -> dict[int, list[CheckRecord]]:
        out: dict[int, list[CheckRecord]] = {}
        for r in self.records:
            out.setdefault(r.check, []).append(r)
        return out

    def to_json(self) -> str:
        doc = {
            "suite": "paper",
            "seed": self.seed,
            "version": self.version,
            "totals": self.totals,
            "verdict": PASS if self.passed else FAIL,
            "records": [r.row() for r in self.records],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["check", "id", "anchor", "instance", "expected", "computed", "verdict"]
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in self.records:
            w.writerow({k: _fmt(v) for k, v in r.row().items()})
        return buf.getvalue()

    def to_markdown(self) -> str:
        t = self.totals
        lines = [
            "# Theorem-reproduction report",
            "",
            f"seed {self.seed}, version {self.version}: {t['pass']}/{t['records']} records pass, "
            f"verdict **{PASS if self.passed else FAIL}**",
            "",
            "| check | id | anchor | instance | expected | computed | verdict |",
            "|---|---|---|---|---|---|---|",
        ]
        for r in self.records:
            cells = [_fmt(v).replace("|", "\\|") for v in r.row().values()]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def write(self, out: str | Path) -> Path:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.md").write_text(self.to_markdown())
        (out / "report.csv").write_text(self.to_csv())
        (out / "report.json").write_text(self.to_json())
        timings = {str(k): round(v, 3) for k, v in sorted(self.timings.items())}
        (out / "timings.json").write_text(json.dumps(timings, indent=2) + "\n")
        return out


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


class _Ctx:
    def __init__(self, check: int, anchor: str, cache: TableCache | None, seed: int):
        self.check = check
        self.anchor = anchor
        self.cache = cache
        self.seed = seed
        self.records: list[CheckRecord] = []

    def record(self, sub: str, instance: str, expected: Any, computed: Any, ok: bool | None = None) -> bool:
        if ok is None:
            ok = expected == computed
        self.records.append(CheckRecord(self.check, f"{self.check}.{sub}", self.anchor, instance,
                                        expected, computed, PASS if ok else FAIL))
        return ok

    def cop(self, g, rule, k_max):
        return cop_number(g, rule, k_max, cache=self.cache)

    def solve(self, g, k, rule):
        return solve(g, k, rule, cache=self.cache)


def _verdict(res) -> str:
    return "Verified" if res else f"Counterexample({res.reason})"


# -- checks -------------------------------------------------------------------

def check_simple_classes(ctx: _Ctx) -> None:
    rng = random.Random(ctx.seed)
    good = 0
    for i in range(20):
        t = random_tree(rng.randint(2, 10), seed=ctx.seed * 1000 + i)
        good += (ctx.cop(t, PASSIVE, 2), ctx.cop(t, FULLY_ACTIVE, 2)) == (1, 1)
    ctx.record("trees", "20 random trees, n <= 10: count with cop = acop = 1", 20, good)
    for n in range(3, 11):
        c = G.cycle(n)
        want = "1/1" if n == 3 else "2/2"
        ctx.record(f"C{n}", f"C{n}: cop/acop" + (" (complete graph exception)" if n == 3 else ""),
                   want, f"{ctx.cop(c, PASSIVE, 3)}/{ctx.cop(c, FULLY_ACTIVE, 3)}")
    for n in range(2, 7):  # K1 admits no must-move game
        k = G.complete(n)
        ctx.record(f"K{n}", f"K{n}: acop", 1, ctx.cop(k, FULLY_ACTIVE, 2))
    for m in range(2, 5):
        for n in range(m, 5):
            ctx.record(f"K{m},{n}", f"K{m},{n}: acop", 2, ctx.cop(G.complete_bipartite(m, n), FULLY_ACTIVE, 3))


def _random_graphs(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [random_connected(rng.randint(2, 7), 0.5, seed=seed * 1000 + i) for i in range(count)]


def check_cop_win(ctx: _Ctx) -> None:
    bad, copwin = [], 0
    for g in _random_graphs(ctx.seed + 2, 100):
        if ctx.cop(g, PASSIVE, 1) == 1:
            copwin += 1
            if ctx.cop(g, FULLY_ACTIVE, 1) != 1:
                bad.append(g.name)
    ctx.record("implication", f"100 random connected graphs n <= 7 ({copwin} cop-win): "
               "cop-win graphs with acop != 1", 0, len(bad))


def check_vab(ctx: _Ctx) -> None:
    for a in (2, 3):
        for b in (2, 3):
            g = G.vab_graph(a, b)
            ctx.record(f"vAB{a}{b}", f"vAB(a={a}, b={b}): cop/acop", "2/1",
                       f"{ctx.cop(g, PASSIVE, 3)}/{ctx.cop(g, FULLY_ACTIVE, 3)}")


def check_outerplanar(ctx: _Ctx) -> None:
    rng = random.Random(ctx.seed + 4)
    solver_ok = verified = 0
    worst = 0
    for i in range(50):
        n = rng.randint(3, 12)
        g, emb = random_maximal_outerplanar(n, seed=ctx.seed * 1000 + i)
        solver_ok += ctx.solve(g, 2, FULLY_ACTIVE).initial.all(axis=1).any()
        res = exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: OuterplanarCop(g, emb), round_bound=20 * n * n)
        if res:
            verified += 1
            worst = max(worst, res.worst_rounds)
    ctx.record("solver", "50 random maximal outerplanar graphs n <= 12: count with acop <= 2", 50, solver_ok)
    ctx.record("strategy", f"same 50 graphs: outerplanar strategy Verified, bound 20n^2 (worst {worst} rounds)",
               50, verified)


def check_sandwich(ctx: _Ctx) -> None:
    inside = 0
    sample = []
    for g in _random_graphs(ctx.seed + 5, 100):
        c = ctx.cop(g, PASSIVE, 7)
        a = ctx.cop(g, FULLY_ACTIVE, 2 * c)
        inside += isinstance(a, int) and c - 1 <= a <= 2 * c
        if len(sample) < 10 and g.n >= 3:
            sample.append((g, c, a))
    ctx.record("bounds", "100 random connected graphs n <= 7: count with cop-1 <= acop <= 2cop", 100, inside)
    dbl = shd = 0
    for g, c, a in sample:
        tp = ctx.solve(g, c, PASSIVE)
        dbl += bool(exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: DoublingAdapter(OptimalCop(tp)),
                                          check_determinism=True))
        tf = ctx.solve(g, a, FULLY_ACTIVE)
        shd += bool(exhaustive_verify_cop(g, PASSIVE, lambda: ShadowPassiveAdapter(OptimalCop(tf)),
                                          check_determinism=True))
    ctx.record("doubling", "10 of these: 2cop fully-active cops via doubling adapter Verified", 10, dbl)
    ctx.record("shadow", "10 of these: acop+1 passive cops via shadow adapter Verified", 10, shd)


def check_blowup(ctx: _Ctx) -> None:
    K2 = G.complete(2)
    g = G.blowup(G.hypercube(3), 4)
    ctx.record("a", "4-blowup of Q3 (32 vertices): passive cop number", 2, ctx.cop(g, PASSIVE, 3))
    lose = not ctx.solve(g, 3, FULLY_ACTIVE).initial.all(axis=1).any()
    ctx.record("b-solver", "same graph: 3 fully-active cops lose from every placement", True, bool(lose))
    res = exhaustive_verify_robber(g, FULLY_ACTIVE, 3, lambda: BlowupRobber((K2, K2, K2), 4))
    ctx.record("b-robber", "same graph: blowup robber vs 3 fully-active cops", "Verified", _verdict(res))
    tp = ctx.solve(g, 2, PASSIVE)
    res = exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: DoublingAdapter(OptimalCop(tp)), check_determinism=True)
    ctx.record("c", "same graph: doubling adapter with 4 fully-active cops", "Verified", _verdict(res))


def check_hypercubes(ctx: _Ctx) -> None:
    for n in range(1, 5):
        want = ceil(2 * n / 3)
        ctx.record(f"Q{n}", f"Q{n}: acop = ceil(2n/3)", want, ctx.cop(G.hypercube(n), FULLY_ACTIVE, want + 1))


def check_tree_products(ctx: _Ctx) -> None:
    P3, P4, K2 = G.path(3), G.path(4), G.complete(2)
    for label, fs in (("P3xP3", (P3, P3)), ("P3xP4", (P3, P4)), ("K2xK2xP3", (K2, K2, P3))):
        want = ceil(2 * len(fs) / 3)
        g = G.cartesian_product(fs)
        ctx.record(f"{label}-acop", f"{label}: acop = ceil(2k/3)", want, ctx.cop(g, FULLY_ACTIVE, want + 1))
        res = exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: TreeProductCop(fs), check_determinism=True)
        ctx.record(f"{label}-cops", f"{label}: tree-product cops with {want} cops", "Verified", _verdict(res))
        res = exhaustive_verify_robber(g, FULLY_ACTIVE, want - 1, lambda: TreeProductRobber(fs))
        ctx.record(f"{label}-robber", f"{label}: tree-product robber vs {want - 1} cops", "Verified", _verdict(res))


def check_same_partite(ctx: _Ctx) -> None:
    for g in (G.cycle(4), G.cycle(6), G.hypercube(3)):
        k = ctx.cop(g, PASSIVE, 4)
        t = ctx.solve(g, k, PASSIVE)
        configs = verified = 0
        for side, other in zip(G.bipartition(g), reversed(G.bipartition(g))):
            for cops in combinations_with_replacement(sorted(side), k):
                configs += 1
                res = exhaustive_verify_cop(
                    g, FULLY_ACTIVE, lambda: SamePartiteAdapter(OptimalCop(t, cops)),
                    robber_placements=sorted(other), check_determinism=True)
                verified += bool(res)
        ctx.record(g.name, f"{g.name}, k = cop = {k}: configurations with all cops on the side "
                   f"opposite the robber that verify ({configs} total)", configs, verified)
    g = G.hypercube(3)
    t = ctx.solve(g, 2, FULLY_ACTIVE)
    x, _ = G.bipartition(g)
    refuted = any(not t.start_wins(cops, r) for cops in combinations_with_replacement(sorted(x), 2)
                  for r in sorted(x) if r not in cops)
    ctx.record("Q3-same-side", "Q3, 2 fully-active cops: some same-side start is a robber win "
               "(same side at placement is not enough)", True, refuted)


def check_covering(ctx: _Ctx) -> None:
    for lengths, label in (((3,), "C6->C3"), ((3, 3), "C6xC6->C3xC3")):
        cv = doubled_cycle_cover(lengths)
        ctx.record(f"{label}-valid", f"{label}: validate_covering", "ok", validate_covering(cv) or "ok")
        k = ctx.cop(cv.source, FULLY_ACTIVE, 4)
        t = ctx.solve(cv.source, k, FULLY_ACTIVE)
        res = exhaustive_verify_cop(cv.target, FULLY_ACTIVE, lambda: CoverLiftAdapter(cv, OptimalCop(t)),
                                    check_determinism=True)
        ctx.record(f"{label}-lift", f"{label}: lifted optimal strategy with {k} cops", "Verified", _verdict(res))


def check_odd_products(ctx: _Ctx) -> None:
    for lengths, label in (((3, 3), "C3xC3"), ((3, 4), "C3xC4")):
        g = G.cartesian_product([G.cycle(n) for n in lengths])
        wins = ctx.solve(g, 3, FULLY_ACTIVE).initial.all(axis=1).any()
        ctx.record(f"{label}-solver", f"{label}: acop <= 3", True, bool(wins))
        proto = odd_cycle_product_strategy(lengths, cache=ctx.cache)
        res = exhaustive_verify_cop(proto.graph, FULLY_ACTIVE, proto.clone, check_determinism=True)
        ctx.record(f"{label}-strategy", f"{label}: doubled-cover strategy with 3 cops", "Verified", _verdict(res))


def check_even_products(ctx: _Ctx) -> None:
    for n in (4, 6):
        a = ctx.cop(G.cycle(n), FULLY_ACTIVE, 3)
        ctx.record(f"C{n}", f"C{n}: acop, inside [ceil(4/3), ceil(8/3)] = [2, 3]", 2, a)
    g = G.cartesian_product([G.cycle(4), G.cycle(4)])
    a = ctx.cop(g, FULLY_ACTIVE, 5)
    ctx.record("C4xC4", f"C4xC4: acop (solver-derived value {a}) inside [3, 4]", "in [3, 4]",
               a, ok=isinstance(a, int) and 3 <= a <= 4)


def check_hypothesis(ctx: _Ctx) -> None:
    for g in (G.cycle(5), G.complete(3)):
        a = ctx.cop(g, FULLY_ACTIVE, 3)
        ctx.record(g.name, f"{g.name}: cops win from all placements at k = acop = {a}", True,
                   bool(wins_from_all_placements(g, a, FULLY_ACTIVE, cache=ctx.cache)))
    g = G.cartesian_product([G.complete(2), G.cycle(4)])
    ctx.record("K2xC4", "K2xC4: acop", 2, ctx.cop(g, FULLY_ACTIVE, 3))


def check_oracle(ctx: _Ctx) -> None:
    states = mismatches = 0
    for g in _random_graphs(ctx.seed + 14, 25):
        for rule in ALL_RULES:
            for k in (1, 2):
                table = solve(g, k, rule)
                sp = table.space
                cop_turn, robber_turn = joint_solve(g, k, rule)
                for (cops, r), win in cop_turn.items():
                    states += 1
                    mismatches += table.is_cop_win(sp.round_start(cops, r)) != win
                for (cops, r), win in robber_turn.items():
                    states += 1
                    mismatches += table.is_cop_win(sp.robber_index(cops, r)) != win
    ctx.record("joint-states", f"25 random connected graphs n <= 7, 4 rules, k <= 2 ({states} joint states): "
               "micro-move vs naive mismatches", 0, mismatches)


CHECKS: dict[int, tuple[str, Callable[[_Ctx], None], bool]] = {
    1: ('Prop., "If $T$ is a tree"', check_simple_classes, False),
    2: ('Prop., "cop-win graphs in the passive setting"', check_cop_win, False),
    3: ('Prop., "adjacent to all vertices in $A$"', check_vab, False),
    4: ('Thm., "then $\\acop(G) \\leq 2$"', check_outerplanar, False),
    5: ('Thm., "on some vertex adjacent to"', check_sandwich, False),
    6: ('Thm., "whenever $t \\ge 2k$"', check_blowup, True),
    7: ('Thm., "played on the hypercube"', check_hypercubes, False),
    8: ('Thm., "either one or two"', check_tree_products, False),
    9: ('Lemma, "the same partite set of $G$"', check_same_partite, False),
    10: ('Lemma, "guide their play on $G$"', check_covering, False),
    11: ('Thm., "any of the $n_i$ is odd"', check_odd_products, False),
    12: ('Thm., "Out of the $4\\ell+2$ cops"', check_even_products, False),
    13: ('Thm., "regardless of their initial positions"', check_hypothesis, False),
    14: ("engine oracle: micro-move solver vs naive joint-move solver", check_oracle, False),
}


def run_check(cid: int, seed: int = 0, cache: TableCache | None = None) -> tuple[list[CheckRecord], float]:
    anchor, fn, _ = CHECKS[cid]
    ctx = _Ctx(cid, anchor, cache, seed)
    t0 = time.perf_counter()
    try:
        fn(ctx)
    except Exception as exc:  # a crashing check is a FAIL, and the suite moves on
        last = traceback.extract_tb(exc.__traceback__)[-1]
        ctx.record("error", f"check raised at {Path(last.filename).name}:{last.lineno}", "no error",
                   f"{type(exc).__name__}: {exc}", ok=False)
    elapsed = time.perf_counter() - t0
    for r in ctx.records:
        r.runtime = elapsed
    return ctx.records, elapsed


def run_paper_suite(config: SuiteConfig | None = None) -> SuiteReport:
    config = config or SuiteConfig()
    cache = TableCache(config.cache_dir) if config.cache_dir is not None else None
    report = SuiteReport([], config.seed)
    for cid, (_, _, heavy) in CHECKS.items():
        if config.only is not None and cid not in config.only:
            continue
        if heavy and not config.heavy and config.only is None:
            continue
        records, elapsed = run_check(cid, config.seed, cache)
        report.records.extend(records)
        report.timings[cid] = elapsed
        if config.log:
            status = PASS if all(r.verdict == PASS for r in records) else FAIL
            config.log(f"check {cid:2d}: {status} ({len(records)} records, {elapsed:.1f}s)")
    return report
