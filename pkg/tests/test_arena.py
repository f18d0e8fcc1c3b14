import json
from itertools import combinations_with_replacement

import pytest

from plab import graphs as G
from plab.arena import (
    CAPTURE,
    CYCLE_PROVEN,
    INVALID,
    SURVIVED,
    DeterminismFault,
    exhaustive_verify_cop,
    exhaustive_verify_robber,
    play,
)
from plab.generators import random_connected
from plab.rules import ALL_RULES, FULLY_ACTIVE, PASSIVE
from plab.solver import solve
from plab.space import multiset_rank
from plab.strategies import CopController, OptimalCop, OptimalRobber, RobberController, StrategyError


class Chaser(CopController):
    """One cop that captures when adjacent and otherwise walks to its lowest neighbor."""

    name = "chaser"
    _mutable = ("pos",)
    k = 1

    def __init__(self, g, start=0):
        self.graph, self.rule, self.start = g, FULLY_ACTIVE, start

    def place(self):
        self.pos = (self.start,)
        return self.pos

    def move(self, robber):
        self.pos = (robber if self.graph.has_edge(self.pos[0], robber) else self.graph.adj[self.pos[0]][0],)
        return self.pos

    def memo_key(self):
        return self.pos


class Flaky(Chaser):
    """Waits once if the robber started on an odd vertex, but leaves that start out of its memo key."""

    name = "flaky"
    _mutable = ("pos", "calls", "first")

    def place(self):
        self.calls, self.first = 0, None
        return super().place()

    def move(self, robber):
        if self.first is None:
            self.first = robber
        self.calls += 1
        c = self.pos[0]
        if self.graph.has_edge(c, robber):
            self.pos = (robber,)
        elif not (self.first % 2 and self.calls == 2):
            self.pos = (self.graph.step_toward(c, robber),)
        return self.pos

    def memo_key(self):
        return (self.pos, self.calls)


class Sitter(RobberController):
    name = "sitter"

    def __init__(self, g):
        self.graph = g

    def place(self, cops):
        return max(set(range(self.graph.n)) - set(cops))

    def move(self, cops):
        raise StrategyError("sitter refuses to move")

    def memo_key(self):
        return None


def test_play_optimal_capture():
    g = G.path(3)
    t = solve(g, 1, PASSIVE)
    tr = play(g, PASSIVE, OptimalCop(t), OptimalRobber(t), 50)
    assert tr.outcome == CAPTURE and tr.captured
    assert 1 <= tr.outcome_round <= 2
    json.dumps(tr.to_json())


def test_play_c4_survives():
    g = G.cycle(4)
    t = solve(g, 1, FULLY_ACTIVE)
    tr = play(g, FULLY_ACTIVE, OptimalCop(t), OptimalRobber(t), 30)
    assert tr.outcome == SURVIVED and tr.outcome_round == 30


def test_placement_on_a_cop_is_capture_at_round_zero():
    class Suicidal(Sitter):
        def place(self, cops):
            return cops[0]

    g = G.cycle(5)
    tr = play(g, FULLY_ACTIVE, Chaser(g), Suicidal(g), 10)
    assert tr.outcome == CAPTURE and tr.outcome_round == 0


def test_illegal_robber_move_is_invalid():
    class Teleporter(Sitter):
        def move(self, cops):
            return (self.place(cops) + 3) % self.graph.n

    g = G.cycle(8)
    tr = play(g, FULLY_ACTIVE, Chaser(g, start=4), Teleporter(g), 10)
    assert tr.outcome == INVALID and tr.culprit == "robber"


@pytest.mark.parametrize("seed", range(4))
def test_arena_agrees_with_solver(seed):
    g = random_connected(5 + seed % 2, 0.45, seed)
    for rule in ALL_RULES:
        for k in (1, 2):
            t = solve(g, k, rule)
            for cops in combinations_with_replacement(range(g.n), k):
                row = t.initial[multiset_rank(cops)]
                for r in range(g.n):
                    if r in cops:
                        continue
                    res = exhaustive_verify_cop(g, rule, lambda: OptimalCop(t, cops), robber_placements=[r])
                    assert bool(res) == bool(row[r]), (rule, k, cops, r)
                rob = exhaustive_verify_robber(g, rule, k, lambda: OptimalRobber(t), cop_placements=[cops])
                assert bool(rob) == (not row.all()), (rule, k, cops)


def test_memo_does_not_change_verdicts():
    for g, k, rule in [(G.petersen(), 3, PASSIVE), (G.cycle(5), 2, FULLY_ACTIVE), (G.cycle(6), 1, FULLY_ACTIVE)]:
        t = solve(g, k, rule)
        a = exhaustive_verify_cop(g, rule, lambda: OptimalCop(t), memo=True)
        b = exhaustive_verify_cop(g, rule, lambda: OptimalCop(t), memo=False)
        assert bool(a) == bool(b)
        if a:
            assert a.worst_rounds == b.worst_rounds


def test_cycle_counterexample_replays_legally(tmp_path):
    g = G.cycle(4)
    res = exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: Chaser(g), artifacts_dir=tmp_path)
    assert not res
    tr = res.transcript
    assert tr.outcome == CYCLE_PROVEN
    cops, r = tr.cop_placement, tr.robber_placement
    for new, r2 in tr.rounds:
        assert FULLY_ACTIVE.legal_cop_round(g, cops, new)
        assert r not in new
        if r2 is not None:
            assert FULLY_ACTIVE.legal_robber_move(g, r, r2)
            cops, r = new, r2
    saved = list(tmp_path.glob("*.json"))
    assert saved and json.loads(saved[0].read_text())["outcome"] == CYCLE_PROVEN


def test_round_bound_gives_survived():
    g = G.path(6)
    t = solve(g, 1, PASSIVE)
    res = exhaustive_verify_cop(g, PASSIVE, lambda: OptimalCop(t, (0,)), round_bound=2)
    assert not res and res.transcript.outcome == SURVIVED
    assert exhaustive_verify_cop(g, PASSIVE, lambda: OptimalCop(t, (0,)), round_bound=10)


def test_determinism_fault_detected():
    g = G.path(7)
    assert exhaustive_verify_cop(g, PASSIVE, lambda: Flaky(g))  # it does win
    with pytest.raises(DeterminismFault):
        exhaustive_verify_cop(g, PASSIVE, lambda: Flaky(g), check_determinism=True)


def test_robber_strategy_error_is_a_counterexample():
    g = G.cycle(6)
    res = exhaustive_verify_robber(g, FULLY_ACTIVE, 1, lambda: Sitter(g))
    assert not res
    assert res.transcript.outcome == INVALID and res.transcript.culprit == "robber"


def test_verify_robber_on_even_cycle():
    g = G.cycle(6)
    t = solve(g, 1, FULLY_ACTIVE)
    assert exhaustive_verify_robber(g, FULLY_ACTIVE, 1, lambda: OptimalRobber(t))
    t2 = solve(g, 2, FULLY_ACTIVE)
    res = exhaustive_verify_robber(g, FULLY_ACTIVE, 2, lambda: OptimalRobber(t2))
    assert not res and res.transcript.outcome == CAPTURE
