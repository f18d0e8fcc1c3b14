"""Play games between controllers and verify controllers against every opponent.

Rounds are counted from 1; a capture during the cops' placement or the
robber's placement is round 0.  A round is one cop turn followed by one
robber move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .graphs import Graph
from .rules import MovementRule
from .strategies.base import CopController, RobberController, StrategyError

CAPTURE = "CAPTURE"
SURVIVED = "SURVIVED"
CYCLE_PROVEN = "CYCLE_PROVEN"
INVALID = "INVALID"


class DeterminismFault(RuntimeError):
    """Equal memo keys produced different behaviour."""


@dataclass
class Transcript:
    graph: str
    rule: str
    k: int
    cop_placement: tuple[int, ...]
    robber_placement: int
    rounds: list[tuple[tuple[int, ...], int | None]] = field(default_factory=list)
    outcome: str = SURVIVED
    outcome_round: int | None = None
    culprit: str | None = None
    controllers: tuple[str, str] = ("", "")
    seed: int | None = None

    @property
    def captured(self) -> bool:
        return self.outcome == CAPTURE

    def final_positions(self) -> tuple[tuple[int, ...], int]:
        if not self.rounds:
            return self.cop_placement, self.robber_placement
        cops, r = self.rounds[-1]
        if r is None:
            r = self.rounds[-2][1] if len(self.rounds) > 1 else self.robber_placement
        return cops, r

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "rule": self.rule,
            "k": self.k,
            "cop_placement": list(self.cop_placement),
            "robber_placement": self.robber_placement,
            "rounds": [{"cops": list(c), "robber": r} for c, r in self.rounds],
            "outcome": self.outcome,
            "outcome_round": self.outcome_round,
            "culprit": self.culprit,
            "controllers": list(self.controllers),
            "seed": self.seed,
        }

    def save(self, directory: str | Path, stem: str) -> Path:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        p = d / f"{stem}.json"
        p.write_text(json.dumps(self.to_json(), indent=1))
        return p


def _graph_id(g: Graph) -> str:
    return g.name or g.digest[:12]


def play(
    g: Graph,
    rule: MovementRule,
    cops: CopController,
    robber: RobberController,
    round_bound: int,
) -> Transcript:
    start = tuple(cops.place())
    tr = Transcript(_graph_id(g), rule.name, len(start), start, -1,
                    controllers=(cops.name, robber.name))
    if any(not 0 <= c < g.n for c in start):
        tr.outcome, tr.culprit = INVALID, "cops"
        return tr
    r = robber.place(tuple(sorted(start)))
    tr.robber_placement = r
    if not 0 <= r < g.n:
        tr.outcome, tr.culprit = INVALID, "robber"
        return tr
    if r in start:
        tr.outcome, tr.outcome_round = CAPTURE, 0
        return tr
    pos = start
    for rnd in range(1, round_bound + 1):
        new = tuple(cops.move(r))
        if not rule.legal_cop_round(g, pos, new):
            tr.rounds.append((new, None))
            tr.outcome, tr.culprit, tr.outcome_round = INVALID, "cops", rnd
            return tr
        pos = new
        if r in pos:
            tr.rounds.append((pos, None))
            tr.outcome, tr.outcome_round = CAPTURE, rnd
            return tr
        r2 = robber.move(tuple(sorted(pos)))
        tr.rounds.append((pos, r2))
        if not rule.legal_robber_move(g, r, r2):
            tr.outcome, tr.culprit, tr.outcome_round = INVALID, "robber", rnd
            return tr
        r = r2
        if r in pos:
            tr.outcome, tr.outcome_round = CAPTURE, rnd
            return tr
    tr.outcome, tr.outcome_round = SURVIVED, round_bound
    return tr


# -- exhaustive verification -----------------------------------------------------


@dataclass
class Verified:
    worst_rounds: int | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return True


@dataclass
class Counterexample:
    transcript: Transcript
    reason: str
    nodes: int = 0

    def __bool__(self) -> bool:
        return False


Captured = Counterexample


class _Abort(Exception):
    def __init__(self, reason: str, path, outcome: str, culprit: str | None = None):
        self.reason, self.path, self.outcome, self.culprit = reason, path, outcome, culprit


def exhaustive_verify_cop(
    g: Graph,
    rule: MovementRule,
    factory: Callable[[], CopController],
    round_bound: int | None = None,
    robber_placements: Iterable[int] | None = None,
    memo: bool = True,
    check_determinism: bool = False,
    artifacts_dir: str | Path | None = None,
) -> Verified | Counterexample:
    """Check that the cop controller captures every robber within ``round_bound`` rounds.

    Depth-first over all robber placements and moves.  A node is a cop turn
    ``(controller memo key, cops, robber)``; its value is the worst-case
    number of rounds until capture.  Meeting a node that is already on the
    current branch means the robber can repeat positions forever.
    """
    bound = 20 * g.n * g.n if round_bound is None else round_bound
    root = factory()
    start = tuple(root.place())
    k = len(start)
    names = (root.name, "adversary")
    placements = range(g.n) if robber_placements is None else list(robber_placements)
    table: dict = {}
    nodes = 0
    worst = 0

    def expand(ctrl, cops, r):
        try:
            new = tuple(ctrl.move(r))
        except StrategyError as exc:
            raise _Abort(f"cop controller fault: {exc}", None, INVALID, "cops") from exc
        if not rule.legal_cop_round(g, cops, new):
            raise _Abort(f"illegal cop turn {cops} -> {new}", (new, None), INVALID, "cops")
        if r in new:
            return 1
        val = 0
        for r2 in rule.robber_moves(g, r):
            sub = 1 if r2 in new else 1 + (yield (ctrl.clone(), new, r2))
            val = max(val, sub)
        return val

    def run(r0):
        nonlocal nodes
        stack: list = []  # [generator, key, probe]
        on_stack: set = set()

        def enter(ctrl, cops, r):
            nonlocal nodes
            key = (ctrl.memo_key(), cops, r)
            if key in on_stack:
                raise _Abort("robber can repeat a position forever", (cops, r), CYCLE_PROVEN)
            if memo and key in table:
                val, out = table[key]
                if out is not None:
                    again = tuple(ctrl.clone().move(r))
                    if again != out:
                        raise DeterminismFault(f"memo key {key!r}: moved to {out} and to {again}")
                return val
            if len(stack) >= bound:
                raise _Abort(f"no capture within {bound} rounds", (cops, r), SURVIVED)
            nodes += 1
            probe = ctrl.clone() if check_determinism else None
            stack.append([expand(ctrl, cops, r), key, probe])
            on_stack.add(key)
            return None

        try:
            send = enter(root.clone(), start, r0)
            if send is not None:
                return send
            while stack:
                frame = stack[-1]
                try:
                    child = frame[0].send(send)
                except StopIteration as stop:
                    stack.pop()
                    _, key, probe = frame
                    on_stack.discard(key)
                    send = stop.value
                    if memo:
                        out = tuple(probe.move(key[2])) if probe is not None else None
                        table[key] = (send, out)
                    continue
                send = enter(*child)
            return send
        except _Abort as ab:
            # frame i+1 starts from the position reached at the end of round i+1
            rounds = [(key[1], key[2]) for _, key, _ in stack[1:]]
            if ab.path is not None:
                rounds.append(ab.path)
            ab.path = Transcript(_graph_id(g), rule.name, k, start, r0, rounds=rounds,
                                 outcome=ab.outcome, outcome_round=len(rounds),
                                 culprit=ab.culprit, controllers=names)
            raise

    for r0 in placements:
        if r0 in start:
            continue
        try:
            val = run(r0)
        except _Abort as ab:
            if artifacts_dir is not None:
                ab.path.save(artifacts_dir, f"counterexample-{_graph_id(g)}-{root.name}")
            return Counterexample(ab.path, ab.reason, nodes)
        worst = max(worst, val)
    return Verified(worst, nodes)


def exhaustive_verify_robber(
    g: Graph,
    rule: MovementRule,
    k: int,
    factory: Callable[[], RobberController],
    cop_placements: Iterable[Sequence[int]] | None = None,
    artifacts_dir: str | Path | None = None,
) -> Verified | Counterexample:
    """Check that the robber controller is never caught, over all cop behaviours.

    Cop turns are enumerated as full joint moves (every legal combination,
    deduplicated as multisets, in lexicographic order).
    """
    placements = (
        list(combinations_with_replacement(range(g.n), k))
        if cop_placements is None
        else [tuple(sorted(c)) for c in cop_placements]
    )
    joint_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def joint(cops):
        got = joint_cache.get(cops)
        if got is None:
            got = sorted({tuple(sorted(c)) for c in rule.cop_rounds(g, cops)})
            joint_cache[cops] = got
        return got

    seen: set = set()
    # the robber's reply depends only on (memo key, cops, robber vertex)
    moves: dict = {}
    nodes = 0
    name = "robber"
    for start in placements:
        robber = factory()
        name = robber.name
        names = ("adversary", name)
        try:
            r0 = robber.place(start)
        except StrategyError as exc:
            tr = Transcript(_graph_id(g), rule.name, k, start, -1, outcome=INVALID,
                            culprit="robber", controllers=names)
            return Counterexample(tr, f"robber controller fault: {exc}", nodes)
        if not 0 <= r0 < g.n:
            tr = Transcript(_graph_id(g), rule.name, k, start, r0, outcome=INVALID,
                            culprit="robber", controllers=names)
            return Counterexample(tr, f"robber placed off the graph at {r0}", nodes)
        if r0 in start:
            tr = Transcript(_graph_id(g), rule.name, k, start, r0, outcome=CAPTURE,
                            outcome_round=0, controllers=names)
            return Counterexample(tr, "robber placed on a cop", nodes)
        key0 = (robber.memo_key(), start, r0)
        if key0 in seen:
            continue
        seen.add(key0)
        parent = {key0: None}
        stack = [(robber, start, r0, key0)]
        while stack:
            ctrl, cops, r, key = stack.pop()
            nodes += 1
            for out in joint(cops):
                caught = r in out
                child_key = None
                if not caught:
                    mkey = (key[0], out, r)
                    hit = moves.get(mkey)
                    if hit is not None:
                        r2, c = hit
                    else:
                        c = ctrl.clone()
                        try:
                            r2 = c.move(out)
                        except StrategyError as exc:
                            tr = _trace(g, rule, k, names, parent, key, (out, None), INVALID)
                            tr.culprit = "robber"
                            return Counterexample(tr, f"robber controller fault: {exc}", nodes)
                        moves[mkey] = (r2, c)
                    if not rule.legal_robber_move(g, r, r2):
                        tr = _trace(g, rule, k, names, parent, key, (out, r2), INVALID)
                        tr.culprit = "robber"
                        return Counterexample(tr, f"illegal robber move {r}->{r2}", nodes)
                    caught = r2 in out
                    child_key = (c.memo_key(), out, r2)
                if caught:
                    last = (out, None) if r in out else (out, r2)
                    tr = _trace(g, rule, k, names, parent, key, last, CAPTURE)
                    if artifacts_dir is not None:
                        tr.save(artifacts_dir, f"captured-{_graph_id(g)}-{name}")
                    return Counterexample(tr, "robber captured", nodes)
                if child_key not in seen:
                    seen.add(child_key)
                    parent[child_key] = (key, out, r2)
                    stack.append((c, out, r2, child_key))
    return Verified(None, nodes)


def _trace(g, rule, k, names, parent, key, last, outcome) -> Transcript:
    rounds = [last]
    cur = key
    while parent.get(cur) is not None:
        prev, out, r2 = parent[cur]
        rounds.append((out, r2))
        cur = prev
    _, start, r0 = cur
    rounds.reverse()
    tr = Transcript(_graph_id(g), rule.name, k, start, r0, rounds=rounds, outcome=outcome,
                    outcome_round=len(rounds), controllers=names)
    return tr
