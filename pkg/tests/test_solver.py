import os

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from plab import graphs as G
from plab.cache import TableCache, decode_table, default_cache_dir, encode_table
from plab.graphs import Graph
from plab.naive import joint_solve
from plab.rules import ACTIVE, ALL_RULES, FULLY_ACTIVE, LAZY, PASSIVE, parse_rule
from plab.solver import SolverError, Unknown, cop_number, solve, wins_from_all_placements
from plab.space import multiset_rank, multiset_unrank


def agree_with_naive(g, k, rule):
    table = solve(g, k, rule)
    sp = table.space
    cop_turn, robber_turn = joint_solve(g, k, rule)
    for (cops, r), win in cop_turn.items():
        assert table.is_cop_win(sp.round_start(cops, r)) == win, (g, k, rule, cops, r)
    for (cops, r), win in robber_turn.items():
        assert table.is_cop_win(sp.robber_index(cops, r)) == win, (g, k, rule, cops, r)


@pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.name)
@pytest.mark.parametrize("k", [1, 2])
def test_matches_naive_oracle(small_graphs, rule, k):
    for g in small_graphs:
        agree_with_naive(g, k, rule)


@pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.name)
def test_matches_naive_three_cops(rule):
    for g in (G.cycle(5), G.path(4), G.complete_bipartite(2, 2)):
        agree_with_naive(g, 3, rule)


edge_lists = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=n - 1, max_size=15),
    )
)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(edge_lists, st.sampled_from(ALL_RULES))
def test_naive_agreement_property(data, rule):
    n, pairs = data
    edges = [(i, i + 1) for i in range(n - 1)] + [(u, v) for u, v in pairs if u != v]
    g = Graph.from_edges(n, edges)
    agree_with_naive(g, 1, rule)


@pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.name)
def test_capture_times_are_consistent(rule):
    g = G.cycle(5)
    table = solve(g, 2, rule)
    sp = table.space
    for idx in range(sp.total):
        t = table.capture_time(idx)
        assert (t is not None) == table.is_cop_win(idx)
        if t is None:
            continue
        if sp.is_capture(idx):
            assert t == 0
            continue
        succ = [table.capture_time(s) for s in sp.successors(idx)]
        if sp.decode(idx)[0] == "robber":
            assert None not in succ and t == 1 + max(succ)
        else:
            assert t == 1 + min(s for s in succ if s is not None)


def test_deterministic_tables():
    g = G.petersen()
    a, b = solve(g, 2, FULLY_ACTIVE), solve(g, 2, FULLY_ACTIVE)
    assert a == b
    assert np.array_equal(a.status, b.status) and np.array_equal(a.ctime, b.ctime)


@pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.name)
def test_more_cops_never_hurt(small_graphs, rule):
    for g in small_graphs[:6]:
        wins = [bool(solve(g, k, rule).initial.all(axis=1).any()) for k in (1, 2, 3)]
        assert wins == sorted(wins)


def test_known_cop_numbers():
    assert cop_number(G.petersen(), PASSIVE, 4) == 3
    assert cop_number(G.cycle(4), FULLY_ACTIVE, 3) == 2
    assert cop_number(G.cycle(4), PASSIVE, 3) == 2
    assert cop_number(G.complete(4), LAZY, 2) == 1
    assert cop_number(G.path(5), ACTIVE, 2) == 1
    assert isinstance(cop_number(G.cycle(6), FULLY_ACTIVE, 1), Unknown)
    assert str(Unknown(1)) == ">1"


def test_single_fully_active_cop_on_a_cycle_has_no_winning_placement():
    table = solve(G.cycle(6), 1, FULLY_ACTIVE)
    assert not table.initial.all(axis=1).any()
    assert table.winning_placements() == []
    assert wins_from_all_placements(G.cycle(5), 2, FULLY_ACTIVE)


def test_input_validation():
    with pytest.raises(SolverError):
        solve(G.cycle(4), 0, PASSIVE)
    with pytest.raises(SolverError):
        solve(Graph.from_edges(4, [(0, 1), (2, 3)]), 1, PASSIVE)
    with pytest.raises(SolverError):
        solve(G.complete(1), 1, FULLY_ACTIVE)
    with pytest.raises(ValueError):
        parse_rule("sleepy")


def test_multiset_rank_round_trip():
    n, k = 5, 3
    ranks = set()
    for r in range(35):
        ms = multiset_unrank(r, k, n)
        assert list(ms) == sorted(ms)
        assert multiset_rank(ms) == r
        ranks.add(ms)
    assert len(ranks) == 35


def test_cache_round_trip(tmp_path):
    cache = TableCache(tmp_path)
    g = G.hypercube(3)
    a = solve(g, 2, FULLY_ACTIVE, cache)
    assert len(cache.entries()) == 1
    b = solve(g, 2, FULLY_ACTIVE, cache)
    assert a == b
    assert decode_table(encode_table(a), g) == a
    assert cache.clear() == 1 and cache.entries() == []


def test_corrupt_cache_entry_is_recomputed(tmp_path):
    cache = TableCache(tmp_path)
    g = G.cycle(5)
    a = solve(g, 1, PASSIVE, cache)
    p = cache.path_for(g, 1, PASSIVE)
    p.write_bytes(p.read_bytes()[:20])
    assert cache.get(g, 1, PASSIVE) is None
    assert solve(g, 1, PASSIVE, cache) == a


def test_cache_dir_precedence(monkeypatch, tmp_path):
    monkeypatch.setenv("PLAB_CACHE_DIR", str(tmp_path / "env"))
    assert default_cache_dir() == tmp_path / "env"
    assert default_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"
    monkeypatch.delenv("PLAB_CACHE_DIR")
    assert os.path.normpath(default_cache_dir()) == "plab-cache"
