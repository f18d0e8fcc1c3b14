import random
from itertools import combinations_with_replacement

import pytest

from plab import graphs as G
from plab.arena import exhaustive_verify_cop, exhaustive_verify_robber, play
from plab.covering import doubled_cycle_cover, identity_cover
from plab.generators import random_maximal_outerplanar, random_tree
from plab.graphs import Graph
from plab.rules import FULLY_ACTIVE, LAZY, PASSIVE
from plab.solver import cop_number, solve
from plab.strategies import (
    BlowupRobber,
    CoverLiftAdapter,
    DoublingAdapter,
    OptimalCop,
    OuterplanarCop,
    SamePartiteAdapter,
    ShadowPassiveAdapter,
    StrategyError,
    TreePairCop,
    TreeProductCop,
    TreeProductRobber,
    odd_cycle_product_strategy,
)
from plab.strategies.blowup import counting_bound
from plab.strategies.trees import inactive_assignment, tree_product_cops

K2, P3, P4 = G.complete(2), G.path(3), G.path(4)


def verify(g, factory, rule=FULLY_ACTIVE, **kw):
    return exhaustive_verify_cop(g, rule, factory, check_determinism=True, **kw)


# -- outerplanar ---------------------------------------------------------------


def glued_outerplanar(seed):
    """Outerplanar blocks (edges, or maximal outerplanar minus some chords) glued at cut vertices."""
    rng = random.Random(seed)
    edges, n = [], 0
    for _ in range(rng.randint(1, 4)):
        size = 2 if rng.random() < 0.25 else rng.randint(3, 7)
        if size == 2:
            block = [(0, 1)]
        else:
            h, emb = random_maximal_outerplanar(size, rng.randrange(10**6))
            ring = emb.cycle_edges()
            block = [e for e in h.edges() if e in ring or rng.random() < 0.4]
        if n == 0:
            ids, n = list(range(size)), size
        else:
            ids = [rng.randrange(n)] + list(range(n, n + size - 1))
            n += size - 1
        edges += [(ids[u], ids[v]) for u, v in block]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges], name=f"glued{seed}")


@pytest.mark.parametrize("seed", range(12))
def test_outerplanar_maximal(seed):
    g, emb = random_maximal_outerplanar(5 + seed % 8, seed)
    res = verify(g, lambda: OuterplanarCop(g, emb), round_bound=20 * g.n**2)
    assert res, res.reason


@pytest.mark.parametrize("seed", range(40))
def test_outerplanar_with_cut_vertices(seed):
    g = glued_outerplanar(seed)
    if g.n < 2:
        pytest.skip("single vertex")
    res = verify(g, lambda: OuterplanarCop(g))
    assert res, res.reason


@pytest.mark.parametrize("g", [G.cycle(7), G.path(6), random_tree(9, 3), G.petersen()], ids=str)
def test_outerplanar_special_cases(g):
    if g.name == "Petersen":
        with pytest.raises(StrategyError):
            OuterplanarCop(g)
        return
    assert verify(g, lambda: OuterplanarCop(g))


def test_outerplanar_rejects_lazy_rule():
    with pytest.raises(StrategyError):
        OuterplanarCop(G.cycle(5), rule=LAZY)


# -- adapters -------------------------------------------------------------------


@pytest.mark.parametrize("g", [G.path(4), G.cycle(5), G.petersen(), G.hypercube(3)], ids=str)
def test_doubling_adapter(g):
    t = solve(g, cop_number(g, PASSIVE, 3), PASSIVE)
    ctrl = DoublingAdapter(OptimalCop(t))
    assert ctrl.k == 2 * t.k
    assert verify(g, lambda: DoublingAdapter(OptimalCop(t)))


@pytest.mark.parametrize("g", [G.vab_graph(2, 2), G.cycle(4), K2, G.petersen()], ids=str)
def test_shadow_adapter(g):
    t = solve(g, cop_number(g, FULLY_ACTIVE, 4), FULLY_ACTIVE)
    assert verify(g, lambda: ShadowPassiveAdapter(OptimalCop(t)), rule=PASSIVE)


def same_partite_results(g, literal):
    k = cop_number(g, PASSIVE, 3)
    t = solve(g, k, PASSIVE)
    x, y = G.bipartition(g)
    out = []
    for side, other in ((x, y), (y, x)):
        robber_side = side if literal else other
        for cops in combinations_with_replacement(sorted(side), k):
            rs = [v for v in sorted(robber_side) if v not in cops]
            res = verify(g, lambda: SamePartiteAdapter(OptimalCop(t, cops), literal=literal),
                         robber_placements=rs)
            out.append(bool(res))
    return out


@pytest.mark.parametrize("g", [G.cycle(4), G.cycle(6), G.hypercube(3)], ids=str)
def test_same_partite_opposite_side_start(g):
    assert all(same_partite_results(g, literal=False))


def test_same_partite_literal_start_fails_on_q3():
    assert all(same_partite_results(G.cycle(6), literal=True))
    assert not all(same_partite_results(G.hypercube(3), literal=True))


def test_same_partite_needs_bipartite_graph():
    with pytest.raises(StrategyError):
        SamePartiteAdapter(OptimalCop(solve(G.cycle(5), 2, PASSIVE)))


def test_cover_lift_identity_and_doubled_cycle():
    g = G.cycle(5)
    t = solve(g, 2, FULLY_ACTIVE)
    assert verify(g, lambda: CoverLiftAdapter(identity_cover(g), OptimalCop(t)))
    cv = doubled_cycle_cover((3,))
    t = solve(cv.source, 2, FULLY_ACTIVE)
    assert verify(cv.target, lambda: CoverLiftAdapter(cv, OptimalCop(t)))


def test_cover_lift_argument_errors():
    cv = doubled_cycle_cover((3,))
    with pytest.raises(StrategyError):
        CoverLiftAdapter(cv)
    with pytest.raises(StrategyError):
        CoverLiftAdapter(cv, factory=lambda lift: None)


@pytest.mark.parametrize("lengths", [(3,), (5,), (7,), (3, 3), (3, 4)], ids=str)
def test_odd_cycle_products(lengths):
    proto = odd_cycle_product_strategy(lengths)
    assert proto.k == len(lengths) + 1
    assert verify(proto.graph, proto.clone)


def test_odd_cycle_product_needs_an_odd_cycle():
    with pytest.raises(StrategyError):
        odd_cycle_product_strategy((4, 6))


# -- tree products ---------------------------------------------------------------


def test_inactive_assignment_rounds_down():
    assert inactive_assignment(1, 1, 3) == ([(0,)], [(1, 2)])
    assert inactive_assignment(2, 1, 3) == ([(0,), (1,)], [(2,)])
    assert inactive_assignment(0, 2, 3) == ([], [(0, 1), (2,)])
    assert [tree_product_cops(k) for k in range(1, 7)] == [1, 2, 2, 3, 4, 4]


def test_tree_pair_from_odd_distance():
    g = TreePairCop(P4, P3).graph
    odd = [v for v in range(g.n) if g.dist[0, v] % 2]
    assert verify(g, lambda: TreePairCop(P4, P3), robber_placements=odd)
    even = [v for v in range(1, g.n) if g.dist[0, v] % 2 == 0]
    assert not exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: TreePairCop(P4, P3), robber_placements=even)


@pytest.mark.parametrize("factors", [(P3, P3), (P3, P4), (K2, K2, P3), (K2, K2, K2), (K2,) * 4, (P3, P3, P3)],
                         ids=lambda fs: "x".join(f.name for f in fs))
def test_tree_product_strategies(factors):
    k = tree_product_cops(len(factors))
    g = G.cartesian_product(factors)
    assert verify(g, lambda: TreeProductCop(factors))
    assert exhaustive_verify_robber(g, FULLY_ACTIVE, k - 1, lambda: TreeProductRobber(factors))
    assert not exhaustive_verify_robber(g, FULLY_ACTIVE, k, lambda: TreeProductRobber(factors, strict=False))


def test_tree_product_with_too_few_cops_is_refuted():
    res = exhaustive_verify_cop(G.hypercube(3), FULLY_ACTIVE, lambda: TreeProductCop((K2,) * 3, 1, strict=False))
    assert not res


def test_tree_product_rejects_non_trees():
    with pytest.raises(StrategyError):
        TreeProductCop((G.cycle(4), P3))
    with pytest.raises(StrategyError):
        TreeProductCop((G.complete(1), P3))


# -- blowup ----------------------------------------------------------------------


def test_counting_bound():
    assert counting_bound((K2, K2, K2), 4) == (16, 15)


def test_blowup_robber_preconditions():
    with pytest.raises(StrategyError):
        BlowupRobber((K2, K2), 4)
    with pytest.raises(StrategyError):
        BlowupRobber((K2,), 4)
    with pytest.raises(StrategyError):
        BlowupRobber((K2, K2, K2), 3)


def test_blowup_robber_plays_legal_moves():
    rob = BlowupRobber((K2, K2, K2), 4)
    g = rob.graph
    t = solve(g, 3, FULLY_ACTIVE)
    tr = play(g, FULLY_ACTIVE, OptimalCop(t), rob, 200)
    assert tr.outcome == "SURVIVED"
