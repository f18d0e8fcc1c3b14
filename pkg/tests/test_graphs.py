import networkx as nx
import pytest

from plab import graphs as G
from plab.covering import CoveringMap, doubled_cycle_cover, identity_cover, validate_covering
from plab.embedding import OuterplanarEmbedding, cycle_embedding, validate_embedding
from plab.generators import random_connected, random_maximal_outerplanar, random_tree
from plab.graphs import Graph, GraphError


def test_families_sizes():
    assert (G.path(5).n, G.path(5).num_edges) == (5, 4)
    assert (G.cycle(7).n, G.cycle(7).num_edges) == (7, 7)
    assert G.complete(5).num_edges == 10
    assert G.complete_bipartite(2, 3).num_edges == 6
    assert (G.hypercube(4).n, G.hypercube(4).num_edges) == (16, 32)
    assert G.petersen().num_edges == 15


def test_family_errors():
    with pytest.raises(GraphError):
        G.cycle(2)
    with pytest.raises(GraphError):
        G.build_family("nonesuch", 3)
    with pytest.raises(GraphError):
        G.vab_graph(1, 2)


def test_self_loops_and_bad_edges_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 5)])


def test_vab_structure():
    g = G.vab_graph(2, 3)
    assert g.n == 6
    assert set(g.adj[0]) == {1, 2}
    assert all(g.has_edge(x, y) for x in (1, 2) for y in (3, 4, 5))
    assert g.has_edge(3, 4) and not g.has_edge(1, 2)


def test_product_coordinates_row_major():
    g = G.cartesian_product([G.path(2), G.path(3)])
    assert g.n == 6
    assert g.coords(0) == (0, 0) and g.coords(1) == (0, 1) and g.coords(3) == (1, 0)
    assert G.product_index((2, 3), (1, 2)) == 5
    ref = nx.cartesian_product(nx.path_graph(2), nx.path_graph(3))
    assert nx.is_isomorphic(g.to_networkx(), ref)


def test_blowup_edges_and_labels():
    base = G.path(3)
    g = G.blowup(base, 4)
    assert g.n == 12
    assert g.num_edges == base.num_edges * 16
    assert not g.has_edge(0, 1)  # copies of one vertex are independent
    assert g.has_edge(0 * 4 + 2, 1 * 4 + 3)


def test_bipartition():
    x, y = G.bipartition(G.hypercube(3))
    assert len(x) == len(y) == 4
    assert G.bipartition(G.cycle(5)) is None


def test_block_cut_tree_of_bowtie():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bct = G.block_cut_tree(g)
    assert bct.cut_vertices == frozenset({2})
    assert sorted(map(sorted, bct.blocks)) == [[0, 1, 2], [2, 3, 4]]


def test_distances_and_steps():
    g = G.cycle(6)
    assert g.dist[0, 3] == 3
    assert g.step_toward(0, 2) == 1
    with pytest.raises(GraphError):
        g.step_toward(4, 4)


@pytest.mark.parametrize("suffix", [".json", ".txt"])
def test_file_round_trip(tmp_path, suffix):
    g = G.blowup(G.cycle(3), 2) if suffix == ".json" else G.petersen()
    p = tmp_path / f"g{suffix}"
    G.save_graph(g, p)
    h = G.load_graph(p)
    assert h.n == g.n and h.adj == g.adj
    if suffix == ".json":
        assert h.labels == g.labels


def test_malformed_inputs(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(GraphError):
        G.load_graph(p)
    with pytest.raises(GraphError):
        Graph.from_json({"n": 3})
    with pytest.raises(GraphError, match="line 2"):
        Graph.from_edgelist("0 1\n1 2 3\n")


def test_random_generators_are_seeded():
    assert random_tree(9, 4).adj == random_tree(9, 4).adj
    t = random_tree(9, 4)
    assert t.num_edges == 8 and t.is_connected()
    g = random_connected(7, 0.3, seed=1)
    assert g.is_connected() and g.adj == random_connected(7, 0.3, seed=1).adj


@pytest.mark.parametrize("seed", range(10))
def test_random_outerplanar_embedding_valid(seed):
    g, emb = random_maximal_outerplanar(9, seed)
    assert g.num_edges == 2 * 9 - 3
    assert validate_embedding(g, emb) is None
    again = cycle_embedding(g, frozenset(range(g.n)))
    assert validate_embedding(g, again) is None


def test_embedding_rejects_crossing_chords():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    emb = OuterplanarEmbedding((0, 1, 2, 3), frozenset({(0, 2), (1, 3)}))
    assert validate_embedding(g, emb) is not None
    with pytest.raises(GraphError):
        cycle_embedding(g, frozenset(range(4)))


def test_coverings():
    assert validate_covering(identity_cover(G.cycle(5))) is None
    for lengths in [(3,), (3, 3), (3, 4)]:
        cv = doubled_cycle_cover(lengths)
        assert validate_covering(cv) is None
        assert cv.source.n == cv.target.n * 2 ** len(lengths)
    bad = CoveringMap(G.cycle(6), G.cycle(3), (0, 1, 2, 0, 1, 1))
    assert validate_covering(bad) is not None


def test_lift_neighbor_is_unique():
    cv = doubled_cycle_cover((3,))
    for u in range(cv.source.n):
        for v in cv.target.adj[cv(u)]:
            w = cv.lift_neighbor(u, v)
            assert cv.source.has_edge(u, w) and cv(w) == v
