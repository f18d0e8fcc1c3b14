"""Seeded random graph generators for test corpora."""

from __future__ import annotations

import heapq
import random
from functools import lru_cache

from .embedding import OuterplanarEmbedding
from .graphs import Graph, GraphError


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise GraphError("random_tree needs n >= 1")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [], name=f"tree{n}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges, name=f"tree{n}s{seed}")


def random_connected(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """G(n, p) resampled until connected."""
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError("edge probability must lie in [0, 1]")
    if n > 1 and p == 0.0:
        raise GraphError("p = 0 never yields a connected graph on n > 1 vertices")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p], name=f"gnp{n}s{seed}")
        if g.is_connected():
            return g
    raise GraphError(f"no connected sample after {max_tries} tries (n={n}, p={p})")


@lru_cache(maxsize=None)
def _catalan(m: int) -> int:
    if m <= 1:
        return 1
    return sum(_catalan(i) * _catalan(m - 1 - i) for i in range(m))


def random_maximal_outerplanar(n: int, seed: int) -> tuple[Graph, OuterplanarEmbedding]:
    """Uniformly random triangulation of a convex n-gon, with shuffled vertex ids."""
    if n < 3:
        raise GraphError("maximal outerplanar generator needs n >= 3")
    rng = random.Random(seed)
    chords: list[tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        # Apex m of the triangle on side (i, j); weights count triangulations
        # of the two sub-polygons so the overall draw is uniform.
        weights = [_catalan(m - i - 1) * _catalan(j - m - 1) for m in range(i + 1, j)]
        m = rng.choices(range(i + 1, j), weights=weights)[0]
        if m - i >= 2:
            chords.append((i, m))
        if j - m >= 2:
            chords.append((m, j))
        stack.append((i, m))
        stack.append((m, j))
    perm = list(range(n))
    rng.shuffle(perm)
    cycle_edges = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    mapped = [(perm[a], perm[b]) for a, b in chords]
    g = Graph.from_edges(n, cycle_edges + mapped, name=f"mop{n}s{seed}")
    emb = OuterplanarEmbedding(tuple(perm), frozenset(mapped))
    return g, emb
