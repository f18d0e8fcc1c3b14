"""Covering maps between graphs and the doubled-cycle cover of cycle products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, GraphError, cartesian_product, cycle, product_index


@dataclass(frozen=True)
class CoveringMap:
    source: Graph
    target: Graph
    image: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.image[v]

    def lift_neighbor(self, u_src: int, v_tgt: int) -> int:
        """The unique neighbor of ``u_src`` mapping onto ``v_tgt``."""
        for w in self.source.adj[u_src]:
            if self.image[w] == v_tgt:
                return w
        raise GraphError(f"cannot lift step {self.image[u_src]}->{v_tgt} from source vertex {u_src}")

    def preimages(self, v_tgt: int) -> list[int]:
        return [u for u, x in enumerate(self.image) if x == v_tgt]


def validate_covering(cmap: CoveringMap) -> str | None:
    """None if ``cmap`` is a covering map, else a description of the first violation."""
    H, G, img = cmap.source, cmap.target, cmap.image
    if len(img) != H.n:
        return f"image has {len(img)} entries for {H.n} source vertices"
    if any(not 0 <= x < G.n for x in img):
        return "image contains out-of-range target vertex"
    missing = set(range(G.n)) - set(img)
    if missing:
        return f"not surjective: target vertex {min(missing)} has no preimage"
    for v in range(H.n):
        mapped = [img[w] for w in H.adj[v]]
        if sorted(mapped) != list(G.adj[img[v]]):
            return f"vertex {v}: neighborhood does not map bijectively onto N({img[v]})"
    return None


def identity_cover(g: Graph) -> CoveringMap:
    return CoveringMap(g, g, tuple(range(g.n)))


def doubled_cycle_cover(lengths: Sequence[int]) -> CoveringMap:
    """Cover of prod C_{n_i} by prod C_{2 n_i}, reducing each coordinate mod n_i."""
    if not lengths or any(n < 3 for n in lengths):
        raise GraphError("doubled cycle cover needs cycle lengths >= 3")
    H = cartesian_product([cycle(2 * n) for n in lengths])
    G = cartesian_product([cycle(n) for n in lengths])
    image = tuple(
        product_index(lengths, [x % n for x, n in zip(H.coords(v), lengths)]) for v in range(H.n)
    )
    return CoveringMap(H, G, image)
