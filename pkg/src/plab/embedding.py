"""Outerplanar embeddings given as a Hamiltonian outer cycle plus chords."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class OuterplanarEmbedding:
    outer_cycle: tuple[int, ...]
    chords: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer_cycle", tuple(self.outer_cycle))
        object.__setattr__(
            self, "chords", frozenset((min(u, v), max(u, v)) for u, v in self.chords)
        )

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer_cycle)}

    @property
    def size(self) -> int:
        return len(self.outer_cycle)

    def cycle_edges(self) -> set[tuple[int, int]]:
        c = self.outer_cycle
        m = len(c)
        return {(min(c[i], c[(i + 1) % m]), max(c[i], c[(i + 1) % m])) for i in range(m)}

    def to_json(self) -> dict:
        return {"outer_cycle": list(self.outer_cycle), "chords": sorted(list(c) for c in self.chords)}

    @classmethod
    def from_json(cls, data: dict) -> "OuterplanarEmbedding":
        try:
            return cls(tuple(int(v) for v in data["outer_cycle"]),
                       frozenset((int(u), int(v)) for u, v in data["chords"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed embedding JSON: {exc}") from exc


def _crossing(pos: dict[int, int], e: tuple[int, int], f: tuple[int, int]) -> bool:
    a, b = sorted((pos[e[0]], pos[e[1]]))
    c, d = sorted((pos[f[0]], pos[f[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def validate_embedding(g: Graph, emb: OuterplanarEmbedding, vertices: frozenset[int] | None = None) -> str | None:
    """Return None if ``emb`` embeds the subgraph of ``g`` induced on ``vertices``.

    Otherwise return a description of the first violation found.
    """
    verts = frozenset(range(g.n)) if vertices is None else vertices
    cyc = emb.outer_cycle
    if len(cyc) < 3:
        return "outer cycle needs at least 3 vertices"
    if len(set(cyc)) != len(cyc) or set(cyc) != verts:
        return "outer cycle is not a Hamiltonian vertex order"
    for i in range(len(cyc)):
        u, v = cyc[i], cyc[(i + 1) % len(cyc)]
        if not g.has_edge(u, v):
            return f"outer cycle step {u}-{v} is not an edge"
    cyc_edges = emb.cycle_edges()
    graph_edges = {(u, v) for u, v in g.edges() if u in verts and v in verts}
    for c in emb.chords:
        if c in cyc_edges:
            return f"chord {c} duplicates a cycle edge"
        if c not in graph_edges:
            return f"chord {c} is not an edge"
    missing = graph_edges - cyc_edges - emb.chords
    if missing:
        return f"edge {min(missing)} is neither a cycle edge nor a chord"
    chords = sorted(emb.chords)
    pos = emb.position
    for i, e in enumerate(chords):
        for f in chords[i + 1:]:
            if _crossing(pos, e, f):
                return f"chords {e} and {f} cross"
    return None


def cycle_embedding(g: Graph, vertices: frozenset[int]) -> OuterplanarEmbedding:
    """Outer cycle of a 2-connected outerplanar block, found by boundary walking.

    For a 2-connected outerplanar graph the Hamiltonian cycle is unique; it is
    recovered here by repeatedly removing degree-2 vertices (ears).
    """
    verts = set(vertices)
    if len(verts) < 3:
        raise GraphError("blocks with fewer than 3 vertices have no outer cycle")
    adj = {v: set(w for w in g.adj[v] if w in verts) for v in verts}
    # Peel degree-2 vertices; each peel records that its two neighbours are
    # consecutive around the removed vertex on the outer face.
    order: list[tuple[int, int, int]] = []
    work = {v: set(s) for v, s in adj.items()}
    while len(work) > 3:
        cand = sorted(v for v, s in work.items() if len(s) == 2)
        if not cand:
            raise GraphError("block is not outerplanar (no degree-2 vertex)")
        v = cand[0]
        a, b = sorted(work[v])
        order.append((v, a, b))
        del work[v]
        work[a].discard(v)
        work[b].discard(v)
        work[a].add(b)
        work[b].add(a)
    cyc = sorted(work)
    # Reinsert peeled vertices between their two anchors.
    for v, a, b in reversed(order):
        m = len(cyc)
        for i in range(m):
            x, y = cyc[i], cyc[(i + 1) % m]
            if {x, y} == {a, b}:
                cyc.insert(i + 1, v)
                break
        else:
            raise GraphError("block is not outerplanar (anchors not consecutive)")
    cyc_set = {(min(cyc[i], cyc[(i + 1) % len(cyc)]), max(cyc[i], cyc[(i + 1) % len(cyc)]))
               for i in range(len(cyc))}
    chords = {(min(u, w), max(u, w)) for u in verts for w in adj[u] if u < w} - cyc_set
    start = cyc.index(min(cyc))
    cyc = cyc[start:] + cyc[:start]
    emb = OuterplanarEmbedding(tuple(cyc), frozenset(chords))
    err = validate_embedding(g, emb, frozenset(verts))
    if err:
        raise GraphError(f"block is not outerplanar: {err}")
    return emb
