"""Undirected simple graphs and the constructions used throughout plab.

Vertices are dense integers ``0..n-1``.  Structural metadata (product
coordinates, blowup shadows) lives in ``Graph.labels`` and is never seen
by the solver, which only reads adjacency.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as _iproduct
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx
import numpy as np


class GraphError(ValueError):
    """Invalid graph parameters or malformed graph data."""


@dataclass(frozen=True)
class ProductCoordinate:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class BlowupLabel:
    shadow: int
    copy: int


VertexLabel = ProductCoordinate | BlowupLabel | None


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[VertexLabel, ...] | None = field(default=None)
    name: str = ""

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {u} not sorted/unique")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"vertex id {v} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric edge {u}-{v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match vertex count")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[VertexLabel] | None = None,
        name: str = "",
    ) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            n,
            tuple(tuple(sorted(s)) for s in nbrs),
            None if labels is None else tuple(labels),
            name,
        )

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "") -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()), name=name)

    # -- basic queries -----------------------------------------------------

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.num_edges}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @cached_property
    def digest(self) -> str:
        """SHA-256 over the literal adjacency encoding (not the isomorphism class)."""
        enc = f"{self.n};" + ";".join(",".join(map(str, a)) for a in self.adj)
        return hashlib.sha256(enc.encode()).hexdigest()

    @cached_property
    def dist(self) -> np.ndarray:
        """All-pairs BFS distances; -1 for unreachable pairs."""
        d = np.full((self.n, self.n), -1, dtype=np.int32)
        for s in range(self.n):
            row = d[s]
            row[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in self.adj[u]:
                    if row[w] < 0:
                        row[w] = row[u] + 1
                        q.append(w)
        d.setflags(write=False)
        return d

    def is_connected(self) -> bool:
        return self.n > 0 and bool((self.dist[0] >= 0).all())

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adjsets[v] | {v}

    def step_toward(self, src: int, dst: int) -> int:
        """Neighbor of ``src`` strictly closer to ``dst``; lowest id among ties."""
        d = self.dist[dst]
        for w in self.adj[src]:
            if d[w] == d[src] - 1:
                return w
        raise GraphError(f"no step from {src} toward {dst}")

    def coords(self, v: int) -> tuple[int, ...]:
        lab = self.labels[v] if self.labels else None
        if not isinstance(lab, ProductCoordinate):
            raise GraphError(f"vertex {v} has no product coordinate")
        return lab.coords

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        edges = ((perm[u], perm[v]) for u, v in self.edges())
        labels = None
        if self.labels is not None:
            out: list[VertexLabel] = [None] * self.n
            for v, lab in enumerate(self.labels):
                out[perm[v]] = lab
            labels = out
        return Graph.from_edges(self.n, edges, labels, self.name if name is None else name)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.labels is not None:
            out["labels"] = [_label_to_json(lab) for lab in self.labels]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        labels = data.get("labels")
        if labels is not None:
            labels = [_label_from_json(x) for x in labels]
        return cls.from_edges(n, edges, labels)

    def to_edgelist(self) -> str:
        lines = [f"# n={self.n}"] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str, n: int | None = None) -> "Graph":
        edges = []
        declared = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("n="):
                    declared = int(body[2:])
                continue
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise GraphError(f"line {lineno}: {exc}") from exc
        if n is None:
            n = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
        return cls.from_edges(n, edges)


def _label_to_json(lab: VertexLabel):
    if isinstance(lab, ProductCoordinate):
        return {"product": list(lab.coords)}
    if isinstance(lab, BlowupLabel):
        return {"shadow": lab.shadow, "copy": lab.copy}
    return None


def _label_from_json(obj) -> VertexLabel:
    if obj is None:
        return None
    if "product" in obj:
        return ProductCoordinate(tuple(int(c) for c in obj["product"]))
    if "shadow" in obj:
        return BlowupLabel(int(obj["shadow"]), int(obj["copy"]))
    raise GraphError(f"unknown label {obj!r}")


def load_graph(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: invalid JSON ({exc})") from exc
        return Graph.from_json(data)
    return Graph.from_edgelist(text)


def save_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(g.to_json()) + "\n")
    else:
        path.write_text(g.to_edgelist())


# -- standard families -------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), name=f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)), name=f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)), name=f"K{m},{n}")


def hypercube(n: int) -> Graph:
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    g = cartesian_product([complete(2)] * n)
    return Graph(g.n, g.adj, g.labels, f"Q{n}")


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph(), name="Petersen")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "hypercube": hypercube,
}


def build_family(family: str, *sizes: int) -> Graph:
    key = family.replace("-", "_")
    if key not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[key](*sizes)


def vab_graph(a: int, b: int) -> Graph:
    """``v`` joined to all of A, A completely joined to B, B a clique.

    Vertex 0 is ``v``, then ``a`` vertices of A, then ``b`` vertices of B.
    """
    if a < 2 or b < 2:
        raise GraphError("vAB graph needs |A| >= 2 and |B| >= 2")
    A = range(1, 1 + a)
    B = range(1 + a, 1 + a + b)
    edges = [(0, x) for x in A]
    edges += [(x, y) for x in A for y in B]
    edges += [(y, z) for y in B for z in B if y < z]
    return Graph.from_edges(1 + a + b, edges, name=f"vAB({a},{b})")


def cartesian_product(factors: Sequence[Graph]) -> Graph:
    """Cartesian product; vertex ids are row-major (last coordinate fastest)."""
    if not factors:
        raise GraphError("cartesian product needs at least one factor")
    if any(f.n == 0 for f in factors):
        raise GraphError("cartesian product factors must be nonempty")
    sizes = [f.n for f in factors]
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    tuples = list(_iproduct(*(range(s) for s in sizes)))
    edges = []
    for vid, t in enumerate(tuples):
        for i, f in enumerate(factors):
            for w in f.adj[t[i]]:
                if w > t[i]:
                    edges.append((vid, vid + (w - t[i]) * strides[i]))
    labels = [ProductCoordinate(t) for t in tuples]
    name = "x".join(f.name or "?" for f in factors)
    return Graph.from_edges(len(tuples), edges, labels, name)


def product_index(sizes: Sequence[int], coords: Sequence[int]) -> int:
    vid = 0
    for s, c in zip(sizes, coords):
        vid = vid * s + c
    return vid


def blowup(base: Graph, t: int) -> Graph:
    """Each vertex becomes ``t`` independent copies; edges become complete joins.

    Copy ``c`` of base vertex ``v`` has id ``v * t + c``.
    """
    if t < 1:
        raise GraphError("blowup needs t >= 1")
    edges = [
        (u * t + i, v * t + j) for u, v in base.edges() for i in range(t) for j in range(t)
    ]
    labels = [BlowupLabel(v, c) for v in range(base.n) for c in range(t)]
    return Graph.from_edges(base.n * t, edges, labels, f"{base.name or 'G'}^({t})")


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-coloring with vertex 0 in the first side, or None if an odd cycle exists."""
    if not g.is_connected():
        raise GraphError("bipartition requires a connected graph")
    parity = g.dist[0] % 2
    for u, v in g.edges():
        if parity[u] == parity[v]:
            return None
    X = frozenset(int(v) for v in np.flatnonzero(parity == 0))
    Y = frozenset(int(v) for v in np.flatnonzero(parity == 1))
    return X, Y


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected components (as vertex sets) and articulation points.

    Blocks are ordered by their smallest vertex, then by sorted contents.
    """
    if not g.is_connected():
        raise GraphError("block-cut tree requires a connected graph")
    if g.n == 1:
        return BlockCutTree((frozenset({0}),), frozenset())
    nxg = g.to_networkx()
    blocks = sorted((frozenset(b) for b in nx.biconnected_components(nxg)), key=lambda b: sorted(b))
    cuts = frozenset(nx.articulation_points(nxg))
    return BlockCutTree(tuple(blocks), cuts)
