"""Two cops on an outerplanar graph.

Inside a 2-connected block with outer cycle C, cop ``ca`` controls endpoint
``a`` and the other cop controls ``b`` (a cop controls v when it stands in
N[v]).  The robber territory is the open clockwise arc (a, b); the cop
territory is the open arc (b, a).  Each phase moves an endpoint into the
robber territory, so the cop territory only grows.

With cut vertices the cops play in one block at a time against the
robber's projection: the robber itself when it is in the block, otherwise
the cut vertex of the block that separates it from the cops.  Once a cop
lands on that cut vertex p the other cop walks into N[p], and the pair
enters the next block toward the robber with a = b = p.

State tuples (all plain ints, so they double as memo keys)::

    ("init", block)
    ("play", block, a, b, ca, walk_side, walk_target)   walk_side = -1 when idle
    ("gather", p, holder, block)                          block = -1 at a tree start
    ("bridge", block, p, v)
"""

from __future__ import annotations

from ..embedding import OuterplanarEmbedding, cycle_embedding, validate_embedding
from ..graphs import Graph, GraphError, block_cut_tree
from ..rules import FULLY_ACTIVE, CopRule, MovementRule
from .base import CopController, StrategyError, capture_move


class _Block:
    __slots__ = ("verts", "cyc", "pos", "m", "nbrs")

    def __init__(self, g: Graph, verts: frozenset[int], emb: OuterplanarEmbedding | None):
        self.verts = verts
        self.nbrs = {v: tuple(w for w in g.adj[v] if w in verts) for v in verts}
        if emb is None:
            self.cyc, self.pos, self.m = (), {}, len(verts)
        else:
            self.cyc = emb.outer_cycle
            self.pos = emb.position
            self.m = len(self.cyc)

    def succ(self, v: int) -> int:
        return self.cyc[(self.pos[v] + 1) % self.m]

    def pred(self, v: int) -> int:
        return self.cyc[(self.pos[v] - 1) % self.m]


class OuterplanarCop(CopController):
    name = "outerplanar"
    _mutable = ("pos", "state")
    k = 2

    def __init__(self, g: Graph, embedding: OuterplanarEmbedding | None = None,
                 rule: MovementRule = FULLY_ACTIVE):
        if rule.cop_rule == CopRule.AT_MOST_ONE:
            raise StrategyError("the outerplanar strategy moves both cops each round")
        if g.n < 2:
            raise StrategyError("the outerplanar strategy needs at least 2 vertices")
        self.graph = g
        self.rule = rule
        bct = block_cut_tree(g)
        self.blocks: list[_Block] = []
        for verts in bct.blocks:
            emb = None
            if len(verts) >= 3:
                if embedding is not None and len(bct.blocks) == 1:
                    emb = embedding
                else:
                    try:
                        emb = cycle_embedding(g, verts)
                    except GraphError as exc:
                        raise StrategyError(f"graph is not outerplanar: {exc}") from exc
                err = validate_embedding(g, emb, verts)
                if err:
                    raise StrategyError(f"invalid embedding: {err}")
            self.blocks.append(_Block(g, verts, emb))
        self.pos: tuple[int, ...] = ()
        self.state: tuple = ()

    # -- helpers ------------------------------------------------------------

    def _proj(self, bi: int, r: int) -> int:
        blk = self.blocks[bi]
        if r in blk.verts:
            return r
        d = self.graph.dist[r]
        return min(blk.verts, key=lambda v: (d[v], v))

    def _block_with(self, u: int, v: int) -> int:
        for i, blk in enumerate(self.blocks):
            if u in blk.verts and v in blk.verts:
                return i
        raise StrategyError(f"no block holds edge {u}-{v}")

    def _controls(self, x: int, v: int) -> bool:
        return x == v or self.graph.has_edge(x, v)

    def _step(self, x: int, target: int) -> int:
        """One move toward ``target``; a cop already there bounces to its lowest neighbor."""
        if x == target:
            return self.graph.adj[x][0]
        return self.graph.step_toward(x, target)

    # -- protocol -----------------------------------------------------------

    def place(self) -> tuple[int, ...]:
        for bi, blk in enumerate(self.blocks):
            if blk.m >= 3:
                chords = [c for c in sorted(self.graph.edges())
                          if c[0] in blk.verts and c[1] in blk.verts
                          and abs(blk.pos[c[0]] - blk.pos[c[1]]) not in (1, blk.m - 1)]
                self.pos = chords[0] if chords else (blk.cyc[0], blk.cyc[1])
                self.state = ("init", bi)
                return self.pos
        self.pos = (0, 0)
        self.state = ("gather", 0, 0, -1)
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        hit = capture_move(self.graph, self.pos, robber, self.rule)
        if hit is not None:
            self.pos = hit
            return hit
        for _ in range(4 * len(self.blocks) + 8):
            out = self._act(robber)
            if out is not None:
                self.pos = tuple(out)
                self._check(robber)
                return self.pos
        raise StrategyError(f"state machine did not settle from {self.state}")

    def memo_key(self):
        return (self.state, self.pos)

    # -- state machine ------------------------------------------------------

    def _act(self, r: int):
        st = self.state
        pos = self.pos
        g = self.graph
        kind = st[0]

        if kind == "init":
            bi = st[1]
            blk = self.blocks[bi]
            q = self._proj(bi, r)
            if q in pos:
                self.state = ("gather", q, pos.index(q), bi)
                return None
            x, y = pos
            if (blk.pos[q] - blk.pos[x]) % blk.m < (blk.pos[y] - blk.pos[x]) % blk.m:
                self.state = ("play", bi, x, y, 0, -1, -1)
            else:
                self.state = ("play", bi, y, x, 1, -1, -1)
            return None

        if kind == "gather":
            _, p, h, bi = st
            o = 1 - h
            if self._controls(pos[h], p) and self._controls(pos[o], p):
                nxt = g.step_toward(p, r)
                bj = self._block_with(p, nxt)
                if self.blocks[bj].m < 3:
                    self.state = ("bridge", bj, p, nxt)
                else:
                    ca = h if pos[h] == p or pos[o] != p else o
                    self.state = ("play", bj, p, p, ca, -1, -1)
                return None
            out = list(pos)
            if pos[h] != p:
                out[h] = p
            else:
                inside = self.blocks[bi].nbrs[p] if bi >= 0 else g.adj[p]
                out[h] = (inside or g.adj[p])[0]
            out[o] = g.step_toward(pos[o], p)
            return out

        if kind == "bridge":
            _, bi, p, v = st
            out = list(pos)
            at_p = [i for i in (0, 1) if pos[i] == p]
            if at_p:
                i = at_p[0]
                out[i] = v
                out[1 - i] = self._step(pos[1 - i], v)
                self.state = ("gather", v, i, bi)
            else:
                out = [g.step_toward(x, p) for x in pos]
            return out

        # play
        _, bi, a, b, ca, wside, wt = st
        blk = self.blocks[bi]
        cb = 1 - ca
        q = self._proj(bi, r)
        if q != r:
            if q in pos:
                self.state = ("gather", q, pos.index(q), bi)
                return None
            for i in (0, 1):
                if g.has_edge(pos[i], q):
                    out = list(pos)
                    out[i] = q
                    out[1 - i] = self._step(pos[1 - i], q)
                    self.state = ("gather", q, i, bi)
                    return out

        m = blk.m
        pa, pb = blk.pos[a], blk.pos[b]
        span = (pb - pa) % m or m

        def off(x: int) -> int:
            return (blk.pos[x] - pa) % m

        if wside >= 0:
            holder, walker = (ca, cb) if wside == 0 else (cb, ca)
            if self._controls(pos[walker], wt):
                if wside == 0:
                    self.state = ("play", bi, a, wt, ca, -1, -1)
                else:
                    self.state = ("play", bi, wt, b, ca, -1, -1)
                return None
            end = a if wside == 0 else b
            out = list(pos)
            out[holder] = wt if pos[holder] == end else end
            out[walker] = g.step_toward(pos[walker], wt)
            return out

        if not 0 < off(q) < span:
            raise StrategyError(f"robber projection {q} left the territory ({a}, {b})")

        def hold(i: int, v: int, outward: int) -> int:
            return v if pos[i] != v else outward

        # chord from a into the robber territory
        cand = [x for x in blk.nbrs[a] if 0 < off(x) < span and x != blk.succ(a)]
        if cand:
            vr = max(cand, key=off)
            out = list(pos)
            if pos[ca] != a:
                out[ca] = a
                out[cb] = hold(cb, b, blk.succ(b))
                return out
            if off(q) > off(vr):
                out[ca] = vr
                out[cb] = hold(cb, b, blk.succ(b))
                self.state = ("play", bi, vr, b, ca, -1, -1)
                return out
            self.state = ("play", bi, a, b, ca, 0, vr)
            return None

        cand = [x for x in blk.nbrs[b] if 0 < off(x) < span and x != blk.pred(b)]
        if cand:
            vr = min(cand, key=off)
            out = list(pos)
            if pos[cb] != b:
                out[cb] = b
                out[ca] = hold(ca, a, blk.pred(a))
                return out
            if off(q) < off(vr):
                out[cb] = vr
                out[ca] = hold(ca, a, blk.pred(a))
                self.state = ("play", bi, a, vr, ca, -1, -1)
                return out
            self.state = ("play", bi, a, b, ca, 1, vr)
            return None

        # no chords: both endpoints advance one step along C
        out = list(pos)
        na, nb = blk.succ(a), blk.pred(b)
        out[ca] = na if pos[ca] == a else a
        out[cb] = nb if pos[cb] == b else b
        self.state = ("play", bi, na if q != na else a, nb if q != nb else b, ca, -1, -1)
        return out

    def _check(self, r: int) -> None:
        st = self.state
        if st[0] != "play":
            return
        _, bi, a, b, ca, wside, wt = st
        blk = self.blocks[bi]
        q = self._proj(bi, r)
        m = blk.m
        pa = blk.pos[a]
        span = (blk.pos[b] - pa) % m or m
        off = {v: (blk.pos[v] - pa) % m for v in blk.verts}
        if not 0 < off[q] < span:
            raise StrategyError(f"robber projection {q} outside territory ({a}, {b})")
        for w in blk.nbrs[q]:
            if off[w] > span:
                raise StrategyError(f"edge {q}-{w} joins the robber to the cop territory")
        if wside < 0:
            if not (self._controls(self.pos[ca], a) and self._controls(self.pos[1 - ca], b)):
                raise StrategyError(f"endpoints {a}, {b} not controlled by {self.pos}")
