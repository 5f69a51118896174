"""Exhaustive search for simplicial triangle complexes with a prescribed link.

Given a graph L (all edges of length 2, girth >= 2*pi) the search looks for
a complex ball of radius R around a base vertex in which every vertex at
distance <= R-1 has its link simplicially isomorphic to L.  Faces are bare
triangles; no metric or curvature assumption is made beyond what L forces.

The state grows one sealed vertex at a time.  Sealing a vertex v chooses an
injective embedding of its current partial link into L (exact on the degrees
of already-sealed neighbors, since no later face may touch a sealed vertex)
and then assigns every unmatched L-vertex either to a fresh vertex or to an
existing unsealed non-neighbor, adding the missing faces as the assignment
proceeds.  Post-composing an embedding with an automorphism of L relabels
the target only and produces the same complexes, so embeddings are
enumerated modulo Aut(L).  Partial links of vertices that still need sealing
must stay embeddable in L at all times; branches violating that die
immediately.  The enumeration is exhaustive, so an exhausted search at
radius R proves that no such ball exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .mgraph import FULL_CIRCLE, MetricGraph, automorphisms, girth


class PrescribeError(ValueError):
    pass


@dataclass(frozen=True)
class PrescribeResult:
    sat: bool
    radius: int
    obstruction_depth: Optional[int] = None
    witness_faces: Optional[tuple] = None
    witness_n_vertices: Optional[int] = None

    def __str__(self):
        if self.sat:
            return (f"SAT at radius {self.radius}: ball with {self.witness_n_vertices} "
                    f"vertices and {len(self.witness_faces)} faces")
        return f"UNSAT: all branches die at radius {self.obstruction_depth}"


class _Target:
    def __init__(self, L: MetricGraph):
        if any(e.length != 2 for e in L.edges):
            raise PrescribeError("prescribed link must have all edges of length 2")
        if girth(L) < FULL_CIRCLE:
            raise PrescribeError("prescribed link must have girth >= 2*pi")
        self.nodes = tuple(L.vertices)
        self.index = {v: i for i, v in enumerate(self.nodes)}
        self.adj: list[set[int]] = [set() for _ in self.nodes]
        for e in L.edges:
            iu, iv = self.index[e.u], self.index[e.v]
            if iu == iv or iv in self.adj[iu]:
                raise PrescribeError("prescribed link must be simple")
            self.adj[iu].add(iv)
            self.adj[iv].add(iu)
        self.deg = [len(a) for a in self.adj]
        self.n = len(self.nodes)
        self.auts = [tuple(self.index[a[v]] for v in self.nodes)
                     for a in automorphisms(L)]


class _State:
    def __init__(self, target: _Target):
        self.t = target
        self.adj: list[set[int]] = []
        self.link: list[dict[int, set[int]]] = []
        self.sealed: list[bool] = []
        self.faces: set[frozenset] = set()

    def new_vertex(self) -> int:
        self.adj.append(set())
        self.link.append({})
        self.sealed.append(False)
        return len(self.adj) - 1

    def drop_last_vertex(self):
        assert not self.adj[-1], "dropping a vertex that still has edges"
        self.adj.pop()
        self.link.pop()
        self.sealed.pop()

    def add_face(self, u: int, v: int, w: int):
        triple = frozenset((u, v, w))
        assert len(triple) == 3 and triple not in self.faces
        self.faces.add(triple)
        for (a, b, c) in ((u, v, w), (v, w, u), (w, u, v)):
            self.adj[a].add(b)
            self.adj[a].add(c)
            self.link[a].setdefault(b, set()).add(c)
            self.link[a].setdefault(c, set()).add(b)
        return triple

    def remove_face(self, triple: frozenset):
        self.faces.discard(triple)
        u, v, w = tuple(triple)
        for (a, b, c) in ((u, v, w), (v, w, u), (w, u, v)):
            self.link[a][b].discard(c)
            self.link[a][c].discard(b)
            if not self.link[a][b]:
                del self.link[a][b]
                self.adj[a].discard(b)
            if not self.link[a][c]:
                del self.link[a][c]
                self.adj[a].discard(c)

    def distances(self) -> list:
        d: list = [None] * len(self.adj)
        d[0] = 0
        q = deque([0])
        while q:
            x = q.popleft()
            for y in self.adj[x]:
                if d[y] is None:
                    d[y] = d[x] + 1
                    q.append(y)
        return d

    def link_edges(self, v: int) -> frozenset:
        out = set()
        for a, bs in self.link[v].items():
            for b in bs:
                out.add(frozenset((a, b)))
        return frozenset(out)


def _monomorphisms(state: _State, v: int, gauge: bool):
    """Embeddings of the partial link of v into the target L, lazily.

    Sealed link nodes must land on L-vertices of exactly their current
    degree (their stars are final); others only need enough room.  With
    ``gauge`` set, only one representative per Aut(L)-orbit (by
    post-composition) is yielded.
    """
    t = state.t
    nodes = sorted(state.adj[v])
    if len(nodes) > t.n:
        return
    ledges = state.link_edges(v)
    deg = {a: len(state.link[v].get(a, ())) for a in nodes}
    # connected, high-degree-first extension order for pruning
    ordered: list[int] = []
    placed: set[int] = set()
    pool = sorted(nodes, key=lambda a: (-deg[a], a))
    while pool:
        pick = next((a for a in pool if any(frozenset((a, b)) in ledges for b in placed)),
                    pool[0])
        ordered.append(pick)
        placed.add(pick)
        pool.remove(pick)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    seen_gauge: set[tuple] = set()

    def canonical_key(m: dict[int, int]) -> tuple:
        items = sorted(m.items())
        best = None
        for g in state.t.auts:
            cand = tuple((a, g[s]) for (a, s) in items)
            if best is None or cand < best:
                best = cand
        return best

    def rec(i: int):
        if i == len(ordered):
            if gauge:
                key = canonical_key(mapping)
                if key in seen_gauge:
                    return
                seen_gauge.add(key)
            yield dict(mapping)
            return
        a = ordered[i]
        need_exact = state.sealed[a]
        for s in range(t.n):
            if s in used:
                continue
            if need_exact:
                if t.deg[s] != deg[a]:
                    continue
            elif t.deg[s] < deg[a]:
                continue
            ok = True
            for b, sb in mapping.items():
                edge_here = frozenset((a, b)) in ledges
                edge_there = sb in t.adj[s]
                if edge_here and not edge_there:
                    ok = False
                    break
                if not edge_here and edge_there and (state.sealed[a] or state.sealed[b]):
                    # the missing link edge could only come from a later face
                    # at a sealed vertex, which is forbidden
                    ok = False
                    break
            if not ok:
                continue
            mapping[a] = s
            used.add(s)
            yield from rec(i + 1)
            del mapping[a]
            used.discard(s)

    yield from rec(0)


class _EmbedCache:
    def __init__(self):
        self.table: dict[tuple, bool] = {}
        self.hits = 0
        self.misses = 0

    def check(self, state: _State, v: int) -> bool:
        key = (state.link_edges(v),
               frozenset(a for a in state.adj[v] if state.sealed[a]))
        cached = self.table.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        found = False
        for _ in _monomorphisms(state, v, gauge=False):
            found = True
            break
        self.table[key] = found
        return found


def prescribe_link(L: MetricGraph, radius: int) -> PrescribeResult:
    """SAT with a witness ball, or UNSAT with the first radius where all
    branches die.  UNSAT is exhaustive for the given radius only."""
    if radius < 1:
        raise PrescribeError("radius must be >= 1")
    target = _Target(L)
    last_sat = None
    for r in range(1, radius + 1):
        res = _search_radius(target, r)
        if res is None:
            return PrescribeResult(False, radius, obstruction_depth=r)
        last_sat = res
    faces, n = last_sat
    return PrescribeResult(True, radius,
                           witness_faces=tuple(sorted(tuple(sorted(f)) for f in faces)),
                           witness_n_vertices=n)


def _search_radius(t: _Target, radius: int):
    state = _State(t)
    state.new_vertex()
    cache = _EmbedCache()

    def pick_vertex() -> Optional[int]:
        d = state.distances()
        best = None
        for v in range(len(state.adj)):
            if d[v] is not None and d[v] <= radius - 1 and not state.sealed[v]:
                size = len(state.adj[v])
                if best is None or size > best[0]:
                    best = (size, v)
        return None if best is None else best[1]

    def rec() -> Optional[tuple]:
        v = pick_vertex()
        if v is None:
            return (set(state.faces), len(state.adj))
        return seal(v, rec)

    def addable_faces(v: int, inv: dict[int, int]):
        out = []
        for s, a in sorted(inv.items()):
            for s2 in sorted(t.adj[s]):
                if s2 in inv and s < s2:
                    b = inv[s2]
                    if b not in state.link[v].get(a, ()):
                        out.append((a, b))
        return out

    def realize(v: int, inv: dict[int, int], d):
        """Add every face now forced at v; None on violation, else undo list."""
        added = []
        for (a, b) in addable_faces(v, inv):
            if state.sealed[a] or state.sealed[b]:
                for f in reversed(added):
                    state.remove_face(f)
                return None
            added.append(state.add_face(v, a, b))
        touched = {x for f in added for x in f if x != v}
        for x in touched:
            dx = d[x] if x < len(d) else None
            if dx is not None and dx <= radius - 1 and not state.sealed[x] \
                    and not cache.check(state, x):
                for f in reversed(added):
                    state.remove_face(f)
                return None
        return added

    def seal(v: int, cont):
        d = state.distances()
        for psi in _monomorphisms(state, v, gauge=True):
            inv: dict[int, int] = {s: a for a, s in psi.items()}
            added = realize(v, inv, d)
            if added is None:
                continue
            unmatched = [s for s in range(t.n) if s not in inv]
            res = assign(v, inv, unmatched, d, cont)
            for f in reversed(added):
                state.remove_face(f)
            if res is not None:
                return res
        return None

    def assign(v: int, inv, unmatched, d, cont):
        if not unmatched:
            assert not addable_faces(v, inv)
            state.sealed[v] = True
            res = cont()
            state.sealed[v] = False
            return res
        # most constrained slot first: most decided L-neighbors
        unmatched = sorted(
            unmatched,
            key=lambda s: (-sum(1 for x in t.adj[s] if x in inv), s))
        s = unmatched[0]
        rest = unmatched[1:]
        taken = set(inv.values())
        # Identifying a slot with an existing vertex is only ever necessary
        # for vertices that themselves need a prescribed link: any witness can
        # be rewritten so that unconstrained vertices are shared between
        # stars only through faces with two constrained corners, and those
        # faces already exist when the second star is sealed.
        existing = [w for w in range(len(state.adj))
                    if not state.sealed[w] and w != v
                    and w not in state.adj[v] and w not in taken
                    and w < len(d) and d[w] is not None and d[w] <= radius - 1]
        for w in ["fresh"] + existing:
            wv = state.new_vertex() if w == "fresh" else w
            inv[s] = wv
            added = realize(v, inv, d)
            if added is not None:
                res = assign(v, inv, rest, d, cont)
                for f in reversed(added):
                    state.remove_face(f)
            else:
                res = None
            del inv[s]
            if w == "fresh":
                state.drop_last_vertex()
            if res is not None:
                return res
        return None

    return rec()
