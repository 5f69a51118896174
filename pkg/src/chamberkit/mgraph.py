"""Finite metric multigraphs with integer edge lengths.

All lengths and angles in this package are integers in units of pi/6, so a
full circle is 12 units and the standard incidence-graph edge (pi/3) has
length 2.  Loops and parallel edges are allowed everywhere.  Every operation
is a pure function of its inputs and ties are broken by the stored vertex and
edge order, so canonical forms and search results are reproducible.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

INFINITE = math.inf

FULL_CIRCLE = 12  # 2*pi in pi/6 units


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    eid: str
    u: str
    v: str
    length: int

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x!r} is not an endpoint of edge {self.eid!r}")


class MetricGraph:
    """Multigraph with positive integer edge lengths and a stable cell order."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple], name: str = ""):
        self.name = name
        vs = [str(v) for v in vertices]
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex id")
        self.vertices: tuple[str, ...] = tuple(vs)
        vset = set(vs)
        built = []
        seen_ids = set()
        for i, e in enumerate(edges):
            if len(e) == 4:
                eid, u, v, length = e
            elif len(e) == 3:
                u, v, length = e
                eid = f"e{i}"
            else:
                raise GraphError(f"edge spec {e!r} must be (id,u,v,len) or (u,v,len)")
            eid, u, v = str(eid), str(u), str(v)
            if eid in seen_ids:
                raise GraphError(f"duplicate edge id {eid!r}")
            seen_ids.add(eid)
            if u not in vset or v not in vset:
                raise GraphError(f"edge {eid!r} references undeclared vertex")
            length = int(length)
            if length < 1:
                raise GraphError(f"edge {eid!r} has non-positive length {length}")
            built.append(Edge(eid, u, v, length))
        self.edges: tuple[Edge, ...] = tuple(built)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            if e.v != e.u:
                inc[e.v].append(e)
        self._incident = inc

    # -- basic accessors -------------------------------------------------

    def incident(self, v: str) -> list[Edge]:
        return self._incident[v]

    def valency(self, v: str) -> int:
        # a loop counts twice
        return sum(2 if e.u == e.v else 1 for e in self._incident[v])

    def edge_by_id(self, eid: str) -> Edge:
        for e in self.edges:
            if e.eid == eid:
                return e
        raise GraphError(f"no edge {eid!r}")

    def total_length(self) -> int:
        return sum(e.length for e in self.edges)

    def with_name(self, name: str) -> "MetricGraph":
        return MetricGraph(self.vertices, [(e.eid, e.u, e.v, e.length) for e in self.edges], name=name)

    def __repr__(self):
        return f"MetricGraph({self.name or 'unnamed'}: {len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- structural helpers ----------------------------------------------

    def neighbors(self, v: str) -> list[str]:
        out = []
        for e in self._incident[v]:
            out.append(e.other(v)) if e.u != e.v else out.extend([v])
        return out

    def remove_edges(self, eids: Iterable[str], name: str = "") -> "MetricGraph":
        """Delete open edges (endpoints stay)."""
        drop = set(eids)
        return MetricGraph(self.vertices,
                           [(e.eid, e.u, e.v, e.length) for e in self.edges if e.eid not in drop],
                           name=name or self.name)

    def add_edges(self, extra: Iterable[tuple], name: str = "") -> "MetricGraph":
        all_edges = [(e.eid, e.u, e.v, e.length) for e in self.edges]
        used = {e.eid for e in self.edges}
        k = 0
        for spec in extra:
            if len(spec) == 4:
                all_edges.append(spec)
            else:
                u, v, length = spec
                while f"a{k}" in used:
                    k += 1
                used.add(f"a{k}")
                all_edges.append((f"a{k}", u, v, length))
        return MetricGraph(self.vertices, all_edges, name=name or self.name)

    def distance_matrix(self) -> dict[str, dict[str, float]]:
        """Combinatorial hop distances (edges count 1 regardless of length)."""
        dist = {}
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        for s in self.vertices:
            d = {s: 0}
            q = deque([s])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y not in d:
                        d[y] = d[x] + 1
                        q.append(y)
            dist[s] = defaultdict(lambda: INFINITE, d)
        return dist


# ---------------------------------------------------------------------------
# subdivision


class UnitSubdivision:
    """Unit subdivision of a metric graph plus back-maps to original cells."""

    def __init__(self, graph: MetricGraph):
        self.original = graph
        verts = list(graph.vertices)
        vertex_origin = {v: ("vertex", v) for v in graph.vertices}
        edges = []
        edge_origin = {}
        for e in graph.edges:
            if e.length == 1:
                edges.append((e.eid, e.u, e.v, 1))
                edge_origin[e.eid] = ("edge", e.eid, 0)
                continue
            prev = e.u
            for k in range(1, e.length):
                mid = f"{e.eid}.{k}"
                verts.append(mid)
                vertex_origin[mid] = ("edge", e.eid, k)
                edges.append((f"{e.eid}.{k - 1}s", prev, mid, 1))
                edge_origin[f"{e.eid}.{k - 1}s"] = ("edge", e.eid, k - 1)
                prev = mid
            edges.append((f"{e.eid}.{e.length - 1}s", prev, e.v, 1))
            edge_origin[f"{e.eid}.{e.length - 1}s"] = ("edge", e.eid, e.length - 1)
        self.graph = MetricGraph(verts, edges, name=graph.name)
        self.vertex_origin = vertex_origin
        self.edge_origin = edge_origin


def subdivide_to_unit(g: MetricGraph) -> MetricGraph:
    """Replace every length-k edge by a chain of k unit edges."""
    return UnitSubdivision(g).graph


# ---------------------------------------------------------------------------
# girth


def girth(g: MetricGraph):
    """Length in pi/6 units of the shortest non-backtracking cycle, or INFINITE.

    Computed on the unit subdivision, so a pair of parallel edges yields a
    cycle equal to the sum of their lengths and a loop counts directly.
    """
    u = subdivide_to_unit(g)
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in u.vertices}
    for i, e in enumerate(u.edges):
        adj[e.u].append((e.v, i))
        if e.v != e.u:
            adj[e.v].append((e.u, i))
    best = INFINITE
    # every shortest cycle contains some edge e and has length 1 + d_{G-e}(u,v)
    for i, e in enumerate(u.edges):
        if e.u == e.v:
            best = min(best, 1)
            continue
        if 1 + 1 >= best:
            pass
        dist = {e.u: 0}
        q = deque([e.u])
        limit = best - 1
        found = INFINITE
        while q:
            x = q.popleft()
            if dist[x] >= limit:
                continue
            for y, j in adj[x]:
                if j == i:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == e.v:
                        found = dist[y]
                        q.clear()
                        break
                    q.append(y)
        if found is not INFINITE:
            best = min(best, found + 1)
    return best


# ---------------------------------------------------------------------------
# length spectrum


@dataclass(frozen=True)
class LengthSpectrum:
    """Multiset of lengths of maximal non-branching paths."""

    entries: tuple[tuple[int, int], ...]  # (length, multiplicity), sorted
    pure_cycles: tuple[int, ...] = ()  # lengths contributed by isolated cycles

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __str__(self):
        body = ", ".join(f"({l}, {m})" for l, m in self.entries)
        flag = "  [includes isolated cycles]" if self.pure_cycles else ""
        return "{" + body + "}" + flag


def length_spectrum(g: MetricGraph) -> LengthSpectrum:
    """Lengths of maximal chains whose interior vertices have valency two.

    An isolated cycle component (every vertex of valency 2) contributes a
    single entry equal to its total length and is flagged.
    """
    breakpoints = [v for v in g.vertices if g.valency(v) != 2]
    lengths: list[int] = []
    seen_paths = set()
    # edge-ends: (edge index, endpoint) pairs
    by_vertex: dict[str, list[tuple[int, str]]] = defaultdict(list)
    for i, e in enumerate(g.edges):
        by_vertex[e.u].append((i, e.u))
        if e.v != e.u:
            by_vertex[e.v].append((i, e.v))
        else:
            by_vertex[e.u].append((i, e.u))
    visited_edge_ends = set()
    for v in breakpoints:
        ends = []
        for e in g.incident(v):
            if e.u == e.v:
                ends.append((e.eid, "s"))
                ends.append((e.eid, "t"))
            else:
                ends.append((e.eid, "s" if e.u == v else "t"))
        for end in ends:
            if (v, end) in visited_edge_ends:
                continue
            # walk a chain starting at v through edge `end`
            chain = []
            cur_v = v
            cur_end = end
            while True:
                eid, which = cur_end
                e = g.edge_by_id(eid)
                chain.append(eid)
                if e.u == e.v:
                    nxt = e.u
                    far_end = (eid, "t" if which == "s" else "s")
                else:
                    nxt = e.v if which == "s" else e.u
                    far_end = (eid, "t" if which == "s" else "s")
                visited_edge_ends.add((cur_v, cur_end))
                visited_edge_ends.add((nxt, far_end))
                if g.valency(nxt) != 2:
                    break
                # continue through the unique other edge-end at nxt
                cont = None
                for f in g.incident(nxt):
                    if f.u == f.v:
                        for w in ("s", "t"):
                            if (f.eid, w) != far_end:
                                cont = (f.eid, w)
                    else:
                        cand = (f.eid, "s" if f.u == nxt else "t")
                        if cand != far_end:
                            cont = cand
                assert cont is not None
                cur_v, cur_end = nxt, cont
            key = tuple(chain) if tuple(chain) <= tuple(reversed(chain)) else tuple(reversed(chain))
            if key in seen_paths:
                continue
            seen_paths.add(key)
            lengths.append(sum(g.edge_by_id(eid).length for eid in chain))
    # isolated cycle components: all valency 2, never reached from breakpoints
    pure = []
    used = {eid for key in seen_paths for eid in key}
    comp_seen: set[str] = set()
    for e in g.edges:
        if e.eid in used or e.eid in comp_seen:
            continue
        # flood the component
        comp_edges = set()
        stack = [e.eid]
        while stack:
            eid = stack.pop()
            if eid in comp_edges:
                continue
            comp_edges.add(eid)
            ee = g.edge_by_id(eid)
            for x in (ee.u, ee.v):
                for f in g.incident(x):
                    if f.eid not in comp_edges:
                        stack.append(f.eid)
        comp_seen |= comp_edges
        total = sum(g.edge_by_id(eid).length for eid in comp_edges)
        pure.append(total)
        lengths.append(total)
    counted = Counter(lengths)
    return LengthSpectrum(tuple(sorted(counted.items())), tuple(sorted(pure)))


# ---------------------------------------------------------------------------
# isomorphism, canonical form, automorphisms
#
# Color refinement on (valency, incident length multiset) signatures with
# individualization-refinement backtracking.  Graphs in this package have at
# most a few dozen vertices, so no effort is spent beyond correct pruning.


def _adjacency_signatures(g: MetricGraph):
    """For each vertex: multiset of (length, other) over incident edges; loops tagged."""
    sig = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.u == e.v:
            sig[e.u].append((e.length, None))
            sig[e.u].append((e.length, None))
        else:
            sig[e.u].append((e.length, e.v))
            sig[e.v].append((e.length, e.u))
    return sig


def _refine(g: MetricGraph, colors: dict[str, int]) -> dict[str, int]:
    sig = _adjacency_signatures(g)
    while True:
        keys = {}
        for v in g.vertices:
            ext = sorted((l, -1 if w is None else colors[w]) for l, w in sig[v])
            keys[v] = (colors[v], tuple(ext))
        order = sorted(set(keys.values()))
        rank = {k: i for i, k in enumerate(order)}
        new = {v: rank[keys[v]] for v in g.vertices}
        if new == colors:
            return colors
        colors = new


def _initial_colors(g: MetricGraph) -> dict[str, int]:
    base = {}
    for v in g.vertices:
        lens = sorted((e.length, e.u == e.v) for e in g.incident(v))
        base[v] = (g.valency(v), tuple(lens))
    order = sorted(set(base.values()))
    rank = {k: i for i, k in enumerate(order)}
    return _refine(g, {v: rank[base[v]] for v in g.vertices})


def _pair_multiset(g: MetricGraph):
    pairs = Counter()
    for e in g.edges:
        key = frozenset((e.u, e.v))
        pairs[(key, e.length)] += 1
    return pairs


def _certificate(g: MetricGraph, order: Sequence[str]) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    rows = Counter()
    for e in g.edges:
        i, j = sorted((pos[e.u], pos[e.v]))
        rows[(i, j, e.length)] += 1
    body = ";".join(f"{i},{j},{l},{m}" for (i, j, l), m in sorted(rows.items()))
    return f"n={len(order)}|{body}".encode()


def canonical_form(g: MetricGraph) -> bytes:
    """Canonical byte string: equal for two graphs iff they are isomorphic."""
    if not g.vertices:
        return b"n=0|"
    best: list[Optional[bytes]] = [None]

    def search(colors: dict[str, int]):
        classes = defaultdict(list)
        for v in g.vertices:
            classes[colors[v]].append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            order = sorted(g.vertices, key=lambda v: colors[v])
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        nxt = max(colors.values()) + 1
        for v in classes[target]:
            c2 = dict(colors)
            c2[v] = nxt
            search(_refine(g, c2))

    search(_initial_colors(g))
    assert best[0] is not None
    return best[0]


def _mapping_search(g: MetricGraph, h: MetricGraph, find_all: bool):
    """Length-preserving isomorphisms g -> h via ordered backtracking.

    Yields vertex dicts.  Candidate filtering uses refined colors on the
    disjoint union so that color classes must correspond.
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return
    if sorted(e.length for e in g.edges) != sorted(e.length for e in h.edges):
        return
    cg = _initial_colors(g)
    ch = _initial_colors(h)
    # colors computed independently are comparable only via their class
    # signatures; recompute jointly on the disjoint union for safety.
    union = MetricGraph(
        [f"g:{v}" for v in g.vertices] + [f"h:{v}" for v in h.vertices],
        [(f"g:{e.eid}", f"g:{e.u}", f"g:{e.v}", e.length) for e in g.edges]
        + [(f"h:{e.eid}", f"h:{e.u}", f"h:{e.v}", e.length) for e in h.edges],
    )
    cu = _initial_colors(union)
    cg = {v: cu[f"g:{v}"] for v in g.vertices}
    ch = {v: cu[f"h:{v}"] for v in h.vertices}
    if sorted(Counter(cg.values()).items()) != sorted(Counter(ch.values()).items()):
        return

    g_pairs = _pair_multiset(g)
    h_pairs = _pair_multiset(h)

    gv = sorted(g.vertices, key=lambda v: (cg[v], g.vertices.index(v)))
    hs_by_color = defaultdict(list)
    for v in h.vertices:
        hs_by_color[ch[v]].append(v)
    for c in hs_by_color:
        hs_by_color[c].sort(key=lambda v: h.vertices.index(v))

    adj_g = defaultdict(Counter)
    for (key, l), m in g_pairs.items():
        ks = tuple(key)
        a = ks[0]
        b = ks[1] if len(ks) > 1 else ks[0]
        adj_g[a][(b, l)] += m
        if a != b:
            adj_g[b][(a, l)] += m
    adj_h = defaultdict(Counter)
    for (key, l), m in h_pairs.items():
        ks = tuple(key)
        a = ks[0]
        b = ks[1] if len(ks) > 1 else ks[0]
        adj_h[a][(b, l)] += m
        if a != b:
            adj_h[b][(a, l)] += m

    mapping: dict[str, str] = {}
    used: set[str] = set()
    results = []

    def consistent(v, w):
        if cg[v] != ch[w]:
            return False
        # every already-mapped neighbor relation must be mirrored exactly
        for (x, l), m in adj_g[v].items():
            if x == v:
                if adj_h[w].get((w, l), 0) != m:
                    return False
            elif x in mapping:
                if adj_h[w].get((mapping[x], l), 0) != m:
                    return False
        for (y, l), m in adj_h[w].items():
            if y == w:
                continue
            if y in used:
                x = next(a for a, b in mapping.items() if b == y)
                if adj_g[v].get((x, l), 0) != m:
                    return False
        return True

    def extend(i):
        if i == len(gv):
            results.append(dict(mapping))
            return not find_all
        v = gv[i]
        for w in hs_by_color[cg[v]]:
            if w in used:
                continue
            if not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            done = extend(i + 1)
            del mapping[v]
            used.discard(w)
            if done:
                return True
        return False

    extend(0)
    return results


def is_isomorphic(g: MetricGraph, h: MetricGraph) -> Optional[dict[str, str]]:
    """A length-preserving isomorphism as a vertex map, or None."""
    res = _mapping_search(g, h, find_all=False)
    if not res:
        return None
    m = res[0]
    assert _is_valid_isomorphism(g, h, m)
    return m


def _is_valid_isomorphism(g: MetricGraph, h: MetricGraph, m: dict[str, str]) -> bool:
    if sorted(m) != sorted(g.vertices) or sorted(m.values()) != sorted(h.vertices):
        return False
    gp = Counter(((frozenset((m[e.u], m[e.v])), e.length) for e in g.edges))
    hp = Counter(((frozenset((e.u, e.v)), e.length) for e in h.edges))
    return gp == hp


def automorphisms(g: MetricGraph) -> list[dict[str, str]]:
    """The full length-preserving automorphism group, enumerated."""
    res = _mapping_search(g, g, find_all=True)
    return res if res else []


def automorphism_group(g: MetricGraph) -> tuple[list[dict[str, str]], int]:
    """(generators, exact order) of the length-preserving automorphism group."""
    all_maps = automorphisms(g)
    order = len(all_maps)
    identity = {v: v for v in g.vertices}
    gens: list[dict[str, str]] = []
    closure = {_perm_key(identity)}

    def close(new):
        frontier = [new]
        elems = {k: None for k in closure}
        table = {_perm_key(identity): identity}
        for m in all_maps:
            table[_perm_key(m)] = m
        current = [table[k] for k in closure]
        while frontier:
            a = frontier.pop()
            for b in list(current):
                for prod in (_compose(a, b), _compose(b, a)):
                    k = _perm_key(prod)
                    if k not in elems:
                        elems[k] = None
                        current.append(prod)
                        frontier.append(prod)
            k = _perm_key(a)
            if k not in elems:
                elems[k] = None
                current.append(a)
        return set(elems)

    for m in all_maps:
        k = _perm_key(m)
        if k in closure:
            continue
        gens.append(m)
        closure = close(m)
        if len(closure) == order:
            break
    return gens, order


def _perm_key(m: dict[str, str]):
    return tuple(sorted(m.items()))


def _compose(a: dict[str, str], b: dict[str, str]) -> dict[str, str]:
    return {v: a[b[v]] for v in b}
