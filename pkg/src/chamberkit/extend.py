"""Deciding extendability of a triangle complex into one with building links.

Works on triangulated complexes (every face a unit triangle).  An edge is
deficient when fewer than q*+1 faces contain it, where q* is the largest
projective order among the vertex links.  The invariant graph has one vertex
per end of each deficient edge orbit; a type-0 edge joins the two ends of a
deficient edge and carries the missing-face count as its label, and a type-1
edge joins two ends at a common quotient vertex whose directions are at
least 5 steps apart in the simplicial link.

A family of alternating 6-cycles is saturated when the traversal counts,
with multiplicity, consume every type-0 label exactly, and ample when every
link stays girth >= 6 after adding the family's type-1 chords.  Such a family
exists iff the complex extends; each family builds one candidate extension
(one new triangle per 6-cycle), and extensions are counted up to cellular
isomorphism.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Optional

from .complexes import ComplexError, ShapeComplex, is_triangulated, link, require_valid
from .mgraph import FULL_CIRCLE, MetricGraph, girth
from .plane import is_building_A2, projective_order

InvVertex = tuple[str, str]  # (deficient edge id, end 's' or 't')


class ExtendError(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionInvariant:
    q_star: int
    vertices: tuple[InvVertex, ...]
    type0: dict[str, int]  # deficient edge id -> label
    type1: tuple[frozenset, ...]  # pairs of InvVertex
    vertex_at: dict[InvVertex, str]  # quotient vertex of the edge end
    link_vertex: dict[InvVertex, str]  # direction in the simplicial link
    links: dict[str, "SimplicialLink"]

    def components(self) -> list[tuple[set, set, set]]:
        """Connected components as (inv vertices, type0 edge ids, type1 pairs)."""
        adj = defaultdict(set)
        for eid in self.type0:
            adj[(eid, "s")].add((eid, "t"))
            adj[(eid, "t")].add((eid, "s"))
        for pair in self.type1:
            a, b = tuple(pair)
            adj[a].add(b)
            adj[b].add(a)
        seen = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            t0 = {eid for (eid, _end) in comp if eid in self.type0}
            t1 = {p for p in self.type1 if set(p) <= comp}
            out.append((comp, t0, t1))
        return out

    def as_metric_graph(self) -> MetricGraph:
        """Typed encoding for isomorphism tests: type-1 edges get length 1,
        a type-0 edge with label k gets length 100+k."""
        verts = [f"{e}.{end}" for (e, end) in self.vertices]
        edges = []
        for i, (eid, label) in enumerate(sorted(self.type0.items())):
            edges.append((f"t0_{i}", f"{eid}.s", f"{eid}.t", 100 + label))
        for i, pair in enumerate(sorted(tuple(sorted(f"{e}.{end}" for (e, end) in p)) for p in self.type1)):
            a, b = pair
            edges.append((f"t1_{i}", a, b, 1))
        return MetricGraph(verts, edges, name="invariant")


class SimplicialLink:
    """Link of a vertex of a triangulated complex, as a simple graph.

    Vertices are edge-end names '<eid>.s'/'<eid>.t'; each face corner is one
    combinatorial edge (pi/3).  Girth >= 12 units makes this graph simple.
    """

    def __init__(self, lk: MetricGraph):
        self.graph = lk
        self.adj: dict[str, set[str]] = {v: set() for v in lk.vertices}
        for e in lk.edges:
            if e.length != 2:
                raise ExtendError("simplicial link requires all corners of pi/3")
            if e.v in self.adj[e.u]:
                raise ExtendError("parallel corners: link not simple (girth < 12)")
            self.adj[e.u].add(e.v)
            self.adj[e.v].add(e.u)
        self.extra: list[tuple[str, str]] = []

    def distance(self, a: str, b: str, cap: int = 99) -> int:
        if a == b:
            return 0
        dist = {a: 0}
        q = deque([a])
        extra_adj = defaultdict(set)
        for (x, y) in self.extra:
            extra_adj[x].add(y)
            extra_adj[y].add(x)
        while q:
            x = q.popleft()
            if dist[x] >= cap:
                continue
            for y in self.adj[x] | extra_adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == b:
                        return dist[y]
                    q.append(y)
        return cap + 1


def extension_invariant(c: ShapeComplex) -> ExtensionInvariant:
    """The bicolored labeled graph recording deficient edges and admissible corners."""
    require_valid(c)
    if not is_triangulated(c):
        raise ExtendError("extension invariant requires a triangulated complex")
    links: dict[str, SimplicialLink] = {}
    orders: dict[str, Optional[int]] = {}
    for v in c.vertices:
        lk = link(c, v)
        if girth(lk) < FULL_CIRCLE:
            raise ExtendError(f"link at {v!r} has girth below 2*pi")
        links[v] = SimplicialLink(lk)
        orders[v] = projective_order(len(lk.vertices))
    defined = [q for q in orders.values() if q is not None]
    if not defined:
        raise ExtendError("no vertex link admits an integer projective order")
    q_star = max(defined)

    valency = {e.eid: c.face_valency(e.eid) for e in c.edges}
    deficient = [e for e in c.edges if valency[e.eid] <= q_star]
    for e in deficient:
        for v in (e.src, e.dst):
            if orders[v] is None:
                raise ExtendError(
                    f"deficient edge {e.eid!r} touches vertex {v!r} whose link has "
                    f"no integer projective order")

    vertices: list[InvVertex] = []
    vertex_at: dict[InvVertex, str] = {}
    link_vertex: dict[InvVertex, str] = {}
    type0: dict[str, int] = {}
    for e in deficient:
        label = q_star - valency[e.eid] + 1
        assert label >= 1
        type0[e.eid] = label
        for end, vtx in (("s", e.src), ("t", e.dst)):
            iv = (e.eid, end)
            vertices.append(iv)
            vertex_at[iv] = vtx
            link_vertex[iv] = f"{e.eid}.{end}"

    type1 = []
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            a, b = vertices[i], vertices[j]
            if vertex_at[a] != vertex_at[b]:
                continue
            lk = links[vertex_at[a]]
            if lk.distance(link_vertex[a], link_vertex[b], cap=5) >= 5:
                type1.append(frozenset((a, b)))
    return ExtensionInvariant(q_star, tuple(vertices), type0, tuple(type1),
                              vertex_at, link_vertex, links)


# ---------------------------------------------------------------------------
# alternating 6-cycles


@dataclass(frozen=True)
class SixWalk:
    """Closed alternating walk: t0, t1, t0, t1, t0, t1 from vertex[0]."""

    vertices: tuple[InvVertex, ...]  # v1..v6

    @property
    def t0_edges(self) -> tuple[str, str, str]:
        return (self.vertices[0][0], self.vertices[2][0], self.vertices[4][0])

    @property
    def t1_pairs(self) -> tuple[frozenset, frozenset, frozenset]:
        v = self.vertices
        return (frozenset((v[1], v[2])), frozenset((v[3], v[4])), frozenset((v[5], v[0])))

    def traversal_counts(self) -> Counter:
        return Counter(self.t0_edges)

    def canonical(self) -> tuple:
        # reversal keeps even positions on type-0 edges: (v6..v1) pairs as
        # (v6,v5),(v4,v3),(v2,v1), all type-0
        v = self.vertices
        cands = []
        for r in (0, 2, 4):
            rot = tuple(v[(r + k) % 6] for k in range(6))
            cands.append(rot)
            cands.append(tuple(reversed(rot)))
        return min(cands)


def alternating_six_cycles(inv: ExtensionInvariant) -> list[SixWalk]:
    """All alternating closed 6-walks, up to rotation and reversal.

    Walks need not be injective: a walk may traverse the same type-0 edge
    more than once (each traversal consumes one unit of its label).
    """
    t1_adj: dict[InvVertex, list[InvVertex]] = defaultdict(list)
    for pair in inv.type1:
        a, b = sorted(pair)
        t1_adj[a].append(b)
        t1_adj[b].append(a)
    for k in t1_adj:
        t1_adj[k].sort()

    other = {}
    for eid in inv.type0:
        other[(eid, "s")] = (eid, "t")
        other[(eid, "t")] = (eid, "s")

    found: dict[tuple, SixWalk] = {}
    starts = sorted(v for v in inv.vertices)
    for v1 in starts:
        if v1 not in other:
            continue
        v2 = other[v1]
        for v3 in t1_adj.get(v2, ()):
            if v3 not in other:
                continue
            v4 = other[v3]
            for v5 in t1_adj.get(v4, ()):
                if v5 not in other:
                    continue
                v6 = other[v5]
                for back in t1_adj.get(v6, ()):
                    if back == v1:
                        w = SixWalk((v1, v2, v3, v4, v5, v6))
                        found.setdefault(w.canonical(), w)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# saturated ample families


@dataclass(frozen=True)
class CycleFamily:
    cycles: tuple[SixWalk, ...]

    def traversal_counts(self) -> Counter:
        total = Counter()
        for w in self.cycles:
            total += w.traversal_counts()
        return total

    def t1_pairs(self) -> list[frozenset]:
        out = []
        for w in self.cycles:
            out.extend(w.t1_pairs)
        return out


def _family_is_ample(inv: ExtensionInvariant, pairs: list[frozenset]) -> bool:
    """No cycle of combinatorial length <= 5 in any link plus the added chords."""
    seen = Counter(pairs)
    if any(m > 1 for m in seen.values()):
        return False  # repeated chord is a 2-cycle
    by_vertex: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for pair in pairs:
        a, b = tuple(pair)
        x = inv.vertex_at[a]
        by_vertex[x].append((inv.link_vertex[a], inv.link_vertex[b]))
    for x, chords in by_vertex.items():
        lk = inv.links[x]
        lk.extra = []
        ok = True
        for (u, w) in chords:
            if lk.distance(u, w, cap=4) <= 4:
                ok = False
                break
            lk.extra.append((u, w))
        lk.extra = []
        if not ok:
            return False
    return True


def saturated_ample_families(c: ShapeComplex) -> list[CycleFamily]:
    """Exhaustive list of saturated ample families of alternating 6-cycles."""
    inv = extension_invariant(c)
    return families_of_invariant(inv)


def families_of_invariant(inv: ExtensionInvariant) -> list[CycleFamily]:
    cycles = alternating_six_cycles(inv)
    edge_order = sorted(inv.type0)
    per_cycle = [w.traversal_counts() for w in cycles]
    cycles_for_edge: dict[str, list[int]] = {e: [] for e in edge_order}
    for i, counts in enumerate(per_cycle):
        for e in counts:
            cycles_for_edge[e].append(i)

    remaining = dict(inv.type0)
    chosen: list[int] = []
    chords: list[frozenset] = []
    chord_set: set[frozenset] = set()
    out: list[CycleFamily] = []

    def chords_ok(w: SixWalk) -> bool:
        # every short cycle in an augmented link passes through a last-added
        # chord, so an insertion-time distance >= 5 check is exhaustive
        new_pairs = list(w.t1_pairs)
        if len(set(new_pairs)) != 3:
            return False
        if any(p in chord_set for p in new_pairs):
            return False
        staged = []
        ok = True
        for pair in new_pairs:
            a, b = tuple(pair)
            lk = inv.links[inv.vertex_at[a]]
            if lk.distance(inv.link_vertex[a], inv.link_vertex[b], cap=4) <= 4:
                ok = False
                break
            chord = (inv.link_vertex[a], inv.link_vertex[b])
            lk.extra.append(chord)
            staged.append((lk, chord))
        for (lk, chord) in staged:
            lk.extra.remove(chord)
        return ok

    def push(w: SixWalk):
        for pair in w.t1_pairs:
            chord_set.add(pair)
            a, b = tuple(pair)
            inv.links[inv.vertex_at[a]].extra.append((inv.link_vertex[a], inv.link_vertex[b]))
        for e, m in w.traversal_counts().items():
            remaining[e] -= m

    def pop(w: SixWalk):
        for pair in w.t1_pairs:
            chord_set.discard(pair)
            a, b = tuple(pair)
            inv.links[inv.vertex_at[a]].extra.remove((inv.link_vertex[a], inv.link_vertex[b]))
        for e, m in w.traversal_counts().items():
            remaining[e] += m

    def first_deficit() -> Optional[str]:
        for e in edge_order:
            if remaining[e] > 0:
                return e
        return None

    def rec(target: Optional[str], min_idx: int):
        e = first_deficit()
        if e is None:
            out.append(CycleFamily(tuple(cycles[i] for i in chosen)))
            return
        if e != target:
            target, min_idx = e, 0
        for i in cycles_for_edge[e]:
            if i < min_idx or i in chosen:
                continue
            w = cycles[i]
            counts = per_cycle[i]
            if any(remaining[x] < m for x, m in counts.items()):
                continue
            if not chords_ok(w):
                continue
            push(w)
            chosen.append(i)
            rec(target, i + 1)
            chosen.pop()
            pop(w)

    rec(None, 0)

    for fam in out:
        assert dict(fam.traversal_counts()) == {e: l for e, l in inv.type0.items()}
        assert _family_is_ample(inv, fam.t1_pairs())
    return out


# ---------------------------------------------------------------------------
# building the extension


def build_extension(c: ShapeComplex, family: CycleFamily) -> ShapeComplex:
    """Glue one new unit triangle per 6-walk of the family."""
    inv = extension_invariant(c)
    new_faces = [(f.fid, list(f.sides)) for f in c.faces]
    for k, walk in enumerate(family.cycles):
        v = walk.vertices
        sides = []
        for j in (0, 2, 4):
            eid, end = v[j]
            orient = 1 if end == "s" else -1
            sides.append((eid, orient, 2))
        fid = f"x{k}"
        new_faces.append((fid, sides))
    out = ShapeComplex(c.vertices, [(e.eid, e.src, e.dst) for e in c.edges],
                       new_faces, name=f"{c.name}+ext")
    errors_or_none = _check_extension(out, inv)
    if errors_or_none:
        raise ExtendError(f"built extension is inconsistent: {errors_or_none}")
    return out


def _check_extension(out: ShapeComplex, inv: ExtensionInvariant) -> Optional[str]:
    from .complexes import validate

    errs = validate(out)
    if errs:
        return "; ".join(errs)
    for e in out.edges:
        if out.face_valency(e.eid) != inv.q_star + 1:
            return f"edge {e.eid} has face valency {out.face_valency(e.eid)} != {inv.q_star + 1}"
    return None


def count_extensions(c: ShapeComplex):
    """Number of extensions up to cellular isomorphism, with representatives."""
    from .complexes import complex_isomorphic

    families = saturated_ample_families(c)
    built = [build_extension(c, f) for f in families]
    reps: list[ShapeComplex] = []
    for b in built:
        if not any(complex_isomorphic(b, r) for r in reps):
            reps.append(b)
    return len(reps), reps


def missing_chamber_count(c: ShapeComplex) -> Optional[int]:
    """Minimal number of added faces over all extensions (None if inextensible)."""
    families = saturated_ample_families(c)
    if not families:
        return None
    return min(len(f.cycles) for f in families)


@dataclass(frozen=True)
class ExtensionWitness:
    extended: ShapeComplex
    certificates: dict


def is_building_with_chambers_missing(c: ShapeComplex):
    """True iff a saturated ample family exists; returns a verified witness."""
    n, reps = count_extensions(c)
    if n == 0:
        return False, None
    ext = reps[0]
    certs = {}
    for v in ext.vertices:
        lk = link(ext, v)
        cert = is_building_A2(lk)
        if cert is None:
            raise ExtendError(f"extension link at {v!r} failed the building check")
        certs[v] = cert
    return True, ExtensionWitness(ext, certs)
