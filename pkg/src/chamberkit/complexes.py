"""Polygonal complex presentations with unit sides and explicit corner angles.

A face is a cyclic word of oriented unit edges; after every side the word
records the interior angle (in pi/6 units) at the head of that side.  All
face shapes used here (triangles, lozenges, parallelograms, trapezes,
hexagons, scaled triangles) are just angle patterns, and each face must
develop to a simple closed polygon in the unit triangular lattice with total
turning 2*pi.  Angles are required to be even (pi/3 granularity).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .mgraph import FULL_CIRCLE, MetricGraph, girth, subdivide_to_unit

Side = tuple[str, int, int]  # (edge id, orientation +1/-1, interior angle after)


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class CEdge:
    eid: str
    src: str
    dst: str


@dataclass(frozen=True)
class Face:
    fid: str
    sides: tuple[Side, ...]


@dataclass(frozen=True)
class CellOrigin:
    """Back-map from the cells of a derived complex to the cells it came from."""

    vertex: dict[str, tuple]
    edge: dict[str, tuple]
    face: dict[str, tuple]


class ShapeComplex:
    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple], faces: Iterable[tuple],
                 name: str = "", origin: Optional[CellOrigin] = None):
        self.name = name
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ComplexError("duplicate vertex id")
        vset = set(self.vertices)
        es = []
        for (eid, src, dst) in edges:
            eid, src, dst = str(eid), str(src), str(dst)
            if src not in vset or dst not in vset:
                raise ComplexError(f"edge {eid!r} references undeclared vertex")
            es.append(CEdge(eid, src, dst))
        self.edges = tuple(es)
        self._edge = {e.eid: e for e in self.edges}
        if len(self._edge) != len(self.edges):
            raise ComplexError("duplicate edge id")
        fs = []
        for (fid, sides) in faces:
            norm = tuple((str(e), int(o), int(a)) for (e, o, a) in sides)
            for (e, o, a) in norm:
                if e not in self._edge:
                    raise ComplexError(f"face {fid!r} uses unknown edge {e!r}")
                if o not in (1, -1):
                    raise ComplexError(f"face {fid!r} has bad orientation {o!r}")
            fs.append(Face(str(fid), norm))
        self.faces = tuple(fs)
        if len({f.fid for f in self.faces}) != len(self.faces):
            raise ComplexError("duplicate face id")
        self.origin = origin

    # -- structure ---------------------------------------------------------

    def edge(self, eid: str) -> CEdge:
        return self._edge[eid]

    def side_tail(self, side: Side) -> str:
        e = self._edge[side[0]]
        return e.src if side[1] == 1 else e.dst

    def side_head(self, side: Side) -> str:
        e = self._edge[side[0]]
        return e.dst if side[1] == 1 else e.src

    def face_valency(self, eid: str) -> int:
        n = 0
        for f in self.faces:
            for s in f.sides:
                if s[0] == eid:
                    n += 1
        return n

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def __repr__(self):
        return (f"ShapeComplex({self.name or 'unnamed'}: {len(self.vertices)}V "
                f"{len(self.edges)}E {len(self.faces)}F)")


def from_face_words(name: str, faces: list[tuple[str, list[Side]]]) -> ShapeComplex:
    """Build a complex from face boundary words alone.

    Vertex identifications are derived from the closure condition: the head
    of each oriented side equals the tail of the next.  Vertices are named
    v0, v1, ... in order of first appearance.
    """
    parent: dict[tuple, tuple] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    def tail_sym(side):
        eid, o, _ = side
        return ("s", eid) if o == 1 else ("t", eid)

    def head_sym(side):
        eid, o, _ = side
        return ("t", eid) if o == 1 else ("s", eid)

    edge_order: list[str] = []
    for fid, sides in faces:
        n = len(sides)
        for i, side in enumerate(sides):
            if side[0] not in edge_order:
                edge_order.append(side[0])
            union(head_sym(side), tail_sym(sides[(i + 1) % n]))

    names: dict[tuple, str] = {}
    counter = 0
    for eid in edge_order:
        for sym in (("s", eid), ("t", eid)):
            r = find(sym)
            if r not in names:
                names[r] = f"v{counter}"
                counter += 1
    vertices = [f"v{i}" for i in range(counter)]
    edges = [(eid, names[find(("s", eid))], names[find(("t", eid))]) for eid in edge_order]
    return ShapeComplex(vertices, edges, faces, name=name)


# ---------------------------------------------------------------------------
# lattice development of faces

# axial coordinates on the unit triangular lattice; direction k is k*60 deg
_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

_SQRT3 = 3 ** 0.5


def _to_xy(p):
    a, b = p
    return (a + b / 2.0, b * _SQRT3 / 2.0)


def develop_face(sides: tuple[Side, ...]):
    """Walk the boundary in the lattice; return the list of corner points.

    Raises ComplexError when the path does not close with total turning 2*pi,
    or revisits a lattice point (non-simple polygon).
    """
    pos = (0, 0)
    d = 0
    pts = [pos]
    turn_total = 0
    for (eid, o, angle) in sides:
        if angle < 1:
            raise ComplexError(f"angle {angle} after edge {eid} must be >= 1")
        if angle % 2 != 0:
            raise ComplexError(f"angle {angle} after edge {eid} is odd (pi/3 granularity required)")
        step = _DIRS[d]
        pos = (pos[0] + step[0], pos[1] + step[1])
        pts.append(pos)
        turn = (6 - angle) // 2
        turn_total += turn
        d = (d + turn) % 6
    if pts[-1] != (0, 0):
        raise ComplexError("face boundary does not close in the lattice")
    if turn_total != 6:
        raise ComplexError(f"face boundary total turning is {turn_total * 60} deg, expected 360")
    interior = pts[:-1]
    if len(set(interior)) != len(interior):
        raise ComplexError("face boundary is not a simple polygon")
    return interior


def validate(c: ShapeComplex) -> list[str]:
    """Check all complex invariants; return a list of error strings (empty = ok)."""
    errors = []
    for f in c.faces:
        n = len(f.sides)
        if n < 3:
            errors.append(f"face {f.fid}: fewer than 3 sides")
            continue
        for i, side in enumerate(f.sides):
            nxt = f.sides[(i + 1) % n]
            if c.side_head(side) != c.side_tail(nxt):
                errors.append(
                    f"face {f.fid}: side {i} ({side[0]}) head {c.side_head(side)} "
                    f"!= tail {c.side_tail(nxt)} of side {(i + 1) % n}")
        total = sum(s[2] for s in f.sides)
        if total != 6 * (n - 2):
            errors.append(f"face {f.fid}: angle sum {total} != {6 * (n - 2)}")
            continue
        try:
            develop_face(f.sides)
        except ComplexError as exc:
            errors.append(f"face {f.fid}: {exc}")
    return errors


def require_valid(c: ShapeComplex):
    errors = validate(c)
    if errors:
        raise ComplexError("; ".join(errors))


# ---------------------------------------------------------------------------
# links


def link(c: ShapeComplex, v: str) -> MetricGraph:
    """The metric graph of directions at v: edge-ends joined by corner angles."""
    if v not in c.vertices:
        raise ComplexError(f"unknown vertex {v!r}")
    ends = []
    for e in c.edges:
        if e.src == v:
            ends.append(f"{e.eid}.s")
        if e.dst == v:
            ends.append(f"{e.eid}.t")
    link_edges = []
    k = 0
    for f in c.faces:
        n = len(f.sides)
        for i, side in enumerate(f.sides):
            corner_vertex = c.side_head(side)
            if corner_vertex != v:
                continue
            nxt = f.sides[(i + 1) % n]
            inc = f"{side[0]}.{'t' if side[1] == 1 else 's'}"
            out = f"{nxt[0]}.{'s' if nxt[1] == 1 else 't'}"
            link_edges.append((f"{f.fid}.c{i}", inc, out, side[2]))
            k += 1
    return MetricGraph(ends, link_edges, name=f"link({c.name}:{v})")


@dataclass(frozen=True)
class NpcReport:
    ok: bool
    girths: dict[str, int]
    has_boundary: bool
    boundary_vertices: tuple[str, ...]


def is_npc(c: ShapeComplex) -> NpcReport:
    """Girth >= 2*pi at every vertex link; boundary reported separately."""
    girths = {}
    boundary = []
    ok = True
    for v in c.vertices:
        lk = link(c, v)
        gv = girth(lk)
        girths[v] = gv
        if gv < FULL_CIRCLE:
            ok = False
        if any(lk.valency(x) <= 1 for x in lk.vertices):
            boundary.append(v)
    return NpcReport(ok, girths, bool(boundary), tuple(boundary))


# ---------------------------------------------------------------------------
# triangulation


def _polygon_triangles(boundary):
    """Unit lattice triangles inside a simple lattice polygon (ccw)."""
    xy = [_to_xy(p) for p in boundary]

    def inside(px, py):
        cnt = 0
        n = len(xy)
        for i in range(n):
            x1, y1 = xy[i]
            x2, y2 = xy[(i + 1) % n]
            if (y1 > py) != (y2 > py):
                xx = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
                if xx > px:
                    cnt += 1
        return cnt % 2 == 1

    amin = min(p[0] for p in boundary) - 1
    amax = max(p[0] for p in boundary) + 1
    bmin = min(p[1] for p in boundary) - 1
    bmax = max(p[1] for p in boundary) + 1
    tris = []
    for a in range(amin, amax + 1):
        for b in range(bmin, bmax + 1):
            up = ((a, b), (a + 1, b), (a, b + 1))
            down = ((a + 1, b), (a + 1, b + 1), (a, b + 1))
            for tri in (up, down):
                cx = sum(_to_xy(p)[0] for p in tri) / 3.0
                cy = sum(_to_xy(p)[1] for p in tri) / 3.0
                if inside(cx, cy):
                    tris.append(tri)
    return tris


def triangulate(c: ShapeComplex) -> ShapeComplex:
    """Subdivide every face into unit triangles along the lattice.

    Lozenges split along their short diagonal, hexagons gain one interior
    vertex, and in general new cells carry a back-map to the face they
    subdivide (in the ``origin`` attribute of the result).
    """
    require_valid(c)
    new_vertices = list(c.vertices)
    new_edges = [(e.eid, e.src, e.dst) for e in c.edges]
    new_faces = []
    v_origin = {v: ("vertex", v) for v in c.vertices}
    e_origin = {e.eid: ("edge", e.eid) for e in c.edges}
    f_origin = {}

    for f in c.faces:
        boundary = develop_face(f.sides)
        n = len(boundary)
        tris = _polygon_triangles(boundary)
        expected_area = len(tris)
        # each unit triangle has the same area; sanity check via the shoelace
        xy = [_to_xy(p) for p in boundary]
        area2 = sum(xy[i][0] * xy[(i + 1) % n][1] - xy[(i + 1) % n][0] * xy[i][1]
                    for i in range(n))
        assert abs(area2 / 2.0 - expected_area * _SQRT3 / 4.0) < 1e-6, \
            f"face {f.fid}: lattice fill does not match the polygon area"

        point_vertex: dict[tuple, str] = {}
        for i, p in enumerate(boundary):
            point_vertex[p] = c.side_tail(f.sides[i])
        k = 0
        for tri in tris:
            for p in tri:
                if p not in point_vertex:
                    vid = f"{f.fid}.i{k}"
                    k += 1
                    point_vertex[p] = vid
                    new_vertices.append(vid)
                    v_origin[vid] = ("face", f.fid, p)

        # sides of the polygon: lattice pair -> (eid, direction along +step)
        side_of: dict[tuple, tuple[str, int]] = {}
        for i, side in enumerate(f.sides):
            a, b = boundary[i], boundary[(i + 1) % n]
            side_of[(a, b)] = (side[0], side[1])
            side_of[(b, a)] = (side[0], -side[1])

        inner_edge: dict[tuple, tuple[str, tuple, tuple]] = {}
        d = 0

        def edge_for(a, b):
            nonlocal d
            if (a, b) in side_of:
                return side_of[(a, b)]
            key = (a, b) if a <= b else (b, a)
            if key not in inner_edge:
                eid = f"{f.fid}.d{d}"
                d += 1
                inner_edge[key] = (eid, key[0], key[1])
                new_edges.append((eid, point_vertex[key[0]], point_vertex[key[1]]))
                e_origin[eid] = ("face", f.fid, key)
            eid, a0, _b0 = inner_edge[key]
            return (eid, 1 if a == a0 else -1)

        for t_idx, tri in enumerate(sorted(tris)):
            sides = []
            for j in range(3):
                a, b = tri[j], tri[(j + 1) % 3]
                eid, o = edge_for(a, b)
                sides.append((eid, o, 2))
            fid = f"{f.fid}.t{t_idx}"
            new_faces.append((fid, sides))
            f_origin[fid] = ("face", f.fid, t_idx)

    out = ShapeComplex(new_vertices, new_edges, new_faces, name=f"tri({c.name})",
                       origin=CellOrigin(v_origin, e_origin, f_origin))
    require_valid(out)
    return out


def is_triangulated(c: ShapeComplex) -> bool:
    return all(len(f.sides) == 3 and all(s[2] == 2 for s in f.sides) for f in c.faces)


# ---------------------------------------------------------------------------
# integer homology


def smith_invariant_factors(rows: list[list[int]]) -> list[int]:
    """Invariant factors (diagonal of the Smith form) of an integer matrix."""
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    factors = []
    top = 0
    while top < min(nr, nc):
        # pick the nonzero pivot of smallest magnitude
        pivot = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        while True:
            done = True
            for i in range(top + 1, nr):
                if m[i][top] % m[top][top] != 0:
                    qout = m[i][top] // m[top][top]
                    for j in range(nc):
                        m[i][j] -= qout * m[top][j]
                    m[top], m[i] = m[i], m[top]
                    done = False
            for j in range(top + 1, nc):
                if m[top][j] % m[top][top] != 0:
                    qout = m[top][j] // m[top][top]
                    for i in range(nr):
                        m[i][j] -= qout * m[i][top]
                    for i in range(nr):
                        m[i][top], m[i][j] = m[i][j], m[i][top]
                    done = False
            if done:
                break
        for i in range(top + 1, nr):
            if m[i][top]:
                qout = m[i][top] // m[top][top]
                for j in range(nc):
                    m[i][j] -= qout * m[top][j]
        for j in range(top + 1, nc):
            if m[top][j]:
                qout = m[top][j] // m[top][top]
                for i in range(nr):
                    m[i][j] -= qout * m[i][top]
        factors.append(abs(m[top][top]))
        top += 1
    # enforce the divisibility chain d1 | d2 | ...
    import math as _math

    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if b % a != 0:
                g = _math.gcd(a, b)
                factors[i], factors[i + 1] = g, a * b // g
                changed = True
    return factors


@dataclass(frozen=True)
class H1Result:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _connected(c: ShapeComplex) -> bool:
    if not c.vertices:
        return True
    adj = defaultdict(set)
    for e in c.edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    seen = {c.vertices[0]}
    stack = [c.vertices[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(c.vertices)


def homology_h1(c: ShapeComplex) -> H1Result:
    """First integer homology of the quotient 2-complex."""
    if not _connected(c):
        raise ComplexError("homology_h1 requires a connected complex")
    eindex = {e.eid: i for i, e in enumerate(c.edges)}
    vindex = {v: i for i, v in enumerate(c.vertices)}
    d2 = [[0] * len(c.faces) for _ in c.edges]
    for j, f in enumerate(c.faces):
        for (eid, o, _a) in f.sides:
            d2[eindex[eid]][j] += o
    d1 = [[0] * len(c.edges) for _ in c.vertices]
    for j, e in enumerate(c.edges):
        d1[vindex[e.dst]][j] += 1
        d1[vindex[e.src]][j] -= 1
    f1 = smith_invariant_factors(d1) if c.edges else []
    rank_d1 = sum(1 for d in f1 if d != 0)
    f2 = smith_invariant_factors(d2) if c.faces and c.edges else []
    rank_d2 = sum(1 for d in f2 if d != 0)
    free = (len(c.edges) - rank_d1) - rank_d2
    torsion = tuple(d for d in f2 if d > 1)
    return H1Result(free, torsion)


# ---------------------------------------------------------------------------
# fundamental group presentation


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...]
    tree_edges: tuple[str, ...]

    def abelianization(self) -> H1Result:
        gindex = {g: i for i, g in enumerate(self.generators)}
        if not self.generators:
            return H1Result(0, ())
        mat = [[0] * max(1, len(self.relators)) for _ in self.generators]
        for j, rel in enumerate(self.relators):
            for (g, s) in rel:
                mat[gindex[g]][j] += s
        factors = smith_invariant_factors(mat) if self.relators else []
        rank = sum(1 for d in factors if d != 0)
        return H1Result(len(self.generators) - rank, tuple(d for d in factors if d > 1))

    def __str__(self):
        def word(rel):
            return "".join(g + ("" if s == 1 else "^-1") for (g, s) in rel) or "1"

        gens = ", ".join(self.generators)
        rels = ", ".join(word(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def presentation(c: ShapeComplex) -> Presentation:
    """Generators: edges off a spanning tree; relators: face boundary words."""
    if not _connected(c):
        raise ComplexError("presentation requires a connected complex")
    tree: set[str] = set()
    reached = {c.vertices[0]} if c.vertices else set()
    grew = True
    while grew:
        grew = False
        for e in c.edges:
            if e.eid in tree or e.src == e.dst:
                continue
            if (e.src in reached) != (e.dst in reached):
                tree.add(e.eid)
                reached.update((e.src, e.dst))
                grew = True
    generators = tuple(e.eid for e in c.edges if e.eid not in tree)
    relators = []
    for f in c.faces:
        rel = tuple((eid, o) for (eid, o, _a) in f.sides if eid not in tree)
        relators.append(rel)
    return Presentation(generators, tuple(relators), tuple(sorted(tree)))


# ---------------------------------------------------------------------------
# cellular isomorphism


@dataclass(frozen=True)
class CellIso:
    vertex_map: dict
    edge_map: dict
    edge_flip: dict  # eid -> +1 (same direction) or -1 (reversed)
    face_map: dict


def _transform_word(c1: ShapeComplex, f: Face, emap, eflip):
    return tuple((emap[eid], o * eflip[eid]) for (eid, o, _a) in f.sides), \
        tuple(a for (_e, _o, a) in f.sides)


def _face_words(f: Face):
    """All cyclic rotations of the face word, forward and mirrored."""
    n = len(f.sides)
    words = []
    base = [(e, o) for (e, o, _a) in f.sides]
    angles = [a for (_e, _o, a) in f.sides]
    for r in range(n):
        w = tuple(base[(r + k) % n] for k in range(n))
        ang = tuple(angles[(r + k) % n] for k in range(n))
        words.append((w, ang, 1))
    mirror_sides = [(base[(n - 1 - k) % n][0], -base[(n - 1 - k) % n][1]) for k in range(n)]
    mirror_angles = [angles[(n - 2 - k) % n] for k in range(n)]
    for r in range(n):
        w = tuple(mirror_sides[(r + k) % n] for k in range(n))
        ang = tuple(mirror_angles[(r + k) % n] for k in range(n))
        words.append((w, ang, -1))
    return words


def complex_isomorphic(c1: ShapeComplex, c2: ShapeComplex,
                       strict_orientation: bool = False) -> Optional[CellIso]:
    """Cellular isomorphism respecting angle patterns; mirrors allowed by default."""
    if (len(c1.vertices), len(c1.edges), len(c1.faces)) != (len(c2.vertices), len(c2.edges), len(c2.faces)):
        return None
    sig1 = sorted(tuple(sorted(a for (_e, _o, a) in f.sides)) for f in c1.faces)
    sig2 = sorted(tuple(sorted(a for (_e, _o, a) in f.sides)) for f in c2.faces)
    if sig1 != sig2:
        return None
    if any(c.face_valency(e.eid) == 0 for c in (c1, c2) for e in c.edges):
        raise ComplexError("isomorphism testing requires every edge to lie in a face")

    f2words = {f.fid: _face_words(f) for f in c2.faces}

    emap: dict[str, str] = {}
    eflip: dict[str, int] = {}
    vmap: dict[str, str] = {}
    fmap: dict[str, str] = {}
    used_f: set[str] = set()
    used_e: set[str] = set()
    used_v: set[str] = set()

    faces1 = list(c1.faces)

    def assign_edge(e1: str, o_rel: int, e2: str) -> Optional[list]:
        """Try mapping edge e1 to e2 with relative flip; return undo list."""
        undo = []
        if e1 in emap:
            if emap[e1] != e2 or eflip[e1] != o_rel:
                return None
            return undo
        if e2 in used_e:
            return None
        a, b = c1.edge(e1).src, c1.edge(e1).dst
        if o_rel == 1:
            ta, tb = c2.edge(e2).src, c2.edge(e2).dst
        else:
            ta, tb = c2.edge(e2).dst, c2.edge(e2).src
        for (x, y) in ((a, ta), (b, tb)):
            if x in vmap:
                if vmap[x] != y:
                    for u in undo:
                        u()
                    return None
            else:
                if y in used_v:
                    for u in undo:
                        u()
                    return None
                vmap[x] = y
                used_v.add(y)
                undo.append(lambda x=x, y=y: (vmap.pop(x), used_v.discard(y)))
        emap[e1] = e2
        eflip[e1] = o_rel
        used_e.add(e2)
        undo.append(lambda: (emap.pop(e1), eflip.pop(e1), used_e.discard(e2)))
        return undo

    def rec(i: int) -> bool:
        if i == len(faces1):
            return len(emap) == len(c1.edges)
        f = faces1[i]
        n = len(f.sides)
        ang1 = tuple(a for (_e, _o, a) in f.sides)
        w1 = tuple((e, o) for (e, o, _a) in f.sides)
        for g in c2.faces:
            if g.fid in used_f or len(g.sides) != n:
                continue
            for (w2, ang2, direction) in f2words[g.fid]:
                if strict_orientation and direction == -1:
                    continue
                if ang2 != ang1:
                    continue
                undo_all = []
                ok = True
                for k in range(n):
                    e1, o1 = w1[k]
                    e2, o2 = w2[k]
                    undo = assign_edge(e1, o1 * o2, e2)
                    if undo is None:
                        ok = False
                        break
                    undo_all.extend(undo)
                if ok:
                    fmap[f.fid] = g.fid
                    used_f.add(g.fid)
                    if rec(i + 1):
                        return True
                    used_f.discard(g.fid)
                    fmap.pop(f.fid)
                for u in reversed(undo_all):
                    u()
        return False

    if rec(0):
        return CellIso(dict(vmap), dict(emap), dict(eflip), dict(fmap))
    return None


# ---------------------------------------------------------------------------
# built-in catalog
#
# Gluing diagrams for the quotient complexes used throughout the package.
# Conventions: triangles are written counterclockwise with all corners 2;
# a lozenge with sides rt (right->top), tl (top->left), rb (right->bottom),
# bl (bottom->left) reads [(rt,+,2),(tl,+,4),(bl,-,2),(rb,-,4)].


def _lozenge(rt, tl, rb, bl):
    return [(rt, 1, 2), (tl, 1, 4), (bl, -1, 2), (rb, -1, 4)]


def _triangle(ab, bt, ta):
    """Sides a->b, b->top, top->a; each entry is (edge, orientation)."""
    out = []
    for (e, o) in (ab, bt, ta):
        out.append((e, o, 2))
    return out


def catalog_complexes() -> dict[str, ShapeComplex]:
    """Exact encodings of the built-in quotient complexes.

    V6_0, V6_1 and the two V6_3 variants are three-lozenge one-vertex
    complexes; V1..V4 realize the remaining deleted-chamber links on one
    vertex class; V_fig4/V_groupG are the two-triangles-plus-hexagon
    complex (two labelings of the same object); V_fig5 mixes triangles, a
    lozenge and two trapezes and has two vertex classes.
    """
    cat: dict[str, ShapeComplex] = {}

    def put(name, faces):
        c = from_face_words(name, faces)
        require_valid(c)
        cat[name] = c

    put("V6_0", [
        ("L1", _lozenge("1", "2", "2", "3")),
        ("L2", _lozenge("1", "4", "3", "2")),
        ("L3", _lozenge("1", "3", "4", "4")),
    ])
    put("V6_1", [
        ("L1", _lozenge("1", "2", "3", "4")),
        ("L2", _lozenge("1", "3", "4", "2")),
        ("L3", _lozenge("1", "4", "2", "3")),
    ])
    put("V6_3_sec4", [
        ("L1", _lozenge("1", "2", "3", "3")),
        ("L2", _lozenge("1", "3", "4", "4")),
        ("L3", _lozenge("1", "4", "2", "2")),
    ])
    put("V6_3_sec6", [
        ("L1", _lozenge("1", "2", "2", "3")),
        ("L2", _lozenge("1", "3", "3", "4")),
        ("L3", _lozenge("1", "4", "4", "2")),
    ])
    put("V1", [
        ("T1", _triangle(("1", 1), ("b", 1), ("a", -1))),
        ("T2", _triangle(("2", 1), ("b", -1), ("a", 1))),
        ("B", [("2", -1, 6), ("2", -1, 2), ("1", -1, 6), ("1", -1, 2),
               ("a", -1, 6), ("b", -1, 2)]),
    ])
    put("V2", [
        ("T1", _triangle(("2", 1), ("1", 1), ("4", 1))),
        ("T2", _triangle(("1", 1), ("3", 1), ("4", 1))),
        ("P", [("1", 1, 2), ("2", 1, 6), ("3", 1, 4), ("4", -1, 2),
               ("2", -1, 6), ("3", -1, 4)]),
    ])
    put("V3", [
        ("T1", _triangle(("3", 1), ("4", 1), ("5", 1))),
        ("T2", _triangle(("5", 1), ("2", 1), ("2", 1))),
        ("L1", [("2", 1, 2), ("1", 1, 4), ("3", 1, 2), ("1", 1, 4)]),
        ("L2", _lozenge("5", "4", "4", "3")),
    ])
    put("V4", [
        ("T1", _triangle(("2", 1), ("4", 1), ("3", 1))),
        ("L1", _lozenge("4", "2", "3", "4")),
        ("P", [("3", -1, 4), ("1", 1, 4), ("2", -1, 2), ("1", -1, 6),
               ("1", -1, 2)]),
    ])
    put("V_fig4", [
        ("T1", _triangle(("1", 1), ("2", 1), ("3", 1))),
        ("T2", _triangle(("1", 1), ("3", 1), ("2", 1))),
        ("H", [("1", 1, 4), ("4", -1, 4), ("2", 1, 4), ("4", -1, 4),
               ("3", 1, 4), ("4", -1, 4)]),
    ])
    put("V_groupG", [
        ("T1", _triangle(("x", 1), ("y", 1), ("z", 1))),
        ("T2", _triangle(("x", 1), ("z", 1), ("y", 1))),
        ("H", [("x", 1, 4), ("t", -1, 4), ("y", 1, 4), ("t", -1, 4),
               ("z", 1, 4), ("t", -1, 4)]),
    ])
    put("V_fig5", [
        ("Ta", _triangle(("2", 1), ("1", 1), ("1", 1))),
        ("Tb", _triangle(("2", 1), ("6", 1), ("6", 1))),
        ("Tc", _triangle(("2", 1), ("8", 1), ("8", 1))),
        ("Td", _triangle(("4", 1), ("9", 1), ("7", 1))),
        ("L", _lozenge("9", "9", "3", "5")),
        ("Z1", [("7", -1, 4), ("3", 1, 4), ("5", -1, 2), ("4", -1, 6),
                ("8", -1, 2)]),
        ("Z2", [("3", -1, 4), ("5", 1, 4), ("4", -1, 2), ("6", -1, 6),
                ("7", -1, 2)]),
    ])
    return cat
