"""Finite development of universal covers of triangle complexes.

Under nonpositive curvature (every link of girth >= 2*pi) the universal
cover of a triangulated complex has a simple 1-skeleton: loops, parallel
edges, and doubled triangles all force link cycles shorter than 2*pi or
closed geodesics, which CAT(0) spaces do not have.  Balls are therefore
stored with edges keyed by vertex pairs and faces by vertex triples, and a
vertex star lifts as an exact cone over the quotient link.

Lifting is breadth-first: every vertex within distance R-1 of the base has
its star completed against the link of its projection; third sides of lifted
triangles are glued to an existing edge exactly when that edge designates
the same quotient edge end, and the covering property is re-verified
independently afterwards.
"""

from __future__ import annotations

from collections import defaultdict, deque

from .complexes import ShapeComplex, is_npc, is_triangulated, link, require_valid
from .mgraph import MetricGraph


class DevelopError(ValueError):
    pass


def _tail_tag(side):
    eid, o, _a = side
    return f"{eid}.{'s' if o == 1 else 't'}"


def _head_tag(side):
    eid, o, _a = side
    return f"{eid}.{'t' if o == 1 else 's'}"


class QuotientGeometry:
    """Precomputed link and corner structure of a triangulated quotient."""

    def __init__(self, c: ShapeComplex):
        require_valid(c)
        if not is_triangulated(c):
            raise DevelopError("development requires a triangulated complex")
        report = is_npc(c)
        if not report.ok:
            raise DevelopError("development requires nonpositive curvature (link girth >= 2*pi)")
        if report.has_boundary:
            raise DevelopError(f"complex has boundary at {report.boundary_vertices}")
        self.complex = c
        self.links: dict[str, MetricGraph] = {v: link(c, v) for v in c.vertices}
        # tag -> (quotient edge, end); the far end of each tag
        self.tag_edge: dict[str, tuple[str, str]] = {}
        self.tag_other: dict[str, str] = {}
        for e in c.edges:
            self.tag_edge[f"{e.eid}.s"] = (e.eid, "s")
            self.tag_edge[f"{e.eid}.t"] = (e.eid, "t")
            self.tag_other[f"{e.eid}.s"] = f"{e.eid}.t"
            self.tag_other[f"{e.eid}.t"] = f"{e.eid}.s"
        self.tag_vertex = {}
        for e in c.edges:
            self.tag_vertex[f"{e.eid}.s"] = e.src
            self.tag_vertex[f"{e.eid}.t"] = e.dst
        # corners[x]: per corner, the tags needed to lift its face in one step
        self.corners: dict[str, list[tuple]] = {v: [] for v in c.vertices}
        corner_pairs: dict[str, set] = {v: set() for v in c.vertices}
        for f in c.faces:
            for i in range(3):
                side = f.sides[i]
                nxt = f.sides[(i + 1) % 3]
                third = f.sides[(i + 2) % 3]
                x = c.side_head(side)
                inc, out = _head_tag(side), _tail_tag(nxt)
                key = frozenset((inc, out))
                if key in corner_pairs[x]:
                    raise DevelopError(
                        f"two corners join the same directions at {x!r}; link not simple")
                corner_pairs[x].add(key)
                # third side runs tail=head(nxt) -> head=tail(side); the other
                # two corners of the face sit at the far ends of out and inc
                out_corner = frozenset((_head_tag(nxt), _tail_tag(third)))
                in_corner = frozenset((_head_tag(third), _tail_tag(side)))
                self.corners[x].append((inc, out, f.fid,
                                        _tail_tag(third), _head_tag(third),
                                        out_corner, in_corner))


class DevelopedBall:
    """A radius-R piece of the universal cover with its projection."""

    def __init__(self, geometry: QuotientGeometry, base_quotient_vertex: str, radius: int):
        self.geometry = geometry
        self.radius = radius
        self.base = 0
        self.proj_vertex: list[str] = [base_quotient_vertex]
        self.dist: list[int] = [0]
        self.link_map: list[dict[str, int]] = [{}]
        self.edges: dict[frozenset, tuple[str, dict]] = {}
        self.faces: dict[frozenset, str] = {}
        self.realized: list[set] = [set()]
        self.interior: set[int] = set()

    # -- construction helpers ---------------------------------------------

    def _new_vertex(self, quotient_vertex: str, dist: int) -> int:
        self.proj_vertex.append(quotient_vertex)
        self.dist.append(dist)
        self.link_map.append({})
        self.realized.append(set())
        return len(self.proj_vertex) - 1

    def _add_edge(self, u: int, w: int, tag_u: str, tag_w: str):
        geo = self.geometry
        assert u != w, "loop edge cannot occur in a cover of an NPC complex"
        assert geo.tag_other[tag_u] == tag_w
        assert tag_u not in self.link_map[u] and tag_w not in self.link_map[w]
        eid, _end = geo.tag_edge[tag_u]
        self.edges[frozenset((u, w))] = (eid, {u: tag_u, w: tag_w})
        self.link_map[u][tag_u] = w
        self.link_map[w][tag_w] = u

    def _complete_star(self, v: int):
        geo = self.geometry
        x = self.proj_vertex[v]
        lk = geo.links[x]
        for tag in lk.vertices:
            if tag not in self.link_map[v]:
                other_tag = geo.tag_other[tag]
                w = self._new_vertex(geo.tag_vertex[other_tag], self.dist[v] + 1)
                self._add_edge(v, w, tag, other_tag)
        for (inc, out, fid, third_tail, third_head, out_corner, in_corner) in geo.corners[x]:
            key = frozenset((inc, out))
            if key in self.realized[v]:
                continue
            w_out = self.link_map[v][out]
            w_in = self.link_map[v][inc]
            has_at_out = self.link_map[w_out].get(third_tail)
            has_at_in = self.link_map[w_in].get(third_head)
            if has_at_out is None and has_at_in is None:
                self._add_edge(w_out, w_in, third_tail, third_head)
            elif has_at_out == w_in and has_at_in == w_out:
                pass
            else:
                raise DevelopError(
                    f"inconsistent gluing while lifting face {fid!r} at ball vertex {v}")
            triple = frozenset((v, w_in, w_out))
            if triple in self.faces:
                raise DevelopError(f"doubled face lift over {fid!r}")
            self.faces[triple] = fid
            self.realized[v].add(key)
            self.realized[w_out].add(out_corner)
            self.realized[w_in].add(in_corner)
        self.interior.add(v)

    # -- queries ------------------------------------------------------------

    def n_vertices(self) -> int:
        return len(self.proj_vertex)

    def frontier(self) -> set[int]:
        return {v for v in range(self.n_vertices()) if v not in self.interior}

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.link_map[v].values())

    def faces_at(self, v: int) -> list[frozenset]:
        return sorted((t for t in self.faces if v in t), key=sorted)

    def ball_distance(self, v: int, targets: set[int]) -> int:
        if v in targets:
            return 0
        dist = {v: 0}
        q = deque([v])
        while q:
            x = q.popleft()
            for y in self.link_map[x].values():
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y in targets:
                        return dist[y]
                    q.append(y)
        return max(dist.values()) + 1

    def to_shape_complex(self) -> ShapeComplex:
        verts = [f"b{i}" for i in range(self.n_vertices())]
        edges = []
        edge_id = {}
        for k, (key, (eid, ends)) in enumerate(sorted(self.edges.items(), key=lambda kv: sorted(kv[0]))):
            pair = sorted(key)
            u, w = pair
            tag_u = ends[u]
            src, dst = (u, w) if tag_u.endswith(".s") else (w, u)
            edge_id[key] = (f"E{k}", src)
            edges.append((f"E{k}", f"b{src}", f"b{dst}"))
        faces = []
        for k, (triple, fid) in enumerate(sorted(self.faces.items(), key=lambda kv: sorted(kv[0]))):
            vs = sorted(triple)
            a, b, c = vs
            sides = []
            for (p, q) in ((a, b), (b, c), (c, a)):
                key = frozenset((p, q))
                eid, src = edge_id[key]
                sides.append((eid, 1 if src == p else -1, 2))
            faces.append((f"F{k}", sides))
        out = ShapeComplex(verts, edges, faces, name=f"ball({self.geometry.complex.name})")
        return out

    def projection_report(self) -> dict:
        return {
            "vertices": {f"b{i}": self.proj_vertex[i] for i in range(self.n_vertices())},
            "dist": {f"b{i}": self.dist[i] for i in range(self.n_vertices())},
            "interior": sorted(f"b{i}" for i in self.interior),
        }


def develop_ball(c: ShapeComplex, base: str, radius: int) -> DevelopedBall:
    """Breadth-first lift of the quotient around a base vertex out to radius R."""
    if radius < 0:
        raise DevelopError("radius must be >= 0")
    geo = QuotientGeometry(c)
    if base not in c.vertices:
        raise DevelopError(f"unknown base vertex {base!r}")
    ball = DevelopedBall(geo, base, radius)
    i = 0
    while i < ball.n_vertices():
        if ball.dist[i] <= radius - 1:
            ball._complete_star(i)
        i += 1
    return ball


def verify_cover(ball: DevelopedBall) -> bool:
    """Recompute every interior link from the lifted faces and compare."""
    geo = ball.geometry
    for v in ball.interior:
        x = ball.proj_vertex[v]
        lk = geo.links[x]
        tags = ball.link_map[v]
        if set(tags) != set(lk.vertices):
            return False
        if len(set(tags.values())) != len(tags):
            return False
        corners = set()
        for triple, fid in ball.faces.items():
            if v not in triple:
                continue
            others = [w for w in triple if w != v]
            tag_of = {}
            for w in others:
                eid, ends = ball.edges[frozenset((v, w))]
                tag_of[w] = ends[v]
            corners.add(frozenset(tag_of.values()))
        expected = {frozenset((e.u, e.v)) for e in lk.edges}
        if corners != expected:
            return False
        face_count = sum(1 for t in ball.faces if v in t)
        if face_count != len(lk.edges):
            return False
    return True


# ---------------------------------------------------------------------------
# flat disks

_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def _hex_dist(p) -> int:
    a, b = p
    return (abs(a) + abs(b) + abs(a + b)) // 2


def _disk_triangles(r: int):
    """Unit triangles of the hexagonal disk of radius r, in a BFS order where
    every triangle after the first shares an edge with an earlier one."""
    tris = set()
    for a in range(-r - 1, r + 1):
        for b in range(-r - 1, r + 1):
            up = ((a, b), (a + 1, b), (a, b + 1))
            down = ((a + 1, b), (a, b + 1), (a + 1, b + 1))
            for t in (up, down):
                if all(_hex_dist(p) <= r for p in t):
                    tris.add(frozenset(t))
    start = frozenset(((0, 0), (1, 0), (0, 1)))
    assert start in tris
    order = [start]
    placed = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for other in sorted(tris - placed, key=sorted):
            if len(t & other) == 2:
                order.append(other)
                placed.add(other)
                queue.append(other)
    assert len(order) == len(tris)
    return order


def flat_disk_radius(ball: DevelopedBall, v: int) -> int:
    """Largest r such that some flat combinatorial disk of radius r centered
    at v embeds in the ball (every interior vertex in exactly 6 triangles)."""
    if v not in ball.interior:
        raise DevelopError("flat disks are searched around interior vertices only")
    cap = ball.ball_distance(v, ball.frontier())
    best = 0
    for r in range(1, cap + 1):
        if _flat_disk_exists(ball, v, r):
            best = r
        else:
            break
    return best


def _flat_disk_exists(ball: DevelopedBall, center: int, r: int) -> bool:
    order = _disk_triangles(r)
    faces_by_edge: dict[frozenset, list[frozenset]] = defaultdict(list)
    for triple in ball.faces:
        vs = sorted(triple)
        for i in range(3):
            for j in range(i + 1, 3):
                faces_by_edge[frozenset((vs[i], vs[j]))].append(triple)

    vmap: dict[tuple, int] = {(0, 0): center}
    used_vertices = {center}
    used_faces: set[frozenset] = set()

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        tri = sorted(order[idx])
        mapped = [p for p in tri if p in vmap]
        assert len(mapped) >= 2 or idx == 0
        if len(mapped) == 3:
            triple = frozenset(vmap[p] for p in tri)
            if len(triple) != 3 or triple not in ball.faces or triple in used_faces:
                return False
            used_faces.add(triple)
            ok = rec(idx + 1)
            used_faces.discard(triple)
            return ok
        if idx == 0:
            # seed: pick any face at the center and one of its alignments
            free = [p for p in tri if p not in vmap]
            for triple in sorted((t for t in ball.faces if center in t), key=sorted):
                others = sorted(w for w in triple if w != center)
                for assign in (others, others[::-1]):
                    if triple in used_faces:
                        continue
                    if any(w in used_vertices for w in assign):
                        continue
                    for p, w in zip(free, assign):
                        vmap[p] = w
                        used_vertices.add(w)
                    used_faces.add(triple)
                    if rec(idx + 1):
                        return True
                    used_faces.discard(triple)
                    for p in free:
                        used_vertices.discard(vmap.pop(p))
            return False
        (p1, p2) = mapped[0], mapped[1]
        free = [p for p in tri if p not in vmap]
        key = frozenset((vmap[p1], vmap[p2]))
        if len(key) != 2:
            return False
        for triple in faces_by_edge.get(key, ()):
            if triple in used_faces:
                continue
            w = next(iter(triple - key))
            if not free:
                continue
            if w in used_vertices:
                continue
            vmap[free[0]] = w
            used_vertices.add(w)
            used_faces.add(triple)
            if rec(idx + 1):
                return True
            used_faces.discard(triple)
            used_vertices.discard(w)
            del vmap[free[0]]
        return False

    return rec(0)
