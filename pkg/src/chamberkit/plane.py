"""Incidence graphs of projective planes over prime fields and recognition of
the bipartite regular girth-6 graphs they characterize.

The incidence graph of PG(2,q) has 2(q^2+q+1) vertices, is (q+1)-regular and
has combinatorial girth 6 (12 units with every edge of length 2).  Those
three conditions conversely pin down an incidence graph of a (possibly
exotic) projective plane; the certificate below records exactly them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .mgraph import MetricGraph, automorphisms, girth


class PlaneError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized homogeneous triples over F_q (first nonzero coordinate 1)."""
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def incidence_graph(q: int) -> MetricGraph:
    """Point/line incidence graph of PG(2,q), all edges length 2 (pi/3)."""
    if not _is_prime(q):
        raise PlaneError(f"q={q} is not prime; only prime fields are supported")
    pts = _projective_points(q)
    names_p = [f"p{a},{b},{c}" for (a, b, c) in pts]
    names_l = [f"l{a},{b},{c}" for (a, b, c) in pts]
    edges = []
    k = 0
    for i, p in enumerate(pts):
        for j, l in enumerate(pts):
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0:
                edges.append((f"e{k}", names_p[i], names_l[j], 2))
                k += 1
    g = MetricGraph(names_p + names_l, edges, name=f"PG(2,{q})")
    n = q * q + q + 1
    assert len(g.vertices) == 2 * n and len(g.edges) == (q + 1) * n
    return g


def heawood() -> MetricGraph:
    """The unique order-2 case: the Fano plane incidence graph."""
    return incidence_graph(2).with_name("H")


def projective_order(n_vertices: int) -> Optional[int]:
    """The integer q with 2(q^2+q+1) = n, when it exists.

    The quadratic constraint is authoritative; the equivalent closed form is
    q = (sqrt(2n-3) - 1)/2.  (A variant reading of that radical, with the 1/2
    applied to the square root only, fails its own constraint already at
    n = 14 and is therefore not implemented.)
    """
    if n_vertices < 2:
        return None
    s = 2 * n_vertices - 3
    r = math.isqrt(s)
    if r * r != s or (r - 1) % 2 != 0:
        return None
    q = (r - 1) // 2
    assert 2 * (q * q + q + 1) == n_vertices
    return q


@dataclass(frozen=True)
class BuildingCertificate:
    order: int
    classes: tuple[tuple[str, ...], tuple[str, ...]]
    regular: bool
    girth_ok: bool
    count_ok: bool
    thin: bool  # q < 2: a bare apartment/cycle rather than a thick geometry

    @property
    def valid(self) -> bool:
        return self.regular and self.girth_ok and self.count_ok


def _bipartition(g: MetricGraph) -> Optional[tuple[tuple[str, ...], tuple[str, ...]]]:
    color: dict[str, int] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                y = e.other(x)
                if y == x:
                    return None
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    a = tuple(v for v in g.vertices if color[v] == 0)
    b = tuple(v for v in g.vertices if color[v] == 1)
    return a, b


def is_building_A2(g: MetricGraph) -> Optional[BuildingCertificate]:
    """Certificate when g is (q+1)-regular on 2(q^2+q+1) vertices with girth >= 12.

    Requires every edge to have length 2.  Returns None otherwise.
    """
    if not g.edges or any(e.length != 2 for e in g.edges):
        return None
    q = projective_order(len(g.vertices))
    if q is None:
        return None
    regular = all(g.valency(v) == q + 1 for v in g.vertices)
    if not regular:
        return None
    girth_ok = girth(g) >= 12
    if not girth_ok:
        return None
    classes = _bipartition(g)
    if classes is None:
        return None
    count_ok = len(g.vertices) == 2 * (q * q + q + 1)
    cert = BuildingCertificate(q, classes, regular, girth_ok, count_ok, thin=q < 2)
    return cert if cert.valid else None


@dataclass(frozen=True)
class CompletionResult:
    """All edge sets turning a deficient graph into an A2 building.

    ``completions`` lists the raw added edge sets.  Counting extensions as
    maps into the completed building modulo its automorphisms collapses to
    exactly this list (a target automorphism fixing the completed graph and
    the embedded copy pointwise is trivial), so ``up_to_target`` equals the
    raw count; ``up_to_aut`` additionally folds by automorphisms of the input.
    """

    completions: tuple[tuple[tuple[str, str], ...], ...]
    aut_classes: tuple[tuple[int, ...], ...]  # indices into completions

    @property
    def up_to_target(self) -> int:
        return len(self.completions)

    @property
    def up_to_aut(self) -> int:
        return len(self.aut_classes)


def complete_into_building(g: MetricGraph) -> CompletionResult:
    """Every way to add length-2 edges to g so that is_building_A2 accepts.

    Search saturates sub-(q+1)-valent vertices across the bipartition,
    pruning with the girth-6 condition (new endpoints must be at hop
    distance >= 5 when the edge is inserted).
    """
    q = projective_order(len(g.vertices))
    if q is None:
        raise PlaneError("vertex count admits no projective order")
    if any(e.length != 2 for e in g.edges):
        raise PlaneError("completion requires all edges of length 2")
    classes = _bipartition(g)
    if classes is None:
        return CompletionResult((), ())
    target = q + 1

    deficits = {v: target - g.valency(v) for v in g.vertices}
    if any(d < 0 for d in deficits.values()):
        return CompletionResult((), ())

    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)

    side = {v: 0 for v in classes[0]}
    side.update({v: 1 for v in classes[1]})

    found: list[tuple[tuple[str, str], ...]] = []

    def hop_distance(a: str, b: str, cap: int) -> int:
        if a == b:
            return 0
        from collections import deque

        dist = {a: 0}
        dq = deque([a])
        while dq:
            x = dq.popleft()
            if dist[x] >= cap:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == b:
                        return dist[y]
                    dq.append(y)
        return cap + 1

    added: list[tuple[str, str]] = []

    def rec():
        pick = None
        for v in g.vertices:
            if deficits[v] > 0:
                pick = v
                break
        if pick is None:
            found.append(tuple(sorted(added)))
            return
        last = ""
        for (a, b) in added:
            if a == pick:
                last = max(last, b)
        for w in g.vertices:
            if deficits[w] <= 0 or side[w] == side[pick] or w == pick:
                continue
            if w in adj[pick]:
                continue
            if w <= last:
                continue  # canonical order among edges added at the same vertex
            if hop_distance(pick, w, 4) <= 4:
                continue
            deficits[pick] -= 1
            deficits[w] -= 1
            adj[pick].add(w)
            adj[w].add(pick)
            added.append((pick, w))
            rec()
            added.pop()
            adj[pick].discard(w)
            adj[w].discard(pick)
            deficits[pick] += 1
            deficits[w] += 1

    rec()
    completions = tuple(sorted(set(found)))

    # verify each completion really yields a building
    for comp in completions:
        h = g.add_edges([(u, v, 2) for (u, v) in comp])
        cert = is_building_A2(h)
        assert cert is not None and cert.order == q

    auts = automorphisms(g)
    index = {comp: i for i, comp in enumerate(completions)}
    seen: set[int] = set()
    classes_out: list[tuple[int, ...]] = []
    for i, comp in enumerate(completions):
        if i in seen:
            continue
        orbit = set()
        for a in auts:
            img = tuple(sorted(tuple(sorted((a[u], a[v]))) for (u, v) in comp))
            j = index.get(img)
            if j is not None:
                orbit.add(j)
        orbit.add(i)
        seen |= orbit
        classes_out.append(tuple(sorted(orbit)))
    return CompletionResult(completions, tuple(classes_out))
