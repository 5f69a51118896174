"""Equivariant chamber removal from spherical incidence graphs.

A chamber of a 1-dimensional spherical geometry is an edge; removing it
deletes the open edge and keeps both endpoints.  Removal sets are matchings
(pairwise vertex-disjoint edges) and are classified up to the automorphism
group of the ambient incidence graph.

The six order-2 classes with three chambers removed are named G1..G6.  The
names are pinned by invariants only: the sorted pairwise-distance profile of
the removed matching splits the cases, the length spectrum separates the two
(1,1,2) classes, and the count of mean-curvature-one rays (rank-1 roots)
separates the two (2,2,2) classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import rank as rank_mod
from .mgraph import MetricGraph, automorphisms, canonical_form, length_spectrum
from .plane import incidence_graph


class SurgeryError(ValueError):
    pass


EdgeSet = tuple[tuple[str, str], ...]  # sorted tuple of sorted endpoint pairs


def _edge_pairs(g: MetricGraph) -> list[tuple[str, str]]:
    return [tuple(sorted((e.u, e.v))) for e in g.edges]


def disjoint_edge_sets(g: MetricGraph, k: int) -> list[EdgeSet]:
    """All k-subsets of edges with pairwise disjoint endpoint sets."""
    if k < 1:
        raise SurgeryError("k must be >= 1")
    pairs = _edge_pairs(g)
    out: list[EdgeSet] = []

    def rec(start: int, chosen: list[tuple[str, str]], covered: set[str]):
        if len(chosen) == k:
            out.append(tuple(sorted(chosen)))
            return
        for i in range(start, len(pairs)):
            u, v = pairs[i]
            if u in covered or v in covered or u == v:
                continue
            chosen.append(pairs[i])
            covered.update((u, v))
            rec(i + 1, chosen, covered)
            chosen.pop()
            covered.difference_update((u, v))

    rec(0, [], set())
    return sorted(set(out))


def distance_profile(g: MetricGraph, edges: EdgeSet) -> tuple[int, ...]:
    """Sorted pairwise hop distances between disjoint edges.

    The distance between two edges is the number of edges on a shortest path
    connecting them (1 when some endpoints are adjacent); sharing a vertex is
    rejected.
    """
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                raise SurgeryError("edges share a vertex")
    dist = g.distance_matrix()
    profile = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            d = min(dist[x][y] for x in edges[i] for y in edges[j])
            profile.append(int(d))
    return tuple(sorted(profile))


def _remove_matching(g: MetricGraph, edges: EdgeSet, name: str) -> MetricGraph:
    need = {tuple(sorted(p)): 1 for p in edges}
    drop = []
    for e in g.edges:
        key = tuple(sorted((e.u, e.v)))
        if need.get(key, 0) > 0:
            need[key] -= 1
            drop.append(e.eid)
    if any(v > 0 for v in need.values()):
        raise SurgeryError("matching references edges not in graph")
    return g.remove_edges(drop, name=name)


@dataclass(frozen=True)
class RemovalClass:
    representative: EdgeSet
    orbit_size: int
    graph: MetricGraph
    profile: tuple[int, ...]
    name: Optional[str] = None


def classify_removals(q: int, k: int) -> list[RemovalClass]:
    """Orbit classes of k-chamber removals from the order-q incidence graph.

    Returns one class per Aut-orbit of k-matchings.  For the supported cases
    the orbit classification and the isomorphism classification of resulting
    graphs coincide; `graph_isomorphism_class_count` checks this.
    """
    g = incidence_graph(q)
    matchings = disjoint_edge_sets(g, k)
    auts = automorphisms(g)
    index = {m: i for i, m in enumerate(matchings)}
    seen: set[int] = set()
    classes: list[RemovalClass] = []
    for i, m in enumerate(matchings):
        if i in seen:
            continue
        orbit = set()
        for a in auts:
            img = tuple(sorted(tuple(sorted((a[u], a[v]))) for (u, v) in m))
            orbit.add(index[img])
        seen |= orbit
        removed = _remove_matching(g, m, name=f"PG(2,{q})-minus-{k}")
        classes.append(RemovalClass(m, len(orbit), removed, distance_profile(g, m)))
    classes.sort(key=lambda c: (c.profile, c.representative))
    if q == 2 and k == 3:
        classes = _name_catalog(classes)
    return classes


def graph_isomorphism_class_count(classes: list[RemovalClass]) -> int:
    return len({canonical_form(c.graph) for c in classes})


_G2_SPECTRUM = ((2, 8), (4, 2), (6, 2))
_G3_SPECTRUM = ((2, 8), (4, 3), (8, 1))


def _name_catalog(classes: list[RemovalClass]) -> list[RemovalClass]:
    named = []
    for c in classes:
        name = None
        if c.profile == (1, 1, 1):
            name = "G1"
        elif c.profile == (1, 2, 2):
            name = "G4"
        elif c.profile == (1, 1, 2):
            spec = length_spectrum(c.graph).entries
            if spec == _G2_SPECTRUM:
                name = "G2"
            elif spec == _G3_SPECTRUM:
                name = "G3"
        elif c.profile == (2, 2, 2):
            census = rank_mod.root_census(c.graph)
            name = "G5" if census.get(Fraction(1), 0) == 0 else "G6"
        if name is None:
            raise SurgeryError(f"cannot name removal class with profile {c.profile}")
        named.append(RemovalClass(c.representative, c.orbit_size,
                                  c.graph.with_name(name), c.profile, name))
    if sorted(x.name for x in named) != [f"G{i}" for i in range(1, 7)]:
        raise SurgeryError("catalog naming did not produce G1..G6")
    return sorted(named, key=lambda c: c.name)


_CATALOG_CACHE: Optional[dict[str, MetricGraph]] = None


def catalog() -> dict[str, MetricGraph]:
    """The six order-2 graphs with three chambers removed, keyed G1..G6."""
    global _CATALOG_CACHE
    if _CATALOG_CACHE is None:
        _CATALOG_CACHE = {c.name: c.graph for c in classify_removals(2, 3)}
    return dict(_CATALOG_CACHE)
