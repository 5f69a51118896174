"""Exact local-rank calculus on metric graphs of girth at least 2*pi.

A root is an embedded path of total length 6 units (pi) starting at a
singular vertex (valency >= 3).  Roots are enumerated on the unit
subdivision, so an endpoint interior to a long edge is an honest vertex.
Two roots with the same underlying path but opposite designated start
vertices count separately; this is the convention that reproduces 168 roots
on the order-2 incidence graph (12 per vertex) and the published census for
the deleted-chamber catalog.

For a root a with start valency q+1 set q_a = q, and let N(a) count the
other roots sharing both endpoints of a, in the same direction.  Then
rk(a) = 1 + N(a)/q_a lies in [1,2]; the graph rank is the mean over all
roots, an exact rational.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .mgraph import FULL_CIRCLE, MetricGraph, UnitSubdivision, girth

HALF_CIRCLE = FULL_CIRCLE // 2  # pi


class RankError(ValueError):
    pass


Root = tuple[str, ...]  # vertex sequence v0..v6 in the unit subdivision


@dataclass(frozen=True)
class RootSystem:
    graph: MetricGraph
    roots: tuple[Root, ...]
    q: dict[Root, int]
    n: dict[Root, int]

    def __len__(self):
        return len(self.roots)

    def rank_of(self, alpha: Root) -> Fraction:
        return Fraction(1) + Fraction(self.n[alpha], self.q[alpha])


def roots(g: MetricGraph) -> RootSystem:
    """All length-pi embedded paths from singular vertices, with q and N data."""
    if girth(g) < FULL_CIRCLE:
        raise RankError("root system undefined: girth below 2*pi")
    sub = UnitSubdivision(g)
    u = sub.graph
    adj: dict[str, list[str]] = defaultdict(list)
    for e in u.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    for v in adj:
        adj[v].sort(key=u.vertices.index)
    singular = [v for v in g.vertices if g.valency(v) >= 3]

    found: list[Root] = []

    def walk(path: list[str], on_path: set[str]):
        if len(path) == HALF_CIRCLE + 1:
            found.append(tuple(path))
            return
        for w in adj[path[-1]]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            walk(path, on_path)
            path.pop()
            on_path.discard(w)

    for s in singular:
        walk([s], {s})

    qmap: dict[Root, int] = {}
    for alpha in found:
        qmap[alpha] = g.valency(alpha[0]) - 1
    ends = Counter((alpha[0], alpha[-1]) for alpha in found)
    nmap: dict[Root, int] = {}
    for alpha in found:
        assert alpha[0] != alpha[-1], "closed root contradicts girth >= 2*pi"
        nmap[alpha] = ends[(alpha[0], alpha[-1])] - 1
        if nmap[alpha] > qmap[alpha]:
            raise RankError("N(a) exceeded q_a; input violates girth assumptions")
    return RootSystem(g, tuple(sorted(found)), qmap, nmap)


def root_rank(rs: RootSystem, alpha: Root) -> Fraction:
    if alpha not in rs.q:
        raise RankError("root does not belong to the given root system")
    return rs.rank_of(alpha)


def root_census(g: MetricGraph) -> dict[Fraction, int]:
    """Counts of roots grouped by exact rank."""
    rs = roots(g)
    census: Counter = Counter(rs.rank_of(a) for a in rs.roots)
    return dict(census)


def graph_rank(g: MetricGraph, p: Union[int, float, str] = 1):
    """Mean root rank: exact Fraction for p=1, max for p=inf, float p-mean else."""
    rs = roots(g)
    if not rs.roots:
        raise RankError("empty root system: graph is degenerate for the rank")
    ranks = [rs.rank_of(a) for a in rs.roots]
    if p == 1:
        return sum(ranks, Fraction(0)) / len(ranks)
    if p in ("inf", float("inf")):
        return max(ranks)
    p = float(p)
    mean = sum(float(r) ** p for r in ranks) / len(ranks)
    return mean ** (1.0 / p)


def is_rank_one_plus(g: MetricGraph) -> bool:
    """True when every root has N(a) <= 1 (the isolated-flats hypothesis)."""
    rs = roots(g)
    return all(rs.n[a] <= 1 for a in rs.roots)


def one_missing_rank(q: int) -> Fraction:
    """Closed-form rank of the order-q incidence graph with one chamber removed."""
    if q < 2:
        raise RankError("one_missing_rank requires q >= 2")
    if q == 2:
        return Fraction(15, 8)
    return 2 - Fraction(2, q**3 + 2 * q**2 + 2 * q - 2)


@dataclass(frozen=True)
class ComplexRank:
    rank: Optional[Fraction]
    thick: bool
    per_vertex: dict[str, Fraction]


def local_rank_complex(c) -> ComplexRank:
    """Average of link ranks over quotient vertices with non-empty root systems.

    Vertices whose link has an empty root system (circles, short trees) are
    skipped; the complex is thick when at least one vertex contributes.
    Rejects complexes with a link of girth below 2*pi.
    """
    from .complexes import link  # local import to avoid a cycle

    per: dict[str, Fraction] = {}
    for v in c.vertices:
        lk = link(c, v)
        if girth(lk) < FULL_CIRCLE:
            raise RankError(f"link at {v!r} has girth below 2*pi; not NPC")
        rs = roots(lk)
        if not rs.roots:
            continue
        per[v] = graph_rank(lk, 1)
    if not per:
        return ComplexRank(None, False, {})
    total = sum(per.values(), Fraction(0)) / len(per)
    return ComplexRank(total, True, per)
