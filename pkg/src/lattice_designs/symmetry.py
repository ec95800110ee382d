"""Vertex and edge orbits of simple graphs under their automorphism group.

The search individualizes one vertex at a time and refines the source and
target colourings jointly, so that colour classes are named identically on
both sides and any mismatch in class sizes prunes the branch immediately.
Every complete mapping is verified against the edge set before it is used.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import Exhausted, NotSimple

__all__ = ["Transitivity", "transitivity", "find_isomorphism", "is_isomorphic"]

DEFAULT_NODE_CAP = 10**7


@dataclass(frozen=True)
class Transitivity:
    vertex_transitive: bool
    edge_transitive: bool


class _Search:
    def __init__(self, ga, gb, node_cap):
        self.n = ga.v
        self.adj_a = [sorted(s) for s in ga.neighbors()]
        self.adj_b = [sorted(s) for s in gb.neighbors()]
        self.edges_a = [(min(o, t), max(o, t)) for o, t in ga.edges]
        self.edge_set_b = {(min(o, t), max(o, t)) for o, t in gb.edges}
        self.node_cap = node_cap
        self.nodes = 0

    def _refine(self, ca, cb):
        ncolors = len(set(ca))
        while True:
            sa = [(ca[x], tuple(sorted(ca[y] for y in nb))) for x, nb in enumerate(self.adj_a)]
            sb = [(cb[x], tuple(sorted(cb[y] for y in nb))) for x, nb in enumerate(self.adj_b)]
            if Counter(sa) != Counter(sb):
                return None
            index = {key: i for i, key in enumerate(sorted(set(sa)))}
            ca = [index[s] for s in sa]
            cb = [index[s] for s in sb]
            if len(index) == ncolors:
                return ca, cb
            ncolors = len(index)

    def run(self, ca, cb):
        refined = self._refine(ca, cb)
        if refined is None:
            return None
        ca, cb = refined
        n = self.n
        sizes = Counter(ca)
        if len(sizes) == n:
            where = {c: y for y, c in enumerate(cb)}
            perm = [where[ca[x]] for x in range(n)]
            if all((min(perm[o], perm[t]), max(perm[o], perm[t])) in self.edge_set_b
                   for o, t in self.edges_a):
                return perm
            return None
        cell = min((s, c) for c, s in sizes.items() if s > 1)[1]
        x = ca.index(cell)
        fresh = max(ca) + 1
        ca2 = list(ca)
        ca2[x] = fresh
        for y in (y for y in range(n) if cb[y] == cell):
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise Exhausted(f"automorphism search exceeded {self.node_cap} nodes")
            cb2 = list(cb)
            cb2[y] = fresh
            perm = self.run(ca2, cb2)
            if perm is not None:
                return perm
        return None


def _require_simple(g):
    if not g.is_simple():
        raise NotSimple("automorphism search requires a simple graph")


def find_isomorphism(ga, gb, node_cap=DEFAULT_NODE_CAP):
    """Return a vertex map ``perm`` with ``ga`` edges mapped onto ``gb``, or None."""
    _require_simple(ga)
    _require_simple(gb)
    if ga.v != gb.v or ga.e != gb.e:
        return None
    if sorted(ga.degrees()) != sorted(gb.degrees()):
        return None
    return _Search(ga, gb, node_cap).run([0] * ga.v, [0] * gb.v)


def is_isomorphic(ga, gb, node_cap=DEFAULT_NODE_CAP):
    return find_isomorphism(ga, gb, node_cap) is not None


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def transitivity(g, search_node_cap=DEFAULT_NODE_CAP):
    """Decide vertex- and edge-transitivity of a simple graph exactly.

    Orbits are grown by merging along every automorphism found; a search is
    only launched for a vertex (edge) not yet known to share an orbit with
    vertex 0 (edge 0).

    Raises
    ------
    Exhausted
        If the cumulative backtracking node count exceeds ``search_node_cap``.
    """
    _require_simple(g)
    n = g.v
    edges = [(min(o, t), max(o, t)) for o, t in g.edges]
    edge_index = {e: i for i, e in enumerate(edges)}
    vuf = _UnionFind(n)
    euf = _UnionFind(len(edges))
    search = _Search(g, g, search_node_cap)

    def absorb(perm):
        for x in range(n):
            vuf.union(x, perm[x])
        for i, (a, b) in enumerate(edges):
            pa, pb = perm[a], perm[b]
            euf.union(i, edge_index[(min(pa, pb), max(pa, pb))])

    def individualized(vertices):
        c = [0] * n
        for rank, x in enumerate(vertices, 1):
            c[x] = rank
        return c

    vertex_transitive = True
    for y in range(1, n):
        if vuf.find(y) == vuf.find(0):
            continue
        perm = search.run(individualized([0]), individualized([y]))
        if perm is None:
            vertex_transitive = False
            break
        absorb(perm)

    edge_transitive = True
    if edges:
        a0, b0 = edges[0]
        for j in range(1, len(edges)):
            if euf.find(j) == euf.find(0):
                continue
            a, b = edges[j]
            perm = (search.run(individualized([a0, b0]), individualized([a, b]))
                    or search.run(individualized([a0, b0]), individualized([b, a])))
            if perm is None:
                edge_transitive = False
                break
            absorb(perm)

    return Transitivity(vertex_transitive, edge_transitive)
