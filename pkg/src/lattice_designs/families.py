"""Deterministic generators for the named graph families.

Generated simple graphs list their edges ``(i, j)``, ``i < j``, in
lexicographic order and are oriented from the lower to the higher vertex.
"""

import json
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from .errors import InvalidParam, NotSymmetric, UnknownName
from .fields import field
from .graph import (OrientedMultigraph, complement, disjoint_union, from_adjacency,
                    multiedge_expand)

__all__ = [
    "gen_complete",
    "gen_cycle",
    "gen_path",
    "gen_bouquet",
    "gen_diamond",
    "gen_complete_multipartite",
    "gen_cocktail_party",
    "gen_hamming",
    "gen_johnson",
    "gen_triangular",
    "gen_square_lattice",
    "gen_paley",
    "gen_cyclotomic",
    "cyclotomic_classes",
    "gen_circulant",
    "gen_polytope",
    "gen_named",
    "seidel_switch",
    "POLYTOPE_NAMES",
    "NAMED_GRAPHS",
]


def _need(cond, msg):
    if not cond:
        raise InvalidParam(msg)


def gen_complete(n):
    _need(n >= 1, "complete graph needs n >= 1")
    return from_adjacency(n, lambda i, j: True)


def gen_cycle(n):
    _need(n >= 3, "cycle needs n >= 3")
    return from_adjacency(n, lambda i, j: j - i in (1, n - 1))


def gen_path(n):
    _need(n >= 1, "path needs n >= 1")
    return from_adjacency(n, lambda i, j: j - i == 1)


def gen_bouquet(d):
    """One vertex with ``d`` loops; realizes the standard lattice Z^d."""
    _need(d >= 1, "bouquet needs d >= 1 loops")
    return OrientedMultigraph(1, ((0, 0),) * d)


def gen_diamond(d):
    """Two vertices joined by ``d + 1`` parallel edges."""
    _need(d >= 1, "diamond needs d >= 1")
    return multiedge_expand(gen_complete(2), d + 1)


def gen_complete_multipartite(parts):
    parts = list(parts)
    _need(parts and all(m >= 1 for m in parts), "parts must be a nonempty list of positive sizes")
    which = [k for k, m in enumerate(parts) for _ in range(m)]
    return from_adjacency(len(which), lambda i, j: which[i] != which[j])


def gen_cocktail_party(k):
    """CP(k): the complement of a perfect matching on 2k vertices."""
    _need(k >= 1, "cocktail party needs k >= 1")
    return complement(disjoint_union([gen_complete(2)] * k))


def gen_hamming(m, q, order=1):
    """Hamming graph of the given order on ``range(q)**m``.

    Vertices are words in odometer order (last coordinate fastest); two
    words are adjacent when they differ in exactly ``order`` coordinates.
    """
    _need(m >= 1 and q >= 2, "Hamming graph needs m >= 1, q >= 2")
    _need(0 < order <= m, "order must satisfy 0 < k <= m")
    words = list(product(range(q), repeat=m))
    return from_adjacency(len(words),
                          lambda i, j: sum(a != b for a, b in zip(words[i], words[j])) == order)


def gen_johnson(q, m, order=1):
    """Johnson graph of the given order on the m-subsets of ``range(q)``.

    Subsets are in colex order; adjacency is ``|x & y| == m - order``.
    """
    _need(1 <= m and 2 * m <= q, "Johnson graph needs 1 <= m <= q/2")
    _need(0 < order <= m, "order must satisfy 0 < k <= m")
    subsets = sorted(combinations(range(q), m), key=lambda s: s[::-1])
    sets = [set(s) for s in subsets]
    return from_adjacency(len(sets), lambda i, j: len(sets[i] & sets[j]) == m - order)


def gen_triangular(m):
    return gen_johnson(m, 2, 1)


def gen_square_lattice(m):
    return gen_hamming(2, m, 1)


def gen_paley(q):
    """Paley graph: field elements, adjacent when the difference is a nonzero square."""
    F = field(q)
    _need(q % 4 == 1, "Paley graph needs q = 1 (mod 4)")
    squares = {F.mul(x, x) for x in range(1, q)}
    return from_adjacency(q, lambda i, j: F.sub(j, i) in squares)


def cyclotomic_classes(q, m):
    """Classes ``C_i = {w**(i + a m)}`` for i = 1..m, with (q - 1)/m elements each."""
    F = field(q)
    _need(m >= 1 and (q - 1) % m == 0, f"m={m} must divide q-1={q - 1}")
    size = (q - 1) // m
    return [frozenset(F.power(i + a * m) for a in range(size)) for i in range(1, m + 1)]


def gen_cyclotomic(q, m):
    """Cyclotomic graph Cyc(q, m): adjacent when the difference lies in C_1.

    Raises
    ------
    NotSymmetric
        If ``-1`` is outside the subgroup ``C_m``, so the relation is not
        symmetric.
    """
    F = field(q)
    classes = cyclotomic_classes(q, m)
    if F.neg(1) not in classes[-1]:
        raise NotSymmetric(f"cyclotomic scheme ({q}, {m}) is not symmetric")
    c1 = classes[0]
    return from_adjacency(q, lambda i, j: F.sub(j, i) in c1)


def gen_circulant(n, connection_set):
    offsets = set(connection_set)
    _need(n >= 2 and offsets, "circulant needs n >= 2 and a nonempty connection set")
    _need(all(1 <= s <= n // 2 for s in offsets), "offsets must lie in [1, n/2]")
    return from_adjacency(n, lambda i, j: (j - i) in offsets or (n - (j - i)) in offsets)


@lru_cache(maxsize=1)
def _polytope_data():
    text = resources.files("lattice_designs").joinpath("data/polytopes.json").read_text()
    return json.loads(text)


_POLYTOPE_ALIASES = {
    "cube": "hexahedron",
    "truncated-cube": "truncated-hexahedron",
    "truncated-cuboctahedron": "great-rhombicuboctahedron",
    "truncated-icosidodecahedron": "great-rhombicosidodecahedron",
    "tesseract": "8-cell",
}

POLYTOPE_NAMES = (
    "tetrahedron", "hexahedron", "octahedron", "dodecahedron", "icosahedron",
    "truncated-tetrahedron", "cuboctahedron", "truncated-octahedron",
    "truncated-hexahedron", "rhombicuboctahedron", "great-rhombicuboctahedron",
    "icosidodecahedron", "truncated-icosahedron", "truncated-dodecahedron",
    "snub-cube", "rhombicosidodecahedron", "great-rhombicosidodecahedron",
    "snub-dodecahedron",
    "5-cell", "8-cell", "16-cell", "24-cell", "120-cell", "600-cell",
)


def _normalize(name):
    return name.strip().lower().replace("_", "-").replace(" ", "-")


def gen_polytope(name):
    """Skeleton of a regular or Archimedean polyhedron or regular 4-polytope."""
    key = _normalize(name)
    key = _POLYTOPE_ALIASES.get(key, key)
    if key == "5-cell":
        return gen_complete(5)
    if key == "8-cell":
        return gen_hamming(4, 2)
    if key == "16-cell":
        return gen_cocktail_party(4)
    data = _polytope_data()
    if key not in data:
        raise UnknownName(f"unknown polytope {name!r}")
    entry = data[key]
    return OrientedMultigraph(entry["v"], tuple(tuple(e) for e in entry["edges"]))


def seidel_switch(g, vertex_subset):
    """Complement the edges between ``vertex_subset`` and the other vertices."""
    if not g.is_simple():
        raise InvalidParam("Seidel switching needs a simple graph")
    s = set(vertex_subset)
    adj = g.neighbors()
    return from_adjacency(g.v, lambda i, j: (j in adj[i]) != ((i in s) != (j in s)))


def _shrikhande():
    cells = [(a, b) for a in range(4) for b in range(4)]
    steps = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    return from_adjacency(16, lambda i, j: ((cells[j][0] - cells[i][0]) % 4,
                                            (cells[j][1] - cells[i][1]) % 4) in steps)


def _clebsch():
    # folded 5-cube: words of length 4, adjacent at distance 1 or 4
    words = list(product(range(2), repeat=4))
    return from_adjacency(16, lambda i, j: sum(a != b for a, b in zip(words[i], words[j])) in (1, 4))


def _chang(which):
    """Chang graphs: T(8) switched on the edges of 4K_2, C_3 + C_5 or C_8 in K_8."""
    pairs = sorted(combinations(range(8), 2), key=lambda s: s[::-1])
    index = {p: i for i, p in enumerate(pairs)}
    if which == 1:
        chosen = [(0, 1), (2, 3), (4, 5), (6, 7)]
    elif which == 2:
        chosen = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)]
    else:
        chosen = [(i, (i + 1) % 8) for i in range(8)]
    subset = [index[(min(a, b), max(a, b))] for a, b in chosen]
    return seidel_switch(gen_triangular(8), subset)


NAMED_GRAPHS = {
    "petersen": lambda: gen_johnson(5, 2, 2),
    "shrikhande": _shrikhande,
    "clebsch": _clebsch,
    "chang1": lambda: _chang(1),
    "chang2": lambda: _chang(2),
    "chang3": lambda: _chang(3),
    "hexagonal": lambda: gen_diamond(2),
}


def gen_named(name):
    """Named exceptional graphs.

    Schläfli, Hoffman-Singleton, Gewirtz, M22 and the Paulus graphs are not
    embedded; read them from graph6 files instead.
    """
    key = _normalize(name).replace("-", "")
    if key not in NAMED_GRAPHS:
        raise UnknownName(f"unknown named graph {name!r}; known: {', '.join(NAMED_GRAPHS)}")
    return NAMED_GRAPHS[key]()
