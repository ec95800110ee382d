"""Standard realization of the maximal abelian covering of a finite graph.

The edge space C_1 carries the inner product in which the edges
``e_1, ..., e_e`` are orthonormal (and ``-e`` is the reversed edge).  The
realization maps every edge to its orthogonal projection onto the cycle
space ``ker(boundary)``.  Everything is captured by the projection Gram
matrix ``N[i][j] = <P(e_i), P(e_j)>``; no coordinates are ever produced.

Two independent routes compute ``N``:

* through a fundamental cycle basis ``B``: ``N = B (B^T B)^-1 B^T``;
* through the cut space: ``N = I - D^T L^-1 D`` with ``D`` the incidence
  matrix and ``L`` the Laplacian, both with one grounded vertex per
  component.  Only a (v-1) x (v-1) system is solved, which is what makes
  dense graphs with hundreds of edges cheap.
"""

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import Disconnected
from .exact import RatMatrix, rat_solve
from .graph import _component_labels

__all__ = [
    "CycleBasis",
    "ProjectionGram",
    "RealizationResult",
    "cycle_basis",
    "projection_gram",
    "projection_gram_cut",
    "equal_norm_check",
    "realize",
]


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles as integer columns in the edge basis of C_1."""

    columns: tuple  # d tuples of length e
    e: int

    @property
    def d(self):
        return len(self.columns)

    def matrix(self):
        """The e x d integer matrix as a list of rows."""
        return [[c[i] for c in self.columns] for i in range(self.e)]


@dataclass(frozen=True)
class ProjectionGram:
    n_matrix: RatMatrix
    d: int
    e: int

    def squared_norms(self):
        return self.n_matrix.diagonal()


@dataclass(frozen=True)
class RealizationResult:
    gram: ProjectionGram
    squared_norm_multiset: dict  # Fraction -> count, ascending keys
    equal_norm: Fraction = None

    @property
    def d(self):
        return self.gram.d

    @property
    def e(self):
        return self.gram.e

    @property
    def distinct_norms(self):
        return len(self.squared_norm_multiset)


def _bfs_tree(g, root):
    incident = [[] for _ in range(g.v)]
    for idx, (o, t) in enumerate(g.edges):
        if o != t:
            incident[o].append(idx)
            incident[t].append(idx)
    parent_edge = [None] * g.v
    seen = [False] * g.v
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for idx in incident[x]:
            o, t = g.edges[idx]
            y = t if o == x else o
            if not seen[y]:
                seen[y] = True
                parent_edge[y] = idx
                order.append(y)
                queue.append(y)
    return parent_edge, order, all(seen)


def cycle_basis(g, root=0):
    """Fundamental cycle basis of H_1 from a breadth-first spanning tree.

    The tree is grown from ``root``, scanning incident edges by increasing
    edge index.  Each non-tree edge (loops included) contributes the column
    ``e_j + path(t_j -> o_j)``, with ``+1`` at position ``j``.

    Raises
    ------
    Disconnected
        If ``g`` is not connected.
    """
    if g.v == 0:
        raise Disconnected("graph has no vertices")
    parent_edge, order, connected = _bfs_tree(g, root)
    if not connected:
        raise Disconnected("cycle_basis requires a connected graph")
    # signed chain of the tree path root -> x, as {edge: +-1}
    path = {root: {}}
    for x in order[1:]:
        idx = parent_edge[x]
        o, t = g.edges[idx]
        p = dict(path[o if t == x else t])
        p[idx] = 1 if t == x else -1
        path[x] = p
    tree = {idx for idx in parent_edge if idx is not None}
    columns = []
    for j, (o, t) in enumerate(g.edges):
        if j in tree:
            continue
        col = [0] * g.e
        col[j] = 1
        if o != t:
            for idx, s in path[o].items():
                col[idx] += s
            for idx, s in path[t].items():
                col[idx] -= s
        columns.append(tuple(col))
    return CycleBasis(tuple(columns), g.e)


def projection_gram(basis):
    """Projection Gram matrix ``N = B (B^T B)^-1 B^T`` from a cycle basis."""
    e, d = basis.e, basis.d
    if d == 0:
        return ProjectionGram(RatMatrix.zeros(e, e), 0, e)
    cols = basis.columns
    gram = RatMatrix([[sum(a * b for a, b in zip(ci, cj)) for cj in cols] for ci in cols])
    bt = RatMatrix(cols)  # d x e
    x = rat_solve(gram, bt)  # d x e, equals G^-1 B^T
    rows = basis.matrix()
    zero = Fraction(0)
    n = []
    for i in range(e):
        nz = [(k, b) for k, b in enumerate(rows[i]) if b]
        n.append([sum((b * x[k, j] for k, b in nz), zero) for j in range(e)])
    return ProjectionGram(RatMatrix(n), d, e)


def projection_gram_cut(g):
    """Projection Gram matrix via the grounded Laplacian, ``N = I - D^T L^-1 D``.

    Works for disconnected graphs too (one grounded vertex per component),
    giving the projection onto the full cycle space.
    """
    labels, roots = _component_labels(g)
    grounded = set(roots)
    free = [x for x in range(g.v) if x not in grounded]
    pos = {x: i for i, x in enumerate(free)}
    m = len(free)
    lap = [[0] * m for _ in range(m)]
    for o, t in g.edges:
        if o == t:
            continue
        for a, b in ((o, t), (t, o)):
            if a in pos:
                ia = pos[a]
                lap[ia][ia] += 1
                if b in pos:
                    lap[ia][pos[b]] -= 1
    if m:
        rinv, den = rat_solve(RatMatrix(lap), RatMatrix.identity(m)).to_integer()
    else:
        rinv, den = [], 1

    def r(a, b):
        if a in pos and b in pos:
            return rinv[pos[a]][pos[b]]
        return 0

    e = g.e
    rows = []
    for i, (oi, ti) in enumerate(g.edges):
        row = []
        for j, (oj, tj) in enumerate(g.edges):
            num = -(r(ti, tj) - r(ti, oj) - r(oi, tj) + r(oi, oj))
            if i == j:
                num += den
            row.append(Fraction(num, den))
        rows.append(row)
    d = g.e - g.v + len(roots)
    return ProjectionGram(RatMatrix(rows, e, e), d, e)


def equal_norm_check(gram):
    """Tally the squared norms ``N[i][i]`` and report whether they coincide."""
    counts = Counter(gram.squared_norms())
    multiset = dict(sorted(counts.items()))
    common = next(iter(multiset)) if len(multiset) == 1 else None
    return RealizationResult(gram, multiset, common)


def realize(g, method="cut"):
    """Projection Gram and norm verdict for ``g``.

    ``method="cycle"`` goes through :func:`cycle_basis` (connected graphs
    only); ``method="cut"`` uses the grounded Laplacian.
    """
    if method == "cut":
        gram = projection_gram_cut(g)
    elif method == "cycle":
        gram = projection_gram(cycle_basis(g))
    else:
        raise ValueError(f"unknown method {method!r}")
    return equal_norm_check(gram)
