"""Spherical-design analysis of the normalized edge vectors.

The normalized vectors ``u_i = P(e_i) / |P(e_i)|`` together with their
negatives form an antipodal set X on the unit sphere of the cycle space.
Edges whose vectors coincide up to sign (edges in series, or the edges of a
cycle) give the same pair of points and are merged into one representative,
so X is a set and ``n = 2 * (number of representatives)``.

Everything is computed on the integer numerators of the projection Gram
matrix: with ``N = M / D`` and equal norms ``c = M_ii / D``, the inner
product of two representatives is ``M_ij / M_ii``.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import DegenerateDimension, UnequalNorms
from .exact import RatMatrix, sphere_moment
from .graph import components, srg_params
from .realization import realize

__all__ = [
    "DesignPointSet",
    "Configuration",
    "DistributionType",
    "PointDistribution",
    "UnequalNormSummary",
    "ComponentAnalysis",
    "build_point_set",
    "distance_set",
    "point_distributions",
    "design_strength",
    "normalized_strength",
    "unequal_norm_summary",
    "analyze_component",
    "configuration",
    "DEFAULT_T_MAX",
]

DEFAULT_T_MAX = 8


def _canonical_row(row):
    """Primitive integer row with positive leading entry, and that sign."""
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        return None, 0
    lead = next(x for x in row if x)
    sign = 1 if lead > 0 else -1
    return tuple(x // (g * sign) for x in row), sign


def _classes(m):
    """Group edges whose projected vectors are parallel.

    Returns ``(reps, classes)`` where ``reps[k]`` is the first edge of class
    ``k`` and ``classes[k]`` lists ``(edge, sign)`` with ``P(edge) = sign *
    lambda * P(rep)`` for some ``lambda > 0``.  Edges projecting to zero are
    left out.
    """
    seen = {}
    reps, classes = [], []
    for i, row in enumerate(m):
        key, sign = _canonical_row(row)
        if key is None:
            continue
        if key not in seen:
            seen[key] = (len(reps), sign)
            reps.append(i)
            classes.append([])
        k, rep_sign = seen[key]
        classes[k].append((i, sign * rep_sign))
    return reps, [tuple(c) for c in classes]


@dataclass(frozen=True)
class DesignPointSet:
    """Antipodal point set ``{+-u_k}`` built from an equal-norm realization.

    Attributes
    ----------
    d : int
        Dimension of the cycle space.
    e : int
        Number of edges of the graph.
    norm : Fraction
        The common squared norm ``c`` of the projected edges.
    classes : tuple
        One entry per representative point, listing ``(edge, sign)`` pairs
        that project onto ``sign * u_k``.
    numerators, scale : tuple, int
        Integer form of the inner products: ``u_i . u_j = numerators[i][j] / scale``.
    """

    d: int
    e: int
    norm: Fraction
    classes: tuple
    numerators: tuple
    scale: int

    @property
    def r(self):
        return len(self.classes)

    @property
    def n(self):
        return 2 * self.r

    @property
    def representatives(self):
        return tuple(c[0][0] for c in self.classes)

    @cached_property
    def ip(self):
        s = self.scale
        return RatMatrix([[Fraction(x, s) for x in row] for row in self.numerators])


def _integer_gram(result):
    m, _ = result.gram.n_matrix.to_integer()
    return m


def build_point_set(result):
    """Normalized antipodal point set of an equal-norm realization.

    Raises
    ------
    UnequalNorms
        If the projected edges do not all have the same squared norm.
    DegenerateDimension
        If the cycle space has dimension at most 1.
    """
    if result.d <= 1:
        raise DegenerateDimension(f"cycle space has dimension {result.d}")
    if result.equal_norm is None:
        raise UnequalNorms(f"{result.distinct_norms} distinct squared norms")
    return _point_set(result)


def _point_set(result):
    m = _integer_gram(result)
    reps, classes = _classes(m)
    scale = m[reps[0]][reps[0]]
    nums = tuple(tuple(m[i][j] for j in reps) for i in reps)
    return DesignPointSet(result.d, result.e, result.equal_norm, tuple(classes), nums, scale)


@dataclass(frozen=True)
class Configuration:
    d: int
    n: int
    s: int
    t: int  # None when the strength is not defined (d = 1)
    distance_set: tuple
    degenerate: bool = False

    def as_tuple(self):
        return (self.d, self.n, self.s, self.t)


@dataclass(frozen=True)
class DistributionType:
    label: str
    counts: tuple  # aligned with PointDistribution.values
    points: int  # number of points of X with this distribution
    representatives: tuple


@dataclass(frozen=True)
class PointDistribution:
    """Counts ``|A_x(X, a)|`` for every point, grouped into types.

    ``per_point[k]`` is the count vector of representative ``k``; both ``u_k``
    and ``-u_k`` share it.  Counts are per sign: the entry for ``a`` counts
    only the points at inner product exactly ``a``.
    """

    values: tuple
    per_point: tuple
    types: tuple

    def as_dicts(self):
        return [dict(zip(self.values, c)) for c in self.per_point]

    def type_sizes(self):
        return tuple(t.points for t in self.types)


def distance_set(ps):
    """Sorted inner products between distinct points of X."""
    s = ps.scale
    vals = {-s}
    for i, row in enumerate(ps.numerators):
        for j, x in enumerate(row):
            if i != j:
                vals.add(x)
                vals.add(-x)
    return tuple(Fraction(v, s) for v in sorted(vals))


def point_distributions(ps):
    values = distance_set(ps)
    s = ps.scale
    index = {v.numerator * s // v.denominator: k for k, v in enumerate(values)}
    minus_one = index[-s]
    per_point = []
    for i, row in enumerate(ps.numerators):
        counts = [0] * len(values)
        counts[minus_one] += 1
        for j, x in enumerate(row):
            if i != j:
                counts[index[x]] += 1
                counts[index[-x]] += 1
        per_point.append(tuple(counts))
    groups = {}
    for k, c in enumerate(per_point):
        groups.setdefault(c, []).append(k)
    types = []
    for label_index, (counts, members) in enumerate(groups.items()):
        types.append(DistributionType(_label(label_index), counts, 2 * len(members), tuple(members)))
    return PointDistribution(values, tuple(per_point), tuple(types))


def _label(k):
    out = ""
    k += 1
    while k:
        k, rem = divmod(k - 1, 26)
        out = chr(65 + rem) + out
    return out


def _power_sums(entries, kmax):
    """``sums[m] = sum(x**(2m))`` for 1 <= m <= kmax/2."""
    sums = [0] * (kmax // 2 + 1)
    for x in entries:
        sq = x * x
        p = sq
        for m in range(1, kmax // 2 + 1):
            sums[m] += p
            p *= sq
    return sums


def design_strength(ps, t_max=DEFAULT_T_MAX):
    """Largest ``t <= t_max`` for which X is a spherical t-design.

    Uses the moment identities ``(1/n^2) sum_{x,y in X} (x.y)^k =
    sphere_moment(d, k)``.  Odd moments of an antipodal set vanish, and each
    even moment reduces to ``(1/r^2) sum_{i,j} ip_ij^k`` over representatives.
    """
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    r, s = ps.r, ps.scale
    sums = _power_sums((x for row in ps.numerators for x in row), t_max)
    for k in range(2, t_max + 1, 2):
        if Fraction(sums[k // 2], r * r * s**k) != sphere_moment(ps.d, k):
            return k - 1
    return t_max


@dataclass(frozen=True)
class UnequalNormSummary:
    """Normalized point set of a realization whose norms differ.

    Normalized inner products may be irrational; each is recorded exactly as
    ``(sign, square)``.
    """

    d: int
    n: int
    s: int
    t: int
    distinct_norms: int


def _normalized_squares(result):
    m = _integer_gram(result)
    reps, _ = _classes(m)
    diag = [m[i][i] for i in reps]
    rows = []
    for a, i in enumerate(reps):
        rows.append([(1 if m[i][j] > 0 else -1 if m[i][j] < 0 else 0,
                      Fraction(m[i][j] * m[i][j], diag[a] * diag[b]))
                     for b, j in enumerate(reps)])
    return rows


def normalized_strength(result, t_max=DEFAULT_T_MAX):
    """Design strength of the normalized antipodal set, for any norms."""
    rows = _normalized_squares(result)
    r = len(rows)
    for k in range(2, t_max + 1, 2):
        total = sum((q ** (k // 2) for row in rows for _, q in row), Fraction(0))
        if total / (r * r) != sphere_moment(result.d, k):
            return k - 1
    return t_max


def unequal_norm_summary(result, t_max=DEFAULT_T_MAX):
    rows = _normalized_squares(result)
    vals = {(-1, Fraction(1))}
    for i, row in enumerate(rows):
        for j, (sign, q) in enumerate(row):
            if i != j:
                vals.add((sign, q))
                vals.add((-sign, q))
    return UnequalNormSummary(result.d, 2 * len(rows), len(vals),
                              normalized_strength(result, t_max), result.distinct_norms)


@dataclass
class ComponentAnalysis:
    """Everything computed for one connected component.

    ``status`` is one of ``"ok"``, ``"unequal-norms"``, ``"degenerate"``
    (d = 0) or ``"degenerate-1d"`` (d = 1).
    """

    vertices: tuple
    edges: tuple
    realization: object
    status: str
    configuration: Configuration = None
    point_set: DesignPointSet = None
    distribution: PointDistribution = None
    unequal: UnequalNormSummary = None
    srg: object = None
    error: str = None
    extras: dict = field(default_factory=dict)

    @property
    def d(self):
        return self.realization.d


def analyze_component(graph, t_max=DEFAULT_T_MAX, per_point=False, vertices=None, edges=None):
    vertices = tuple(range(graph.v)) if vertices is None else tuple(vertices)
    edges = tuple(range(graph.e)) if edges is None else tuple(edges)
    res = realize(graph)
    out = ComponentAnalysis(vertices, edges, res, "ok",
                            srg=srg_params(graph) if graph.is_simple() else None)
    if res.d == 0:
        out.status = "degenerate"
        return out
    if res.d == 1:
        out.status = "degenerate-1d"
        if res.equal_norm is not None:
            out.configuration = Configuration(1, 2, 1, None, (Fraction(-1),), degenerate=True)
        return out
    if res.equal_norm is None:
        out.status = "unequal-norms"
        out.unequal = unequal_norm_summary(res, t_max)
        return out
    ps = _point_set(res)
    dist = distance_set(ps)
    out.point_set = ps
    out.configuration = Configuration(res.d, ps.n, len(dist), design_strength(ps, t_max), dist)
    if per_point:
        out.distribution = point_distributions(ps)
    return out


def configuration(g, t_max=DEFAULT_T_MAX, per_point=False):
    """Run realization and design analysis on every connected component.

    Components are ordered by their smallest vertex.  A failure in one
    component is recorded in its ``error`` field and does not stop the
    others.
    """
    out = []
    for comp in components(g):
        try:
            out.append(analyze_component(comp.graph, t_max, per_point, comp.vertices, comp.edges))
        except (ArithmeticError, ValueError) as exc:
            out.append(ComponentAnalysis(tuple(comp.vertices), tuple(comp.edges), None, "error",
                                         error=f"{type(exc).__name__}: {exc}"))
    return out
