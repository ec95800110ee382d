"""Exact rational scalars and dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  :class:`RatMatrix` is a small
immutable dense matrix over them; nothing in this module ever touches a
float.
"""

from fractions import Fraction
from math import lcm

from .errors import SingularMatrix

__all__ = [
    "Rational",
    "RatMatrix",
    "as_rational",
    "format_rational",
    "parse_rational",
    "rat_solve",
    "sphere_moment",
]

Rational = Fraction


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def format_rational(x):
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q == 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class RatMatrix:
    """Immutable dense matrix of :class:`~fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries, rows=None, cols=None):
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged or mis-sized matrix data")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def _wrap(cls, data, rows, cols):
        # trusted constructor: data already a tuple of Fraction tuples
        m = object.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
            n, n)

    @classmethod
    def zeros(cls, rows, cols):
        zero = Fraction(0)
        return cls._wrap(tuple((zero,) * cols for _ in range(rows)), rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def tolist(self):
        return [list(r) for r in self._data]

    def diagonal(self):
        return [self._data[i][i] for i in range(min(self.rows, self.cols))]

    def trace(self):
        return sum(self.diagonal(), Fraction(0))

    def transpose(self):
        return RatMatrix._wrap(tuple(zip(*self._data)) if self.rows else (),
                               self.cols, self.rows)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other):
        self._check_same(other)
        return RatMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(ra, rb))
                  for ra, rb in zip(self._data, other._data)),
            self.rows, self.cols)

    def __sub__(self, other):
        self._check_same(other)
        return RatMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(ra, rb))
                  for ra, rb in zip(self._data, other._data)),
            self.rows, self.cols)

    def scale(self, c):
        c = as_rational(c)
        return RatMatrix._wrap(tuple(tuple(c * x for x in r) for r in self._data),
                               self.rows, self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        # integer accumulation over a common denominator per row/column pair
        # would be faster, but dense products are not on the hot path
        cols = other.transpose()._data
        zero = Fraction(0)
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), zero) for c in cols))
        return RatMatrix._wrap(tuple(out), self.rows, other.cols)

    def is_symmetric(self):
        return self.rows == self.cols and self._data == self.transpose()._data

    def common_denominator(self):
        return lcm(1, *(x.denominator for r in self._data for x in r))

    def to_integer(self):
        """Return ``(M, D)`` with integer rows ``M`` and ``self == M / D``."""
        den = self.common_denominator()
        return [[x.numerator * (den // x.denominator) for x in r] for r in self._data], den

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def _height(x):
    return x.numerator.bit_length() + x.denominator.bit_length()


def rat_solve(A, rhs):
    """Solve ``A @ X == rhs`` exactly.

    Gaussian elimination with full pivoting, where the pivot is the nonzero
    entry of smallest bit height in the remaining block.

    Parameters
    ----------
    A : RatMatrix
        Square n x n coefficient matrix.
    rhs : RatMatrix
        n x m right-hand side.

    Returns
    -------
    RatMatrix
        The unique n x m solution.

    Raises
    ------
    SingularMatrix
        If ``A`` is not invertible.
    """
    n = A.rows
    if A.cols != n:
        raise ValueError("coefficient matrix must be square")
    if rhs.rows != n:
        raise ValueError("right-hand side has the wrong number of rows")
    m = rhs.cols
    a = [list(A.row(i)) + list(rhs.row(i)) for i in range(n)]
    col_of = list(range(n))  # column permutation from full pivoting

    for k in range(n):
        best = None
        for i in range(k, n):
            ai = a[i]
            for j in range(k, n):
                x = ai[j]
                if x:
                    h = _height(x)
                    if best is None or h < best[0]:
                        best = (h, i, j)
                        if h <= 2:
                            break
            if best is not None and best[0] <= 2:
                break
        if best is None:
            raise SingularMatrix(f"matrix is singular (rank {k} < {n})")
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            col_of[k], col_of[pj] = col_of[pj], col_of[k]
        piv_row = a[k]
        inv = 1 / piv_row[k]
        for j in range(k, n + m):
            if piv_row[j]:
                piv_row[j] *= inv
        nz = [j for j in range(k + 1, n + m) if piv_row[j]]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            f = ri[k]
            if f:
                for j in nz:
                    ri[j] -= f * piv_row[j]
                ri[k] = Fraction(0)

    # row k now holds the solution for unknown col_of[k]
    sol = [None] * n
    for k in range(n):
        sol[col_of[k]] = tuple(a[k][n:])
    return RatMatrix._wrap(tuple(sol), n, m)


def sphere_moment(d, k):
    """Average of ``(x . y)**k`` over the unit sphere in R^d, for unit y.

    Zero for odd k; ``(k-1)!! / (d (d+2) ... (d+k-2))`` for even k.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    if k % 2:
        return Fraction(0)
    m = Fraction(1)
    for j in range(0, k, 2):
        m *= Fraction(j + 1, d + j)
    return m
