"""Finite fields GF(p^n) with explicit tables.

An element is the integer code ``a_0 + a_1 p + ... + a_{n-1} p^{n-1}`` of
its coefficient vector in ``F_p[x] / (modulus)``, so integer order is the
lexicographic order on ``(a_{n-1}, ..., a_0)``.
"""

from functools import lru_cache

from .errors import NotPrimePower

__all__ = ["FiniteField", "field", "prime_power", "is_prime"]


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(q):
    """Return ``(p, n)`` with ``q == p**n``, or raise :class:`NotPrimePower`."""
    if q >= 2:
        p = 2
        while q % p:
            p += 1
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r == 1:
            return p, n
    raise NotPrimePower(f"{q} is not a prime power")


def _digits(code, p, n):
    out = []
    for _ in range(n):
        code, a = divmod(code, p)
        out.append(a)
    return out


def _undigits(coeffs, p):
    code = 0
    for a in reversed(coeffs):
        code = code * p + a
    return code


def _poly_mod(a, m, p):
    """Remainder of ``a`` by monic ``m``; coefficient lists, low degree first."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(m, p):
    n = len(m) - 1
    for deg in range(1, n // 2 + 1):
        for low in range(p ** deg):
            f = _digits(low, p, deg) + [1]
            if not any(_poly_mod(m, f, p)):
                return False
    return True


class FiniteField:
    """GF(q) with full addition and multiplication tables.

    The modulus is the lexicographically smallest monic irreducible of degree
    n, and the primitive element is the smallest code of multiplicative order
    q - 1.  Both are re-verified at construction.
    """

    def __init__(self, q):
        p, n = prime_power(q)
        self.q, self.p, self.n = q, p, n
        self.modulus = self._find_modulus()
        self._add = [[_undigits([(x + y) % p for x, y in zip(_digits(a, p, n), _digits(b, p, n))], p)
                      for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self.zero, self.one = 0, 1
        self._neg = [self._add[a].index(0) for a in range(q)]
        self.primitive = self._find_primitive()
        self.exp = [1]
        for _ in range(q - 2):
            self.exp.append(self._mul[self.exp[-1]][self.primitive])
        self.log = {x: i for i, x in enumerate(self.exp)}

    def _find_modulus(self):
        p, n = self.p, self.n
        for low in range(p ** n):
            m = _digits(low, p, n) + [1]
            if _is_irreducible(m, p):
                return tuple(m)
        raise AssertionError("no irreducible polynomial found")

    def _mul_slow(self, a, b):
        p, n = self.p, self.n
        da, db = _digits(a, p, n), _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return _undigits(_poly_mod(prod, self.modulus, p), p)

    def _find_primitive(self):
        for g in range(2 if self.q > 2 else 1, self.q):
            if self.order(g) == self.q - 1:
                return g
        raise AssertionError("no primitive element found")

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def pow(self, a, k):
        r = 1
        for _ in range(k):
            r = self._mul[r][a]
        return r

    def order(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self._mul[x][a]
            k += 1
        return k

    def power(self, k):
        """``omega ** k`` for the fixed primitive element omega."""
        return self.exp[k % (self.q - 1)]

    def coefficients(self, a):
        return tuple(_digits(a, self.p, self.n))

    def __repr__(self):
        return f"FiniteField({self.q})"


@lru_cache(maxsize=None)
def field(q):
    return FiniteField(q)
