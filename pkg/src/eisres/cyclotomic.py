"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are rational-coefficient polynomials in zeta_n reduced mod the n-th
cyclotomic polynomial, so equality is decidable and every computation that
feeds the p-adic side (Bernoulli numbers, L-values, Gauss sums) is exact.
Binary operations between different levels lift both operands into
Q(zeta_lcm) via zeta_n = zeta_N^(N/n).
"""

from fractions import Fraction
from math import gcd

from .padics import cyclotomic_poly


def _lcm(a, b):
    return a * b // gcd(a, b)


_PHI_Q = {}


def _phi_frac(n):
    if n not in _PHI_Q:
        _PHI_Q[n] = [Fraction(c) for c in cyclotomic_poly(n)]
    return _PHI_Q[n]


def _reduce(coeffs, n):
    """Reduce a Fraction list mod Phi_n; returns tuple of length deg Phi_n."""
    phi = _phi_frac(n)
    d = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, d - 1, -1):
        top = c[i]
        if top:
            for j in range(d + 1):
                c[i - d + j] -= top * phi[j]
    c = c[:d] + [Fraction(0)] * max(0, d - len(c))
    return tuple(c[:d])


class Cyc:
    """An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(d-1)."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        self.n = n
        self.c = _reduce([Fraction(x) for x in coeffs], n)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_rational(q, n=1):
        return Cyc(n, [Fraction(q)])

    @staticmethod
    def root_of_unity(n, k=1):
        """zeta_n^k."""
        k %= n
        return Cyc(n, [0] * k + [1])

    # -- structure ------------------------------------------------------------

    def lift(self, N):
        if N == self.n:
            return self
        assert N % self.n == 0
        step = N // self.n
        out = [Fraction(0)] * (len(_phi_frac(N)) - 1 + self.n * step)
        for i, ci in enumerate(self.c):
            if ci:
                out[i * step] += ci
        return Cyc(N, out)

    def _pair(self, other):
        if not isinstance(other, Cyc):
            other = Cyc.from_rational(other)
        N = _lcm(self.n, other.n)
        return self.lift(N), other.lift(N), N

    def is_zero(self):
        return all(x == 0 for x in self.c)

    def is_rational(self):
        return all(x == 0 for x in self.c[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational number: %r" % (self,))
        return self.c[0]

    def conjugate(self):
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.galois(-1)

    def galois(self, t):
        """zeta_n -> zeta_n^t for t prime to n."""
        if gcd(t % self.n if self.n > 1 else 1, self.n) != 1:
            raise ValueError("not an automorphism")
        out = [Fraction(0)] * self.n if self.n > 1 else [self.c[0]]
        if self.n == 1:
            return Cyc(1, out)
        for i, ci in enumerate(self.c):
            if ci:
                out[(i * t) % self.n] += ci
        return Cyc(self.n, out)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        a, b, N = self._pair(other)
        return Cyc(N, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyc) else Cyc.from_rational(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.n, [x * other for x in self.c])
        a, b, N = self._pair(other)
        res = [Fraction(0)] * (2 * len(a.c) - 1)
        for i, ai in enumerate(a.c):
            if ai:
                for j, bj in enumerate(b.c):
                    if bj:
                        res[i + j] += ai * bj
        return Cyc(N, res)

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid against Phi_n over Q."""
        phi = list(_phi_frac(self.n))
        r0, r1 = phi, list(self.c)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        r0 = _qtrim(r0)
        if len(r0) != 1 or r0[0] == 0:
            raise ZeroDivisionError("not invertible")
        inv = [x / r0[0] for x in s0]
        return Cyc(self.n, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.n, [x / other for x in self.c])
        a, b, N = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyc.from_rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.from_rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b, _ = self._pair(other)
        return a.c == b.c

    def __hash__(self):
        # canonical: drop to minimal level first would be costly; hash via lift-free form
        return hash((self.n, self.c))

    def __repr__(self):
        if self.is_rational():
            return str(self.c[0])
        terms = []
        for i, ci in enumerate(self.c):
            if ci:
                terms.append("%s*z%d^%d" % (ci, self.n, i))
        return " + ".join(terms) if terms else "0"


def _qtrim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qmul(a, b):
    res = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return res


def _qdivmod(a, b):
    a = list(a)
    b = _qtrim(b)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            qc = c / b[db]
            q[i - db] = qc
            for j in range(db + 1):
                a[i - db + j] -= qc * b[j]
    return q, _qtrim(a[:db] if db > 0 else [Fraction(0)])


def embed_padic(x, ring, prec=None):
    """Image of a Cyc under the fixed embedding into ring = Z_p[zeta_m].

    Requires n | m (p-adic order availability) except for rationals.
    """
    if x.is_rational():
        return ring.from_fraction(x.c[0], prec)
    if ring.m % x.n != 0:
        raise ValueError("embedding needs zeta_%d; ring only has zeta_%d"
                         % (x.n, ring.m))
    z = ring.zeta_of_order(x.n)
    acc = ring.zero(prec if prec is not None else ring.cap)
    zp = ring.one(prec)
    for i, ci in enumerate(x.c):
        if ci:
            acc = acc + ring.from_fraction(ci, prec) * zp
        if i < len(x.c) - 1:
            zp = zp * z
    return acc
