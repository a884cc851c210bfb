"""The ramified extension point: arithmetic in Z_p[zeta_p].

The core toolkit restricts its coefficient rings to tame (unramified)
cyclotomic extensions, which covers every character whose order is prime
to p.  Characters of p-power order force the totally ramified extension
Z_p[zeta_p], with uniformizer pi = zeta_p - 1 and e = p - 1 valuation
units per power of p.  This module implements just enough of that ring,
exactly, to demonstrate that the restriction is bookkeeping rather than an
arithmetic obstruction: elements are polynomials in pi modulo the
Eisenstein relation Phi_p(1 + pi) = 0 and a pi-power, and the valuation is
measured in 1/(p-1) units.
"""

from .padics import cyclotomic_poly, vp


class RamifiedRing:
    """Z_p[zeta_p] truncated at pi^cap_e, pi = zeta_p - 1; valuations are
    integers in units of 1/(p-1)."""

    def __init__(self, p, cap_e):
        self.p = p
        self.e = p - 1
        self.cap_e = cap_e
        # Phi_p(1 + pi) = sum C(p, j+1) pi^j: Eisenstein with constant p
        phi = cyclotomic_poly(p)
        rel = [0] * p
        for i, c in enumerate(phi):
            # substitute x = 1 + pi
            for j in range(i + 1):
                rel[j] += c * _binom(i, j)
        assert rel[p - 1] == 1 and rel[0] == p and all(rel[j] % p == 0 for j in range(p - 2))
        self.relation = rel[:p - 1]   # pi^(p-1) = -(rel[0] + rel[1] pi + ...)
        self.pcap = p ** (cap_e // self.e + 2)

    def element(self, coeffs):
        return RamifiedScalar(self, list(coeffs))

    def zeta_p(self):
        return self.element([1, 1] + [0] * (self.e - 2))

    def uniformizer(self):
        return self.element([0, 1] + [0] * (self.e - 2))

    def _reduce(self, vec):
        """Reduce a long pi-polynomial by pi^(p-1) = -(relation), then mod
        the pi-power cap (carried as p-powers on each coordinate)."""
        vec = list(vec)
        e = self.e
        while len(vec) > e:
            top = vec.pop()
            if top:
                for j, r in enumerate(self.relation):
                    vec[len(vec) - e + j] -= top * r
        vec += [0] * (e - len(vec))
        out = []
        for j, c in enumerate(vec):
            # coordinate j carries valuation j + e * v_p(c); cap at cap_e
            allowed = max(0, (self.cap_e - j + e - 1) // e)
            out.append(c % (self.p ** allowed) if allowed else 0)
        return out


class RamifiedScalar:
    __slots__ = ("ring", "vec")

    def __init__(self, ring, vec):
        self.ring = ring
        self.vec = ring._reduce(vec)

    def __add__(self, other):
        other = self._coerce(other)
        return RamifiedScalar(self.ring,
                              [a + b for a, b in zip(self.vec, other.vec)])

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.element([other] + [0] * (self.ring.e - 1))
        return other

    def __neg__(self):
        return RamifiedScalar(self.ring, [-a for a in self.vec])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        res = [0] * (2 * self.ring.e - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    res[i + j] += a * b
        return RamifiedScalar(self.ring, res)

    def __pow__(self, n):
        out = self.ring.element([1] + [0] * (self.ring.e - 1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return all(c == 0 for c in self.vec)

    def valuation_e(self):
        """pi-adic valuation in units of 1/(p-1); None if indistinguishable
        from zero at the working cap."""
        best = None
        for j, c in enumerate(self.vec):
            if c == 0:
                continue
            v = j + self.ring.e * vp(c, self.ring.p)
            best = v if best is None else min(best, v)
        return best

    def __repr__(self):
        return "pi-adic%s" % (self.vec,)


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
