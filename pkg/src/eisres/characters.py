"""Dirichlet characters with exact root-of-unity values.

A character mod M is stored by its images on a fixed generating set of
(Z/MZ)^*: the smallest primitive root for each odd prime power, the pair
(-1, 5) for 2^e with e >= 3, and 3 for modulus 4.  Images are recorded as
exponents, chi(g_i) = zeta_{o_i}^{a_i} with o_i the order of g_i, so
equality, products, conductors and primitive parts are all exact integer
computations.  The trivial character modulo 1 takes the value 1 everywhere,
including at 0; any character with modulus > 1 vanishes at 0.

Values are returned either as elements of Q(zeta) (class Cyc) or through
the fixed p-adic embedding of a PadicRing.  The embedding normalizes the
mu_(p-1) component so that the Teichmuller character omega literally takes
Teichmuller-lift values.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import Cyc
from .padics import smallest_primitive_root


def _lcm(a, b):
    return a * b // gcd(a, b)


def factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


_UNIT_GROUP_CACHE = {}


def unit_group(M):
    """Generators of (Z/MZ)^* as a list of (g, order), CRT-normalized.

    Each generator is congruent to 1 modulo the other prime-power factors.
    """
    if M in _UNIT_GROUP_CACHE:
        return _UNIT_GROUP_CACHE[M]
    gens = []
    fac = factorize(M)
    for q in sorted(fac):
        e = fac[q]
        qe = q ** e
        rest = M // qe
        local = []
        if q == 2:
            if e == 2:
                local = [(3, 2)]
            elif e >= 3:
                local = [(qe - 1, 2), (5, 2 ** (e - 2))]
        else:
            r = smallest_primitive_root(q)
            if pow(r, q - 1, q * q) == 1:
                r += q
            local = [(r % qe, (q - 1) * q ** (e - 1))]
        for g, o in local:
            if rest > 1:
                # CRT lift: g mod qe, 1 mod rest
                inv = pow(qe, -1, rest)
                lift = (g + qe * ((1 - g) * inv % rest)) % M
            else:
                lift = g % M
            gens.append((lift, o))
    _UNIT_GROUP_CACHE[M] = gens
    return gens


_DLOG_CACHE = {}


def _dlog(a, g, o, M):
    """Discrete log of a w.r.t. g of order o in (Z/M)^* (component use)."""
    key = (g, o, M)
    if key not in _DLOG_CACHE:
        table = {}
        x = 1
        for j in range(o):
            table.setdefault(x, j)
            x = (x * g) % M
        _DLOG_CACHE[key] = table
    return _DLOG_CACHE[key].get(a % M)


def decompose_unit(a, M):
    """Exponents (j_i) with a = prod g_i^(j_i) in (Z/MZ)^*."""
    gens = unit_group(M)
    fac = factorize(M)
    exps = []
    idx = 0
    for q in sorted(fac):
        e = fac[q]
        qe = q ** e
        aq = a % qe
        if q == 2:
            if e == 2:
                exps.append(0 if aq == 1 else 1)
                idx += 1
            elif e >= 3:
                # aq = (-1)^s 5^t
                s = 0 if aq % 4 == 1 else 1
                b = (aq * pow(qe - 1, s, qe)) % qe
                t = _dlog(b, 5, 2 ** (e - 2), qe)
                assert t is not None
                exps.extend([s, t])
                idx += 2
        else:
            g, o = gens[idx][0] % qe, gens[idx][1]
            t = _dlog(aq, g, o, qe)
            assert t is not None, (a, M, q)
            exps.append(t)
            idx += 1
    return exps


class DirichletCharacter:
    """chi mod M given by chi(g_i) = zeta_(o_i)^(a_i) on the fixed generators."""

    __slots__ = ("modulus", "exps", "_conductor")

    def __init__(self, modulus, exps):
        self.modulus = modulus
        gens = unit_group(modulus)
        assert len(exps) == len(gens)
        self.exps = tuple(a % o for a, (g, o) in zip(exps, gens))
        self._conductor = None

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def trivial(M=1):
        return DirichletCharacter(M, [0] * len(unit_group(M)))

    @staticmethod
    def from_value_map(M, values):
        """Character from a dict {generator: (k, N)} meaning chi(g) = zeta_N^k."""
        gens = unit_group(M)
        exps = []
        for g, o in gens:
            k, N = values[g]
            fr = Fraction(k, N) * o
            assert fr.denominator == 1, "image order must divide generator order"
            exps.append(int(fr) % o)
        return DirichletCharacter(M, exps)

    # -- evaluation ----------------------------------------------------------------

    def order(self):
        out = 1
        for a, (g, o) in zip(self.exps, unit_group(self.modulus)):
            if a:
                out = _lcm(out, o // gcd(a, o))
        return out

    def exponent(self, n):
        """(k, N) with chi(n) = zeta_N^k, N = order of chi; None if chi(n) = 0."""
        M = self.modulus
        N = self.order()
        if M == 1:
            return (0, 1)
        n %= M
        if gcd(n, M) != 1:
            return None
        js = decompose_unit(n, M)
        fr = Fraction(0)
        for j, a, (g, o) in zip(js, self.exps, unit_group(M)):
            fr += Fraction(j * a, o)
        fr %= 1
        k = fr * N
        assert k.denominator == 1
        return (int(k) % N, N)

    def cyc(self, n):
        e = self.exponent(n)
        if e is None:
            return Cyc.from_rational(0)
        return Cyc.root_of_unity(e[1], e[0])

    def padic(self, n, ring, prec=None):
        e = self.exponent(n)
        if e is None:
            return ring.zero(prec)
        k, N = e
        if N % ring.p == 0:
            raise ValueError("character order divisible by p: ramified values "
                             "are outside the unramified core")
        return ring.zeta_of_order(N, k) if prec is None else \
            ring.zeta_of_order(N, k).truncate(prec)

    def __call__(self, n):
        return self.cyc(n)

    # -- structure -----------------------------------------------------------------

    def is_trivial(self):
        return all(a == 0 for a in self.exps)

    def parity(self):
        """chi(-1) as +1 or -1."""
        if self.modulus == 1:
            return 1
        e = self.exponent(self.modulus - 1)
        k, N = e
        return 1 if k == 0 else -1

    def is_even(self):
        return self.parity() == 1

    def conductor(self):
        """Minimal f | M with chi trivial on units congruent to 1 mod f."""
        if self._conductor is not None:
            return self._conductor
        M = self.modulus
        best = M
        for d in sorted(d for d in range(1, M + 1) if M % d == 0):
            ok = True
            for b in range(1 + d, M, d):
                if gcd(b, M) != 1:
                    continue
                e = self.exponent(b)
                if e[0] != 0:
                    ok = False
                    break
            if ok:
                best = d
                break
        self._conductor = best
        return best

    def primitive(self):
        """The primitive character inducing chi."""
        f = self.conductor()
        if f == self.modulus:
            return self
        M = self.modulus
        values = {}
        for g, o in unit_group(f):
            b = g
            while gcd(b, M) != 1:
                b += f
            e = self.exponent(b)
            values[g] = e
        return DirichletCharacter.from_value_map(f, values)

    def induce(self, n):
        """chi_(n): the character mod lcm(M, n) induced from chi."""
        M2 = _lcm(self.modulus, n)
        if M2 == self.modulus:
            return self
        values = {}
        for g, o in unit_group(M2):
            values[g] = self.exponent(g)
            assert values[g] is not None
        return DirichletCharacter.from_value_map(M2, values)

    # -- algebra ----------------------------------------------------------------------

    def __mul__(self, other):
        M2 = _lcm(self.modulus, other.modulus)
        values = {}
        for g, o in unit_group(M2):
            e1, e2 = self.exponent(g), other.exponent(g)
            fr = (Fraction(e1[0], e1[1]) + Fraction(e2[0], e2[1])) % 1
            values[g] = (fr.numerator, fr.denominator)
        return DirichletCharacter.from_value_map(M2, values)

    def __pow__(self, k):
        values = {}
        M = self.modulus
        for g, o in unit_group(M):
            e = self.exponent(g)
            fr = (Fraction(e[0] * k, e[1])) % 1
            values[g] = (fr.numerator, fr.denominator)
        return DirichletCharacter.from_value_map(M, values)

    def inverse(self):
        return self ** (-1)

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.exps == other.exps

    def __hash__(self):
        return hash((self.modulus, self.exps))

    def __repr__(self):
        return "chi mod %d %s" % (self.modulus, list(self.exps))

    def describe(self):
        gens = unit_group(self.modulus)
        return {
            "modulus": self.modulus,
            "conductor": self.conductor(),
            "generator_images": [[g, [a, o]] for (g, o), a in zip(gens, self.exps)],
        }


# ---------------------------------------------------------------------------
# the Teichmuller character and twists

def omega(p):
    """The Teichmuller character mod p, with values normalized so that the
    p-adic embedding sends omega(a) to the Teichmuller lift of a."""
    r = smallest_primitive_root(p)
    return DirichletCharacter.from_value_map(p, {unit_group(p)[0][0]:
                                                 (_dlog(unit_group(p)[0][0], r, p - 1, p), p - 1)})


def quadratic_character(D):
    """The quadratic character attached to the fundamental discriminant D."""
    if D % 4 not in (0, 1) or D in (0, 1):
        raise ValueError("not a fundamental discriminant")
    M = abs(D)
    values = {}
    for g, o in unit_group(M):
        k = kronecker(D, g)
        assert k in (1, -1)
        values[g] = (0 if k == 1 else 1, 2)
    return DirichletCharacter.from_value_map(M, values)


def kronecker(a, n):
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            t = -t
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def twist(chi, n, p):
    """The primitive character attached to chi * omega^(-n)."""
    w = omega(p) ** (-n)
    return (chi * w).primitive()


def xi_of_pair(theta, psi):
    """xi = primitive part of theta^(-1) psi."""
    return (theta.inverse() * psi).primitive()


def is_exceptional(theta, psi, p):
    """(theta psi^(-1)) twisted by omega^(2-p), evaluated at p, equals 1."""
    chi = twist(theta * psi.inverse(), p - 2, p)
    e = chi.exponent(p)
    return e is not None and e[0] == 0


def is_even_pair(theta, psi):
    return (theta.primitive() * psi.primitive()).parity() == 1


# ---------------------------------------------------------------------------
# Gauss sums

def gauss_sum_cyc(chi):
    """g(chi) = sum chi(a) zeta_f^a for primitive chi, exactly in Q(zeta)."""
    f = chi.conductor()
    if f != chi.modulus:
        raise ValueError("Gauss sums are taken for primitive characters")
    if f == 1:
        return Cyc.from_rational(1)
    N = chi.order()
    L = _lcm(f, N)
    total = Cyc.from_rational(0, L)
    for a in range(1, f):
        e = chi.exponent(a)
        if e is None:
            continue
        k, _ = e
        total = total + Cyc.root_of_unity(L, k * (L // N)) * Cyc.root_of_unity(L, a * (L // f))
    return total


def gauss_sum_padic(chi, ring, prec=None):
    """p-adic image of g(chi); the conductor must be prime to p."""
    f = chi.conductor()
    if f != chi.modulus:
        raise ValueError("Gauss sums are taken for primitive characters")
    if f % ring.p == 0:
        raise ValueError("ramified Gauss sum; use the tame-ratio decomposition")
    if f == 1:
        return ring.one(prec)
    acc = ring.zero(prec if prec is not None else ring.cap)
    for a in range(1, f):
        e = chi.exponent(a)
        if e is None:
            continue
        k, N = e
        acc = acc + ring.zeta_of_order(N, k) * ring.zeta_of_order(f, a)
    return acc if prec is None else acc.truncate(prec)


def needed_embedding_order(p, chars, extra_conductors=()):
    """Prime-to-p lcm of value orders and tame conductors, times p-1.

    This is the m for the session's PadicRing: every character value, Gauss
    sum and omega-twist in the computation embeds consistently.
    """
    m = p - 1
    for chi in chars:
        o = chi.order()
        f = chi.conductor()
        while o % p == 0:
            o //= p
        while f % p == 0:
            f //= p
        m = _lcm(m, _lcm(o, f))
    for f in extra_conductors:
        while f % p == 0:
            f //= p
        m = _lcm(m, f)
    return m
