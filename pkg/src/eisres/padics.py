"""Exact p-adic arithmetic over unramified cyclotomic coefficient rings.

The coefficient ring is O = Z_p[zeta_m] with p >= 5 and gcd(m, p) = 1,
realized concretely as (Z/p^cap Z)[x] / (h(x)) where h is a Hensel lift of
one irreducible factor of the m-th cyclotomic polynomial mod p.  The residue
ring is the field F_{p^d} with d = ord of p in (Z/mZ)^*, so the ring is an
unramified domain and the valuation of an element is the minimum valuation
of its coordinates.

Every scalar carries its own absolute precision: a PadicScalar represents
p^val * unit + O(p^prec).  Arithmetic propagates precision pessimistically
(min of inputs, shifted by valuations) and never silently gains digits.
The construction of h is fully deterministic, so a ring built twice from the
same (p, m, cap) is identical; this is what makes serialized output
reproducible byte for byte.
"""

from fractions import Fraction
from math import gcd


def vp(n, p):
    """Valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a, m):
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise ValueError("order undefined")
    o = 1
    x = a % m
    while x != 1:
        x = (x * a) % m
        o += 1
    return o


def smallest_primitive_root(q):
    phi = q - 1
    fac = _prime_factors(phi)
    for g in range(2, q):
        if all(pow(g, phi // r, q) != 1 for r in fac):
            return g
    raise ValueError("no primitive root mod %d" % q)


_CYCLO_CACHE = {}


def cyclotomic_poly(m):
    """Integer coefficient list of Phi_m, constant term first."""
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    # (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact polynomial division
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q = cyclotomic_poly(d)
            poly = _polydiv_exact(poly, q)
    _CYCLO_CACHE[m] = poly
    return poly


def _polydiv_exact(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        assert r == 0
        out[i - dd] = q
        for j in range(dd + 1):
            num[i - dd + j] -= q * den[j]
    assert all(c == 0 for c in num)
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic mod p (for building the residue field)

def _pmul(a, b, p, g):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _pmod(res, p, g)


def _pmod(a, p, g):
    a = [c % p for c in a]
    dg = len(g) - 1
    inv = pow(g[dg], -1, p)
    for i in range(len(a) - 1, dg - 1, -1):
        c = a[i]
        if c:
            q = (c * inv) % p
            for j in range(dg + 1):
                a[i - dg + j] = (a[i - dg + j] - q * g[j]) % p
    a = a[:dg]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _ppow(a, e, p, g):
    result = [1]
    base = _pmod(list(a), p, g)
    while e:
        if e & 1:
            result = _pmul(result, base, p, g)
        base = _pmul(base, base, p, g)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    while any(b):
        a, b = b, _prem(a, b, p)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _prem(a, b, p):
    a = list(a)
    while len(b) > 1 and b[-1] % p == 0:
        b = b[:-1]
    db = len(b) - 1
    inv = pow(b[db], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            q = (c * inv) % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - q * b[j]) % p
    a = a[:db] if db > 0 else [0]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _find_irreducible(p, d):
    """Deterministically enumerate monic degree-d polys mod p until one is
    irreducible.  The enumeration order is fixed, so the result is a function
    of (p, d) only."""
    if d == 1:
        return [0, 1]  # x
    counter = 0
    while True:
        digits = []
        c = counter
        for _ in range(d):
            digits.append(c % p)
            c //= p
        g = digits + [1]
        counter += 1
        # irreducibility: x^{p^d} == x mod g, and for each prime q | d
        # gcd(x^{p^{d/q}} - x, g) = 1
        xp = _ppow([0, 1], p ** d, p, g)
        test = list(xp)
        while len(test) < 2:
            test.append(0)
        test[1] = (test[1] - 1) % p
        if any(test):
            continue
        ok = True
        for q in _prime_factors(d):
            y = _ppow([0, 1], p ** (d // q), p, g)
            y = list(y)
            while len(y) < 2:
                y.append(0)
            y[1] = (y[1] - 1) % p
            if len(_pgcd(g, y, p)) > 1:
                ok = False
                break
        if ok:
            return g


def _find_root_of_unity(p, d, m, g):
    """Deterministic element of exact order m in F_{p^d} = F_p[x]/(g)."""
    q = p ** d - 1
    assert q % m == 0
    counter = 1
    while True:
        digits = []
        c = counter
        for _ in range(d):
            digits.append(c % p)
            c //= p
        counter += 1
        w = digits
        if not any(w):
            continue
        z = _ppow(w, q // m, p, g)
        if len(z) == 1 and z[0] == 1 and m > 1:
            continue
        good = True
        for r in _prime_factors(m):
            zr = _ppow(z, m // r, p, g)
            if len(zr) == 1 and zr[0] == 1:
                good = False
                break
        if good:
            return z


class PadicRing:
    """Z_p[zeta_m] truncated at absolute precision p^cap (unramified)."""

    def __init__(self, p, m=1, cap=24):
        if p < 5:
            raise ValueError("p >= 5 required")
        if m % p == 0:
            raise ValueError("m must be prime to p (unramified scope)")
        self.p = p
        self.m = m
        self.cap = cap
        self.pcap = p ** cap
        if m <= 2:
            self.degree = 1
            self.modulus = [(-1) % self.pcap, 1] if m == 1 else [1, 1]
            # zeta_1 = 1, zeta_2 = -1
            self._zeta = (1 if m == 1 else self.pcap - 1,)
        else:
            d = multiplicative_order(p, m)
            self.degree = d
            g = _find_irreducible(p, d)
            z = _find_root_of_unity(p, d, m, g)
            hbar = self._orbit_minpoly(z, g)
            self.modulus = self._hensel_lift_factor(hbar)
            if d > 1:
                # the class of x is the chosen root of Phi_m
                self._zeta = tuple([0, 1] + [0] * (d - 2))
            else:
                self._zeta = ((-self.modulus[0]) % self.pcap,)
        self._xpow = self._reduction_table()
        self._teich_cache = {}
        self._zhat = None

    # -- construction helpers ------------------------------------------------

    def _orbit_minpoly(self, z, g):
        """prod over the Frobenius orbit of z of (x - z^{p^i}), in F_p[x]."""
        p, d = self.p, self.degree
        poly = [[1]]  # coefficients (elements of F_{p^d}) of the growing product
        zi = z
        for _ in range(d):
            new = [[0]] * (len(poly) + 1)
            for i, c in enumerate(poly):
                prod = _pmul(c, zi, p, g)
                new[i] = self._fq_sub(new[i], prod, p)
                new[i + 1] = self._fq_add(new[i + 1], c, p)
            poly = new
            zi = _ppow(zi, p, p, g)
        out = []
        for c in poly:
            c = [x % p for x in c]
            assert all(x == 0 for x in c[1:]), "orbit product must have prime coefficients"
            out.append(c[0] if c else 0)
        assert out[-1] == 1
        return out

    @staticmethod
    def _fq_add(a, b, p):
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        b = list(b) + [0] * (n - len(b))
        return [(x + y) % p for x, y in zip(a, b)]

    @staticmethod
    def _fq_sub(a, b, p):
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        b = list(b) + [0] * (n - len(b))
        return [(x - y) % p for x, y in zip(a, b)]

    def _hensel_lift_factor(self, hbar):
        """Lift hbar | Phi_m (mod p) to a factor of Phi_m mod p^cap."""
        p, cap = self.p, self.cap
        pcap = p ** cap
        phi = [c % pcap for c in cyclotomic_poly(self.m)]
        h = [c % p for c in hbar]
        k = self._polydiv_modp(phi, h)
        # Bezout: a*h + b*k = 1 mod p
        a, b = self._bezout_modp(h, k)
        pk = p
        dh_deg = len(h) - 1
        for _ in range(cap - 1):
            hk = self._polymul_int(h, k)
            n = max(len(phi), len(hk))
            E = [(x - y) % pcap for x, y in
                 zip(phi + [0] * (n - len(phi)), hk + [0] * (n - len(hk)))]
            assert all(e % pk == 0 for e in E)
            Ebar = [((e // pk) % p) for e in E]
            if not any(Ebar):
                pk *= p
                continue
            # corrections mod p: dh = b*Ebar mod h (degree < deg h), dk = a*Ebar mod k
            dh = _prem(self._polymul_int(b, Ebar), h, p)
            dk = _prem(self._polymul_int(a, Ebar), k, p)
            dh = dh + [0] * (len(h) - len(dh))
            dk = dk + [0] * (len(k) - len(dk))
            h = [(x + pk * y) % pcap for x, y in zip(h, dh)]
            k = [(x + pk * y) % pcap for x, y in zip(k, dk)]
            pk *= p
        assert len(h) - 1 == dh_deg and h[-1] % pcap == 1
        return [c % pcap for c in h]

    @staticmethod
    def _polymul_int(a, b):
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return res

    def _polydiv_modp(self, num, den):
        p = self.p
        num = [c % p for c in num]
        den = [c % p for c in den]
        dd = len(den) - 1
        inv = pow(den[dd], -1, p)
        out = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i] % p
            if c:
                q = (c * inv) % p
                out[i - dd] = q
                for j in range(dd + 1):
                    num[i - dd + j] = (num[i - dd + j] - q * den[j]) % p
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def _bezout_modp(self, f, g):
        """a, b with a*f + b*g = 1 in F_p[x]."""
        p = self.p
        r0, r1 = [c % p for c in f], [c % p for c in g]
        s0, s1 = [1], [0]
        t0, t1 = [0], [1]
        while any(r1):
            q = self._polydiv_modp_pair(r0, r1)
            r0, r1 = r1, self._polysub_modp(r0, self._polymul_int(q, r1))
            s0, s1 = s1, self._polysub_modp(s0, self._polymul_int(q, s1))
            t0, t1 = t1, self._polysub_modp(t0, self._polymul_int(q, t1))
        while len(r0) > 1 and r0[-1] == 0:
            r0.pop()
        assert len(r0) == 1 and r0[0] % p != 0, "factors not coprime mod p"
        c = pow(r0[0], -1, p)
        return ([x * c % p for x in s0], [x * c % p for x in t0])

    def _polydiv_modp_pair(self, num, den):
        p = self.p
        num = [c % p for c in num]
        den = [c % p for c in den]
        while len(den) > 1 and den[-1] == 0:
            den.pop()
        dd = len(den) - 1
        if len(num) - 1 < dd:
            return [0]
        inv = pow(den[dd], -1, p)
        out = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i] % p
            if c:
                q = (c * inv) % p
                out[i - dd] = q
                for j in range(dd + 1):
                    num[i - dd + j] = (num[i - dd + j] - q * den[j]) % p
        return out

    def _polysub_modp(self, a, b):
        p = self.p
        n = max(len(a), len(b))
        a = a + [0] * (n - len(a))
        b = b + [0] * (n - len(b))
        return [(x - y) % p for x, y in zip(a, b)]

    def _reduction_table(self):
        """x^(d+j) mod h for j = 0..d-2, as vectors mod p^cap."""
        d = self.degree
        if d == 1:
            return []
        h = self.modulus
        pcap = self.pcap
        table = []
        cur = [(-h[i]) % pcap for i in range(d)]  # x^d
        table.append(tuple(cur))
        for _ in range(d - 2):
            shifted = [0] + cur[:-1]
            top = cur[-1]
            cur = [(shifted[i] - top * h[i]) % pcap for i in range(d)]
            table.append(tuple(cur))
        return table

    # -- element constructors -------------------------------------------------

    def zero(self, prec=None):
        return PadicScalar(self, None, None, self.cap if prec is None else prec)

    def one(self, prec=None):
        return self.from_int(1, prec)

    def from_int(self, n, prec=None):
        prec = self.cap if prec is None else prec
        if n == 0:
            return self.zero(prec)
        v = vp(n, self.p)
        if v >= prec:
            return self.zero(prec)
        u = n // self.p ** v
        rel = prec - v
        vec = tuple([u % self.p ** rel] + [0] * (self.degree - 1))
        return PadicScalar(self, v, vec, prec)

    def from_fraction(self, q, prec=None):
        prec = self.cap if prec is None else prec
        q = Fraction(q)
        if q == 0:
            return self.zero(prec)
        num, den = q.numerator, q.denominator
        vn = vp(num, self.p) if num else 0
        vd = vp(den, self.p)
        v = vn - vd
        rel = prec - v
        if rel <= 0:
            return self.zero(prec)
        mod = self.p ** rel
        u = ((num // self.p ** vn) * pow(den // self.p ** vd, -1, mod)) % mod
        vec = tuple([u] + [0] * (self.degree - 1))
        return PadicScalar(self, v, vec, prec)

    def from_vector(self, vec, prec=None):
        """Element with the given coordinates (integers) on the power basis."""
        prec = self.cap if prec is None else prec
        vec = list(vec) + [0] * (self.degree - len(vec))
        return self._normalize(0, vec, prec)

    def zeta(self, k=1):
        """zeta_m^k as a ring element at full precision (raw Hensel root)."""
        z = PadicScalar(self, 0, tuple(self._zeta), self.cap)
        return z ** (k % self.m)

    def _canonical_zeta(self):
        """The session root of unity, Galois-twisted so that its mu_(p-1)
        component is the Teichmuller lift of the smallest primitive root
        mod p.  This makes omega-values embed as honest Teichmuller lifts."""
        if self._zhat is None:
            if self.m % (self.p - 1) != 0:
                self._zhat = self.zeta()
            else:
                r = smallest_primitive_root(self.p)
                target = self.teichmuller(r)
                step = self.m // (self.p - 1)
                z = self.zeta()
                found = None
                for t in range(1, self.m + 1):
                    if gcd(t, self.m) != 1:
                        continue
                    if ((z ** t) ** step - target).is_zero():
                        found = z ** t
                        break
                assert found is not None, "Teichmuller normalization failed"
                self._zhat = found
        return self._zhat

    def zeta_of_order(self, n, k=1):
        """zeta_n^k via the canonical session root; n must divide m."""
        if self.m % n != 0:
            raise ValueError("order %d not available in Z_p[zeta_%d]" % (n, self.m))
        return self._canonical_zeta() ** (((self.m // n) * k) % self.m)

    def teichmuller(self, a, prec=None):
        """The unique (p-1)-st root of unity congruent to a mod p."""
        p = self.p
        if a % p == 0:
            raise ValueError("Teichmuller lift requires a prime to p")
        prec = self.cap if prec is None else prec
        key = (a % p, prec)
        if key not in self._teich_cache:
            mod = p ** prec
            x = a % mod
            for _ in range(prec + 1):
                x = pow(x, p, mod)
            self._teich_cache[key] = x
        return self.from_int(self._teich_cache[key], prec)

    # -- internal vector ops ---------------------------------------------------

    def _normalize(self, val, vec, prec):
        rel = prec - val
        if rel <= 0:
            return self.zero(prec)
        mod = self.p ** rel
        vec = [c % mod for c in vec]
        if not any(vec):
            return self.zero(prec)
        shift = min(vp(c, self.p) if c else rel for c in vec)
        if shift:
            val += shift
            rel -= shift
            if rel <= 0:
                return self.zero(prec)
            mod = self.p ** rel
            vec = [(c // self.p ** shift) % mod for c in vec]
            if not any(vec):
                return self.zero(prec)
        return PadicScalar(self, val, tuple(vec), prec)

    def _vecmul(self, a, b, mod):
        d = self.degree
        if d == 1:
            return [(a[0] * b[0]) % mod]
        res = [0] * (2 * d - 1)
        for i in range(d):
            ai = a[i]
            if ai:
                for j in range(d):
                    res[i + j] += ai * b[j]
        out = [c % mod for c in res[:d]]
        for j in range(d - 1):
            c = res[d + j] % mod
            if c:
                row = self._xpow[j]
                for i in range(d):
                    out[i] = (out[i] + c * row[i]) % mod
        return out

    def _vecinv(self, a, rel):
        """Inverse of a unit vector mod p^rel (Hensel from the residue field)."""
        p = self.p
        g = [c % p for c in self.modulus]
        abar = [c % p for c in a]
        # inverse mod p by extended euclid in F_p[x]
        s, t = self._bezout_modp(abar + [0] * (self.degree + 1 - len(abar)), g) \
            if self.degree > 1 else (None, None)
        if self.degree == 1:
            z = [pow(a[0] % p, -1, p)]
        else:
            z = _prem(s, g, p)
            z = (z + [0] * self.degree)[:self.degree]
        k = 1
        while k < rel:
            k = min(2 * k, rel)
            mod = p ** k
            az = self._vecmul([c % mod for c in a], z + [0] * (self.degree - len(z)), mod)
            corr = [(2 if i == 0 else 0) - c for i, c in enumerate(az)]
            z = self._vecmul(z + [0] * (self.degree - len(z)), corr, mod)
        return z

    def embedding_datum(self):
        return {
            "p": self.p,
            "m": self.m,
            "residue_degree": self.degree,
            "modulus": [c % self.p ** min(self.cap, 8) for c in self.modulus],
        }

    def from_digits(self, doc):
        """Inverse of PadicScalar.digits()."""
        if doc["unit"] is None:
            return self.zero(doc["prec"])
        unit = tuple(int(s) for s in doc["unit"])
        return PadicScalar(self, doc["val"], unit, doc["prec"])

    def __eq__(self, other):
        return (isinstance(other, PadicRing)
                and (self.p, self.m, self.cap) == (other.p, other.m, other.cap))

    def __hash__(self):
        return hash((self.p, self.m, self.cap))

    def __repr__(self):
        return "PadicRing(p=%d, m=%d, cap=%d)" % (self.p, self.m, self.cap)


class PadicScalar:
    """p^val * unit + O(p^prec), unit a vector on the power basis of the ring.

    val is None for a zero known only up to O(p^prec).
    """

    __slots__ = ("ring", "val", "unit", "prec")

    def __init__(self, ring, val, unit, prec):
        self.ring = ring
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- queries ----------------------------------------------------------------

    def is_zero(self):
        return self.val is None

    def valuation(self):
        """Valuation, or ('ge', prec) for an indistinguishable-from-zero value."""
        if self.val is None:
            return ("ge", self.prec)
        return self.val

    def is_unit(self):
        return self.val == 0

    def rel_prec(self):
        return self.prec - (self.val or 0)

    def lift_vector(self):
        """Integer coordinates of the element mod p^prec (integral elements)."""
        if self.val is None:
            return [0] * self.ring.degree
        if self.val < 0:
            raise ValueError("element has negative valuation; not p-integral")
        mod = self.ring.p ** self.prec
        return [(c * self.ring.p ** self.val) % mod for c in self.unit]

    def lift_int(self):
        v = self.lift_vector()
        if any(v[1:]):
            raise ValueError("element not rational (nonzero zeta coordinates)")
        return v[0]

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicScalar):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("ring tag mismatch")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, Fraction):
            return self.ring.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        R = self.ring
        prec = min(self.prec, other.prec)
        if self.val is None and other.val is None:
            return R.zero(prec)
        if self.val is None or other.val is None:
            z, x = (self, other) if self.val is None else (other, self)
            return x.truncate(prec)
        vmin = min(self.val, other.val)
        rel = prec - vmin
        if rel <= 0:
            return R.zero(prec)
        mod = R.p ** rel
        sa = R.p ** (self.val - vmin)
        sb = R.p ** (other.val - vmin)
        vec = [((x * sa) + (y * sb)) % mod for x, y in zip(self.unit, other.unit)]
        return R._normalize(vmin, vec, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.val is None:
            return self
        mod = self.ring.p ** self.rel_prec()
        return PadicScalar(self.ring, self.val,
                           tuple((-c) % mod for c in self.unit), self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        R = self.ring
        if self.val is None or other.val is None:
            # O(p^N) * (p^v u + O(p^M)) = O(p^(N+v))
            if self.val is None and other.val is None:
                return R.zero(min(self.prec + other.prec, R.cap))
            z, x = (self, other) if self.val is None else (other, self)
            return R.zero(z.prec + x.val)
        rel = min(self.rel_prec(), other.rel_prec())
        mod = R.p ** rel
        vec = R._vecmul(self.unit, other.unit, mod)
        return R._normalize(self.val + other.val, vec, self.val + other.val + rel)

    __rmul__ = __mul__

    def inverse(self):
        if self.val is None:
            raise ZeroDivisionError("cannot invert a value indistinguishable from 0")
        R = self.ring
        rel = self.rel_prec()
        z = R._vecinv(list(self.unit), rel)
        return PadicScalar(R, -self.val, tuple(c % R.p ** rel for c in z),
                           -self.val + rel)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        R = self.ring
        if e == 0:
            return R.one(self.prec - (self.val or 0))
        if e < 0:
            return self.inverse() ** (-e)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("PadicScalar is approximate; not hashable")

    def truncate(self, prec):
        """Forget digits beyond p^prec."""
        if prec >= self.prec:
            return self
        if self.val is None or self.val >= prec:
            return self.ring.zero(prec)
        rel = prec - self.val
        mod = self.ring.p ** rel
        return self.ring._normalize(self.val, [c % mod for c in self.unit], prec)

    def digits(self):
        """Serialized form: valuation, precision, coordinate digits base p."""
        return {
            "val": self.val,
            "prec": self.prec,
            "unit": None if self.val is None else [str(c) for c in self.unit],
        }

    def __repr__(self):
        if self.val is None:
            return "O(%d^%d)" % (self.ring.p, self.prec)
        if self.val < 0:
            return "%d^%d*(%s) + O(%d^%d)" % (self.ring.p, self.val,
                                              list(self.unit), self.ring.p, self.prec)
        if self.ring.degree == 1:
            return "%d + O(%d^%d)" % (self.lift_int(), self.ring.p, self.prec)
        return "%s + O(%d^%d)" % (self.lift_vector(), self.ring.p, self.prec)


# ---------------------------------------------------------------------------
# logarithms and the exponent s(a) with [a] = u^{s(a)}, u = 1 + p

def log_one_unit(x):
    """p-adic logarithm of x with v(x - 1) >= 1."""
    R = x.ring
    z = x - 1
    if not z.is_zero() and z.val < 1:
        raise ValueError("log requires a 1-unit")
    if z.is_zero():
        return R.zero(z.prec)
    total = R.zero(R.cap)
    term = z
    i = 1
    # v(z^i / i) >= i - v(i); stop once past the working precision
    while i <= z.prec + 1 or i * z.val - vp(i, R.p) <= z.prec + 1:
        contrib = term / i if i > 1 else term
        if i % 2 == 0:
            contrib = -contrib
        total = total + contrib
        i += 1
        term = term * z
        if i > 4 * R.cap:
            break
    return total


def s_exponent(a, ring, prec=None):
    """s(a) in Z_p with a * omega(a)^{-1} = (1+p)^{s(a)}."""
    p = ring.p
    if isinstance(a, int):
        if a % p == 0:
            raise ValueError("a must be prime to p")
        x = ring.from_int(a, prec) * ring.teichmuller(a, prec).inverse()
    else:
        x = a
    u = ring.from_int(1 + p, prec)
    return log_one_unit(x) / log_one_unit(u)


def teichmuller(a, p, M, m=1):
    """Standalone Teichmuller lift as an integer mod p^M."""
    ring = PadicRing(p, m, M)
    return ring.teichmuller(a, M).lift_int()
