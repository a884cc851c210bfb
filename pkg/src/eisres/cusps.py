"""Cusps of the modular curves attached to Gamma_1(M), as label combinatorics.

A cusp class at level M is a pair [x; y] in (Z/M)^2 with gcd(x, y, M) = 1,
modulo  x ~ x + gcd(M, y).  The curve's cusps are these classes modulo the
further identification [x; y] ~ [-x; -y]; labels are always stored at the
finer level and the sign quotient is applied lazily, because the Chinese
remainder splitting A_{M1 M2} = A_{M1} x A_{M2} does not descend to the
sign quotients separately.

The operators acting here: diamond <d> [x;y] = [d' x; d y]; the p-th Hecke
operator through its coset matrices (1 i; 0 p), acting on cusps as points
of P^1(Q); the Fricke-type involution w_{M/t}; and the ordinary projection,
which kills the classes with p | y and is cross-checked against the
stabilized T_p^(n!) limit.
"""

from math import gcd

from .padics import smallest_primitive_root


class CuspLabel:
    __slots__ = ("M", "x", "y")

    def __init__(self, M, x, y):
        y %= M
        g = gcd(M, y)          # equals M when y = 0
        self.M = M
        self.x = x % g
        self.y = y
        if gcd(gcd(self.x, self.y), M) != 1:
            raise ValueError("[%d;%d] is not a cusp label mod %d" % (x, y, M))

    def key(self):
        return (self.M, self.x, self.y)

    def __eq__(self, other):
        return isinstance(other, CuspLabel) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "[%d;%d]_%d" % (self.x, self.y, self.M)

    def neg(self):
        return CuspLabel(self.M, -self.x, -self.y)

    def class_rep(self):
        """Deterministic representative of the sign class."""
        n = self.neg()
        return self if self.key() <= n.key() else n

    def coprime_lift(self):
        """Integers (a, c) with gcd(a, c) = 1 representing the label:
        c = y (or M if y = 0), a = x shifted by multiples of gcd(M, y)."""
        c = self.y if self.y != 0 else self.M
        g = gcd(self.M, self.y)
        a = self.x
        while gcd(a, c) != 1:
            a += g
            if a > self.x + self.M * 2:
                raise ArithmeticError("no coprime lift found")
        return a, c


def canonicalize(x, y, M):
    return CuspLabel(M, x, y)


def enumerate_A(M):
    out = []
    for y in range(M):
        g = gcd(M, y) if y else M
        for x in range(g):
            if gcd(gcd(x, y), M) == 1:
                out.append(CuspLabel(M, x, y))
    return out


def enumerate_classes(M):
    """One deterministic representative per sign class."""
    seen = {}
    for a in enumerate_A(M):
        r = a.class_rep()
        seen[r.key()] = r
    return [seen[k] for k in sorted(seen)]


def cusp_count_formula(M):
    """Number of cusp classes of the level-M curve for M > 4."""
    from .characters import factorize
    def phi(n):
        out = n
        for q in factorize(n):
            out -= out // q
        return out
    return sum(phi(d) * phi(M // d) for d in _divisors(M)) // 2


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# CRT splitting

def crt_split(label, M1, M2):
    assert M1 * M2 == label.M and gcd(M1, M2) == 1
    return (CuspLabel(M1, label.x, label.y), CuspLabel(M2, label.x, label.y))
    # the componentwise reduction is well defined: gcd(M,y) reduces into each


def crt_join(l1, l2):
    M1, M2 = l1.M, l2.M
    assert gcd(M1, M2) == 1
    M = M1 * M2
    inv1 = pow(M1, -1, M2)
    inv2 = pow(M2, -1, M1)
    y = (l1.y * M2 * inv2 + l2.y * M1 * inv1) % M
    # x must reduce correctly mod gcd(M1,y) and gcd(M2,y)
    g1, g2 = gcd(M1, l1.y), gcd(M2, l2.y)
    if g1 == 0:
        g1 = M1
    if g2 == 0:
        g2 = M2
    gg = g1 * g2
    i1 = pow(g1, -1, g2) if g2 > 1 else 0
    x = (l1.x + g1 * ((l2.x - l1.x) * i1 % g2)) % gg if g2 > 1 else l1.x
    return CuspLabel(M, x, y)


# ---------------------------------------------------------------------------
# operator actions

def diamond_action(d, label):
    """<d>[x;y] = [d' x; d y]; zero (None) when gcd(d, M) > 1."""
    M = label.M
    if gcd(d, M) != 1:
        return None
    dinv = pow(d, -1, M)
    return CuspLabel(M, dinv * label.x, d * label.y)


def Tp_action(p, label):
    """T_p on a label: the points (a + i c)/(p c) for i < p, content-reduced.

    Returns a list of labels (with multiplicity)."""
    a, c = label.coprime_lift()
    out = []
    for i in range(p):
        num, den = a + i * c, p * c
        g = gcd(num, den)
        if g:
            num //= g
            den //= g
        out.append(CuspLabel(label.M, num, den))
    return out


class CuspDivisor:
    """Finitely supported map from labels (or sign classes) to coefficients."""

    def __init__(self, M, data=None, sign_quotient=False):
        self.M = M
        self.sign_quotient = sign_quotient
        self.data = {}
        if data:
            for k, v in data.items():
                self.add(k, v)

    def add(self, label, coeff):
        key = label.class_rep() if self.sign_quotient else label
        cur = self.data.get(key)
        self.data[key] = coeff if cur is None else cur + coeff

    def items(self):
        return self.data.items()

    def map_coeffs(self, f):
        out = CuspDivisor(self.M, sign_quotient=self.sign_quotient)
        for k, v in self.data.items():
            out.add(k, f(v))
        return out

    def to_classes(self):
        out = CuspDivisor(self.M, sign_quotient=True)
        for k, v in self.data.items():
            out.add(k, v)
        return out

    def support(self, is_zero):
        return [k for k, v in self.data.items() if not is_zero(v)]


def apply_Tp(divisor, p):
    out = CuspDivisor(divisor.M, sign_quotient=divisor.sign_quotient)
    for label, coeff in divisor.items():
        for im in Tp_action(p, label):
            out.add(im, coeff)
    return out


def ordinary_projection(divisor, p):
    """Kill the labels with p | y (the non-ordinary classes)."""
    out = CuspDivisor(divisor.M, sign_quotient=divisor.sign_quotient)
    for label, coeff in divisor.items():
        if label.y % p != 0:
            out.add(label, coeff)
    return out


def ordinary_projection_oracle(divisor, p, ring, max_iters=24):
    """The stabilized T_p^(n!) limit, applied coefficientwise over the ring.

    Stops when one more round of factorial powers no longer changes the
    divisor at the ring's working precision.
    """
    cur = divisor
    done = 0
    for n in range(1, max_iters + 1):
        target = 1
        for i in range(1, n + 1):
            target *= i
        while done < target:
            cur = apply_Tp(cur, p)
            done += 1
        if n >= 2 and _divisors_agree(cur, prev, ring):
            return cur
        prev = cur
    raise ArithmeticError("T_p powers did not stabilize")


def _divisors_agree(d1, d2, ring):
    keys = set(d1.data) | set(d2.data)
    for k in keys:
        a = d1.data.get(k, ring.zero())
        b = d2.data.get(k, ring.zero())
        if not (a - b).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# widths and the Fricke-type involution

def width(label, M=None):
    """Minimal W with the W-translation conjugated into Gamma_1(M): for a
    coprime lift (a, c) this is M / gcd(M, c)."""
    M = label.M if M is None else M
    a, c = label.coprime_lift()
    return M // gcd(M, c)


def fricke_cusp(label, M, t=1):
    """The point image of the label under z -> -1/((M/t) z), canonicalized
    at level M: [a; c] -> [-c/Delta; a (M/t)/Delta], Delta = gcd(a M/t, c)."""
    assert M % t == 0
    a, c = label.coprime_lift()
    Mt = M // t
    Delta = gcd(a * Mt, c)
    return CuspLabel(M, -(c // Delta), (a * Mt) // Delta)


def fricke_point(label, M, t=1):
    """Integer pair (numerator, denominator) of the image point, primitive."""
    a, c = label.coprime_lift()
    Mt = M // t
    Delta = gcd(a * Mt, c)
    return (-(c // Delta), (a * Mt) // Delta)


# ---------------------------------------------------------------------------
# the ordinary parametrization and the residue-support tuples

def teich_int(c, p, r):
    mod = p ** r
    x = c % mod
    for _ in range(r + 1):
        x = pow(x, p, mod)
    return x


def enumerate_A0(N, p, r=1):
    """Labels (a, c) with 0 < c < Np, p nmid c, 0 <= a < gcd(N, c), realized
    at level N p^r with the Teichmuller-normalized p-component."""
    out = []
    Np = N * p
    pr = p ** r
    M = N * pr
    for c in range(1, Np):
        if c % p == 0:
            continue
        g = gcd(N, c)
        for a in range(g):
            if gcd(gcd(a, c), N) != 1:
                continue
            yp = c % p if r == 1 else teich_int(c, p, r)
            lab = CuspLabel(M, a, _crt(c % N if N > 1 else 0, N, yp, pr))
            out.append(((a, c), lab))
    return out


def _crt(r1, m1, r2, m2):
    if m1 == 1:
        return r2
    if m2 == 1:
        return r1
    i = pow(m1, -1, m2)
    return (r1 + m1 * ((r2 - r1) * i % m2)) % (m1 * m2)


def st_factorization(theta, psi, t, N, p):
    """N = ftilde_theta * P * Q * t with P the f_psi-primes part."""
    f_theta = theta.conductor()
    f_psi = psi.conductor()
    ft = f_theta
    while ft % p == 0:
        ft //= p
    if N % (ft * t) != 0:
        raise ValueError("level %d not divisible by ftilde_theta * t = %d" % (N, ft * t))
    rest = N // (ft * t)
    P = 1
    for l in set(_prime_list(f_psi)):
        while rest % l == 0:
            rest //= l
            P *= l
    Q = rest
    return ft, P, Q


def _prime_list(n):
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


def enumerate_St(theta, psi, t, N, p):
    """Tuples (d_t, d_Q, x, y) parametrizing the ordinary classes that can
    carry a residue:

      d_t | t, d_Q | Q, gcd(d_t, f_theta p) = 1;
      0 < x < Np/(d_t d_Q P), gcd(x, Np/(d_t d_Q P)) = 1;
      0 <= y < d_t d_Q P, gcd(y, d_t d_Q P) = 1, gcd(y, x, N) = 1.

    (The y-range condition includes y = 0 when d_t d_Q P = 1, the case of
    lower-entry-only labels.)
    """
    ft, P, Q = st_factorization(theta, psi, t, N, p)
    f_theta = theta.conductor()
    Np = N * p
    out = []
    for d_t in _divisors(t):
        if gcd(d_t, f_theta * p) != 1:
            continue
        for d_Q in _divisors(Q):
            B = d_t * d_Q * P
            lim = Np // B
            for x in range(1, lim):
                if gcd(x, lim) != 1:
                    continue
                for y in range(B):
                    if gcd(y, B) != 1 and not (y == 0 and B == 1):
                        continue
                    if gcd(gcd(y, B * x), N) != 1:
                        continue
                    out.append((d_t, d_Q, x, y))
    return out


def make_st_label(tup, P, N, p, r=1):
    """The level-(N p^r) label attached to an S_t tuple: upper entry y,
    lower entry d_t d_Q P x (with the Teichmuller p-component for r > 1)."""
    d_t, d_Q, x, y = tup
    c = d_t * d_Q * P * x
    M = N * p ** r
    if r == 1:
        return CuspLabel(M, y, _crt(c % N if N > 1 else 0, N, c % p, p))
    yp = teich_int(c, p, r)
    return CuspLabel(M, y, _crt(c % N if N > 1 else 0, N, yp, p ** r))


def st_width(tup, P, t):
    """The closed-form width t d_Q P / gcd(y, t) of the Fricke image of an
    S_t cusp, with gcd(0, t) = t."""
    d_t, d_Q, x, y = tup
    return t * d_Q * P // gcd(y, t) if y else d_Q * P


def st_fricke_point(tup, P, N, p, t):
    """The Fricke image point of an S_t cusp with the tuple-pinned lift.

    The upper entry of the label is only defined mod d_t d_Q P; the closed
    width formula reads gcd(y, t) off the tuple, so the representative must
    preserve that gcd.  The lift a' == y mod d_t d_Q P is chosen coprime to
    the lower entry and with gcd(a', t) = gcd(y, t) (= t when y = 0)."""
    d_t, d_Q, x, y = tup
    B = d_t * d_Q * P
    c = B * x
    target = gcd(y, t) if y else t
    a = y
    for _ in range(4 * t * c + 4):
        if gcd(a, c) == 1 and gcd(a, t) == target:
            break
        a += B
    else:
        raise ArithmeticError("no tuple-consistent lift for %s" % (tup,))
    Mt = N * p // t
    Delta = gcd(a * Mt, c)
    return (-(c // Delta), (a * Mt) // Delta)
