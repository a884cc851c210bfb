"""The Kubota-Leopoldt power series and the master congruence element.

For a character phi with p^2 not dividing its conductor, F(X, phi) is the
unique series (with a simple pole factor 1/(X-p) when phi is trivial) whose
specializations recover Dirichlet L-values with the p-Euler factor removed:

    F(u^(1-k) - 1, phi) = L(1-k, (phi omega^(-k))_(p))        k >= 2,

u = 1 + p.  Three constructions are implemented and cross-checked:

* series (production): the closed finite-sum form over a mod f~ p obtained
  by expanding Bernoulli polynomials, organized in powers of the weight
  coordinate ell(X) = log(1+X)/log(u),

      F = 1/(ell - 1) * 1/F0 * sum_a phi(a) [a] (1+X)^(-s(a))
                        * sum_j C(1 - ell, j) B_j (F0/a)^j;

  exact rational inner sums, rigorous tail bounds, and tracked precision.

* stickelberger: the level-n partial sums
      -(1/(f~ p^(n+1))) sum_a a (phi omega^(-1))(a) (1+X)^(-s(a))
  reduced mod ((1+X)^(p^n) - 1).  These converge (exactly coherently) to
  (1 - ell(X)) * F: the un-normalized limit carries the moment factor
  (1 - ell), which specializes to k at weight 1-k.  Comparisons therefore
  multiply (1 - ell) onto the other side rather than divide finite data.

* interpolate: Newton interpolation through >= D+3 exact Bernoulli values,
  with the documented precision loss of the node geometry.

The master element of the congruence theory is

    A_{theta,psi} = delta(X) * prod_{l | f_theta f_psi, l nmid f_xi}
                    ((1+X)^s(l) - xi(l) l^(-2)) * F(u^(-1)(1+X)^(-1)-1, xi2^(-1))

with xi = (theta^(-1) psi)_0 and delta = X - (u^(-2)-1) exactly when
(theta_0, psi_0) = (omega^(-2), 1), else 1.  In that exceptional-shape case
the involuted L-series has its pole at u^(-2)-1 and delta is the exact
linear factor that cancels it, which is what makes A a unit there.
"""

from fractions import Fraction
from math import gcd

from .padics import vp, s_exponent
from .series import (LambdaSeries, binom_series, log_series, compose_involution,
                     PrecisionExhausted)
from .characters import (DirichletCharacter, omega, twist, xi_of_pair,
                         is_exceptional, _lcm)
from .lvalues import bernoulli_number, Lp_negative
from .cyclotomic import embed_padic


def _tame_part(n, p):
    while n % p == 0:
        n //= p
    return n


def _prime_divisors(n):
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


# ---------------------------------------------------------------------------
# production construction

_CBINOM_CACHE = {}


def _c_binom_poly(j):
    """Coefficients (in ell) of C(1 - ell, j), as Fractions."""
    if j not in _CBINOM_CACHE:
        poly = [Fraction(1)]
        # prod_{i=0}^{j-1} (1 - ell - i) / j!
        for i in range(j):
            shift = [c * (1 - i) for c in poly]
            poly = [a - b for a, b in
                    zip(shift + [Fraction(0)], [Fraction(0)] + poly)]
        fact = 1
        for i in range(2, j + 1):
            fact *= i
        _CBINOM_CACHE[j] = [c / fact for c in poly]
    return _CBINOM_CACHE[j]


def euler_factor_removed(chi, ell_prime, ring, D):
    """1 - (chi0 omega^(-1))(l) (1+X)^(-s(l)): the F-side factor at a prime
    removed by imprimitivity."""
    p = ring.p
    chi1 = twist(chi.primitive(), 1, p)
    c = chi1.padic(ell_prime, ring)
    s_l = s_exponent(ell_prime, ring)
    return LambdaSeries.one(ring, D) - binom_series(-s_l, D) * c


def kl_series(phi, ring, M, D, construction="series", level=None):
    """F(X, phi) mod (p^M, X^D); pole tag 'X-p' carries the numerator when
    phi has trivial primitive part."""
    p = ring.p
    f = phi.conductor()
    if f % (p * p) == 0:
        raise ValueError("conductor divisible by p^2")
    phi0 = phi.primitive()
    extra = [l for l in _prime_divisors(phi.modulus)
             if f % l != 0 and l != p]
    if construction == "series":
        F = _kl_series_closed(phi0, ring, M, D)
    elif construction == "stickelberger":
        F = kl_series_stickelberger(phi0, ring, M, D, level=level)
    elif construction == "interpolate":
        F = kl_series_interpolate(phi0, ring, M, D)
    else:
        raise ValueError("unknown construction %r" % (construction,))
    for l in sorted(extra):
        F = F * euler_factor_removed(phi0, l, ring, D)
    return F


def _kl_series_closed(phi, ring, M, D):
    p = ring.p
    if not phi.is_even():
        return LambdaSeries.zero(ring, D).map_coeffs(lambda c: c.truncate(M))
    f = phi.conductor()
    F0 = _tame_part(f, p) * p
    ell = log_series(D, ring)
    ellpow = [LambdaSeries.one(ring, D)]
    for i in range(1, D):
        ellpow.append(ellpow[-1] * ell)
    # truncation of the Bernoulli-polynomial tail: v(c_{j,i} B_j (F0/a)^j)
    # >= j - 1 - v_p(j!), so stop once that clears the working precision
    target = ring.cap
    J = 2
    while J - 1 - (J - sum(int(d) for d in _base_digits(J, p))) // (p - 1) < target + 2:
        J += 1
    cpolys = [_c_binom_poly(j) for j in range(J + 1)]
    total = LambdaSeries.zero(ring, D)
    for a in range(1, F0 + 1):
        if gcd(a, F0) != 1:
            continue
        ea = phi.exponent(a % phi.modulus if phi.modulus > 1 else 1)
        if ea is None:
            continue
        gammas = []
        for i in range(D):
            g = Fraction(0)
            for j in range(i, J + 1):
                cj = cpolys[j]
                if i < len(cj) and cj[i]:
                    bj = bernoulli_number(j)
                    if bj:
                        g += cj[i] * bj * Fraction(F0, a) ** j
            gammas.append(g)
        inner = LambdaSeries.zero(ring, D)
        for i in range(D):
            if gammas[i]:
                inner = inner + ellpow[i] * ring.from_fraction(gammas[i])
        ta = ring.teichmuller(a)
        bracket_a = ring.from_int(a) * ta.inverse()      # [a]
        s_a = s_exponent(a, ring)
        term = binom_series(-s_a, D) * inner * (phi.padic(a, ring) * bracket_a)
        total = total + term
    total = total * ring.from_fraction(Fraction(1, F0))
    ell_minus_1 = ell - 1
    if phi.is_trivial():
        # numerator of the pole: H = (X - p)/(ell - 1) * total
        xmp = LambdaSeries.gen(ring, D) - ring.from_int(p)
        H = (xmp * ell_minus_1.invert()) * total
        H = H.map_coeffs(lambda c: c.truncate(M))
        return LambdaSeries(ring, H.coeffs, D, 'X-p')
    F = ell_minus_1.invert() * total
    return F.map_coeffs(lambda c: c.truncate(M))


def _base_digits(n, p):
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out or [0]


# ---------------------------------------------------------------------------
# level-n Stickelberger partial sums (vectorized)

def _cumsum_mod(arr, mod):
    """Cumulative sum mod `mod` without int64 overflow, chunked."""
    import numpy as np
    limit = (1 << 62) // int(mod)
    chunk = max(1, min(len(arr), limit))
    out = np.empty_like(arr)
    offset = 0
    for s in range(0, len(arr), chunk):
        e = min(s + chunk, len(arr))
        np.cumsum(arr[s:e], out=out[s:e])
        out[s:e] = (out[s:e] + offset) % mod
        offset = int(out[e - 1])
    return out


def stickelberger_data(phi, ring, n, D, c=None, K=None):
    """The c-regularized level-n group-ring element, reduced X-adically.

    With chi = phi omega^(-1) and the classical regularized weights
    w_c(a) = {a/M_n} - c {c^(-1) a / M_n} + (c-1)/2, the partial sums

        xi_n = sum_{a mod M_n} w_c(a) chi(a) (1+X)^(-s_n(a))
                                        mod ((1+X)^(p^n) - 1)

    form an exactly coherent family of polynomials with coefficients in
    (1/2) Z_p[chi] whose limit is the integral series

        R_c(X) = -(1 - c chi(c) (1+X)^(-s(c))) F(X, phi);

    the regularizing factor vanishes at X = p exactly when phi is trivial
    (since omega(c)[c] = c), so R_c is integral in the pole case as well.
    Integrality makes the conversion lemma honest: the level-n data
    determines R_c mod (p^(n - floor(log_p(D-1))), X^D).

    Returns (series, c).
    """
    import numpy as np
    p = ring.p
    f = phi.conductor()
    m0 = _tame_part(f, p)
    pn1 = p ** (n + 1)
    Mn = m0 * pn1
    W = p ** n
    K = (n + 4) if K is None else K
    pK = p ** K
    chi = (phi * omega(p).inverse())
    Nchi = chi.order()
    if c is None:
        c = _choose_regulator(chi, ring, m0 * p)
    cinv = pow(c, -1, Mn)
    from .padics import smallest_primitive_root
    g0 = smallest_primitive_root(p)
    teich_g0 = _teich_int(g0, p, n + 1)
    if m0 > 1:
        c2 = m0 * pow(m0, -1, pn1) % Mn          # 1 mod p^(n+1), 0 mod m0
        c1 = (1 - c2) % Mn                        # 1 mod m0, 0 mod p^(n+1)
    else:
        c1, c2 = 0, 1
    assert Mn * max(Mn, pK) < (1 << 62), "level too deep for 64-bit vectors"
    # u^w mod p^(n+1) for w < p^n, in blocks
    u = 1 + p
    U = np.zeros(W, dtype=np.int64)
    base = np.zeros(min(1 << 12, W), dtype=np.int64)
    x = 1
    for i in range(len(base)):
        base[i] = x
        x = (x * u) % pn1
    ublock = pow(u, len(base), pn1)
    start, mult = 0, 1
    while start < W:
        end = min(start + len(base), W)
        U[start:end] = (mult * base[:end - start]) % pn1
        mult = (mult * ublock) % pn1
        start = end
    # accumulate 2*w_c(a) (an integer) per character-value bucket and slot
    buckets = {}
    deltas = [d for d in range(m0) if gcd(d, m0) == 1] if m0 > 1 else [0]
    for delta in deltas:
        a0 = (delta * c1) % Mn
        for tau in range(p - 1):
            Ttau = pow(teich_g0, tau, pn1)
            aref = (a0 + Ttau * c2) % Mn          # the w = 0 member
            e = chi.exponent(aref)
            if e is None:
                continue
            k, N = e
            key = k * (Nchi // N)
            avec = (a0 + (Ttau * c2 % Mn) * U) % Mn
            # 2 w_c(a) = (2a - 2c (c^{-1}a mod Mn))/Mn + (c-1)
            bvec = (cinv * avec) % Mn
            wvec = (2 * avec - 2 * c * bvec) // Mn + (c - 1)
            acc = buckets.get(key)
            if acc is None:
                buckets[key] = wvec.copy()
            else:
                acc += wvec
    # exponent of (1+X) is -s(a) = -w: bucket position w' = (-w) mod p^n
    coeff_sums = {}
    for key, cw0 in buckets.items():
        cw = np.empty_like(cw0)
        cw[0] = cw0[0]
        cw[1:] = cw0[:0:-1]
        cw %= pK
        # A_i = sum_w c_w C(w, i) via iterated strict suffix sums:
        # A_i(c) = A_(i-1)(strict suffix sum of c), A_0 = plain sum
        sums = []
        cur = cw
        for i in range(D):
            inc = np.flip(_cumsum_mod(np.flip(cur), pK))
            sums.append(int(inc[0]))
            cur = np.concatenate([inc[1:], np.zeros(1, dtype=np.int64)])
        coeff_sums[key] = sums
    coeffs = []
    half = ring.from_fraction(Fraction(1, 2))
    for i in range(D):
        acc = ring.zero(ring.cap)
        for key, sums in coeff_sums.items():
            z = ring.zeta_of_order(Nchi, key)
            acc = acc + z * ring.from_int(sums[i], K)
        coeffs.append(acc * half)
    return LambdaSeries(ring, coeffs, D), c


def _choose_regulator(chi, ring, bad):
    """Smallest c >= 2 coprime to the level with 1 - c chi(c) a unit.

    For the trivial branch chi = omega^(-1) that constant is 1 - [c], never
    a unit; there the smallest c with v(1 - [c]) = 1 is used instead, and
    the caller divides the factor's exact zero at X = p out first."""
    p = ring.p
    fallback = None
    for c in range(2, 200):
        if gcd(c, bad * p) != 1:
            continue
        if chi.exponent(c) is None:
            continue
        val = 1 - chi.padic(c, ring) * c
        if (not val.is_zero()) and val.val == 0:
            return c
        if fallback is None and (not val.is_zero()) and val.val == 1:
            fallback = c
    if fallback is not None:
        return fallback
    raise ValueError("no usable regulator found")


def _teich_int(a, p, prec):
    mod = p ** prec
    x = a % mod
    for _ in range(prec + 1):
        x = pow(x, p, mod)
    return x


def regulator_factor(phi, c, ring, D):
    """1 - c chi(c) (1+X)^(-s(c)) with chi = phi omega^(-1)."""
    chi = (phi * omega(ring.p).inverse())
    return LambdaSeries.one(ring, D) - \
        binom_series(-s_exponent(c, ring), D) * (chi.padic(c, ring) * c)


def kl_series_stickelberger(phi, ring, M, D, level=None, stabilize=True):
    """F from the regularized partial sums: -data / regulator_factor.

    The division is by an integral series with unit constant term (for the
    trivial branch the factor's exact zero at X = p is divided out first),
    so no precision is lost beyond the level-conversion bound.  When
    `stabilize` is set the data is recomputed one level deeper and the two
    levels are required to agree at the certified precision; disagreement
    raises rather than returning silently wrong digits.
    """
    p = ring.p
    if not phi.is_even():
        return LambdaSeries.zero(ring, D)
    n = level if level is not None else M + 1 + _floor_log(D - 1, p)
    certified = n - _floor_log(D - 1, p) - 1
    data, c = stickelberger_data(phi, ring, n, D)
    if stabilize:
        prev, _ = stickelberger_data(phi, ring, n - 1, D, c=c)
        check = min(certified, n - 1 - _floor_log(D - 1, p) - 1)
        for i in range(D):
            if not (data.coeffs[i] - prev.coeffs[i]).truncate(check).is_zero():
                raise PrecisionExhausted(
                    "partial sums not stabilized at level %d" % n)
    data = data.map_coeffs(lambda x: x.truncate(certified))
    if phi.is_trivial():
        # the factor vanishes at X = p exactly; (X-p) F = -data / (fac/(X-p)).
        # Dividing the linear factor out costs a digit per coefficient, so
        # build the factor at extended length first.
        fac = regulator_factor(phi, c, ring, D + certified + 1)
        fac2 = fac.divide_exact_linear(ring.from_int(p)).truncated(D)
        H = -(data * fac2.invert())
        return LambdaSeries(ring, H.coeffs, H.D, 'X-p')
    fac = regulator_factor(phi, c, ring, D)
    return -(data * fac.invert())


def _floor_log(x, p):
    out = 0
    while x >= p:
        x //= p
        out += 1
    return out


# ---------------------------------------------------------------------------
# interpolation construction

def kl_series_interpolate(phi, ring, M, D, npts=None):
    """Newton interpolation of F through exact L-values at u^(1-k)-1.

    For trivial phi the pole numerator (X - p) F is interpolated instead.
    Two precision effects are tracked: node differences have valuation
    1 + v_p(k - k'), felt by the divided differences through the scalar
    arithmetic; and the interpolating polynomial itself only agrees with
    the series coefficientwise mod p^(npts - j), since their difference is
    prod (X - x_i) times a series with integral divided-difference
    coefficients and every node has valuation >= 1.  Both are reflected in
    the reported coefficient precision.
    """
    p = ring.p
    if not phi.is_even():
        return LambdaSeries.zero(ring, D)
    npts = D + 8 if npts is None else npts
    u = ring.from_int(1 + p)
    nodes, values = [], []
    for k in range(2, 2 + npts):
        x = u ** (1 - k) - 1
        v = embed_padic(Lp_negative(k, phi, p), ring)
        if phi.is_trivial():
            v = v * (x - p)
        nodes.append(x)
        values.append(v)
    # divided differences
    dd = list(values)
    for lvl in range(1, npts):
        for i in range(npts - 1, lvl - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - lvl])
    # Newton -> monomial
    coeffs = [ring.zero(ring.cap)] * D
    poly = [ring.one()]  # prod (X - nodes[j]) so far
    for i in range(npts):
        for j in range(min(len(poly), D)):
            coeffs[j] = coeffs[j] + dd[i] * poly[j]
        if i < npts - 1:
            newpoly = [ring.zero(ring.cap)] * (len(poly) + 1)
            for j, c in enumerate(poly):
                newpoly[j + 1] = newpoly[j + 1] + c
                newpoly[j] = newpoly[j] - c * nodes[i]
            poly = newpoly
    coeffs = [c.truncate(npts - j) for j, c in enumerate(coeffs)]
    out = LambdaSeries(ring, coeffs, D)
    if phi.is_trivial():
        return LambdaSeries(ring, out.coeffs, D, 'X-p')
    return out


# ---------------------------------------------------------------------------
# the G-side series and the master element

def g_series(eta, ring, M, D, construction="series"):
    """G(X, eta) = F(u^(-1)(1+X)^(-1) - 1, eta) for the theta*omega^2 slot."""
    return compose_involution(kl_series(eta, ring, M, D, construction))


class AFactorization:
    """delta * prod_l ((1+X)^s(l) - xi(l) l^(-2)) * F(involuted, xi2^(-1))."""

    def __init__(self, theta, psi, delta, euler_factors, kl_part, product):
        self.theta = theta
        self.psi = psi
        self.delta = delta
        self.euler_factors = euler_factors    # list of (l, LambdaSeries)
        self.kl_part = kl_part                # the involuted KL series
        self.product = product

    def describe(self):
        return {
            "delta_is_one": self.delta is None,
            "euler_primes": [l for l, _ in self.euler_factors],
            "product": self.product.digits(),
        }


def delta_factor(theta, psi, ring, D):
    """X - (u^(-2) - 1) for the pair (omega^(-2), 1), else None.

    This is the paper-normalized pole-cancelling factor written in the same
    variable as the Eisenstein family; it vanishes exactly where the
    involuted trivial-character L-series has its pole.
    """
    p = ring.p
    th0, ps0 = theta.primitive(), psi.primitive()
    w_m2 = (omega(p) ** (-2)).primitive()
    if th0 == w_m2 and ps0.is_trivial():
        u = ring.from_int(1 + p)
        c0 = (u * u).inverse() - 1
        return LambdaSeries.gen(ring, D) - c0
    return None


def admissibility(theta, psi, t, N, p):
    """The membership conditions for the family attached to (theta, psi, t).

    Returns None if admissible, else the name of the violated condition.
    """
    if t % p == 0:
        return "p divides t"
    if (N * p) % (theta.modulus * psi.modulus * t) != 0:
        return "M_theta M_psi t does not divide N p"
    if psi.modulus % p == 0:
        return "p divides M_psi"
    if (theta.primitive() * psi.primitive()).parity() != 1:
        return "(theta_0 psi_0)(-1) != 1"
    return None


def a_series(theta, psi, ring, M, D, construction="series"):
    """The master element A_{theta,psi} with its factorization."""
    p = ring.p
    if (theta.primitive() * psi.primitive()).parity() != 1:
        raise ValueError("inadmissible pair: (theta_0 psi_0)(-1) != 1")
    if psi.modulus % p == 0:
        raise ValueError("inadmissible pair: p divides M_psi")
    xi = xi_of_pair(theta, psi)
    xi2 = twist(xi, 2, p)
    f_theta, f_psi, f_xi = theta.conductor(), psi.conductor(), xi.conductor()
    primes = sorted(l for l in set(_prime_divisors(f_theta) + _prime_divisors(f_psi))
                    if f_xi % l != 0)
    assert p not in primes, "p-part of f_theta f_psi always matches f_xi"
    kl = compose_involution(kl_series(xi2.inverse(), ring, M, D, construction))
    factors = []
    prod = kl
    for l in primes:
        s_l = s_exponent(l, ring)
        fac = binom_series(s_l, D) - LambdaSeries.constant(
            ring, xi.padic(l, ring) * ring.from_fraction(Fraction(1, l * l)), D)
        factors.append((l, fac))
        prod = prod * fac
    delta = delta_factor(theta, psi, ring, D)
    if delta is not None:
        if prod.denom == 'X-c0':
            prod = prod.mul_linear_cleared(root_is_p=False)
        else:
            prod = prod * delta
    elif prod.denom == 'X-c0':
        # pole cancelled by a vanishing Euler factor rather than by delta;
        # divide out the exact linear factor (D drops by one)
        u = ring.from_int(1 + p)
        c0 = (u * u).inverse() - 1
        prod = prod.numerator().divide_exact_linear(c0)
    return AFactorization(theta, psi, delta, factors, kl, prod)


def b_ell(l, xi, ring, M, D):
    """b_l(X) = (1+X)^s(l) - xi_1^(-1)(l) l, with the unit verdict.

    Unit exactly when 1 - xi_1^(-1)(l) l is a p-adic unit, i.e. when
    xi_2(l) is not a p-power root of unity (trivial included).
    """
    p = ring.p
    if l == p:
        raise ValueError("l must differ from p")
    xi1 = twist(xi, 1, p)
    c = xi1.inverse().padic(l, ring) * l
    series = binom_series(s_exponent(l, ring), D) - LambdaSeries.constant(ring, c, D)
    series = series.map_coeffs(lambda x: x.truncate(M))
    c0 = series.coeffs[0]
    is_unit = (not c0.is_zero()) and c0.val == 0
    return series, is_unit


def a_twist(afact, exceptional, ring, M, D, construction="series"):
    """(A-tilde, A-tilde_0): the involuted image of A and its X-stripped form.

    A-tilde is built directly as prod b_l(X) * F(X, xi_2^(-1)) and verified
    to be a unit multiple of the involution of A.product.  Requires A not a
    unit (the congruence module is trivial otherwise, and the direct form
    would carry the pole).
    """
    p = ring.p
    theta, psi = afact.theta, afact.psi
    if is_exceptional(theta, psi, p) != exceptional:
        raise ValueError("exceptional flag contradicts the pair")
    xi = xi_of_pair(theta, psi)
    xi2 = twist(xi, 2, p)
    if xi2.is_trivial():
        raise ValueError("A is a unit for this pair; no congruences to measure")
    F = kl_series(xi2.inverse(), ring, M, D, construction)
    atilde = F
    for l, _ in afact.euler_factors:
        bl, _unit = b_ell(l, xi, ring, M, D)
        atilde = atilde * bl
    if exceptional:
        c0 = atilde.coeffs[0]
        if not c0.is_zero():
            raise ArithmeticError(
                "exceptional pair but X does not divide A-tilde (constant %r)" % (c0,))
        shifted = LambdaSeries(ring, atilde.coeffs[1:], atilde.D - 1)
        return atilde, shifted
    return atilde, atilde
