"""Generalized Bernoulli numbers and Dirichlet L-values at non-positive
integers, exactly in Q(zeta).

B_{k,chi} is computed over the *modulus* of chi via

    B_{k,chi} = M^(k-1) * sum_{a=1}^{M} chi(a) B_k(a/M),

so an imprimitive character automatically yields the primitive value with
the Euler factors (1 - chi0(l) l^(k-1)) at the extra primes of M removed.
L(1-k, chi) = -B_{k,chi}/k; an explicit strip set multiplies further Euler
factors back in.  Everything is exact, so these values serve as the
interpolation oracle for the p-adic L-series with zero numerical noise.
"""

from fractions import Fraction

from .cyclotomic import Cyc


def bernoulli_number(k):
    """Classical B_k (B_1 = -1/2), by the standard recurrence, cached."""
    cache = bernoulli_number.cache
    while len(cache) <= k:
        n = len(cache)
        # sum_{j=0}^{n} C(n+1, j) B_j = 0
        s = Fraction(0)
        c = 1
        for j in range(n):
            s += c * cache[j]
            c = c * (n + 1 - j) // (j + 1)
        cache.append(-s / (n + 1))
    return cache[k]


bernoulli_number.cache = [Fraction(1)]


def bernoulli_polynomial_at(k, x):
    """B_k(x) for a Fraction x."""
    x = Fraction(x)
    total = Fraction(0)
    c = 1
    for j in range(k + 1):
        total += c * bernoulli_number(j) * x ** (k - j)
        c = c * (k - j) // (j + 1)
    return total


def bernoulli_generalized(k, chi):
    """B_{k,chi} over the modulus of chi, as an element of Q(zeta_ord)."""
    M = chi.modulus
    if M == 1:
        b = bernoulli_number(k)
        if k == 1:
            # chi trivial mod 1: the finite-sum convention gives +1/2
            b = Fraction(1, 2)
        return Cyc.from_rational(b)
    total = Cyc.from_rational(0, chi.order())
    Mk = Fraction(M) ** (k - 1)
    for a in range(1, M + 1):
        e = chi.exponent(a)
        if e is None:
            continue
        total = total + chi.cyc(a) * (Mk * bernoulli_polynomial_at(k, Fraction(a, M)))
    return total


def dirichlet_L_negative(k, chi, strip=()):
    """L(1-k, chi) = -B_{k,chi}/k, times (1 - chi(l) l^(k-1)) for l in strip."""
    if k < 1:
        raise ValueError("k >= 1 required")
    val = bernoulli_generalized(k, chi) * Fraction(-1, k)
    for ell in strip:
        val = val * (Cyc.from_rational(1) - chi.cyc(ell) * ell ** (k - 1))
    return val


def zeta_negative(k):
    """zeta(1-k) for k >= 2 even (and 0 for k >= 3 odd)."""
    return -bernoulli_number(k) / k


def Lp_negative(k, chi, p):
    """L_p(1-k, chi) = L(1-k, (chi omega^(-k))_(p)), exactly in Q(zeta).

    chi may be imprimitive; its extra Euler factors stay removed.
    """
    from .characters import twist, _lcm
    chik = twist(chi, k, p)
    extra = [ell for ell in _prime_divisors(chi.modulus)
             if chik.conductor() % ell and ell != p]
    Mtarget = chik.conductor()
    for ell in sorted(set(extra + [p])):
        while Mtarget % ell:
            Mtarget *= ell
    return dirichlet_L_negative(k, chik.induce(Mtarget))


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
