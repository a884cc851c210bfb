"""Structure utilities for the truncated Iwasawa algebra: Weierstrass
preparation with an explicit precision certificate, Newton polygons as an
independent oracle for the (mu, lambda) data, Fitting ideals of finitely
presented modules, and characteristic-ideal bookkeeping for cyclic sums.

All ideal comparisons at finite precision go through the normal form
(mu, lambda, distinguished polynomial mod p^M'): literal power-series ideal
equality is undecidable at a truncation, so every claim carries the
precision at which it was checked.
"""

from itertools import combinations

from .series import LambdaSeries, NonUnitError, PrecisionExhausted


class WeierstrassData:
    """f = p^mu * distinguished * unit mod (p^M', X^D), certified."""

    def __init__(self, mu, lam, distinguished, unit, certified_to):
        self.mu = mu
        self.lam = lam
        self.distinguished = distinguished
        self.unit = unit
        self.certified_to = certified_to

    def recombine(self):
        ring = self.distinguished.ring
        return self.distinguished * self.unit * ring.from_int(ring.p) ** self.mu

    def as_dict(self):
        return {
            "mu": self.mu,
            "lambda": self.lam,
            "distinguished": self.distinguished.digits(),
            "unit": self.unit.digits(),
            "certified_to": list(self.certified_to),
        }

    def __repr__(self):
        return "WeierstrassData(mu=%d, lambda=%d, certified=%s)" % (
            self.mu, self.lam, self.certified_to)


def _content_valuation(f):
    """(mu, lambda): min coefficient valuation and the first index where it
    is attained; None if f is indistinguishable from zero."""
    mu = None
    lam = None
    for j, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        if mu is None or c.val < mu:
            mu = c.val
            lam = j
    if mu is None:
        return None
    return mu, lam


def iwasawa_invariants(f):
    """(mu, lambda) read from the coefficients directly."""
    data = _content_valuation(f)
    if data is None:
        raise ArithmeticError("series indistinguishable from zero")
    return data


def newton_polygon(f):
    """Vertices of the lower convex hull of {(j, v(c_j))}."""
    pts = [(j, c.val) for j, c in enumerate(f.coeffs) if not c.is_zero()]
    if not pts:
        raise ArithmeticError("series indistinguishable from zero")
    hull = [pts[0]]
    for pt in pts[1:]:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if pt makes it non-convex (cross product test)
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def weierstrass_prepare(f, max_p_steps=None):
    """The unique (mu, lambda, P, U) with f = p^mu P U, P monic distinguished
    of degree lambda, U a unit; computed by linear Hensel lifting from the
    residual factorization X^lambda * (unit) and certified by recombination.
    """
    ring = f.ring
    p = ring.p
    D = f.D
    data = _content_valuation(f)
    if data is None:
        raise ArithmeticError("cannot prepare a series indistinguishable from zero")
    mu, lam = data
    if lam >= D:
        raise PrecisionExhausted("lambda >= truncation order %d" % D)
    pinv_mu = ring.from_int(p) ** (-mu) if mu else None
    g = f.map_coeffs(lambda c: c * pinv_mu) if mu else f
    # working precision: limited by the scaled series
    K = min(c.prec for c in g.coeffs)
    if K <= 0:
        raise PrecisionExhausted("no residual digits after removing p^mu")
    if lam == 0:
        U = g
        P = LambdaSeries.one(ring, D)
        return WeierstrassData(mu, 0, P, U, (K, D))
    # residual factorization mod p
    Ubar = LambdaSeries(ring, g.coeffs[lam:] + [ring.zero()] * lam, D)
    Ubar_inv = Ubar.invert()
    P = LambdaSeries(ring, [ring.zero()] * lam +
                     [ring.one()] + [ring.zero()] * (D - lam - 1), D)
    U = Ubar
    for step in range(K if max_p_steps is None else min(K, max_p_steps)):
        E = g - P * U
        if E.is_zero():
            break
        # E is divisible by p^(step+1); solve dP*Ubar + X^lam dU*Ubar = E/p^s
        s = min((c.val for c in E.coeffs if not c.is_zero()), default=K)
        if s >= K:
            break
        scale = ring.from_int(p) ** (-s)
        G = E.map_coeffs(lambda c: c * scale) * Ubar_inv
        dP = LambdaSeries(ring, G.coeffs[:lam] + [ring.zero()] * (D - lam), D)
        dU = LambdaSeries(ring, G.coeffs[lam:] + [ring.zero()] * lam, D) * Ubar
        pshift = ring.from_int(p) ** s
        P = P + dP.map_coeffs(lambda c: c * pshift)
        U = U + dU.map_coeffs(lambda c: c * pshift)
    resid = g - P * U
    cert = min(c.prec if c.is_zero() else c.val for c in resid.coeffs)
    if cert <= 0:
        raise PrecisionExhausted("preparation failed to converge")
    # sanity on shape: monic at lambda, lower coefficients non-unit
    assert (P.coeffs[lam] - 1).is_zero()
    for j in range(lam):
        assert P.coeffs[j].is_zero() or P.coeffs[j].val >= 1
    return WeierstrassData(mu, lam, P, U, (cert, D))


# ---------------------------------------------------------------------------
# Fitting ideals

class PresentedModule:
    """Cokernel of a relations-by-generators matrix over the truncated ring."""

    def __init__(self, matrix):
        self.matrix = [list(row) for row in matrix]
        self.rows = len(self.matrix)
        self.cols = len(self.matrix[0]) if self.matrix else 0

    def transpose_relations(self):
        return self.rows, self.cols


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    ring = mat[0][0].ring
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def fitting_ideal(mod):
    """Generators (all maximal minors) of the zeroth Fitting ideal."""
    m, n = mod.rows, mod.cols
    if m < n:
        ring = mod.matrix[0][0].ring
        D = mod.matrix[0][0].D
        return [LambdaSeries.zero(ring, D)]
    gens = []
    for rows in combinations(range(m), n):
        mat = [mod.matrix[i] for i in rows]
        gens.append(_det(mat))
    return gens


def ideal_normal_form(gens):
    """(mu, lambda, distinguished) of the gcd-like normal form: the minimum
    mu and, among generators attaining it, the minimal lambda with its
    distinguished part.  For principal comparisons only; a full gcd over
    the truncated ring is out of scope."""
    best = None
    for g in gens:
        if g.is_zero():
            continue
        w = weierstrass_prepare(g)
        key = (w.mu, w.lam)
        if best is None or key < (best.mu, best.lam):
            best = w
    return best


def fitting_contains(gens, elem, M):
    """Membership certificate for diagonal-style cases: elem is a unit
    multiple of one generator mod p^M (sufficient for the property tests)."""
    for g in gens:
        if g.is_zero():
            continue
        try:
            ratio_ok = _unit_multiple(g, elem, M)
        except (NonUnitError, ZeroDivisionError, ArithmeticError):
            continue
        if ratio_ok:
            return True
    return False


def _unit_multiple(g, elem, M):
    wg, we = weierstrass_prepare(g), weierstrass_prepare(elem)
    if (wg.mu, wg.lam) != (we.mu, we.lam):
        return False
    diff = wg.distinguished - we.distinguished
    return all(c.truncate(min(M, c.prec)).is_zero() for c in diff.coeffs)


# ---------------------------------------------------------------------------
# characteristic ideals and resultants

def char_ideal_cyclic_sum(factors):
    """Normalized generator p^(sum mu) prod (distinguished parts) of the
    characteristic ideal of a direct sum of cyclic quotients."""
    if not factors:
        raise ValueError("empty sum")
    ring = factors[0].ring
    total_mu = 0
    prod = LambdaSeries.one(ring, factors[0].D)
    datas = []
    for f in factors:
        if f.is_zero():
            raise ArithmeticError("zero factor: the quotient is not torsion")
        w = weierstrass_prepare(f)
        total_mu += w.mu
        prod = prod * w.distinguished
        datas.append(w)
    gen = prod * ring.from_int(ring.p) ** total_mu
    return gen, total_mu, datas


def resultant_valuation(f, g):
    """Valuation of Res(P_f, P_g) of the distinguished parts: finite iff the
    parts are coprime (no common distinguished factor)."""
    wf, wg = weierstrass_prepare(f), weierstrass_prepare(g)
    a = [wf.distinguished.coeffs[j] for j in range(wf.lam + 1)]
    b = [wg.distinguished.coeffs[j] for j in range(wg.lam + 1)]
    n, m = len(a) - 1, len(b) - 1
    if n == 0 or m == 0:
        ring = f.ring
        return 0 if (n == 0 and m == 0) else 0
    size = n + m
    ring = f.ring
    rows = []
    for i in range(m):
        row = [ring.zero()] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [ring.zero()] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    det = _det(rows)
    if det.is_zero():
        return ("ge", det.prec)
    return det.val
