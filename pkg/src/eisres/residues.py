"""Residues of the weight-2 member of an Eisenstein family at the cusps,
and the level-one component of the family residue map.

Constant terms.  Every weight-2 form in play is a finite combination of
shifts E|V_m of Eisenstein series E attached to a pair of primitive
characters, and for such a primitive pair the constant term at any cusp
has the closed form (derived from the lattice-sum representation and the
functional equation; all quantities exact):

    a0( E_k^(theta,psi) | [a;c] ) =
        (1/2) (g(xi)/g(theta0^-1)) (g/f_xi)^k psi0(-c/g) theta0^-1(f a/g)
        * prod_(l | f_theta f_psi, l nmid f_xi) (1 - xi(l) l^(-k))
        * L(1-k, xi^-1),

with xi = (theta^-1 psi)_0, f = f_theta, g = gcd(f a, c) for a coprime
representative (a, c), and the convention that the (1,1)-pair (the
quasimodular weight-2 series) has the same constant term at every cusp.
The V_m shift moves cusps by a0(f|V_m at [a;c]) = (gcd(ma,c)/m)^k a0(f at
[ma/g'; c/g']).  Gauss-sum ratios are evaluated p-adically through the
tame decomposition (the wildly ramified parts of xi and theta share their
Teichmuller component, so the ratio is tame).

Residues.  Res at a cusp is width times constant term; the total over all
cusps of the level-Np curve vanishes (the residue-theorem check).  The
level-one component of the family residue map attaches to each ordinary
class the residue of the weight-2 member at the Fricke-image point, with
the tuple-pinned width t d_Q P / gcd(y, t); the verification compares this
per tuple against A(0) times the coefficient of the explicit boundary
element, the two sides sharing no code path (divisor sums, widths and
Gauss sums on one side; the regularized L-series construction on the
other).
"""

from fractions import Fraction
from math import gcd

from .padics import s_exponent
from .series import LambdaSeries, binom_series
from .characters import (DirichletCharacter, omega, twist, xi_of_pair,
                         gauss_sum_padic, _lcm)
from .klseries import (a_series, delta_factor, admissibility, _prime_divisors,
                       _tame_part)
from .lvalues import dirichlet_L_negative
from .cyclotomic import embed_padic
from .cusps import (CuspLabel, CuspDivisor, enumerate_A0, enumerate_St,
                    enumerate_classes, st_factorization, make_st_label,
                    st_width, st_fricke_point, fricke_point, width, _divisors)
from .eisenstein import squarefree_extra, _mu


# ---------------------------------------------------------------------------
# Gauss-sum ratio with matching wild parts

def _tame_ramified_split(chi, p):
    """chi0 = (tame part) * omega^i; returns (tame primitive, i)."""
    chi0 = chi.primitive()
    if chi0.conductor() % p != 0:
        return chi0, 0
    w = omega(p)
    for i in range(1, p - 1):
        cand = (chi0 * (w ** (-i))).primitive()
        if cand.conductor() % p != 0:
            return cand, i
    raise ArithmeticError("no tame twist found (wild ramification?)")


def gauss_ratio(num_chi, den_chi, ring):
    """g(num)/g(den) for primitive characters whose p-parts coincide.

    With num = a * omega^i and den = b * omega^i (a, b tame), the ratio is
    (g(a)/g(b)) * (a(p)/b(p))^[i != 0] * omega^i(f_a/f_b) -- all tame.
    """
    p = ring.p
    a, i = _tame_ramified_split(num_chi, p)
    b, j = _tame_ramified_split(den_chi, p)
    if i != j:
        raise ValueError("wild parts differ; ratio is not tame")
    ga = gauss_sum_padic(a, ring)
    gb = gauss_sum_padic(b, ring)
    out = ga * gb.inverse()
    if i != 0:
        out = out * a.padic(p, ring) * b.padic(p, ring).inverse()
        w = omega(p) ** i
        fa, fb = a.conductor(), b.conductor()
        out = out * w.padic(fa, ring) * w.padic(fb, ring).inverse()
    return out


# ---------------------------------------------------------------------------
# constant terms of weight-2 Eisenstein combinations at arbitrary cusps

class EisPieces:
    """A formal combination sum coef * E_k^(theta0,psi0)|V_m."""

    def __init__(self, k, pieces):
        self.k = k
        self.pieces = pieces      # list of (coef PadicScalar, theta0, psi0, m)


def stabilized_weight2_pieces(theta, psi, t, ring, include_delta=True):
    """v_2 of the family as a combination of primitive-pair series:
    expand the p-stabilization and both imprimitivities through V-shifts."""
    p = ring.p
    th0, ps0 = theta.primitive(), psi.primitive()
    D_th = squarefree_extra(theta, p)
    D_ps = squarefree_extra(psi, p, avoid_p=False)
    if th0.conductor() % p != 0:
        D_th *= p          # the p-stabilization is one more removed prime
    pieces = []
    dval = ring.one()
    if include_delta:
        delta = delta_factor(theta, psi, ring, 2)
        if delta is not None:
            dval = delta.evaluate(ring.zero())
    for alpha in _divisors(D_th):
        if _mu(alpha) == 0:
            continue
        ca = th0.exponent(alpha)
        if ca is None:
            continue
        for beta in _divisors(D_ps):
            if _mu(beta) == 0:
                continue
            cb = ps0.exponent(beta)
            if cb is None:
                continue
            coef = th0.padic(alpha, ring) * ps0.padic(beta, ring) \
                * (alpha * _mu(alpha) * _mu(beta)) * dval
            pieces.append((coef, th0, ps0, alpha * beta * t))
    return EisPieces(2, pieces)


def primitive_constant_term(k, th0, ps0, a, c, ring):
    """a0 of the primitive-pair weight-k series at the point a/c,
    gcd(a, c) = 1; exact ingredients embedded p-adically."""
    f_th, f_ps = th0.conductor(), ps0.conductor()
    if f_th == 1 and f_ps == 1:
        # quasimodular: same constant term at every cusp
        val = dirichlet_L_negative(k, DirichletCharacter.trivial()) / 2
        return embed_padic(val, ring)
    xi = xi_of_pair(th0, ps0)
    g = gcd(f_th * a, c)
    arg_th = f_th * a // g
    e_th = th0.inverse().exponent(arg_th)
    e_ps = ps0.exponent(-(c // g))
    if e_th is None or e_ps is None:
        return ring.zero()
    ratio = gauss_ratio(xi, th0.inverse(), ring)
    f_xi = xi.conductor()
    scale = ring.from_fraction(Fraction(g, f_xi) ** k) * ring.from_fraction(Fraction(1, 2))
    euler = ring.one()
    for l in sorted(set(_prime_divisors(f_th) + _prime_divisors(f_ps))):
        if f_xi % l != 0:
            euler = euler * (1 - xi.padic(l, ring) * ring.from_fraction(Fraction(1, l ** k)))
    Lval = embed_padic(dirichlet_L_negative(k, xi.inverse()), ring)
    return ratio * scale * th0.inverse().padic(arg_th, ring) \
        * ps0.padic(-(c // g), ring) * euler * Lval


def piece_constant_term(pieces, a, c, ring, cache=None):
    """a0 of the combination at the point a/c (coprime integers)."""
    total = ring.zero(ring.cap)
    k = pieces.k
    for coef, th0, ps0, m in pieces.pieces:
        g = gcd(m * a, c)
        a2, c2 = m * a // g, c // g
        key = (th0, ps0, a2, c2)
        if cache is not None and key in cache:
            base = cache[key]
        else:
            base = primitive_constant_term(k, th0, ps0, a2, c2, ring)
            if cache is not None:
                cache[key] = base
        total = total + coef * base * ring.from_fraction(Fraction(g, m) ** k)
    return total


def constant_term_E2(theta, psi, cusp, ring, t=1):
    """The weight-2 member's constant term at a cusp label (epsilon trivial)."""
    pieces = stabilized_weight2_pieces(theta, psi, t, ring)
    a, c = cusp.coprime_lift()
    return piece_constant_term(pieces, a, c, ring)


def residue_at(theta, psi, cusp, ring, t=1, level=None):
    """Width times constant term on the level-Np curve (epsilon trivial)."""
    M = cusp.M if level is None else level
    W = width(cusp, M)
    return constant_term_E2(theta, psi, cusp, ring, t) * W


def total_residue(theta, psi, t, N, ring):
    """Sum of residues of the weight-2 member over all cusps of the
    level-Np curve; exactly zero for a holomorphic weight-2 form."""
    p = ring.p
    M = N * p
    pieces = stabilized_weight2_pieces(theta, psi, t, ring)
    cache = {}
    total = ring.zero(ring.cap)
    table = []
    for cls in enumerate_classes(M):
        a, c = cls.coprime_lift()
        a0 = piece_constant_term(pieces, a, c, ring, cache)
        W = width(cls, M)
        table.append((cls, W, a0))
        total = total + a0 * W
    return total, table


# ---------------------------------------------------------------------------
# the level-one component of the residue map and the boundary element

def lemma_C_constant(theta, psi, ring):
    """The tuple-independent unit C = (1/2) (g((psi chi^-1)_0)/g(chi_0^-1))
    omega^i(ft/fxi) (ft/fxi)^2, where theta = chi omega^i with chi tame."""
    p = ring.p
    th0, ps0 = theta.primitive(), psi.primitive()
    chi, i = _tame_ramified_split(th0, p)
    num = (ps0 * chi.inverse()).primitive()
    den = chi.inverse().primitive()
    ratio = gauss_sum_padic(num, ring) * gauss_sum_padic(den, ring).inverse()
    ft = _tame_part(th0.conductor(), p)
    fxi = _tame_part(xi_of_pair(th0, ps0).conductor(), p)
    wi = (omega(p) ** i)
    # f_theta/f_xi is p-free: the p-parts of the two conductors agree
    arg = Fraction(ft, fxi)
    assert arg.denominator == 1 or Fraction(fxi, ft).denominator == 1
    val = wi.padic(arg.numerator, ring) * wi.padic(arg.denominator, ring).inverse()
    return ratio * val * ring.from_fraction(Fraction(ft, fxi) ** 2) \
        * ring.from_fraction(Fraction(1, 2))


def e_divisor_primitive(theta, psi, t, N, ring, M, D):
    """The level-one boundary element of a primitive pair: the tuple sum

        C P sum_(d_t,d_Q,x,y) (d_Q (1+X)^s(-ft/fxi d_t x) / gcd(y,t))
                  psi0(y Q / d_Q) theta0^-1(d_t x) . [tuple class]

    returned as a divisor with series coefficients, together with the
    tuple->coefficient table."""
    p = ring.p
    th0, ps0 = theta.primitive(), psi.primitive()
    ft, P, Q = st_factorization(th0, ps0, t, N, p)
    fxi = _tame_part(xi_of_pair(th0, ps0).conductor(), p)
    C = lemma_C_constant(th0, ps0, ring)
    tuples = enumerate_St(th0, ps0, t, N, p)
    div = CuspDivisor(N * p)
    table = {}
    for tup in tuples:
        d_t, d_Q, x, y = tup
        lab = make_st_label(tup, P, N, p)
        gy = gcd(y, t) if y else t
        # s(-ft/(fxi d_t x)): the sign has trivial bracket, and
        # s(n/d) = s(n) - s(d) on units
        arg = Fraction(ft, fxi * d_t * x)
        s_val = s_exponent(arg.numerator, ring) - s_exponent(arg.denominator, ring)
        coef = binom_series(s_val, D) * (
            C * ps0.padic(y * Q // d_Q if y else 0, ring) *
            th0.inverse().padic(d_t * x, ring) *
            ring.from_fraction(Fraction(d_Q, gy)) * P)
        table[tup] = (lab, coef)
        div.add(lab, coef)
    return div, table, (ft, P, Q)


def e_divisor(theta, psi, t, N, ring, M, D):
    """The boundary element of a possibly imprimitive pair: the alpha,beta
    sum of shifted primitive boundary elements."""
    p = ring.p
    th0, ps0 = theta.primitive(), psi.primitive()
    D_th = squarefree_extra(theta, p)
    D_ps = squarefree_extra(psi, p, avoid_p=False)
    div = CuspDivisor(N * p)
    tables = []
    for alpha in _divisors(D_th):
        if _mu(alpha) == 0:
            continue
        for beta in _divisors(D_ps):
            if _mu(beta) == 0:
                continue
            ca, cb = th0.exponent(alpha), ps0.exponent(beta)
            if ca is None or cb is None:
                continue
            scal = th0.padic(alpha, ring) * ps0.padic(beta, ring) \
                * (alpha * _mu(alpha) * _mu(beta))
            coef = binom_series(s_exponent(alpha, ring), D) * scal
            sub, table, fPQ = e_divisor_primitive(th0, ps0, alpha * beta * t,
                                                  N, ring, M, D)
            tables.append((alpha, beta, coef, table, fPQ))
            for lab, cc in sub.items():
                div.add(lab, cc * coef)
    return div, tables


# ---------------------------------------------------------------------------
# verification of the residue identity

class ResidueReport:
    def __init__(self, theta, psi, t, N, p, M, D):
        self.inputs = dict(theta=theta, psi=psi, t=t, N=N, p=p, M=M, D=D)
        self.match = None
        self.precision = None
        self.rows = []
        self.total_residue_zero = None
        self.unit_coefficient = None
        self.support_ok = None
        self.width_formula_ok = None
        self.mismatches = []

    def as_dict(self):
        return {
            "pair": [self.inputs["theta"].describe(), self.inputs["psi"].describe()],
            "t": self.inputs["t"], "N": self.inputs["N"], "p": self.inputs["p"],
            "match": self.match,
            "precision": self.precision,
            "total_residue_zero": self.total_residue_zero,
            "unit_coefficient": self.unit_coefficient,
            "support_contained": self.support_ok,
            "width_formula": self.width_formula_ok,
            "per_cusp": [
                {"tuple": list(r["tuple"]), "label": repr(r["label"]),
                 "width": r["width"], "lhs": r["lhs"].digits(),
                 "rhs": r["rhs"].digits(), "ok": r["ok"]}
                for r in self.rows
            ],
            "mismatches": self.mismatches,
        }


def verify_res_identity(theta, psi, t, N, ring, M, D):
    """Per-tuple comparison of the residue map's level-one component with
    A(0) times the boundary-element coefficient, plus the residue-theorem
    and support checks.  The two sides are computed along disjoint routes.
    """
    p = ring.p
    reason = admissibility(theta, psi, t, N, p)
    if reason is not None:
        raise ValueError("inadmissible: " + reason)
    report = ResidueReport(theta, psi, t, N, p, M, D)
    th0, ps0 = theta.primitive(), psi.primitive()

    # right side: A(0) and the boundary element; the substitution inside A
    # caps the X^j coefficient at p^(D_A - j), so build deep enough that the
    # constant term is certified at p^M
    A = a_series(theta, psi, ring, M, max(D, M + 1))
    A0 = A.product.evaluate(ring.zero())
    ediv, tables = e_divisor(theta, psi, t, N, ring, M, D)

    # left side, per tuple of each (alpha, beta) term: the paper-normalized
    # residue  (1/(alpha beta t)) psi0(p)^-1 W(tuple) a0(E2 | fricke image),
    # where E2 is the t = 1 member: the shift is already accounted for by
    # the 1/t prefactor and the w_(Np/t) twist of the cusp
    pieces = stabilized_weight2_pieces(th0, ps0, 1, ring)
    a0cache = {}
    all_ok = True
    min_prec = ring.cap
    psi0p_inv = ps0.padic(p, ring).inverse()
    Mlevel = N * p
    width_ok = True
    predicted = set()
    for alpha, beta, coef, table, fPQ in tables:
        ft, P, Q = fPQ
        tt = alpha * beta * t
        coef0 = coef.evaluate(ring.zero())
        for tup, (lab, ecoef) in table.items():
            predicted.add(lab.class_rep().key())
            num, den = st_fricke_point(tup, P, N, p, tt)
            W = st_width(tup, P, tt)
            a0 = piece_constant_term(pieces, num, den, ring, a0cache)
            lhs = a0 * W * psi0p_inv * ring.from_fraction(Fraction(1, tt)) * coef0
            rhs = (ecoef * coef).evaluate(ring.zero()) * A0
            dd = lhs - rhs
            prec_here = min(M, dd.prec)
            okrow = dd.truncate(prec_here).is_zero()
            min_prec = min(min_prec, prec_here)
            report.rows.append(dict(tuple=(alpha, beta) + tup, label=lab,
                                    width=W, lhs=lhs, rhs=rhs, ok=okrow))
            if not okrow:
                all_ok = False
                report.mismatches.append(
                    {"tuple": list((alpha, beta) + tup), "label": repr(lab),
                     "difference": dd.digits()})
            # closed-form width vs the congruence width of the image class
            if tup[3] != 0:
                img = CuspLabel(Mlevel, num, den)
                if width(img, Mlevel) != W:
                    width_ok = False

    # residue theorem over every cusp of the level-Np curve
    total, table_all = total_residue(theta, psi, t, N, ring)
    report.total_residue_zero = total.truncate(min(M, total.prec)).is_zero()

    # support: the residue recipe vanishes at ordinary classes off the
    # tuple set (same recipe, trivial-gamma lift)
    support_ok = True
    for (a_c, lab) in enumerate_A0(N, p, 1):
        rep = lab.class_rep().key()
        if rep in predicted:
            continue
        num, den = fricke_point(lab, Mlevel, t)
        a0 = piece_constant_term(pieces, num, den, ring, a0cache)
        if not a0.truncate(min(M, a0.prec)).is_zero():
            support_ok = False
            report.mismatches.append({"off_support": repr(lab)})
    report.support_ok = support_ok

    # the distinguished coefficient is a unit
    unit = False
    for lab, cc in ediv.items():
        c0 = cc.coeffs[0]
        if (not c0.is_zero()) and c0.val == 0:
            unit = True
            break
    report.unit_coefficient = unit
    report.match = all_ok and support_ok
    report.precision = min_prec
    report.width_formula_ok = width_ok
    return report
