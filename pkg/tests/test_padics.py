from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eisres.padics import (PadicRing, teichmuller, s_exponent, log_one_unit,
                           multiplicative_order, cyclotomic_poly)
from conftest import get_ring


def test_teichmuller_identity_case():
    assert teichmuller(1, 5, 3) == 1


def test_teichmuller_minus_one():
    # omega(-1) = -1 is forced by (-1)^(p^n) = -1
    assert teichmuller(4, 5, 2) == 24


def test_teichmuller_two_mod_25():
    # iterate 2^(5^n) mod 25 to its fixed point: 2^5 = 32 = 7, 7^5 = 7
    assert teichmuller(2, 5, 2) == 7
    assert pow(7, 5, 25) == 7


def test_teichmuller_power_identity(ring5):
    p = 5
    for a in range(1, 15):
        if a % p == 0:
            continue
        t = ring5.teichmuller(a)
        assert (t ** (p - 1) - 1).is_zero()
        assert (t - a).val is None or (t - a).val >= 1


def test_teichmuller_rejects_multiples_of_p(ring5):
    with pytest.raises(ValueError):
        ring5.teichmuller(10)


def test_s_exponent_of_u(ring5):
    assert (s_exponent(6, ring5) - 1).is_zero()
    assert s_exponent(1, ring5).is_zero()


def test_s_exponent_exponentiation_oracle():
    # u^(s(7)) == [7] mod 5^10
    ring = get_ring(5, 1, 14)
    s7 = s_exponent(7, ring)
    n = s7.lift_int() % 5 ** 10
    bracket = (ring.from_int(7) * ring.teichmuller(7).inverse()).lift_int() % 5 ** 10
    assert pow(6, n, 5 ** 10) == bracket


def test_s_exponent_additive():
    ring = get_ring(5, 1, 14)
    s6 = s_exponent(6, ring)
    s7 = s_exponent(7, ring)
    s42 = s_exponent(42, ring)
    assert ((s6 + s7) - s42).truncate(10).is_zero()


def test_ring_construction_orders():
    for p, m in [(5, 11), (5, 22), (7, 12), (5, 44), (7, 33)]:
        R = get_ring(p, m, 8)
        z = R.zeta()
        assert (z ** m - 1).is_zero()
        for q in set(_prime_factors(m)):
            assert not (z ** (m // q) - 1).is_zero()
        assert R.degree == multiplicative_order(p, m)


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


def test_cyclotomic_poly_degrees():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(4) == [1, 0, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6),
       st.integers(-10 ** 6, 10 ** 6))
def test_ring_axioms_rational_subring(a, b, c):
    R = get_ring(5, 1, 12)
    x, y, z = R.from_int(a), R.from_int(b), R.from_int(c)
    assert ((x + y) * z - (x * z + y * z)).is_zero()
    assert ((x * y) * z - x * (y * z)).is_zero()
    assert ((x + y) - (y + x)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10 ** 6))
def test_inverse_roundtrip(a):
    R = get_ring(5, 11, 10)
    x = R.from_int(a) + R.zeta() * R.from_int(1 + a % 7)
    if x.is_zero() or x.val != 0:
        return
    assert (x * x.inverse() - 1).is_zero()


def test_precision_soundness_pipeline():
    # recompute a pipeline at higher precision and truncate: must agree
    lo, hi = get_ring(5, 1, 10), get_ring(5, 1, 14)
    def pipeline(R):
        x = R.from_fraction(Fraction(7, 10))
        y = R.from_int(123) * x + R.from_int(4) ** 6
        return y * s_exponent(7, R)
    a, b = pipeline(lo), pipeline(hi)
    assert a.prec <= b.prec
    assert (b.truncate(a.prec).lift_vector() == a.lift_vector())


def test_valuation_semantics(ring5):
    x = ring5.from_fraction(Fraction(4, 5))
    assert x.valuation() == -1
    z = ring5.from_int(0, 6)
    assert z.valuation() == ("ge", 6)
    assert (ring5.from_int(50)).valuation() == 2


def test_division_reduces_precision(ring5):
    x = ring5.from_int(7, 8)
    y = ring5.from_int(25, 8)
    q = x / y
    # dividing by p^2 shifts the absolute precision window down
    assert q.val == -2
    assert q.prec == 8 - 4  # rel precision 6 around valuation -2


def test_zeta_embedding_consistency():
    # zeta_22^11 = zeta_2 = -1; zeta_22^2 has order 11
    R = get_ring(5, 22, 8)
    assert (R.zeta_of_order(2) + 1).is_zero()
    z11 = R.zeta_of_order(11)
    assert (z11 ** 11 - 1).is_zero() and not (z11 - 1).is_zero()


def test_omega_normalized_embedding():
    # the canonical session root makes omega values Teichmuller lifts
    from eisres.characters import omega
    for (p, m) in [(5, 4), (5, 44), (7, 6), (7, 12)]:
        R = get_ring(p, m, 10)
        w = omega(p)
        for a in range(2, p):
            assert (w.padic(a, R) - R.teichmuller(a)).is_zero()
