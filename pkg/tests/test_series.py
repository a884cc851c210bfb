import pytest
from hypothesis import given, settings, strategies as st

from eisres.padics import s_exponent
from eisres.series import (LambdaSeries, binom_series, log_series,
                           compose_involution, involution_sub)
from conftest import get_ring


def R():
    return get_ring(5, 1, 16)


def rand_series(ring, data, D=6):
    return LambdaSeries(ring, [ring.from_int(c) for c in data[:D]] , D)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-500, 500), min_size=6, max_size=6),
       st.lists(st.integers(-500, 500), min_size=6, max_size=6),
       st.lists(st.integers(-500, 500), min_size=6, max_size=6))
def test_ring_axioms(a, b, c):
    ring = R()
    f, g, h = (rand_series(ring, x) for x in (a, b, c))
    assert ((f + g) * h - (f * h + g * h)).is_zero()
    assert ((f * g) * h - f * (g * h)).is_zero()


def test_add_zero_identity():
    ring = R()
    f = rand_series(ring, [3, 1, 4, 1, 5, 9])
    assert (f + LambdaSeries.zero(ring, 6) - f).is_zero()


def test_geometric_inverse():
    ring = R()
    D = 8
    one_plus_x = LambdaSeries.gen(ring, D) + 1
    geo = LambdaSeries(ring, [ring.from_int((-1) ** j) for j in range(D)], D)
    assert (one_plus_x * geo - LambdaSeries.one(ring, D)).is_zero()
    assert (one_plus_x.invert() - geo).is_zero()


def test_invert_non_unit_reports_invariants():
    from eisres.series import NonUnitError
    ring = R()
    f = LambdaSeries(ring, [ring.from_int(5), ring.from_int(1)] +
                     [ring.zero()] * 4, 6)
    with pytest.raises(NonUnitError) as exc:
        f.invert()
    assert (exc.value.mu, exc.value.lam) == (0, 1)


def test_binom_series_trivial_cases():
    ring = R()
    assert (binom_series(0, 6, ring) - LambdaSeries.one(ring, 6)).is_zero()
    one_plus_x = LambdaSeries.gen(ring, 6) + 1
    assert (binom_series(1, 6, ring) - one_plus_x).is_zero()


def test_binom_series_exponentiation_oracle():
    # evaluate((1+X)^(s(2)), u^(k-2)-1) = [2]^(k-2)
    ring = R()
    s2 = s_exponent(2, ring)
    bs = binom_series(s2, 8)
    u = ring.from_int(6)
    b2 = ring.from_int(2) * ring.teichmuller(2).inverse()
    for k in (2, 3, 4, 6):
        got = bs.evaluate(u ** (k - 2) - 1)
        assert (got - b2 ** (k - 2)).truncate(7).is_zero()


def test_evaluate_constant_and_zero():
    ring = R()
    f = rand_series(ring, [3, 1, 4, 1, 5, 9])
    assert (f.evaluate(ring.zero()) - 3).is_zero()
    assert (f.evaluate(ring.from_int(0)) - 3).is_zero()


def test_evaluate_requires_positive_valuation():
    ring = R()
    f = rand_series(ring, [1, 2, 3, 4, 5, 6])
    with pytest.raises(ValueError):
        f.evaluate(ring.from_int(2))


def test_involution_is_involution():
    ring = R()
    D = 8
    g = rand_series(ring, [3, 1, 7, 2, 0, 4, 1, 1], D)
    gg = compose_involution(compose_involution(g))
    assert (gg - g).is_zero()
    X = LambdaSeries.gen(ring, D)
    assert (compose_involution(X) - involution_sub(ring, D)).is_zero()


def test_involution_composition_precision_is_capped():
    ring = R()
    D = 6
    g = rand_series(ring, [1, 1, 1, 1, 1, 1], D)
    out = compose_involution(g)
    for j, c in enumerate(out.coeffs):
        assert c.prec <= (D - j) * 1


def test_pole_tag_mechanics():
    ring = R()
    D = 8
    num = LambdaSeries.gen(ring, D) + 1
    f = LambdaSeries(ring, num.coeffs, D, 'X-p')
    v = f.evaluate(ring.from_int(0))
    assert (v - ring.from_int(1) / ring.from_int(-5)).is_zero()
    with pytest.raises(ZeroDivisionError):
        f.evaluate(ring.from_int(5))
    g = compose_involution(f)
    assert g.denom == 'X-c0'
    back = compose_involution(g)
    assert back.denom == 'X-p'
    assert (back.numerator() - f.numerator()).is_zero()


def test_tagged_product_guard():
    ring = R()
    f = LambdaSeries(ring, [ring.one()] * 4, 4, 'X-p')
    with pytest.raises(ValueError):
        f * f


def test_divide_exact_linear():
    ring = R()
    D = 8
    root = ring.from_int(5)
    X = LambdaSeries.gen(ring, D)
    f = (X - root) * rand_series(ring, [2, 7, 1, 3, 0, 1, 4, 2], D)
    q = f.divide_exact_linear(root)
    assert ((X.truncated(q.D) - root) * q - f.truncated(q.D)).is_zero()
    bad = rand_series(ring, [1, 1, 1, 1, 1, 1, 1, 1], D)
    with pytest.raises(ValueError):
        bad.divide_exact_linear(root)


def test_log_series_weight_coordinate():
    ring = R()
    ell = log_series(8, ring)
    u = ring.from_int(6)
    for s in (1, 2, 3):
        v = ell.evaluate(u ** s - 1, tail_val_floor=-2)
        assert (v - s).is_zero()


def test_precision_soundness_recompute():
    lo, hi = get_ring(5, 1, 12), get_ring(5, 1, 16)
    def pipe(ring):
        f = binom_series(s_exponent(7, ring), 6)
        g = f * f + f
        return g.evaluate(ring.from_int(5))
    a, b = pipe(lo), pipe(hi)
    m = min(a.prec, b.prec)
    assert a.truncate(m).lift_vector() == b.truncate(m).lift_vector()
