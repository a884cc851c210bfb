from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from eisres.characters import (DirichletCharacter, omega, quadratic_character,
                               twist, xi_of_pair, is_exceptional, is_even_pair,
                               gauss_sum_cyc, gauss_sum_padic, unit_group)
from eisres.cyclotomic import Cyc, embed_padic
from conftest import get_ring


TRIV = DirichletCharacter.trivial()


def all_characters(M):
    gens = unit_group(M)
    chars = [[]]
    for g, o in gens:
        chars = [c + [a] for c in chars for a in range(o)]
    return [DirichletCharacter(M, c) for c in chars]


def test_trivial_mod_one_at_zero():
    assert TRIV.cyc(0) == 1
    assert TRIV.cyc(12345) == 1


def test_modulus_gt_one_vanishes_at_zero():
    chi = quadratic_character(5)
    assert chi.cyc(0).is_zero()
    t12 = DirichletCharacter.trivial(12)
    assert t12.cyc(0).is_zero() and t12.cyc(4).is_zero()


def test_conductor_primitive_examples():
    t12 = DirichletCharacter.trivial(12)
    assert t12.conductor() == 1 and t12.primitive() == TRIV
    w = omega(5)
    assert w.conductor() == 5 and w.primitive() == w
    chi8 = quadratic_character(8)
    ind = chi8.induce(40)
    assert ind.conductor() == 8 and ind.primitive() == chi8


def test_omega_evaluation_examples():
    R = get_ring(5, 4, 10)
    w = omega(5)
    assert (w.padic(2, R) - 7).truncate(2).is_zero()
    assert quadratic_character(5).cyc(2) == -1


def test_twist_examples():
    p = 5
    w = omega(p)
    assert twist(w, 1, p) == TRIV
    assert (w.inverse() * w).is_trivial()
    th = w ** (p - 2)
    assert twist(th * TRIV.inverse(), p - 2, p) == TRIV


def test_twist_composition():
    p = 5
    chi = quadratic_character(8)
    for a in range(4):
        for b in range(4):
            lhs = twist(twist(chi, a, p).induce(chi.modulus * p), b, p)
            rhs = twist(chi, a + b, p)
            assert lhs == rhs


def test_exceptional_predicates():
    p = 5
    w = omega(p)
    assert is_exceptional(w ** (p - 2), TRIV, p)
    assert not is_exceptional((w * w).primitive(), TRIV, p)
    assert is_even_pair((w * w).primitive(), TRIV)
    chi4 = quadratic_character(-4)
    th = (chi4 * w.inverse()).primitive()
    assert is_exceptional(th, TRIV, p) and is_even_pair(th, TRIV)


def test_multiplicativity_exhaustive():
    for M in (12, 21, 40, 45):
        for chi in all_characters(M):
            for a in range(1, M):
                if gcd(a, M) != 1:
                    continue
                for b in (2, 5, 7, 11):
                    if gcd(b, M) != 1:
                        continue
                    assert chi.cyc(a) * chi.cyc(b) == chi.cyc(a * b)


def test_gauss_sum_examples():
    assert gauss_sum_cyc(TRIV) == 1
    chi5 = quadratic_character(5)
    g = gauss_sum_cyc(chi5)
    assert g * gauss_sum_cyc(chi5.inverse()) == chi5.cyc(-1) * 5
    w = omega(5)
    assert gauss_sum_cyc(w) * gauss_sum_cyc(w.inverse()) == -5


def test_gauss_sum_norm_identity_small_conductors():
    # g(chi) g(chi-bar) = chi(-1) f for primitive chi
    for f in range(3, 26):
        for chi in all_characters(f):
            if chi.conductor() != f:
                continue
            lhs = gauss_sum_cyc(chi) * gauss_sum_cyc(chi.inverse())
            assert lhs == chi.cyc(-1) * f


def test_gauss_sum_padic_matches_embedding():
    R = get_ring(5, 44, 12)
    chi = quadratic_character(-11)
    exact = gauss_sum_cyc(chi)
    assert (embed_padic(exact, R) - gauss_sum_padic(chi, R)).is_zero()


def test_gauss_sum_requires_primitive():
    with pytest.raises(ValueError):
        gauss_sum_cyc(quadratic_character(5).induce(15))


def test_conductor_of_twist_divides():
    p = 5
    for chi in all_characters(8) + all_characters(13):
        for n in (1, 2, 3):
            f = twist(chi, n, p).conductor()
            lcm = chi.conductor() * p // gcd(chi.conductor(), p)
            assert lcm % f == 0


def test_padic_rejects_wild_order():
    from eisres.characters import DirichletCharacter
    R = get_ring(5, 4, 8)
    # a character of order 5 mod 11
    chi = DirichletCharacter(11, [2])
    assert chi.order() == 5
    with pytest.raises(ValueError):
        chi.padic(2, R)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 60), st.integers(0, 10 ** 4))
def test_character_values_are_roots_of_unity(M, a):
    chars = all_characters(M)
    chi = chars[a % len(chars)]
    v = chi.exponent(a)
    if v is not None:
        k, N = v
        assert 0 <= k < N
        val = Cyc.root_of_unity(N, k)
        assert val ** N == 1
