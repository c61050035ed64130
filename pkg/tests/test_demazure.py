"""Demazure operator laws: closed form vs cleared-denominator identity."""

import random

import pytest

from qkflag.demazure import pi, pi_monomial, pi_word, pi_z
from qkflag.series import NovikovSeries, ZPolynomial, zpoly_mul
from qkflag.weyl import (
    GroupRingElem,
    eps,
    neg_weight,
    root_weight,
    simple_reflection,
    zero_weight,
)


def random_ring(n, rng, nterms=4, span=3):
    terms = {}
    for _ in range(nterms):
        mu = tuple(rng.randint(-span, span) for _ in range(n))
        c = rng.randint(-span, span)
        terms[mu] = terms.get(mu, 0) + c
    return GroupRingElem(n, {mu: c for mu, c in terms.items() if c})


def test_pi_monomial_string():
    got = pi_monomial(1, eps(1, 1))
    assert got == GroupRingElem(1, {(1,): 1, (-1,): 1})  # e^{eps1} + e^{eps2}


def test_pi_monomial_zero_weight():
    assert pi_monomial(1, zero_weight(2)) == GroupRingElem.one(2)


def test_pi_monomial_m_minus_one():
    assert pi_monomial(1, neg_weight(eps(1, 1))) == GroupRingElem.zero(1)


def test_pi_monomial_negative_string():
    # m = -2: pairing of -alpha_1 with alpha_1^vee
    mu = neg_weight(root_weight(2, (1, 2)))
    got = pi_monomial(1, mu)
    assert got == GroupRingElem(2, {zero_weight(2): -1})


def test_pi_examples():
    f = GroupRingElem(1, {(1,): 1, (-1,): 1})
    assert pi(1, f) == f  # string is already invariant
    assert pi(1, GroupRingElem.zero(2)) == GroupRingElem.zero(2)
    got = pi(1, GroupRingElem.monomial(2, neg_weight(eps(2, 2))))
    want = GroupRingElem(
        2,
        {
            neg_weight(eps(2, 2)): 1,
            neg_weight(eps(2, 1)): 1,
        },
    )
    assert got == want


def test_pi_index_range():
    with pytest.raises(ValueError):
        pi_monomial(2, eps(1, 1))
    with pytest.raises(ValueError):
        pi_monomial(0, eps(2, 1))


def test_pi_z_kills_top_coefficient_n1():
    n, D = 1, 2
    one = ZPolynomial.one(n, D)
    z1 = ZPolynomial.z_var(n, D, 1)
    top = one - z1.scale_series(
        NovikovSeries.one_minus_q(n, D, 1)
    ).scale_ring(GroupRingElem.monomial(n, (-1,)))
    assert pi_z(1, top) == one


def test_pi_z_fixes_integer_coefficients():
    n, D = 2, 2
    p = ZPolynomial.z_var(n, D, 2).scale_series(NovikovSeries.q_var(n, D, 1))
    assert pi_z(1, p) == p
    assert pi_z(2, p) == p
    assert pi_z(1, ZPolynomial.one(n, D)) == ZPolynomial.one(n, D)


def test_pi_word_empty():
    p = ZPolynomial.z_var(2, 2, 1)
    assert pi_word((), p) == p


@pytest.mark.parametrize("n", [1, 2, 3])
def test_operator_laws_random(n):
    rng = random.Random(100 + n)
    s = [simple_reflection(n, i) for i in range(1, n + 1)]
    for _ in range(60):
        f = random_ring(n, rng)
        for i in range(1, n + 1):
            g = pi(i, f)
            # idempotency
            assert pi(i, g) == g
            # cleared-denominator identity
            neg_alpha = neg_weight(root_weight(n, (i, i + 1)))
            lhs = g - g * GroupRingElem.monomial(n, neg_alpha)
            rhs = f - f.act(s[i - 1]) * GroupRingElem.monomial(n, neg_alpha)
            assert lhs == rhs
        # braid and far commutation
        for i in range(1, n):
            assert pi(i, pi(i + 1, pi(i, f))) == pi(i + 1, pi(i, pi(i + 1, f)))
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                assert pi(i, pi(j, f)) == pi(j, pi(i, f))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invariance(n):
    rng = random.Random(200 + n)
    for _ in range(20):
        g = random_ring(n, rng)
        for i in range(1, n + 1):
            f = g + g.act(simple_reflection(n, i))
            assert f.act(simple_reflection(n, i)) == f
            assert pi(i, f) == f


def test_braid_on_polynomials():
    n, D = 2, 2
    rng = random.Random(7)
    coeff = random_ring(n, rng)
    p = zpoly_mul(
        ZPolynomial.z_var(n, D, 1), ZPolynomial.z_var(n, D, 2)
    ).scale_ring(coeff) + ZPolynomial.one(n, D).scale_series(
        NovikovSeries.q_var(n, D, 2).scale(random_ring(n, rng))
    )
    assert pi_word((1, 2, 1), p) == pi_word((2, 1, 2), p)
