"""Elementary factors, the top polynomial, and Demazure descent."""

import pytest

from qkflag.demazure import pi_z
from qkflag.grothendieck import F_poly, groth, groth_classical, groth_longest
from qkflag.series import (
    NovikovSeries,
    ZPolynomial,
    specialize_q_zero,
    zpoly_mul,
)
from qkflag.weyl import (
    GroupRingElem,
    all_perms,
    eps,
    identity_perm,
    length,
    longest_perm,
    multiply,
    neg_weight,
    scale_weight,
    simple_reflection,
)


def mono(n, mu, c=1):
    return GroupRingElem.monomial(n, mu, c)


def zvar(n, D, j):
    return ZPolynomial.z_var(n, D, j)


def one_minus_q(n, D, j):
    return NovikovSeries.one_minus_q(n, D, j)


def test_F_poly_examples():
    n, D = 1, 2
    assert F_poly(1, 1, n, D) == zvar(n, D, 1).scale_series(one_minus_q(n, D, 1))
    assert F_poly(1, 0, n, D) == ZPolynomial.one(n, D)
    n = 2
    got = F_poly(2, 2, n, D)
    want = zpoly_mul(zvar(n, D, 1), zvar(n, D, 2)).scale_series(
        one_minus_q(n, D, 2)
    )
    assert got == want


def test_F_poly_top_index_has_no_q():
    # j = n+1 never carries a Q factor, and j = 1 carries none inside
    # the run J = {1, 2}
    n, D = 1, 2
    got = F_poly(2, 1, n, D)
    want = zvar(n, D, 1).scale_series(one_minus_q(n, D, 1)) + zvar(n, D, 2)
    assert got == want
    assert F_poly(2, 2, n, D) == zpoly_mul(zvar(n, D, 1), zvar(n, D, 2))


def test_F_poly_range():
    with pytest.raises(ValueError):
        F_poly(1, 2, 2, 2)
    with pytest.raises(ValueError):
        F_poly(4, 1, 2, 2)


def test_groth_longest_n1():
    n, D = 1, 3
    want = ZPolynomial.one(n, D) - zvar(n, D, 1).scale_series(
        one_minus_q(n, D, 1)
    ).scale_ring(mono(n, (-1,)))
    assert groth_longest(n, D) == want


def test_groth_longest_n2_factored():
    n, D = 2, 3
    one = ZPolynomial.one(n, D)
    f1 = one - zvar(n, D, 1).scale_series(one_minus_q(n, D, 1)).scale_ring(
        mono(n, neg_weight(eps(n, 2)))
    )
    inner = zvar(n, D, 1).scale_series(one_minus_q(n, D, 1)) + zvar(
        n, D, 2
    ).scale_series(one_minus_q(n, D, 2))
    f2 = (
        one
        - inner.scale_ring(mono(n, neg_weight(eps(n, 1))))
        + zpoly_mul(zvar(n, D, 1), zvar(n, D, 2))
        .scale_series(one_minus_q(n, D, 2))
        .scale_ring(mono(n, scale_weight(-2, eps(n, 1))))
    )
    assert groth_longest(n, D) == zpoly_mul(f1, f2)


def test_groth_at_longest_is_top():
    for n in (1, 2):
        assert groth(longest_perm(n), 2) == groth_longest(n, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_groth_identity_is_one(n):
    assert groth(identity_perm(n), 2) == ZPolynomial.one(n, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_descent_rule(n):
    D = 2
    for w in all_perms(n):
        for i in range(1, n + 1):
            siw = multiply(simple_reflection(n, i), w)
            want = groth(siw, D) if length(siw) < length(w) else groth(w, D)
            assert pi_z(i, groth(w, D)) == want, (w, i)


def test_groth_classical_examples():
    n, D = 1, 2
    want = ZPolynomial.one(n, D) - zvar(n, D, 1).scale_ring(mono(n, (-1,)))
    assert groth_classical(longest_perm(1), D) == want
    for n in (1, 2):
        assert groth_classical(identity_perm(n), 2) == ZPolynomial.one(n, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classical_top_is_binomial_product(n):
    # at Q = 0 the top polynomial factors into 1 - e^{-eps_m} z_j over
    # all pairs with j + m <= n + 1
    D = 2
    acc = ZPolynomial.one(n, D)
    for j in range(1, n + 1):
        for m in range(1, n + 2 - j):
            factor = ZPolynomial.one(n, D) - zvar(n, D, j).scale_ring(
                mono(n, neg_weight(eps(n, m)))
            )
            acc = zpoly_mul(acc, factor)
    assert specialize_q_zero(groth_longest(n, D)) == acc


@pytest.mark.parametrize("n", [1, 2])
def test_classical_commutes_with_descent(n):
    D = 2
    for w in all_perms(n):
        assert groth_classical(w, D) == specialize_q_zero(groth(w, D))
