"""Demazure operators on group-ring coefficients, division-free.

The operator for index i sends e^mu to the geometric string between mu
and its reflection: with m = <mu, alpha_i^vee> it returns the sum of
e^{mu - t alpha_i} for t = 0..m when m >= 0, zero when m = -1, and
minus the interior string when m <= -2.  This closed form is what
1/(1 - e^{-alpha_i}) (id - e^{-alpha_i} s_i) does to a monomial, so no
fraction field is needed; the cleared-denominator identity
(1 - e^{-alpha_i}) pi_i(f) = f - e^{-alpha_i} (s_i f) pins it exactly.

On polynomials the operator touches only the group-ring coefficients;
z-variables and Novikov degrees pass through as scalars.
"""

from __future__ import annotations

from typing import Sequence

from .series import NovikovSeries, ZPolynomial
from .weyl import GroupRingElem, Weight, pairing, root_weight

__all__ = ["pi_monomial", "pi", "pi_z", "pi_word"]


def pi_monomial(i: int, mu: Weight) -> GroupRingElem:
    """Apply the i-th operator to e^mu."""
    n = len(mu)
    if not 1 <= i <= n:
        raise ValueError(f"operator index {i} out of range 1..{n}")
    m = pairing(mu, (i, i + 1))
    alpha = root_weight(n, (i, i + 1))
    if m == -1:
        return GroupRingElem.zero(n)
    if m >= 0:
        terms = {}
        point = mu
        for _ in range(m + 1):
            terms[point] = 1
            point = tuple(a - b for a, b in zip(point, alpha))
        return GroupRingElem(n, terms)
    terms = {}
    point = mu
    for _ in range(-m - 1):
        point = tuple(a + b for a, b in zip(point, alpha))
        terms[point] = -1
    return GroupRingElem(n, terms)


def pi(i: int, f: GroupRingElem) -> GroupRingElem:
    """Linear extension of `pi_monomial`."""
    acc = GroupRingElem.zero(f.n)
    for mu, c in f.terms.items():
        acc = acc + pi_monomial(i, mu) * c
    return acc


def pi_z(i: int, p: ZPolynomial) -> ZPolynomial:
    """Apply the operator to every coefficient of a polynomial."""
    out = {}
    for zexp, series in p.terms.items():
        out[zexp] = NovikovSeries(
            p.n, p.trunc, {qd: pi(i, g) for qd, g in series.terms.items()}
        )
    return ZPolynomial(p.n, p.trunc, out)


def pi_word(word: Sequence[int], p: ZPolynomial) -> ZPolynomial:
    """Compose the operators of `word` as written: rightmost acts first."""
    for i in reversed(word):
        p = pi_z(i, p)
    return p
