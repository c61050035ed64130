"""Quantized elementary factors and double Grothendieck polynomials.

`F_poly(k, l, n, trunc)` is the degree-l elementary polynomial in
z_1, ..., z_k where each subset J contributes prod_{j in J} z_j times
(1 - Q_j) for every j in J whose successor is outside J; the index
j = n+1 never carries a Q factor.  The top polynomial is the product
over k = 1..n of the alternating sums of these factors weighted by
e^{-l eps_{n+1-k}}, and the polynomial for arbitrary w descends from it
by applying the Demazure word of w w0.  Setting every Q_j to zero
recovers the classical double Grothendieck polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .demazure import pi_word
from .series import NovikovSeries, ZPolynomial, specialize_q_zero, zpoly_mul
from .weyl import (
    GroupRingElem,
    Perm,
    eps,
    longest_perm,
    multiply,
    reduced_word,
    scale_weight,
)

__all__ = ["F_poly", "groth_longest", "groth", "groth_classical"]


def F_poly(k: int, l: int, n: int, trunc: int) -> ZPolynomial:
    """Sum over l-subsets J of [k] of (prod of gap factors) * prod z_j."""
    if not 0 <= l <= k <= n + 1:
        raise ValueError(f"need 0 <= l <= k <= n+1, got l={l}, k={k}")
    acc = ZPolynomial.zero(n, trunc)
    for J in combinations(range(1, k + 1), l):
        jset = set(J)
        coeff = NovikovSeries.one(n, trunc)
        term = ZPolynomial.one(n, trunc)
        for j in J:
            if j <= n and j + 1 not in jset:
                coeff = coeff * NovikovSeries.one_minus_q(n, trunc, j)
            term = zpoly_mul(term, ZPolynomial.z_var(n, trunc, j))
        acc = acc + term.scale_series(coeff)
    return acc


def _longest_factor(k: int, n: int, trunc: int) -> ZPolynomial:
    # sum_{l=0}^{k} (-1)^l e^{-l eps_{n+1-k}} F_l^k
    acc = ZPolynomial.zero(n, trunc)
    for l in range(k + 1):
        mono = GroupRingElem.monomial(
            n, scale_weight(-l, eps(n, n + 1 - k)), (-1) ** l
        )
        acc = acc + F_poly(k, l, n, trunc).scale_ring(mono)
    return acc


@lru_cache(maxsize=None)
def groth_longest(n: int, trunc: int) -> ZPolynomial:
    """The top polynomial: product of the alternating factors for k = 1..n."""
    acc = ZPolynomial.one(n, trunc)
    for k in range(1, n + 1):
        acc = zpoly_mul(acc, _longest_factor(k, n, trunc))
    return acc


@lru_cache(maxsize=None)
def groth(w: Perm, trunc: int) -> ZPolynomial:
    """Descend from the top polynomial along the Demazure word of w w0."""
    n = len(w) - 1
    word = reduced_word(multiply(w, longest_perm(n)))
    return pi_word(word, groth_longest(n, trunc))


def groth_classical(w: Perm, trunc: int) -> ZPolynomial:
    """The Q = 0 specialization: ordinary double Grothendieck polynomial."""
    return specialize_q_zero(groth(w, trunc))
