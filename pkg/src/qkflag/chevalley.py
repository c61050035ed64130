"""Truncated module of semi-infinite Schubert classes and line-bundle tensors.

A `KQGClass` is a finite combination of basis symbols [O(w, xi)] indexed
by a permutation w and a Novikov degree xi (componentwise >= 0, total
degree capped at the truncation order).  Coefficients live in the group
ring of the weight lattice.  Tensoring with the line-bundle class of
weight w0(eps_J) expands, per basis symbol, as a signed sum over
admissible subsets of the chain for -eps_J, followed by a geometric
series of Novikov shifts for each index just below a gap of J.

The admissible subsets of a chain, starting from w, are the subsets of
chain positions whose labels trace a directed path in the quantum
Bruhat graph.  Each carries the end of the path, the count of
gamma-part selections (the sign), the total coroot degree of its
quantum steps (the Novikov shift), and a weight obtained by reflecting
eps_J through the selected walls in reverse order; the weight always
equals -(end of beta-part)(eps_J), and this is asserted on every
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .chains import BETA, LambdaChain, chain_for
from .qbg import QUANTUM, edge_kind
from .series import NovikovSeries, QDeg, add_deg, unit_deg, zero_deg
from .weyl import (
    GroupRingElem,
    Perm,
    Weight,
    act_weight,
    affine_reflect,
    coroot_deg,
    eps_set,
    identity_perm,
    neg_weight,
    right_transposition,
)

__all__ = [
    "AdmissibleSubset", "KQGClass", "admissible_subsets",
    "tensor_minuscule", "shift", "f_op", "identity_class", "j_minus",
]


@dataclass(frozen=True)
class AdmissibleSubset:
    """A selection of chain positions tracing a path in the QBG.

    `positions` are 0-based indices into the chain items, increasing.
    `neg_count` counts selected gamma items, `down` sums the coroot
    degrees of the quantum steps, and `weight` is the reflected weight
    described in the module docstring.
    """

    start: Perm
    positions: tuple[int, ...]
    end: Perm
    weight: Weight
    neg_count: int
    down: QDeg


def admissible_subsets(
    w: Perm, chain: LambdaChain
) -> Iterator[AdmissibleSubset]:
    """Enumerate the admissible subsets of `chain` starting at w."""
    if len(w) != chain.n + 1:
        raise ValueError(f"rank mismatch: |w|={len(w)}, chain n={chain.n}")
    return iter(_admissible(w, chain))


def _finalize(
    w: Perm, chain: LambdaChain, sel: tuple[tuple[int, str], ...], end: Perm
) -> AdmissibleSubset:
    n = chain.n
    items = chain.items
    mu = eps_set(n, chain.J)
    for idx, _ in reversed(sel):
        mu = affine_reflect(mu, items[idx].root, items[idx].level)
    weight = neg_weight(act_weight(w, mu))

    end_beta = w
    neg = 0
    down = zero_deg(n)
    for idx, kind in sel:
        item = items[idx]
        if item.part == BETA:
            end_beta = right_transposition(end_beta, item.root)
        else:
            neg += 1
        if kind == QUANTUM:
            down = add_deg(down, coroot_deg(n, item.root))

    shortcut = neg_weight(act_weight(end_beta, eps_set(n, chain.J)))
    if weight != shortcut:
        raise AssertionError(
            f"weight mismatch on {sel} from {w} over J={chain.J}: "
            f"reflections give {weight}, beta-end gives {shortcut}"
        )
    return AdmissibleSubset(
        start=w,
        positions=tuple(idx for idx, _ in sel),
        end=end,
        weight=weight,
        neg_count=neg,
        down=down,
    )


@lru_cache(maxsize=None)
def _admissible(w: Perm, chain: LambdaChain) -> tuple[AdmissibleSubset, ...]:
    items = chain.items
    out: list[AdmissibleSubset] = []
    sel: list[tuple[int, str]] = []

    def rec(idx: int, cur: Perm) -> None:
        if idx == len(items):
            out.append(_finalize(w, chain, tuple(sel), cur))
            return
        rec(idx + 1, cur)
        kind = edge_kind(cur, items[idx].root)
        if kind is not None:
            sel.append((idx, kind))
            rec(idx + 1, right_transposition(cur, items[idx].root))
            sel.pop()

    rec(0, w)
    return tuple(out)


class KQGClass:
    """Finite combination of basis symbols (w, xi) with group-ring coefficients."""

    __slots__ = ("n", "trunc", "terms")

    def __init__(self, n: int, trunc: int, terms: dict):
        self.n = n
        self.trunc = trunc
        clean = {}
        for (w, xi), g in terms.items():
            if len(w) != n + 1 or len(xi) != n:
                raise ValueError(f"bad basis symbol ({w}, {xi}) for n={n}")
            if any(d < 0 for d in xi):
                raise ValueError(f"negative Novikov degree {xi}")
            if not isinstance(g, GroupRingElem) or g.n != n:
                raise ValueError(f"coefficient at ({w}, {xi}) has wrong rank")
            if sum(xi) <= trunc and g:
                clean[(w, xi)] = g
        self.terms = clean

    @classmethod
    def zero(cls, n: int, trunc: int) -> "KQGClass":
        return cls(n, trunc, {})

    @classmethod
    def basis(cls, n: int, trunc: int, w: Perm, xi: QDeg = None) -> "KQGClass":
        if xi is None:
            xi = zero_deg(n)
        return cls(n, trunc, {(w, xi): GroupRingElem.one(n)})

    def _check(self, other: "KQGClass") -> None:
        if self.n != other.n or self.trunc != other.trunc:
            raise ValueError("mixed ranks or truncation orders")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KQGClass):
            return NotImplemented
        return (
            self.n == other.n
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __add__(self, other: "KQGClass") -> "KQGClass":
        self._check(other)
        terms = dict(self.terms)
        for key, g in other.terms.items():
            acc = terms.get(key)
            terms[key] = g if acc is None else acc + g
        return KQGClass(self.n, self.trunc, terms)

    def __neg__(self) -> "KQGClass":
        return KQGClass(
            self.n, self.trunc, {key: -g for key, g in self.terms.items()}
        )

    def __sub__(self, other: "KQGClass") -> "KQGClass":
        return self + (-other)

    def scale_ring(self, g: GroupRingElem) -> "KQGClass":
        return KQGClass(
            self.n, self.trunc, {key: c * g for key, c in self.terms.items()}
        )

    def scale_int(self, c: int) -> "KQGClass":
        return KQGClass(
            self.n, self.trunc, {key: g * c for key, g in self.terms.items()}
        )

    def shift(self, xi: QDeg) -> "KQGClass":
        """Add xi to every basis Novikov degree, dropping past truncation."""
        if len(xi) != self.n or any(d < 0 for d in xi):
            raise ValueError(f"bad shift degree {xi}")
        return KQGClass(
            self.n,
            self.trunc,
            {(w, add_deg(z, xi)): g for (w, z), g in self.terms.items()},
        )

    def scale_series(self, s: NovikovSeries) -> "KQGClass":
        """Multiply by a Novikov-ring scalar: shift per q-degree, then scale."""
        if s.n != self.n or s.trunc != self.trunc:
            raise ValueError("mixed ranks or truncation orders")
        acc = KQGClass.zero(self.n, self.trunc)
        for xi, g in s.terms.items():
            acc = acc + self.shift(xi).scale_ring(g)
        return acc

    def truncate(self, trunc: int) -> "KQGClass":
        return KQGClass(self.n, trunc, self.terms)

    def coeff(self, w: Perm, xi: QDeg) -> GroupRingElem:
        return self.terms.get((w, xi), GroupRingElem.zero(self.n))

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0])
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        rows = [
            f"O{list(w)}@{list(xi)}: {g!r}" for (w, xi), g in self.sorted_terms()
        ]
        return " + ".join(rows)


def identity_class(n: int, trunc: int) -> KQGClass:
    """The basis symbol of the identity at Novikov degree zero."""
    return KQGClass.basis(n, trunc, identity_perm(n))


def shift(cls: KQGClass, xi: QDeg) -> KQGClass:
    return cls.shift(xi)


def j_minus(J: Iterable[int], n: int) -> tuple[int, ...]:
    """Indices i in [n] with i not in J but i + 1 in J."""
    jset = set(J)
    return tuple(i for i in range(1, n + 1) if i not in jset and i + 1 in jset)


@lru_cache(maxsize=None)
def _basis_expansion(
    w: Perm, J: tuple[int, ...], n: int
) -> tuple[tuple[Perm, QDeg, int, Weight], ...]:
    # reusable raw expansion of one basis symbol: (end, down, sign, weight)
    chain = chain_for(J, n)
    return tuple(
        (a.end, a.down, -1 if a.neg_count % 2 else 1, a.weight)
        for a in _admissible(w, chain)
    )


def _raw_tensor(cls: KQGClass, J: tuple[int, ...]) -> KQGClass:
    # signed admissible sum without the geometric factors
    n, trunc = cls.n, cls.trunc
    acc: dict = {}
    for (w, xi), g in cls.terms.items():
        for end, down, sign, weight in _basis_expansion(w, J, n):
            deg = add_deg(xi, down)
            if sum(deg) > trunc:
                continue
            piece = g * GroupRingElem.monomial(n, weight, sign)
            key = (end, deg)
            old = acc.get(key)
            acc[key] = piece if old is None else old + piece
    return KQGClass(n, trunc, acc)


def _geometric(cls: KQGClass, j: int) -> KQGClass:
    # multiply by 1 + st_j + st_j^2 + ... up to truncation
    step = unit_deg(cls.n, j)
    acc = cls
    cur = cls
    for _ in range(cls.trunc):
        cur = cur.shift(step)
        if not cur:
            break
        acc = acc + cur
    return acc


def tensor_minuscule(cls: KQGClass, J: Iterable[int]) -> KQGClass:
    """Tensor with the line-bundle class of weight w0(eps_J)."""
    js = tuple(sorted(J))
    if len(set(js)) != len(js) or (js and not 1 <= js[0] <= js[-1] <= cls.n + 1):
        raise ValueError(f"J = {js} is not a subset of 1..{cls.n + 1}")
    out = _raw_tensor(cls, js)
    for j in j_minus(js, cls.n):
        out = _geometric(out, j)
    return out


def f_op(cls: KQGClass, k: int, p: int) -> KQGClass:
    """Apply the degree-p elementary tensor operator on the first k indices.

    Summing the raw admissible expansions over all p-subsets J of [k];
    the geometric factors of `tensor_minuscule` cancel against the
    (1 - st_j) prefactors carried by each summand, so neither appears.
    """
    if not 0 <= p <= k <= cls.n + 1:
        raise ValueError(f"need 0 <= p <= k <= n+1, got p={p}, k={k}")
    acc = KQGClass.zero(cls.n, cls.trunc)
    for J in combinations(range(1, k + 1), p):
        acc = acc + _raw_tensor(cls, J)
    return acc
