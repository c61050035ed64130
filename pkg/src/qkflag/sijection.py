"""Signed path sets over the step chains and the cancelling involution.

For 1 <= k <= n and J a subset of [k], the paths here are the admissible
subsets of the chain for -eps_J started at the step permutation
w_{k+1}, recorded as their beta- and gamma-part label sequences.  Each
path contributes a signed monomial, and summing over all J and all
paths telescopes to the single class of w_k: every term except one
cancels against its partner under an involution phi.

The partner structure sorts paths into five classes.  With j1 = min J:
paths whose J contains 1 form class B (B1 when the gamma part starts
with (1,2), else B2); paths with j1 >= 2 whose beta part opens with the
full column (j1-1,j1), ..., (1,j1) form class A (A1 when the gamma part
starts with (j1,j1+1), else A2); everything else, including J empty, is
class C.  phi swaps A2 with A1/B1 by trading the opening column and the
initial gamma edge, and swaps B2 with C by toggling 1 in J; the unique
fixed point is the path [(k-1,k),...,(1,k) | (k,k+1)] at J = {k}.

A path's gamma run at j1 has length at most one, its label is then
(j1, j1+1) crossed along a Bruhat edge, and every beta step is a Bruhat
edge; these facts make the moves well defined and are re-checked on
every constructed path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .chains import LambdaChain, chain_for
from .chevalley import KQGClass, _admissible
from .qbg import BRUHAT, edge_kind
from .series import QDeg, add_deg, zero_deg
from .weyl import (
    GroupRingElem,
    Perm,
    Root,
    Weight,
    act_weight,
    add_weight,
    coroot_deg,
    eps,
    eps_set,
    neg_weight,
    right_transposition,
    scale_weight,
    w_index,
)

__all__ = [
    "DPath", "enumerate_paths", "classify", "phi", "q_path", "telescope_sum",
]

A1, A2, B1, B2, C = "A1", "A2", "B1", "B2", "C"


@dataclass(frozen=True)
class DPath:
    """A QBG path from w_{k+1} recorded by its chain-label subsequence."""

    n: int
    k: int
    J: tuple[int, ...]
    beta_labels: tuple[Root, ...]
    gamma_labels: tuple[Root, ...]
    # walked out at construction time
    end_beta: Perm
    end: Perm
    down: QDeg

    @property
    def gamma_len(self) -> int:
        return len(self.gamma_labels)

    def sign(self) -> int:
        return -1 if (len(self.J) + self.gamma_len) % 2 else 1

    def weight(self) -> Weight:
        """Exponent |J| eps_{n+1-k} - (end of beta part)(eps_J)."""
        return add_weight(
            scale_weight(len(self.J), eps(self.n, self.n + 1 - self.k)),
            neg_weight(act_weight(self.end_beta, eps_set(self.n, self.J))),
        )


def _is_subsequence(sub: tuple, seq: tuple) -> bool:
    it = iter(seq)
    return all(any(x == y for y in it) for x in sub)


def _make_path(
    n: int,
    k: int,
    J: tuple[int, ...],
    beta_labels: tuple[Root, ...],
    gamma_labels: tuple[Root, ...],
) -> DPath:
    """Walk the labels from w_{k+1}, checking edges and chain order."""
    if not (1 <= k <= n and all(1 <= j <= k for j in J)):
        raise ValueError(f"need J subset of [k] and 1 <= k <= n, got k={k} J={J}")
    chain = chain_for(J, n)
    if not _is_subsequence(beta_labels, tuple(it.root for it in chain.beta_items)):
        raise ValueError(f"beta labels {beta_labels} out of chain order for J={J}")
    if not _is_subsequence(gamma_labels, tuple(it.root for it in chain.gamma_items)):
        raise ValueError(f"gamma labels {gamma_labels} out of chain order for J={J}")

    cur = w_index(n, k + 1)
    down = zero_deg(n)
    for root in beta_labels:
        kind = edge_kind(cur, root)
        if kind is None:
            raise ValueError(f"no edge at {cur} along {root}")
        if kind != BRUHAT:
            raise ValueError(f"beta step {root} from {cur} is not a Bruhat edge")
        cur = right_transposition(cur, root)
    end_beta = cur
    for root in gamma_labels:
        kind = edge_kind(cur, root)
        if kind is None:
            raise ValueError(f"no edge at {cur} along {root}")
        if kind != BRUHAT:
            down = add_deg(down, coroot_deg(n, root))
        cur = right_transposition(cur, root)
    return DPath(
        n=n,
        k=k,
        J=J,
        beta_labels=beta_labels,
        gamma_labels=gamma_labels,
        end_beta=end_beta,
        end=cur,
        down=down,
    )


@lru_cache(maxsize=None)
def _paths(n: int, k: int, J: tuple[int, ...]) -> tuple[DPath, ...]:
    chain = chain_for(J, n)
    split = len(chain.beta_items)
    roots = tuple(it.root for it in chain.items)
    out = []
    for a in _admissible(w_index(n, k + 1), chain):
        beta = tuple(roots[i] for i in a.positions if i < split)
        gamma = tuple(roots[i] for i in a.positions if i >= split)
        path = _make_path(n, k, J, beta, gamma)
        if path.end != a.end or path.down != a.down:
            raise AssertionError(f"path walk disagrees with enumeration at {a}")
        out.append(path)
    return tuple(out)


def enumerate_paths(n: int, k: int, J: Iterable[int]) -> tuple[DPath, ...]:
    """All paths over the chain for J, started at w_{k+1}."""
    js = tuple(sorted(J))
    return _paths(n, k, js)


def q_path(n: int, k: int) -> DPath:
    """The designated fixed point at J = {k}."""
    beta = tuple((t, k) for t in range(k - 1, 0, -1))
    return _make_path(n, k, (k,), beta, ((k, k + 1),))


def classify(p: DPath) -> str:
    """Sort a path into A1/A2 (full opening column), B1/B2 (1 in J), or C."""
    if not p.J:
        return C
    j1 = p.J[0]
    if j1 == 1:
        start = p.gamma_labels[:1] == ((1, 2),)
        return B1 if start else B2
    column = tuple((t, j1) for t in range(j1 - 1, 0, -1))
    if p.beta_labels[: j1 - 1] == column:
        start = p.gamma_labels[:1] == ((j1, j1 + 1),)
        return A1 if start else A2
    return C


def _swap_column_heads(
    labels: tuple[Root, ...], frm: int, to: int, tails: frozenset
) -> tuple[Root, ...]:
    # rename (frm, j_u) to (to, j_u) in the later blocks
    return tuple(
        (to, b) if a == frm and b in tails else (a, b) for a, b in labels
    )


def phi(p: DPath) -> DPath:
    """The sign-reversing involution; fixes exactly `q_path(n, k)`."""
    n, k, J = p.n, p.k, p.J
    if J == (k,) and p == q_path(n, k):
        return p
    cls = classify(p)
    tails = frozenset(J[1:])
    if cls == A2:
        j1 = J[0]
        new_J = tuple(sorted(tails | {j1 - 1}))
        column = tuple((t, j1 - 1) for t in range(j1 - 2, 0, -1))
        rest = _swap_column_heads(p.beta_labels[j1 - 1 :], j1 - 1, j1, tails)
        out = _make_path(
            n, k, new_J, column + rest, ((j1 - 1, j1),) + p.gamma_labels
        )
    elif cls in (A1, B1):
        j1 = J[0]
        new_J = tuple(sorted(tails | {j1 + 1}))
        column = tuple((t, j1 + 1) for t in range(j1, 0, -1))
        rest = _swap_column_heads(
            p.beta_labels[max(j1 - 1, 0) :], j1 + 1, j1, tails
        )
        out = _make_path(n, k, new_J, column + rest, p.gamma_labels[1:])
    elif cls == B2:
        out = _make_path(n, k, J[1:], p.beta_labels, p.gamma_labels)
    else:  # C
        out = _make_path(
            n, k, (1,) + J, p.beta_labels, p.gamma_labels
        )
    _check_partner(p, out)
    return out


def _check_partner(p: DPath, out: DPath) -> None:
    # the move must preserve the monomial data and flip the sign
    if out.weight() != p.weight():
        raise AssertionError(f"weight broken: {p} -> {out}")
    if (out.end, out.down) != (p.end, p.down):
        raise AssertionError(f"endpoint broken: {p} -> {out}")
    if out.sign() != -p.sign():
        raise AssertionError(f"sign not reversed: {p} -> {out}")


def telescope_sum(n: int, k: int, trunc: int) -> KQGClass:
    """Signed sum of all path contributions over every J inside [k]."""
    acc = KQGClass.zero(n, trunc)
    for r in range(k + 1):
        for J in combinations(range(1, k + 1), r):
            for p in enumerate_paths(n, k, J):
                if sum(p.down) > trunc:
                    continue
                mono = GroupRingElem.monomial(n, p.weight(), p.sign())
                acc = acc + KQGClass(
                    n, trunc, {(p.end, p.down): mono}
                )
    return acc
