"""Reduced root chains attached to the weights -eps_J.

For a subset J = {j_1 < ... < j_p} of {1, ..., n+1} let x_J be the
shortest permutation sending eps_1 + ... + eps_p to eps_J, and let y_J
be the shortest element such that y_J x_J acts on eps_1 + ... + eps_p
the way the longest element does.  Both have staircase reduced words:
block u of x_J reads j_u - 1, ..., u + 1, u and block u of y_J reads
n - p + u, ..., j_u + 1, j_u (blocks left to right, u = 1, ..., p).

The chain for J lists wall crossings of a minimal alcove walk: first
the inversion roots of x_J in word order (beta part, level-0 walls,
crossed along the positive root), then the inversion roots of y_J read
off the reversed word (gamma part, level-1 walls, crossed against the
positive root).  Every gamma wall fixes eps_J, so only beta crossings
move the endpoint weight.

`chain_for` builds the chain from the words, `chain_closed_form` from
index formulas for the labels; `validate_chain` cross-checks the two
and the label patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .weyl import (
    Root,
    eps_set,
    affine_reflect,
    identity_perm,
    length,
    multiply,
    perm_from_word,
    simple_reflection,
)

__all__ = [
    "BETA", "GAMMA", "LambdaChainItem", "LambdaChain", "ChainReport",
    "x_word", "y_word", "chain_for", "chain_closed_form", "validate_chain",
]

BETA = "beta"
GAMMA = "gamma"


@dataclass(frozen=True)
class LambdaChainItem:
    """One wall crossing: a positive root, which side, and the wall height."""

    root: Root
    part: str  # BETA or GAMMA
    level: int

    def __post_init__(self):
        i, j = self.root
        if not 1 <= i < j:
            raise ValueError(f"not a positive root: {self.root!r}")
        if self.part == BETA:
            if self.level != 0:
                raise ValueError("beta crossings sit on level-0 walls")
        elif self.part == GAMMA:
            if self.level != 1:
                raise ValueError("gamma crossings sit on level-1 walls")
        else:
            raise ValueError(f"unknown part {self.part!r}")

    @property
    def orientation(self) -> int:
        """+1 when the wall is crossed along the positive root, else -1."""
        return 1 if self.part == BETA else -1


@dataclass(frozen=True)
class LambdaChain:
    """Chain of wall crossings for -eps_J: beta part first, then gamma part."""

    n: int
    J: tuple[int, ...]
    items: tuple[LambdaChainItem, ...]

    @property
    def beta_items(self) -> tuple[LambdaChainItem, ...]:
        return tuple(it for it in self.items if it.part == BETA)

    @property
    def gamma_items(self) -> tuple[LambdaChainItem, ...]:
        return tuple(it for it in self.items if it.part == GAMMA)

    def labels(self) -> tuple[Root, ...]:
        return tuple(it.root for it in self.items)

    def __len__(self) -> int:
        return len(self.items)


def _norm_J(J: Iterable[int], n: int) -> tuple[int, ...]:
    js = tuple(sorted(J))
    if len(set(js)) != len(js):
        raise ValueError(f"J has repeated entries: {js}")
    if js and not (1 <= js[0] and js[-1] <= n + 1):
        raise ValueError(f"J = {js} is not a subset of 1..{n + 1}")
    return js


def x_word(J: Iterable[int], n: int) -> tuple[int, ...]:
    """Staircase reduced word for x_J: block u reads j_u - 1 down to u."""
    js = _norm_J(J, n)
    return tuple(
        t for u, j in enumerate(js, start=1) for t in range(j - 1, u - 1, -1)
    )


def y_word(J: Iterable[int], n: int) -> tuple[int, ...]:
    """Staircase reduced word for y_J: block u reads n - p + u down to j_u."""
    js = _norm_J(J, n)
    p = len(js)
    return tuple(
        t
        for u, j in enumerate(js, start=1)
        for t in range(n - p + u, j - 1, -1)
    )


def _prefix_roots(word: tuple[int, ...], n: int) -> list[Root]:
    # d-th root is s_{l_1} ... s_{l_{d-1}} applied to alpha_{l_d};
    # positivity certifies the word is reduced
    w = identity_perm(n)
    roots = []
    for letter in word:
        i, j = w[letter - 1], w[letter]
        if i > j:
            raise ValueError(f"word {word} is not reduced")
        roots.append((i, j))
        w = multiply(w, simple_reflection(n, letter))
    return roots


def chain_for(J: Iterable[int], n: int) -> LambdaChain:
    """Chain for -eps_J built from the reduced words of x_J and y_J.

    The beta labels are the inversion roots of x_J in word order.  The
    gamma labels come from the reversed word of y_J, then the list is
    flipped so the crossing adjacent to the beta part comes first.
    """
    return _chain_for(_norm_J(J, n), n)


@lru_cache(maxsize=None)
def _chain_for(js: tuple[int, ...], n: int) -> LambdaChain:
    beta = _prefix_roots(x_word(js, n), n)
    gamma = list(reversed(_prefix_roots(tuple(reversed(y_word(js, n))), n)))
    items = tuple(
        [LambdaChainItem(r, BETA, 0) for r in beta]
        + [LambdaChainItem(r, GAMMA, 1) for r in gamma]
    )
    return LambdaChain(n=n, J=js, items=items)


def chain_closed_form(J: Iterable[int], n: int) -> LambdaChain:
    """Same chain as `chain_for`, from label index formulas.

    Beta block u, positions t = j_u - 1 down to u, carries the label
    (t - tau(u,t), j_u) where tau counts earlier blocks that shift the
    first index down.  Gamma block u, positions t = n - p + u down to
    j_u, carries (j_u, t + 1 + sigma(u,t)) with sigma counting later
    blocks that push the second index up.
    """
    return _chain_closed_form(_norm_J(J, n), n)


@lru_cache(maxsize=None)
def _chain_closed_form(js: tuple[int, ...], n: int) -> LambdaChain:
    p = len(js)
    items = []
    for u, j in enumerate(js, start=1):
        for t in range(j - 1, u - 1, -1):
            tau = sum(1 for r in range(1, u) if t - r + 1 <= js[u - r - 1])
            items.append(LambdaChainItem((t - tau, j), BETA, 0))
    for u, j in enumerate(js, start=1):
        for t in range(n - p + u, j - 1, -1):
            sigma = sum(1 for r in range(u + 1, p + 1) if t + r - u >= js[r - 1])
            items.append(LambdaChainItem((j, t + 1 + sigma), GAMMA, 1))
    return LambdaChain(n=n, J=js, items=tuple(items))


@dataclass(frozen=True)
class ChainReport:
    """Validation outcome; `first_mismatch` is a 0-based item index."""

    ok: bool
    first_mismatch: Optional[int]
    problems: tuple[str, ...]


def validate_chain(chain: LambdaChain) -> ChainReport:
    """Cross-check a chain against both constructions and label patterns.

    Checks, in order: items agree with `chain_for` and with
    `chain_closed_form` position by position; the beta labels are
    exactly the pairs (t, j) with j in J, t < j, t not in J, and the
    gamma labels exactly the pairs (j, t) with j in J, t > j, t not in
    J; no label has both endpoints in J; chain length equals
    l(x_J) + l(y_J); every gamma wall fixes eps_J.
    """
    n, js = chain.n, chain.J
    problems: list[str] = []
    first_mismatch: Optional[int] = None

    for ref in (chain_for(js, n), chain_closed_form(js, n)):
        if chain.items == ref.items:
            continue
        for idx in range(max(len(chain.items), len(ref.items))):
            got = chain.items[idx] if idx < len(chain.items) else None
            want = ref.items[idx] if idx < len(ref.items) else None
            if got != want:
                if first_mismatch is None:
                    first_mismatch = idx
                problems.append(f"item {idx}: have {got}, expected {want}")
                break

    jset = set(js)
    want_beta = sorted(
        (t, j) for j in js for t in range(1, j) if t not in jset
    )
    want_gamma = sorted(
        (j, t) for j in js for t in range(j + 1, n + 2) if t not in jset
    )
    if sorted(it.root for it in chain.beta_items) != want_beta:
        problems.append("beta labels do not match the (t, j_u) pattern")
    if sorted(it.root for it in chain.gamma_items) != want_gamma:
        problems.append("gamma labels do not match the (j_u, t) pattern")
    for idx, it in enumerate(chain.items):
        if it.root[0] in jset and it.root[1] in jset:
            problems.append(f"item {idx}: label {it.root} has both ends in J")

    expect_len = length(perm_from_word(n, x_word(js, n))) + length(
        perm_from_word(n, y_word(js, n))
    )
    if len(chain.items) != expect_len:
        problems.append(
            f"chain has {len(chain.items)} items, expected {expect_len}"
        )

    eps_j = eps_set(n, js)
    for idx, it in enumerate(chain.gamma_items):
        if affine_reflect(eps_j, it.root, it.level) != eps_j:
            problems.append(f"gamma item {idx}: wall does not fix eps_J")

    return ChainReport(
        ok=not problems,
        first_mismatch=first_mismatch,
        problems=tuple(problems),
    )
