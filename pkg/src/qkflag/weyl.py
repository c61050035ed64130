"""Type-A Weyl group, root and weight arithmetic, and the lattice group ring.

Conventions, fixed once and used everywhere:

* rank n means permutations of {1,...,n+1} in one-line notation (tuples),
  composition (u*v)(i) = u(v(i)), so right multiplication by the
  transposition t_{i,j} swaps window positions i and j, and w.eps_i = eps_{w(i)}.
* weights live in Z^{n+1} / Z(eps_1+...+eps_{n+1}) and are stored as the
  canonical representative with the eps_{n+1} coordinate eliminated, i.e. an
  integer tuple of length n.
* positive roots eps_i - eps_j are stored as index pairs (i, j) with i < j.
"""

from __future__ import annotations

from itertools import permutations

Perm = tuple[int, ...]
Root = tuple[int, int]
Weight = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 2))


def longest_perm(n: int) -> Perm:
    return tuple(range(n + 1, 0, -1))


def all_perms(n: int):
    """All elements of the rank-n Weyl group, ordered by (length, window)."""
    return sorted(permutations(range(1, n + 2)), key=lambda w: (length(w), w))


def multiply(u: Perm, v: Perm) -> Perm:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)-1} vs {len(v)-1}")
    return tuple(u[v[i] - 1] for i in range(len(u)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def simple_reflection(n: int, i: int) -> Perm:
    if not 1 <= i <= n:
        raise ValueError(f"simple reflection index {i} out of range 1..{n}")
    return transposition(n, i, i + 1)


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(1, n + 2))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def right_transposition(w: Perm, root: Root) -> Perm:
    """w * t_{i,j}: swaps window positions i and j."""
    i, j = root
    out = list(w)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def reduced_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word for w.

    Repeatedly pick the smallest i with w(i) > w(i+1), replace w by w*s_i and
    record i; the recorded indices in reverse order form the word. The output
    has length(w) letters and its product of simple reflections equals w.
    """
    w = list(w)
    rec = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                rec.append(i + 1)
                break
        else:
            return tuple(reversed(rec))


def perm_from_word(n: int, word) -> Perm:
    w = identity_perm(n)
    for i in word:
        w = multiply(w, simple_reflection(n, i))
    return w


def w_index(n: int, k: int) -> Perm:
    """The step permutation w_k: m -> n-k+1+m for m <= k, then descending.

    w_1 is the longest element, w_{n+1} the identity; consecutive w_k are the
    stops of the staircase interpolation between them.
    """
    if not 1 <= k <= n + 1:
        raise ValueError(f"w_index: k={k} out of range 1..{n + 1}")
    head = [n - k + 1 + m for m in range(1, k + 1)]
    tail = [n - k + 2 - m for m in range(1, n + 2 - k)]
    return tuple(head + tail)


# -- weights --------------------------------------------------------------


def canonical_weight(raw) -> Weight:
    """Project a length-(n+1) exponent vector to canonical coords (length n)."""
    last = raw[-1]
    return tuple(c - last for c in raw[:-1])


def eps(n: int, i: int) -> Weight:
    """The class of eps_i; eps_{n+1} = -(eps_1+...+eps_n)."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"eps index {i} out of range 1..{n + 1}")
    if i == n + 1:
        return (-1,) * n
    return tuple(1 if t == i - 1 else 0 for t in range(n))


def eps_set(n: int, J) -> Weight:
    out = [0] * n
    for j in J:
        e = eps(n, j)
        out = [a + b for a, b in zip(out, e)]
    return tuple(out)


def zero_weight(n: int) -> Weight:
    return (0,) * n


def add_weight(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def neg_weight(a: Weight) -> Weight:
    return tuple(-x for x in a)


def scale_weight(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def act_weight(w: Perm, mu: Weight) -> Weight:
    """Linear extension of eps_i -> eps_{w(i)}."""
    n = len(w) - 1
    if len(mu) != n:
        raise ValueError("weight rank mismatch")
    raw = [0] * (n + 1)
    coords = list(mu) + [0]
    for i in range(n + 1):
        raw[w[i] - 1] = coords[i]
    return canonical_weight(raw)


def pairing(mu: Weight, root: Root) -> int:
    """<mu, (eps_i - eps_j)^vee> = c_i - c_j with c_{n+1} = 0."""
    n = len(mu)
    i, j = root
    ci = mu[i - 1] if i <= n else 0
    cj = mu[j - 1] if j <= n else 0
    return ci - cj


def root_weight(n: int, root: Root) -> Weight:
    i, j = root
    return add_weight(eps(n, i), neg_weight(eps(n, j)))


def affine_reflect(mu: Weight, root: Root, level: int) -> Weight:
    """Reflection in the hyperplane {x : <x, root^vee> = level}."""
    n = len(mu)
    c = pairing(mu, root) - level
    return add_weight(mu, scale_weight(-c, root_weight(n, root)))


def rho_pair(root: Root) -> int:
    """<rho, root^vee> = j - i for root = eps_i - eps_j."""
    i, j = root
    return j - i


def coroot_deg(n: int, root: Root):
    """(eps_i - eps_j)^vee expanded in simple coroots: 1 in slots i..j-1."""
    i, j = root
    return tuple(1 if i <= t + 1 <= j - 1 else 0 for t in range(n))


# -- group ring Z[P] ------------------------------------------------------


class GroupRingElem:
    """Sparse integer combination of lattice exponentials e^mu."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        t = {}
        if terms:
            for mu, c in terms.items():
                if c:
                    t[tuple(mu)] = c
        self.terms = t

    @classmethod
    def zero(cls, n: int) -> "GroupRingElem":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "GroupRingElem":
        return cls(n, {zero_weight(n): 1})

    @classmethod
    def monomial(cls, n: int, mu, c: int = 1) -> "GroupRingElem":
        return cls(n, {tuple(mu): c})

    def _check(self, other: "GroupRingElem"):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElem)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        self._check(other)
        t = dict(self.terms)
        for mu, c in other.terms.items():
            s = t.get(mu, 0) + c
            if s:
                t[mu] = s
            else:
                t.pop(mu, None)
        out = GroupRingElem(self.n)
        out.terms = t
        return out

    def __neg__(self) -> "GroupRingElem":
        out = GroupRingElem(self.n)
        out.terms = {mu: -c for mu, c in self.terms.items()}
        return out

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = GroupRingElem(self.n)
            if other:
                out.terms = {mu: c * other for mu, c in self.terms.items()}
            return out
        self._check(other)
        t = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                key = add_weight(mu, nu)
                s = t.get(key, 0) + a * b
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        out = GroupRingElem(self.n)
        out.terms = t
        return out

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def flip(self) -> "GroupRingElem":
        out = GroupRingElem(self.n)
        out.terms = {neg_weight(mu): c for mu, c in self.terms.items()}
        return out

    def act(self, w: Perm) -> "GroupRingElem":
        out = GroupRingElem(self.n)
        out.terms = {act_weight(w, mu): c for mu, c in self.terms.items()}
        return out

    def coeff(self, mu) -> int:
        return self.terms.get(tuple(mu), 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mu, c in self.sorted_terms():
            e = "e" + str(list(mu)).replace(" ", "")
            if c == 1:
                bits.append(f"+{e}")
            elif c == -1:
                bits.append(f"-{e}")
            else:
                bits.append(f"{c:+d}*{e}")
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s


def flip(f: GroupRingElem) -> GroupRingElem:
    """The ring involution e^mu -> e^{-mu}."""
    return f.flip()


def act_ring(w: Perm, f: GroupRingElem) -> GroupRingElem:
    return f.act(w)
