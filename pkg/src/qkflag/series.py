"""Truncated Novikov power series over the lattice group ring, and sparse
polynomials in the variables z_j := 1 - x_j with Novikov-series coefficients.

Truncation is by total Q-degree: every series carries its bound `trunc` and
all arithmetic drops terms of higher total degree. z-degrees are never
truncated. Coefficients of the Novikov monomials are GroupRingElem values.
"""

from __future__ import annotations

from math import comb

from .weyl import GroupRingElem

QDeg = tuple[int, ...]
ZExp = tuple[int, ...]


def zero_deg(n: int) -> QDeg:
    return (0,) * n


def unit_deg(n: int, i: int) -> QDeg:
    if not 1 <= i <= n:
        raise ValueError(f"Novikov index {i} out of range 1..{n}")
    return tuple(1 if t == i - 1 else 0 for t in range(n))


def add_deg(a: QDeg, b: QDeg) -> QDeg:
    return tuple(x + y for x, y in zip(a, b))


class NovikovSeries:
    """Sparse map from Q-degree vectors to group ring coefficients."""

    __slots__ = ("n", "trunc", "terms")

    def __init__(self, n: int, trunc: int, terms=None):
        self.n = n
        self.trunc = trunc
        t = {}
        if terms:
            for deg, g in terms.items():
                deg = tuple(deg)
                if g and sum(deg) <= trunc:
                    t[deg] = g
        self.terms = t

    @classmethod
    def zero(cls, n: int, trunc: int) -> "NovikovSeries":
        return cls(n, trunc)

    @classmethod
    def one(cls, n: int, trunc: int) -> "NovikovSeries":
        return cls(n, trunc, {zero_deg(n): GroupRingElem.one(n)})

    @classmethod
    def from_ring(cls, g: GroupRingElem, trunc: int) -> "NovikovSeries":
        return cls(g.n, trunc, {zero_deg(g.n): g})

    @classmethod
    def q_var(cls, n: int, trunc: int, i: int) -> "NovikovSeries":
        return cls(n, trunc, {unit_deg(n, i): GroupRingElem.one(n)})

    @classmethod
    def one_minus_q(cls, n: int, trunc: int, i: int) -> "NovikovSeries":
        return cls.one(n, trunc) - cls.q_var(n, trunc, i)

    def _check(self, other: "NovikovSeries"):
        if self.n != other.n or self.trunc != other.trunc:
            raise ValueError(
                f"series mismatch: (n={self.n},D={self.trunc}) vs (n={other.n},D={other.trunc})"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NovikovSeries)
            and self.n == other.n
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __add__(self, other: "NovikovSeries") -> "NovikovSeries":
        self._check(other)
        t = dict(self.terms)
        for deg, g in other.terms.items():
            s = t.get(deg)
            s = g if s is None else s + g
            if s:
                t[deg] = s
            else:
                t.pop(deg, None)
        out = NovikovSeries(self.n, self.trunc)
        out.terms = t
        return out

    def __neg__(self) -> "NovikovSeries":
        out = NovikovSeries(self.n, self.trunc)
        out.terms = {deg: -g for deg, g in self.terms.items()}
        return out

    def __sub__(self, other: "NovikovSeries") -> "NovikovSeries":
        return self + (-other)

    def __mul__(self, other: "NovikovSeries") -> "NovikovSeries":
        self._check(other)
        t = {}
        for da, ga in self.terms.items():
            wa = sum(da)
            for db, gb in other.terms.items():
                if wa + sum(db) > self.trunc:
                    continue
                key = add_deg(da, db)
                g = ga * gb
                s = t.get(key)
                s = g if s is None else s + g
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        out = NovikovSeries(self.n, self.trunc)
        out.terms = t
        return out

    def scale(self, g: GroupRingElem) -> "NovikovSeries":
        if g.n != self.n:
            raise ValueError("rank mismatch")
        return NovikovSeries(self.n, self.trunc, {d: c * g for d, c in self.terms.items()})

    def flip(self) -> "NovikovSeries":
        out = NovikovSeries(self.n, self.trunc)
        out.terms = {deg: g.flip() for deg, g in self.terms.items()}
        return out

    def truncate(self, trunc: int) -> "NovikovSeries":
        return NovikovSeries(self.n, trunc, self.terms)

    def constant_term(self) -> GroupRingElem:
        return self.terms.get(zero_deg(self.n), GroupRingElem.zero(self.n))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for deg, g in self.sorted_terms():
            c = repr(g)
            if any(deg):
                q = "Q" + str(list(deg)).replace(" ", "")
                bits.append(f"({c})*{q}" if ("+" in c or "-" in c[1:]) else f"{c}*{q}")
            else:
                bits.append(c)
        return " + ".join(bits)


def series_mul(a: NovikovSeries, b: NovikovSeries) -> NovikovSeries:
    return a * b


def series_inv_unit(a: NovikovSeries) -> NovikovSeries:
    """Inverse of a series whose constant term is a single signed exponential."""
    c0 = a.constant_term()
    if len(c0.terms) != 1:
        raise ValueError("series is not a unit: constant term is not +/-e^mu")
    (mu, c), = c0.terms.items()
    if c not in (1, -1):
        raise ValueError("series is not a unit: constant coefficient not +/-1")
    inv0 = NovikovSeries.from_ring(
        GroupRingElem.monomial(a.n, tuple(-x for x in mu), c), a.trunc
    )
    one = NovikovSeries.one(a.n, a.trunc)
    r = one - inv0 * a
    acc = one
    for _ in range(a.trunc):
        acc = one + r * acc
    return acc * inv0


class ZPolynomial:
    """Sparse polynomial in z_1..z_{n+1} with NovikovSeries coefficients."""

    __slots__ = ("n", "trunc", "terms")

    def __init__(self, n: int, trunc: int, terms=None):
        self.n = n
        self.trunc = trunc
        t = {}
        if terms:
            for zexp, s in terms.items():
                zexp = tuple(zexp)
                if len(zexp) != n + 1:
                    raise ValueError("z-exponent arity mismatch")
                if s:
                    t[zexp] = s
        self.terms = t

    @classmethod
    def zero(cls, n: int, trunc: int) -> "ZPolynomial":
        return cls(n, trunc)

    @classmethod
    def one(cls, n: int, trunc: int) -> "ZPolynomial":
        return cls(n, trunc, {(0,) * (n + 1): NovikovSeries.one(n, trunc)})

    @classmethod
    def z_var(cls, n: int, trunc: int, j: int) -> "ZPolynomial":
        if not 1 <= j <= n + 1:
            raise ValueError(f"z index {j} out of range 1..{n + 1}")
        e = tuple(1 if t == j - 1 else 0 for t in range(n + 1))
        return cls(n, trunc, {e: NovikovSeries.one(n, trunc)})

    @classmethod
    def from_series(cls, s: NovikovSeries) -> "ZPolynomial":
        return cls(s.n, s.trunc, {(0,) * (s.n + 1): s})

    def _check(self, other: "ZPolynomial"):
        if self.n != other.n or self.trunc != other.trunc:
            raise ValueError(
                f"polynomial mismatch: (n={self.n},D={self.trunc}) vs (n={other.n},D={other.trunc})"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZPolynomial)
            and self.n == other.n
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        self._check(other)
        t = dict(self.terms)
        for zexp, s in other.terms.items():
            u = t.get(zexp)
            u = s if u is None else u + s
            if u:
                t[zexp] = u
            else:
                t.pop(zexp, None)
        out = ZPolynomial(self.n, self.trunc)
        out.terms = t
        return out

    def __neg__(self) -> "ZPolynomial":
        out = ZPolynomial(self.n, self.trunc)
        out.terms = {zexp: -s for zexp, s in self.terms.items()}
        return out

    def __sub__(self, other: "ZPolynomial") -> "ZPolynomial":
        return self + (-other)

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        self._check(other)
        t = {}
        for za, sa in self.terms.items():
            for zb, sb in other.terms.items():
                key = tuple(x + y for x, y in zip(za, zb))
                s = sa * sb
                u = t.get(key)
                u = s if u is None else u + s
                if u:
                    t[key] = u
                else:
                    t.pop(key, None)
        out = ZPolynomial(self.n, self.trunc)
        out.terms = t
        return out

    def scale_ring(self, g: GroupRingElem) -> "ZPolynomial":
        return ZPolynomial(
            self.n, self.trunc, {z: s.scale(g) for z, s in self.terms.items()}
        )

    def scale_series(self, s: NovikovSeries) -> "ZPolynomial":
        return ZPolynomial(
            self.n, self.trunc, {z: u * s for z, u in self.terms.items()}
        )

    def truncate(self, trunc: int) -> "ZPolynomial":
        return ZPolynomial(
            self.n, trunc, {z: s.truncate(trunc) for z, s in self.terms.items()}
        )

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return zpoly_str(self)


def zpoly_add(a: ZPolynomial, b: ZPolynomial) -> ZPolynomial:
    return a + b


def zpoly_mul(a: ZPolynomial, b: ZPolynomial) -> ZPolynomial:
    return a * b


def specialize_q_zero(p: ZPolynomial) -> ZPolynomial:
    """Drop every term of positive Q-degree."""
    t = {}
    for zexp, s in p.terms.items():
        g = s.constant_term()
        if g:
            t[zexp] = NovikovSeries.from_ring(g, p.trunc)
    return ZPolynomial(p.n, p.trunc, t)


def _binomial_expand(terms, n, trunc):
    """Substitute v_j -> 1 - u_j monomial-by-monomial; exact and involutive."""
    out = {}
    zero = (0,) * (n + 1)
    for vexp, s in terms.items():
        # expand prod_j (1 - u_j)^{m_j}
        expansions = [(zero, 1)]
        for j, m in enumerate(vexp):
            if m == 0:
                continue
            new = []
            for key, c in expansions:
                for t in range(m + 1):
                    k2 = list(key)
                    k2[j] += t
                    new.append((tuple(k2), c * comb(m, t) * (-1) ** t))
            expansions = new
        for key, c in expansions:
            add = s.scale(GroupRingElem.monomial(s.n, (0,) * n, c))
            cur = out.get(key)
            cur = add if cur is None else cur + add
            if cur:
                out[key] = cur
            else:
                out.pop(key, None)
    return out


def zpoly_to_x_terms(p: ZPolynomial) -> dict:
    """Exponent map of p rewritten in the variables x_j = 1 - z_j."""
    return _binomial_expand(p.terms, p.n, p.trunc)


def zpoly_from_x_terms(n: int, trunc: int, terms: dict) -> ZPolynomial:
    """Inverse of zpoly_to_x_terms: substitute x_j = 1 - z_j."""
    return ZPolynomial(n, trunc, _binomial_expand(terms, n, trunc))


def zpoly_obj(p: ZPolynomial) -> list:
    """Canonical JSON-ready form, sorted lexicographically at every level."""
    rows = []
    for zexp in sorted(p.terms):
        s = p.terms[zexp]
        srows = []
        for deg in sorted(s.terms):
            g = s.terms[deg]
            wrows = [
                {"eps_coords": list(mu), "coeff": str(c)} for mu, c in g.sorted_terms()
            ]
            srows.append({"q_degs": list(deg), "weight_coeffs": wrows})
        rows.append({"z_exponents": list(zexp), "terms": srows})
    return rows


def _monomial_str(exp, var):
    bits = []
    for j, m in enumerate(exp, start=1):
        if m == 1:
            bits.append(f"{var}{j}")
        elif m > 1:
            bits.append(f"{var}{j}^{m}")
    return "*".join(bits)


def zpoly_str(p: ZPolynomial, var: str = "z") -> str:
    """Human-readable form; var='x' rewrites through x_j = 1 - z_j."""
    terms = zpoly_to_x_terms(p) if var == "x" else p.terms
    if not terms:
        return "0"
    bits = []
    for exp in sorted(terms):
        s = terms[exp]
        mono = _monomial_str(exp, var)
        c = repr(s)
        if mono:
            bits.append(f"({c})*{mono}" if (" " in c or "+" in c or "-" in c[1:]) else f"{c}*{mono}")
        else:
            bits.append(f"({c})" if " " in c else c)
    return " + ".join(bits)
