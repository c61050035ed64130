"""Evaluation of z-polynomials on the basis and the verification suites.

The evaluation map sends a polynomial in z_1..z_{n+1} with group-ring
and Novikov coefficients to a finite combination of basis classes.
Each z_j acts as the scalar (1-Q_{j-1})/(1-Q_j), with Q_0 and Q_{n+1}
read as 0, followed by the rank-one tensor step at {j}; the z_j
operators commute, so monomials are well defined.  Scalar coefficients
pass through the weight negation e^mu -> e^{-mu} on the way in, once.

Each suite returns a Report whose cases compare two expansions
coefficient by coefficient; a failing case names the basis symbol and
both group-ring coefficients at the first difference.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .chevalley import KQGClass, f_op, identity_class, tensor_minuscule
from .demazure import pi_z
from .grothendieck import F_poly, groth, groth_longest
from .series import NovikovSeries, ZPolynomial, series_inv_unit
from .sijection import telescope_sum
from .weyl import (
    GroupRingElem,
    all_perms,
    eps,
    eps_set,
    length,
    longest_perm,
    multiply,
    neg_weight,
    scale_weight,
    simple_reflection,
    w_index,
)

__all__ = [
    "Case", "Report", "psi_eval",
    "verify_main", "verify_longest", "verify_prop_wk", "verify_ideal",
    "verify_demazure_descent", "verify_sijection",
]

FLIP_NOTE = (
    "note: polynomial coefficients are read through e^mu -> e^-mu "
    "before acting on classes"
)


@lru_cache(maxsize=None)
def _z_scalar(n: int, trunc: int, j: int) -> NovikovSeries:
    """(1 - Q_{j-1}) / (1 - Q_j) with Q_0 = Q_{n+1} = 0."""
    num = (
        NovikovSeries.one_minus_q(n, trunc, j - 1)
        if j >= 2
        else NovikovSeries.one(n, trunc)
    )
    if j <= n:
        num = num * series_inv_unit(NovikovSeries.one_minus_q(n, trunc, j))
    return num


@lru_cache(maxsize=None)
def _eval_monomial(n: int, trunc: int, zexp: tuple) -> KQGClass:
    if not any(zexp):
        return identity_class(n, trunc)
    j = max(i + 1 for i, e in enumerate(zexp) if e)
    prev = list(zexp)
    prev[j - 1] -= 1
    cls = _eval_monomial(n, trunc, tuple(prev))
    return tensor_minuscule(cls, (j,)).scale_series(_z_scalar(n, trunc, j))


def psi_eval(p: ZPolynomial) -> KQGClass:
    """Evaluate a z-polynomial to a combination of basis classes."""
    acc = KQGClass.zero(p.n, p.trunc)
    for zexp, series in p.terms.items():
        acc = acc + _eval_monomial(p.n, p.trunc, zexp).scale_series(
            series.flip()
        )
    return acc


@dataclass(frozen=True)
class Case:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    title: str
    n: int
    trunc: int
    cases: tuple[Case, ...]
    note: str = FLIP_NOTE

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def lines(self) -> list[str]:
        out = [f"{self.title}: n={self.n}, q-degree <= {self.trunc}", self.note]
        for c in self.cases:
            mark = "PASS" if c.ok else "FAIL"
            out.append(f"{mark}  {c.name}" + (f": {c.detail}" if c.detail else ""))
        good = sum(1 for c in self.cases if c.ok)
        out.append(f"{good}/{len(self.cases)} cases pass")
        return out

    def obj(self) -> dict:
        return {
            "title": self.title,
            "n": self.n,
            "q_deg": self.trunc,
            "note": self.note,
            "ok": self.ok,
            "cases": [
                {"name": c.name, "ok": c.ok, "detail": c.detail}
                for c in self.cases
            ],
        }


def _compare(name: str, got: KQGClass, want: KQGClass) -> Case:
    if got == want:
        return Case(name, True)
    keys = sorted(
        set(got.terms) | set(want.terms),
        key=lambda key: (sum(key[1]), key[1], key[0]),
    )
    for w, xi in keys:
        a, b = got.coeff(w, xi), want.coeff(w, xi)
        if a != b:
            return Case(
                name,
                False,
                f"basis ({w}, {xi}): got {a!r}, want {b!r}",
            )
    return Case(name, False, "same support, unreachable")


def _wname(w) -> str:
    return "".join(str(a) for a in w) if len(w) <= 9 else ",".join(map(str, w))


def _run_cases(worker, inputs, threads=None) -> tuple[Case, ...]:
    """Map worker over inputs, optionally on a thread pool; order is kept."""
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(worker, inputs))
    return tuple(worker(x) for x in inputs)


def verify_main(n: int, trunc: int, threads=None) -> Report:
    """Every basis class is the image of its double Grothendieck polynomial."""

    def case(w):
        got = psi_eval(groth(w, trunc))
        want = KQGClass.basis(n, trunc, w)
        return _compare(f"w={_wname(w)}", got, want)

    cases = _run_cases(case, all_perms(n), threads)
    return Report("image of each polynomial", n, trunc, cases)


def _operator_route(n: int, trunc: int, upto_k: int = 1) -> KQGClass:
    """Iterate the signed chain-operator sums from the identity class."""
    cls = identity_class(n, trunc)
    for k in range(n, upto_k - 1, -1):
        acc = KQGClass.zero(n, trunc)
        for p in range(k + 1):
            mono = GroupRingElem.monomial(
                n, scale_weight(p, eps(n, n + 1 - k)), (-1) ** p
            )
            acc = acc + f_op(cls, k, p).scale_ring(mono)
        cls = acc
    return cls


def verify_longest(n: int, trunc: int) -> Report:
    """Top polynomial route and operator route both reach the top class."""
    want = KQGClass.basis(n, trunc, longest_perm(n))
    poly = psi_eval(groth_longest(n, trunc))
    op = _operator_route(n, trunc)
    cases = (
        _compare("polynomial route", poly, want),
        _compare("operator route", op, want),
        Case(
            "routes byte-identical",
            poly == op and repr(poly) == repr(op),
            "" if repr(poly) == repr(op) else "renderings differ",
        ),
    )
    return Report("top class, two routes", n, trunc, cases)


def verify_prop_wk(n: int, trunc: int, k=None) -> Report:
    """One chain-operator step matches the path telescope at every k."""
    ks = range(1, n + 1) if k is None else (k,)
    cases = []
    for k in ks:
        want = KQGClass.basis(n, trunc, w_index(n, k))
        cls = KQGClass.basis(n, trunc, w_index(n, k + 1))
        acc = KQGClass.zero(n, trunc)
        for p in range(k + 1):
            mono = GroupRingElem.monomial(
                n, scale_weight(p, eps(n, n + 1 - k)), (-1) ** p
            )
            acc = acc + f_op(cls, k, p).scale_ring(mono)
        tel = telescope_sum(n, k, trunc)
        cases.append(_compare(f"k={k} operator step", acc, want))
        cases.append(_compare(f"k={k} path telescope", tel, want))
        cases.append(
            Case(
                f"k={k} routes byte-identical",
                acc == tel and repr(acc) == repr(tel),
                "" if repr(acc) == repr(tel) else "renderings differ",
            )
        )
    return Report("step recursion", n, trunc, tuple(cases))


def verify_ideal(n: int, trunc: int) -> Report:
    """Generators of the presented ideal act as their scalar images."""
    cases = []
    one = identity_class(n, trunc)
    for l in range(1, n + 2):
        got = psi_eval(F_poly(n + 1, l, n, trunc))
        g = GroupRingElem.zero(n)
        for J in combinations(range(1, n + 2), l):
            g = g + GroupRingElem.monomial(n, neg_weight(eps_set(n, J)))
        cases.append(_compare(f"l={l}", got, one.scale_ring(g)))
    return Report("ideal relations", n, trunc, tuple(cases))


def verify_demazure_descent(
    n: int, trunc: int, seed=None, samples=None, threads=None
) -> Report:
    """Divided-difference descents are mirrored on the basis."""
    pairs = [
        (w, i) for w in all_perms(n) for i in range(1, n + 1)
    ]
    if samples is not None and samples < len(pairs):
        rnd = random.Random(seed)
        pairs = rnd.sample(pairs, samples)

    def case(pair):
        w, i = pair
        sw = multiply(simple_reflection(n, i), w)
        target = sw if length(sw) < length(w) else w
        got = psi_eval(pi_z(i, groth(w, trunc)))
        want = KQGClass.basis(n, trunc, target)
        return _compare(f"w={_wname(w)} i={i}", got, want)

    return Report(
        "descent on the basis", n, trunc, _run_cases(case, pairs, threads)
    )


def verify_sijection(n: int, trunc: int, k=None) -> Report:
    """Involutive cancellation of the signed path sums."""
    from .sijection import classify, enumerate_paths, phi, q_path

    ks = range(1, n + 1) if k is None else (k,)
    cases = []
    for k in ks:
        paths = []
        for r in range(k + 1):
            for J in combinations(range(1, k + 1), r):
                paths.extend(enumerate_paths(n, k, J))
        q = q_path(n, k)
        fixed = [p for p in paths if phi(p) == p]
        cases.append(
            Case(
                f"k={k} unique fixed point",
                fixed == [q],
                "" if fixed == [q] else f"fixed set has {len(fixed)} paths",
            )
        )
        invol = all(phi(phi(p)) == p for p in paths)
        cases.append(Case(f"k={k} involution", invol))
        cancel = all(
            phi(p).sign() == -p.sign()
            and (phi(p).end, phi(p).down, phi(p).weight())
            == (p.end, p.down, p.weight())
            for p in paths
            if p != q
        )
        cases.append(Case(f"k={k} signed pairs cancel", cancel))
        data_ok = (
            q.end == w_index(n, k)
            and q.down == (0,) * n
            and q.gamma_len == 1
            and q.weight() == (0,) * n
        )
        cases.append(Case(f"k={k} fixed point data", data_ok))
        cases.append(
            _compare(
                f"k={k} telescope",
                telescope_sum(n, k, trunc),
                KQGClass.basis(n, trunc, w_index(n, k)),
            )
        )
        census = sorted({classify(p) for p in paths})
        cases.append(
            Case(
                f"k={k} classes seen",
                True,
                ",".join(census),
            )
        )
    return Report("cancelling involution", n, trunc, tuple(cases))
