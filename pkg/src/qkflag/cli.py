"""Command-line front end.

Subcommands expose the graph, the chains, the tensor expansion, the
polynomials, the path involution, and the verification suites.  JSON
output is byte-stable for fixed inputs: keys are sorted and integers
are printed canonically.  Exit codes: 0 on success, 1 when a
verification suite fails, 2 on malformed flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import chain_for
from .chevalley import KQGClass, tensor_minuscule
from .grothendieck import groth, groth_classical
from .qbg import all_edges
from .series import ZPolynomial, zpoly_obj, zpoly_str, zpoly_to_x_terms
from .verify import (
    verify_demazure_descent,
    verify_ideal,
    verify_longest,
    verify_main,
    verify_prop_wk,
    verify_sijection,
)
from .weyl import Perm, all_perms, length

SUITES = {
    "main": verify_main,
    "longest": verify_longest,
    "prop-wk": verify_prop_wk,
    "ideal": verify_ideal,
    "descent": verify_demazure_descent,
    "sijection": verify_sijection,
}


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _window_str(w: Perm) -> str:
    return ",".join(str(a) for a in w)


def parse_window(text: str, n: int) -> Perm:
    """Accept '3,1,2' always, or compact digits like '312' when n+1 <= 9."""
    text = text.strip()
    try:
        if "," in text:
            w = tuple(int(a) for a in text.split(","))
        else:
            if n + 1 > 9:
                raise UsageError(
                    f"rank {n} windows need the comma form, got {text!r}"
                )
            w = tuple(int(ch) for ch in text)
    except ValueError:
        raise UsageError(f"cannot read window {text!r}") from None
    if sorted(w) != list(range(1, n + 2)):
        raise UsageError(f"{text!r} is not a window of 1..{n + 1}")
    return w


def parse_J(text: str, top: int) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        J = tuple(sorted(int(a) for a in text.split(",")))
    except ValueError:
        raise UsageError(f"cannot read index set {text!r}") from None
    if len(set(J)) != len(J) or any(not 1 <= j <= top for j in J):
        raise UsageError(f"{text!r} is not a subset of 1..{top}")
    return J


def _class_rows(cls: KQGClass) -> list:
    rows = []
    for (w, xi), g in cls.sorted_terms():
        rows.append(
            {
                "end": _window_str(w),
                "novikov": list(xi),
                "coeff": [
                    {"eps_coords": list(mu), "coeff": str(c)}
                    for mu, c in g.sorted_terms()
                ],
            }
        )
    return rows


def _class_text(cls: KQGClass) -> list:
    return [
        f"{_window_str(w)}\t{','.join(map(str, xi))}\t{g!r}"
        for (w, xi), g in cls.sorted_terms()
    ]


def _cmd_qbg(args) -> int:
    edges = all_edges(args.n)
    fmt = "dot" if args.dot else args.format
    if fmt == "json":
        obj = {
            "n": args.n,
            "edges": [
                {
                    "source": _window_str(e.source),
                    "root": list(e.label),
                    "kind": e.kind,
                    "target": _window_str(e.target),
                }
                for e in edges
            ],
        }
        print(_dump_json(obj))
    elif fmt == "dot":
        print("digraph qbg {")
        for w in sorted(all_perms(args.n), key=lambda w: (length(w), w)):
            print(f'  "{_window_str(w)}";')
        for e in edges:
            lab = f"({e.label[0]},{e.label[1]}) {e.kind}"
            print(
                f'  "{_window_str(e.source)}" -> "{_window_str(e.target)}"'
                f' [label="{lab}"];'
            )
        print("}")
    else:
        for e in edges:
            print(
                f"{_window_str(e.source)}\t{e.label[0]},{e.label[1]}"
                f"\t{e.kind}\t{_window_str(e.target)}"
            )
    return 0


def _cmd_chain(args) -> int:
    J = parse_J(args.J, args.n + 1)
    chain = chain_for(J, args.n)
    rows = [
        {
            "index": idx,
            "part": item.part,
            "root": list(item.root),
            "orientation": item.orientation,
            "level": item.level,
        }
        for idx, item in enumerate(chain.items)
    ]
    if args.format == "json":
        print(_dump_json({"n": args.n, "J": list(J), "rows": rows}))
    else:
        print(f"chain for J={{{','.join(map(str, J))}}} at n={args.n}")
        for r in rows:
            print(
                f"{r['index']}\t{r['part']}\t{r['root'][0]},{r['root'][1]}"
                f"\t{r['orientation']:+d}\t{r['level']}"
            )
    return 0


def _cmd_chevalley(args) -> int:
    w = parse_window(args.w, args.n)
    J = parse_J(args.J, args.n + 1)
    cls = tensor_minuscule(
        KQGClass.basis(args.n, args.q_deg, w), J
    )
    if args.format == "json":
        obj = {
            "n": args.n,
            "w": _window_str(w),
            "J": list(J),
            "q_deg": args.q_deg,
            "rows": _class_rows(cls),
        }
        print(_dump_json(obj))
    else:
        print(
            f"[O_{{{_window_str(w)}}}] tensor step at"
            f" J={{{','.join(map(str, J))}}}, q-degree <= {args.q_deg}"
        )
        for line in _class_text(cls):
            print(line)
    return 0


def _cmd_groth(args) -> int:
    w = parse_window(args.w, args.n)
    poly = (
        groth_classical(w, args.q_deg)
        if args.classical
        else groth(w, args.q_deg)
    )
    if args.format == "json":
        if args.vars == "x":
            fake = ZPolynomial(poly.n, poly.trunc, zpoly_to_x_terms(poly))
            rows = zpoly_obj(fake)
            for row in rows:
                row["x_exponents"] = row.pop("z_exponents")
        else:
            rows = zpoly_obj(poly)
        obj = {
            "n": args.n,
            "w": _window_str(w),
            "q_deg": args.q_deg,
            "classical": bool(args.classical),
            "presentation": args.vars,
            "terms": rows,
        }
        print(_dump_json(obj))
    else:
        print(zpoly_str(poly, var=args.vars))
    return 0


def _cmd_sijection(args) -> int:
    from itertools import combinations

    from .sijection import classify, enumerate_paths, phi, q_path, telescope_sum

    n, k = args.n, args.k
    if k is None:
        raise UsageError("sijection needs --k")
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got k={k}")
    counts = {}
    census = {}
    paths = []
    for r in range(k + 1):
        for J in combinations(range(1, k + 1), r):
            got = enumerate_paths(n, k, J)
            counts[",".join(map(str, J))] = len(got)
            paths.extend(got)
    for p in paths:
        census[classify(p)] = census.get(classify(p), 0) + 1
    q = q_path(n, k)
    involution = all(phi(phi(p)) == p for p in paths)
    fixed = [p for p in paths if phi(p) == p]
    tele = telescope_sum(n, k, args.q_deg)
    obj = {
        "n": n,
        "k": k,
        "q_deg": args.q_deg,
        "path_counts": counts,
        "class_census": census,
        "involution": involution,
        "fixed_points": len(fixed),
        "fixed_is_q": fixed == [q],
        "telescope": _class_rows(tele),
    }
    if args.dump:
        obj["paths"] = [
            {
                "J": list(p.J),
                "beta": [list(r) for r in p.beta_labels],
                "gamma": [list(r) for r in p.gamma_labels],
                "class": classify(p),
                "end": _window_str(p.end),
                "down": list(p.down),
                "sign": p.sign(),
            }
            for p in paths
        ]
    if args.format == "json":
        print(_dump_json(obj))
    else:
        print(f"paths from step {k} at n={n}")
        for key in sorted(counts):
            print(f"|D_{{{key}}}| = {counts[key]}")
        print(
            "census "
            + " ".join(f"{c}:{census[c]}" for c in sorted(census))
        )
        print(f"involution {'ok' if involution else 'BROKEN'}")
        print(f"fixed points {len(fixed)} (the designated one: {fixed == [q]})")
        print("telescoped class:")
        for line in _class_text(tele):
            print(f"  {line}")
        if args.dump:
            for row in obj["paths"]:
                print(
                    f"J={{{','.join(map(str, row['J']))}}}"
                    f" beta={row['beta']} gamma={row['gamma']}"
                    f" class={row['class']} end={row['end']}"
                    f" down={row['down']} sign={row['sign']:+d}"
                )
    return 0 if involution and fixed == [q] else 1


def _cmd_verify(args) -> int:
    fn = SUITES[args.suite]
    kwargs = {}
    if args.suite in ("prop-wk", "sijection") and args.k is not None:
        kwargs["k"] = args.k
    if args.suite == "descent":
        kwargs["seed"] = args.seed
        kwargs["samples"] = args.samples
        kwargs["threads"] = args.threads
    if args.suite == "main":
        kwargs["threads"] = args.threads
    report = fn(args.n, args.q_deg, **kwargs)
    if args.json:
        print(_dump_json(report.obj()))
    else:
        for line in report.lines():
            print(line)
    return 0 if report.ok else 1


def _add_common(sub, *, window=False, need_J=False):
    sub.add_argument("--n", type=int, required=True, help="rank, at least 1")
    sub.add_argument(
        "--q-deg", type=int, default=3, dest="q_deg",
        help="truncation order for Novikov degrees (default 3)",
    )
    sub.add_argument(
        "--format", choices=("text", "json", "dot"), default="text"
    )
    if window:
        sub.add_argument(
            "--w", required=True,
            help="window, comma list or compact digits ('3,1,2' or '312')",
        )
    if need_J:
        sub.add_argument(
            "--J", default="", help="comma list of column indices, may be empty"
        )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qkflag",
        description="exact computations in the quantum K-theory of flag manifolds",
    )
    subs = top.add_subparsers(dest="command", required=True)

    qbg = subs.add_parser("qbg", help="edge list of the quantum Bruhat graph")
    _add_common(qbg)
    qbg.add_argument("--dot", action="store_true", help="emit DOT (same as --format dot)")
    qbg.set_defaults(run=_cmd_qbg)

    chain = subs.add_parser("chain", help="wall-crossing chain for an index set")
    _add_common(chain, need_J=True)
    chain.set_defaults(run=_cmd_chain)

    chev = subs.add_parser("chevalley", help="tensor expansion of a basis class")
    _add_common(chev, window=True, need_J=True)
    chev.set_defaults(run=_cmd_chevalley)

    gro = subs.add_parser("groth", help="double Grothendieck polynomial")
    _add_common(gro, window=True)
    gro.add_argument("--classical", action="store_true", help="set all Q to 0")
    gro.add_argument(
        "--vars", choices=("z", "x"), default="z",
        help="present in z variables or in x = 1 - z",
    )
    gro.set_defaults(run=_cmd_groth)

    sij = subs.add_parser("sijection", help="signed paths and their involution")
    _add_common(sij)
    sij.add_argument("--k", type=int, default=None, help="step index, 1..n")
    sij.add_argument("--dump", action="store_true", help="list every path")
    sij.set_defaults(run=_cmd_sijection)

    ver = subs.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    _add_common(ver)
    ver.add_argument("--k", type=int, default=None, help="restrict to one step")
    ver.add_argument("--json", action="store_true", help="JSON report")
    ver.add_argument("--seed", type=int, default=None, help="sampling seed")
    ver.add_argument(
        "--samples", type=int, default=None,
        help="random sample size for the descent suite",
    )
    ver.add_argument(
        "--threads", type=int, default=None,
        help="worker threads; output is identical for any value",
    )
    ver.set_defaults(run=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.n < 1:
        print(f"rank must be at least 1, got {args.n}", file=sys.stderr)
        return 2
    if args.q_deg < 0:
        print(f"q-degree bound must be >= 0, got {args.q_deg}", file=sys.stderr)
        return 2
    try:
        return args.run(args)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
