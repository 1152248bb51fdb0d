"""Command-line interface: ``cdlab diamond | paths | poset | verify``.

Exit status is 0 on success, 1 when a verification finds a mismatch (or a
cd-index does not exist), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify as sweeps
from .diamond import diamond
from .latpaths import (
    AxisLabeling,
    enumerate_gamma,
    enumerate_lambda,
    enumerate_omega,
    render_paths,
    sum_weights,
    weight_ab,
    weight_cd,
    weight_lambda,
)
from .ncalg import AB, CD, Alphabet, NcPolynomial, NotExpressible, parse_polynomial
from .poset import (
    PosetError,
    ab_index,
    all_subsets,
    cartesian_product,
    cd_index,
    diamond_product_poset,
    flag_f_vector,
    flag_h_vector,
    format_subset,
    is_eulerian,
    load_poset,
    prism_poset,
    pyramid_poset,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# diamond ----------------------------------------------------------------------

def cmd_diamond(args) -> int:
    alphabet = Alphabet.coerce(args.mode)
    try:
        u = parse_polynomial(args.u, alphabet)
        v = parse_polynomial(args.v, alphabet)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    product = diamond(u, v) if args.method == "recursion" else sum_weights(u, v)
    if args.json:
        _emit({"mode": alphabet.value, "method": args.method, "u": u.to_json(), "v": v.to_json(),
               "product": product.to_json()})
    else:
        print(product)
    return EXIT_OK


# paths -----------------------------------------------------------------------

def _family_listing(args):
    """(labels or None, paths, weight function or None) for the requested family."""
    words = args.words or []
    if args.family == "gamma":
        if len(words) != 2:
            raise UsageError("gamma needs two cd-words: the horizontal and the vertical label")
        labels = _labels(words, CD)
        return labels, enumerate_gamma(labels), lambda p: weight_cd(p, labels)
    if args.family == "omega":
        if words:
            if len(words) != 2:
                raise UsageError("omega takes two ab-words or --p/--q")
            labels = _labels(words, AB)
            return labels, enumerate_omega(labels.width, labels.height), lambda p: weight_ab(p, labels)
        p, q = _pq(args)
        return AxisLabeling("a" * p, "a" * q, AB), enumerate_omega(p, q), None
    # lambda
    if words:
        if len(words) != 2 or set("".join(words)) - {"c"}:
            raise UsageError("lambda takes --p/--q or two powers of c")
        p, q = len(words[0]), len(words[1])
    else:
        p, q = _pq(args)
    return AxisLabeling("c" * p, "c" * q, CD), enumerate_lambda(p, q), weight_lambda


def _labels(words: Sequence[str], alphabet: Alphabet) -> AxisLabeling:
    u, v = ("" if w == "1" else w for w in words)
    try:
        return AxisLabeling(u, v, alphabet)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pq(args) -> tuple[int, int]:
    if args.p is None or args.q is None:
        raise UsageError(f"{args.family} needs --p and --q (or label words)")
    if args.p < 0 or args.q < 0:
        raise UsageError("--p and --q must be nonnegative")
    return args.p, args.q


def cmd_paths(args) -> int:
    labels, paths, weigh = _family_listing(args)
    weights = {p: weigh(p) for p in paths} if weigh else {}
    total = None
    if weigh:
        total = NcPolynomial.zero(labels.alphabet)
        for w in weights.values():
            total = total + w

    if args.action == "render":
        fmt = args.format or args.out.rsplit(".", 1)[-1].lower()
        fmt = {"tex": "tikz"}.get(fmt, fmt)
        try:
            doc = render_paths(labels, paths, fmt, weights={p: str(w) for p, w in weights.items()},
                               columns=args.columns)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        mode = "w" if isinstance(doc, str) else "wb"
        with open(args.out, mode, **({"encoding": "utf-8"} if mode == "w" else {})) as fh:
            fh.write(doc)
        print(f"wrote {len(paths)} panels to {args.out}", file=sys.stderr)
        return EXIT_OK

    if args.json:
        out = {"family": args.family, "count": len(paths),
               "labels": {"horizontal": labels.horizontal, "vertical": labels.vertical,
                          "alphabet": labels.alphabet.value},
               "paths": [dict(p.to_json(), **({"weight": weights[p].to_json()} if weigh else {}))
                         for p in paths]}
        if total is not None:
            out["total"] = total.to_json()
        _emit(out)
        return EXIT_OK
    for p in paths:
        print(f"{p.text()}\t{weights[p]}" if weigh else p.text())
    if total is not None:
        print(f"total\t{total}")
    return EXIT_OK


# poset ----------------------------------------------------------------------------

def _target_poset(args):
    try:
        sources = [load_poset(s) for s in args.posets]
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    op = args.op
    if op in ("diamond", "cartesian"):
        if len(sources) != 2:
            raise UsageError(f"--op={op} needs two posets")
        P, Q = sources
        return diamond_product_poset(P, Q) if op == "diamond" else cartesian_product(P, Q)
    if len(sources) != 1:
        raise UsageError("expected one poset (use --op=diamond or --op=cartesian for two)")
    if op == "prism":
        return prism_poset(sources[0])
    if op == "pyramid":
        return pyramid_poset(sources[0])
    return sources[0]


def cmd_poset(args) -> int:
    try:
        P = _target_poset(args)
    except PosetError as exc:
        raise UsageError(str(exc)) from exc

    if args.action == "product":
        _emit(P.to_json())
        return EXIT_OK
    if args.action == "eulerian":
        value = is_eulerian(P)
        if args.json:
            _emit({"eulerian": value})
        else:
            print("true" if value else "false")
        return EXIT_OK
    if args.action == "abindex":
        psi = ab_index(P)
        if args.json:
            _emit(psi.to_json())
        else:
            print(psi)
        return EXIT_OK
    if args.action == "flagvector":
        f = flag_f_vector(P)
        h = flag_h_vector(f)
        if args.json:
            _emit({"n": f.n, "rows": [{"S": list(s), "f": f.counts[s], "h": h.counts[s]}
                                      for s in all_subsets(f.n)]})
        else:
            print("S\tf_S\th_S")
            for s in all_subsets(f.n):
                print(f"{format_subset(s)}\t{f.counts[s]}\t{h.counts[s]}")
        return EXIT_OK
    try:
        psi = cd_index(P)
    except NotExpressible:
        if args.json:
            _emit({"cd_index": None, "ab_index": ab_index(P).to_json()})
        else:
            print(f"not expressible in c,d (ab-index: {ab_index(P)})", file=sys.stderr)
        return EXIT_MISMATCH
    if args.json:
        _emit(psi.to_json())
    else:
        print(psi)
    return EXIT_OK


# verify --------------------------------------------------------------------------

def _run_suite(args) -> "sweeps.SweepResult":
    w = args.workers
    if args.suite == "thm42":
        return sweeps.omega_sweep(args.max_u if args.max_u is not None else 5,
                            args.max_v if args.max_v is not None else 5, workers=w)
    if args.suite == "thm52":
        return sweeps.gamma_sweep(args.max_u if args.max_u is not None else 6,
                            args.max_v if args.max_v is not None else 6, workers=w)
    if args.suite == "slone":
        return sweeps.lambda_sweep(args.max if args.max is not None else 8, workers=w)
    if args.suite in ("prop32", "lee"):
        default = sweeps.PRODUCT_POSETS if args.suite == "prop32" else sweeps.FREE_JOIN_POSETS
        names = tuple(s.strip() for s in args.posets.split(",")) if args.posets else default
        fn = sweeps.poset_product_sweep if args.suite == "prop32" else sweeps.free_join_sweep
        return fn(names, workers=w)
    if args.suite == "coalgebra":
        return sweeps.coalgebra(max_newtonian=args.max if args.max is not None else 5, workers=w)
    m = args.max if args.max is not None else 6
    return sweeps.diamond_props(max_comm_cd=m, max_nonneg=m, workers=w)


def cmd_verify(args) -> int:
    for name in ("max_u", "max_v", "max"):
        value = getattr(args, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    try:
        result = _run_suite(args)
    except PosetError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(result.to_json())
    else:
        print(result.summary())
        for case in sorted(result.mismatches, key=lambda c: c.name):
            print(f"MISMATCH\t{case.name}\t{case.detail}")
    print(f"{result.suite}: {result.checked} cases in {result.elapsed:.2f} s", file=sys.stderr)
    if args.report:
        from .report import write_report

        for path in write_report(result, args.report, args.figure_format):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_MISMATCH


SUITE_HELP = {
    "thm42": "Omega path sums vs the ab recursion (--max-u, --max-v; default 5)",
    "thm52": "Gamma path sums vs the cd recursion (--max-u, --max-v; default 6)",
    "slone": "Lambda path sums vs c^p <> c^q (--max; default 8)",
    "prop32": "cd-index of a poset diamond product vs the polynomial product (--posets)",
    "lee": "free join / diamond / prism identity on ab-indices (--posets)",
    "coalgebra": "coproduct, derivation and Pyr identities (--max: coproduct degree, default 5)",
    "diamond-props": "unit, commutativity, associativity, ab/cd agreement, signs (--max; default 6)",
}


# parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diamond", help="diamond product of two polynomials")
    p.add_argument("--mode", choices=["ab", "cd"], default="cd")
    p.add_argument("--method", choices=["recursion", "paths"], default="recursion")
    p.add_argument("--json", action="store_true")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("paths", help="enumerate or draw lattice path families")
    actions = p.add_subparsers(dest="action", required=True)
    for action in ("enumerate", "render"):
        a = actions.add_parser(action)
        a.add_argument("words", nargs="*", help="horizontal and vertical label words")
        a.add_argument("--family", choices=["omega", "lambda", "gamma"], default="gamma")
        a.add_argument("--p", type=int)
        a.add_argument("--q", type=int)
        if action == "render":
            a.add_argument("--out", required=True)
            a.add_argument("--format", choices=["svg", "png", "pdf", "tikz"])
            a.add_argument("--columns", type=int)
        else:
            a.add_argument("--json", action="store_true")
        a.set_defaults(func=cmd_paths)

    p = sub.add_parser("poset", help="flag vectors and indices of graded posets")
    actions = p.add_subparsers(dest="action", required=True)
    for action in ("cdindex", "abindex", "flagvector", "eulerian", "product"):
        a = actions.add_parser(action)
        a.add_argument("posets", nargs="+", help="generator spec (boolean:3, polygon:5, ...) or JSON file")
        a.add_argument("--op", choices=["diamond", "cartesian", "prism", "pyramid"], required=action == "product")
        a.add_argument("--json", action="store_true")
        a.set_defaults(func=cmd_poset)

    suites = "\n".join(f"  {name:<14}{text}" for name, text in SUITE_HELP.items())
    p = sub.add_parser("verify", help="exhaustive identity sweeps", epilog="suites:\n" + suites,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("suite", choices=list(sweeps.SUITES))
    p.add_argument("--max-u", type=int)
    p.add_argument("--max-v", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--posets", help="comma-separated generator specs for prop32/lee")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", metavar="DIR", help="write <suite>.tsv and a summary figure here")
    p.add_argument("--figure-format", choices=["png", "svg", "pdf"], default="png")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # list positionals split by an option ("P --op=diamond Q") arrive in extra
    tail = getattr(args, "posets", None) if hasattr(args, "posets") else getattr(args, "words", None)
    if extra and tail is not None and not any(x.startswith("-") for x in extra):
        tail.extend(extra)
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cdlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
