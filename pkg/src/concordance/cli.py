"""Command-line front end.

Subcommands map one-to-one onto library entry points:

  invariants <expr> [--theta-grid N] [--tolerance T]
  surgery-curves <matrix>
  lattice <matrix> <vector>
  freegroup member <gen>... -- <word>
  freegroup image-check
  verify [--K <expr>] [--out <path>]
  sigplot <expr> --points N --out <path>

Exit codes: 0 success, 1 computation error, 2 usage error. `verify`
exits 0 only when both report pass flags hold. The environment variable
CONCORDANCE_TOLERANCE overrides the default jump-point tolerance 1e-9.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import freegroup, intlattice, knotexpr, seifert, verify
from .errors import ConcordanceError, SingularEvaluation
from .seifert import SeifertMatrix

FREEGROUP_USAGE = (
    "usage: concordance freegroup member <gen>... -- <word>\n"
    "       concordance freegroup image-check\n"
    "  <gen> and <word> are words over letters a d with ' for inverses,\n"
    "  e.g. member 'a a a a d d' \"d' a d\" -- a a")

VERIFY_FIELDS = (
    "record fields: infecting_knot, {base,a_curve,b_curve}.expr/.alexander/"
    ".arf/.sigma.<i>.{theta,value,status}, a_curve.windings, "
    "b_curve.windings, lattice.{eta1,eta2}.in_colspace_{V,Vt}[.witness], "
    "freegroup.eta1_in_pi1_image, pass.arf_nonzero_both_curves, "
    "pass.signature_nonvanishing_both_curves")


def default_tolerance() -> float:
    raw = os.environ.get("CONCORDANCE_TOLERANCE")
    if raw is None:
        return seifert.DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        raise ConcordanceError(
            f"CONCORDANCE_TOLERANCE is not a number: {raw!r}")
    if value <= 0:
        raise ConcordanceError("CONCORDANCE_TOLERANCE must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concordance",
        description="Exact knot-concordance invariants and the "
                    "counterexample verification pipeline.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants",
                       help="Alexander polynomial, Arf, signature samples")
    p.add_argument("expr", help="knot expression, e.g. "
                                "'sat(R; [2,1]; trefoil, neg(trefoil))'")
    p.add_argument("--theta-grid", type=int, default=64, metavar="N",
                   help="number of signature sample angles (default 64)")
    p.add_argument("--tolerance", type=float, default=None, metavar="T",
                   help="jump-point tolerance (default 1e-9)")

    p = sub.add_parser("surgery-curves",
                       help="primitive isotropic classes of a 2x2 form")
    p.add_argument("matrix", help="Seifert matrix, e.g. '[[3,2],[1,0]]'")

    p = sub.add_parser("lattice",
                       help="integer column-space membership with witness")
    p.add_argument("matrix", help="integer matrix, e.g. '[[3,1],[2,0]]'")
    p.add_argument("vector", help="integer vector, e.g. '(1,2)'")

    p = sub.add_parser("verify",
                       help="full counterexample report",
                       epilog=VERIFY_FIELDS)
    p.add_argument("--K", default="trefoil", metavar="EXPR",
                   help="infecting knot expression (default trefoil)")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="also write machine-readable records to PATH")
    p.add_argument("--tolerance", type=float, default=None, metavar="T")

    p = sub.add_parser("sigplot",
                       help="CSV of signature samples over an angle grid")
    p.add_argument("expr")
    p.add_argument("--points", type=int, default=64, metavar="N")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--tolerance", type=float, default=None, metavar="T")

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "freegroup":
        return _run_freegroup(argv[1:])
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except ConcordanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "invariants":
        return _run_invariants(args)
    if args.command == "surgery-curves":
        return _run_surgery_curves(args)
    if args.command == "lattice":
        return _run_lattice(args)
    if args.command == "verify":
        return _run_verify(args)
    if args.command == "sigplot":
        return _run_sigplot(args)
    raise AssertionError(f"unhandled command {args.command}")


def _tolerance(args: argparse.Namespace) -> float:
    if getattr(args, "tolerance", None) is not None:
        return args.tolerance
    return default_tolerance()


def _run_invariants(args: argparse.Namespace) -> int:
    expr = knotexpr.parse(args.expr)
    tolerance = _tolerance(args)
    print(f"expression: {knotexpr.unparse(expr)}")
    print(f"alexander: {knotexpr.alexander_of(expr)}")
    print(f"arf: {knotexpr.arf_of(expr)}")
    for theta in verify.default_theta_grid(args.theta_grid):
        try:
            value = str(knotexpr.signature_of(expr, theta, tolerance))
        except SingularEvaluation:
            value = "singular"
        print(f"sigma[{theta:.12f}]: {value}")
    return 0


def _run_surgery_curves(args: argparse.Namespace) -> int:
    matrix = SeifertMatrix(intlattice.parse_int_matrix(args.matrix))
    for u, v in seifert.surgery_curve_classes(matrix):
        print(f"({u},{v})")
    return 0


def _run_lattice(args: argparse.Namespace) -> int:
    matrix = intlattice.parse_int_matrix(args.matrix)
    vector = intlattice.parse_int_vector(args.vector)
    witness = intlattice.colspace_member(matrix, vector)
    if witness is None:
        print("member: false")
    else:
        print("member: true")
        print("witness: (" + ",".join(str(x) for x in witness) + ")")
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    report = verify.run_counterexample(args.K, tolerance=_tolerance(args))
    print(report.to_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write("\n".join(report.to_records()) + "\n")
    return 0 if report.arf_pass and report.signature_pass else 1


def _run_sigplot(args: argparse.Namespace) -> int:
    expr = knotexpr.parse(args.expr)
    tolerance = _tolerance(args)
    if args.points < 1:
        raise ConcordanceError("--points must be at least 1")
    rows = ["theta,sigma,status"]
    for theta in verify.default_theta_grid(args.points):
        try:
            value = knotexpr.signature_of(expr, theta, tolerance)
            rows.append(f"{theta:.12f},{value},regular")
        except SingularEvaluation:
            rows.append(f"{theta:.12f},,singular")
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} rows to {args.out}")
    return 0


def _run_freegroup(argv: list[str]) -> int:
    if not argv:
        print(FREEGROUP_USAGE, file=sys.stderr)
        return 2
    action, rest = argv[0], argv[1:]
    if action == "image-check":
        if rest:
            print(FREEGROUP_USAGE, file=sys.stderr)
            return 2
        try:
            in_image = freegroup.eta1_membership_check()
        except ConcordanceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"eta1_in_image: {str(in_image).lower()}")
        return 0
    if action == "member":
        if "--" not in rest:
            print(FREEGROUP_USAGE, file=sys.stderr)
            return 2
        split = rest.index("--")
        gen_texts, word_tokens = rest[:split], rest[split + 1:]
        if not gen_texts or not word_tokens:
            print(FREEGROUP_USAGE, file=sys.stderr)
            return 2
        try:
            generators = [freegroup.word(text) for text in gen_texts]
            target = freegroup.word(" ".join(word_tokens))
            graph = freegroup.subgroup_graph(generators)
            verdict = graph.member(target)
        except ConcordanceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"member: {str(verdict).lower()}")
        return 0
    print(FREEGROUP_USAGE, file=sys.stderr)
    return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
