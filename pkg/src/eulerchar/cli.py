"""Command line front end.

Every capability of the library is reachable here for batch use: exact
series evaluation, the Riordan triangles and their action, Stirling and
subdivision matrices, simplicial complexes from JSON, and the
finite-window verification reports.  Output is deterministic text, one
record per line, with exact rationals rendered as "p/q" (or "p" when the
denominator is 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import expressions, verify
from .fps import Series
from .riordan import RiordanPair
from .simplicial import Complex
from .subdivision import matrix_B, stirling_triangle

DEFAULT_PRECISION = 32


def _series_json(s: Series) -> str:
    return json.dumps(
        {"coeffs": s.to_strings(), "precision": s.precision}, sort_keys=True
    )


def _pair_json(t: RiordanPair) -> str:
    return json.dumps(
        {
            "beta": {"coeffs": t.beta.to_strings(), "precision": t.beta.precision},
            "alpha": {"coeffs": t.alpha.to_strings(), "precision": t.alpha.precision},
            "truncation": t.truncation,
        },
        sort_keys=True,
    )


def _print_grid(rows) -> None:
    for row in rows:
        print(" ".join(str(e) for e in row))


def _pair_from_args(args, beta_attr="beta", alpha_attr="alpha") -> RiordanPair:
    beta = expressions.eval_text(getattr(args, beta_attr), args.prec)
    alpha = expressions.eval_text(getattr(args, alpha_attr), args.prec)
    return RiordanPair(beta, alpha)


def _complex_from_args(args) -> Complex:
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    else:
        document = {"maximal": json.loads(args.maximal)}
    if not isinstance(document, dict) or "maximal" not in document:
        raise ValueError('complex document must be {"maximal": [[...], ...]}')
    maximal = document["maximal"]
    if not isinstance(maximal, list) or not all(isinstance(f, list) for f in maximal):
        raise ValueError('"maximal" must be a list of integer arrays')
    return Complex.from_maximal(maximal)


def _add_complex_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="path to a complex JSON document")
    source.add_argument(
        "--maximal", help='inline JSON list of maximal faces, e.g. "[[0,1,2],[2,3]]"'
    )


def _add_prec(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--prec",
        type=int,
        default=DEFAULT_PRECISION,
        help=f"series precision (default {DEFAULT_PRECISION})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerchar",
        description="Exact Riordan/subdivision arithmetic and Euler-characteristic "
        "uniqueness verification.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    p_series = top.add_parser("series", help="series expression utilities")
    series_sub = p_series.add_subparsers(dest="subcommand", required=True)
    p_eval = series_sub.add_parser("eval", help="evaluate an expression exactly")
    p_eval.add_argument("expression")
    _add_prec(p_eval)

    p_riordan = top.add_parser("riordan", help="Riordan pairs and their action")
    riordan_sub = p_riordan.add_subparsers(dest="subcommand", required=True)

    p_apply = riordan_sub.add_parser("apply", help="apply T(beta|alpha) to a series")
    p_apply.add_argument("--beta", required=True)
    p_apply.add_argument("--alpha", required=True)
    p_apply.add_argument("--series", required=True)
    _add_prec(p_apply)

    p_mul = riordan_sub.add_parser("mul", help="product of two Riordan pairs")
    p_mul.add_argument("--beta1", required=True)
    p_mul.add_argument("--alpha1", required=True)
    p_mul.add_argument("--beta2", required=True)
    p_mul.add_argument("--alpha2", required=True)
    _add_prec(p_mul)

    p_inv = riordan_sub.add_parser("inv", help="group inverse of a Riordan pair")
    p_inv.add_argument("--beta", required=True)
    p_inv.add_argument("--alpha", required=True)
    _add_prec(p_inv)

    p_entry = riordan_sub.add_parser("entry", help="single matrix entry")
    p_entry.add_argument("--beta", required=True)
    p_entry.add_argument("--alpha", required=True)
    p_entry.add_argument("--row", type=int, required=True)
    p_entry.add_argument("--col", type=int, required=True)
    _add_prec(p_entry)

    p_matrix = riordan_sub.add_parser("matrix", help="finite matrix window")
    p_matrix.add_argument("--beta", required=True)
    p_matrix.add_argument("--alpha", required=True)
    p_matrix.add_argument("--size", type=int, required=True, help="window bound m")
    _add_prec(p_matrix)

    p_stirling = top.add_parser("stirling", help="Stirling number triangle")
    p_stirling.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p_stirling.add_argument("--size", type=int, required=True, help="last row index")

    p_bmatrix = top.add_parser("bmatrix", help="subdivision matrix window B_m")
    p_bmatrix.add_argument("--size", type=int, required=True, help="window bound m")

    p_complex = top.add_parser("complex", help="simplicial complex utilities")
    complex_sub = p_complex.add_subparsers(dest="subcommand", required=True)
    p_fvec = complex_sub.add_parser("fvec", help="f-vector of a complex")
    _add_complex_source(p_fvec)
    p_chi = complex_sub.add_parser("chi", help="Euler characteristic of a complex")
    _add_complex_source(p_chi)
    p_sd = complex_sub.add_parser("sd", help="barycentric subdivision of a complex")
    _add_complex_source(p_sd)
    p_sd.add_argument("--iterations", type=int, default=1)

    p_verify = top.add_parser("verify", help="finite-window verification reports")
    verify_sub = p_verify.add_subparsers(dest="subcommand", required=True)

    p_eigen = verify_sub.add_parser(
        "eigen", help="unit eigenspace of every window B_m"
    )
    p_eigen.add_argument("--max-window", type=int, default=20)

    p_uniq = verify_sub.add_parser(
        "uniqueness", help="reconstruct the unique homotopy-invariant weights"
    )
    p_uniq.add_argument("--k", default="1", help="rational value taken on simplices")
    _add_prec(p_uniq)

    p_sdinv = verify_sub.add_parser(
        "sdinv", help="is a weight series fixed by the subdivision operator?"
    )
    p_sdinv.add_argument("--series", required=True)
    _add_prec(p_sdinv)

    p_report = verify_sub.add_parser(
        "report", help="Euler characteristic through iterated subdivision, two ways"
    )
    _add_complex_source(p_report)
    p_report.add_argument("--kmax", type=int, default=3)

    return parser


def _run_series(args) -> int:
    print(_series_json(expressions.eval_text(args.expression, args.prec)))
    return 0


def _run_riordan(args) -> int:
    if args.subcommand == "apply":
        pair = _pair_from_args(args)
        g = expressions.eval_text(args.series, args.prec)
        print(_series_json(pair.apply(g)))
    elif args.subcommand == "mul":
        left = _pair_from_args(args, "beta1", "alpha1")
        right = _pair_from_args(args, "beta2", "alpha2")
        print(_pair_json(left.multiply(right)))
    elif args.subcommand == "inv":
        print(_pair_json(_pair_from_args(args).inverse()))
    elif args.subcommand == "entry":
        print(_pair_from_args(args).entry(args.row, args.col))
    else:  # matrix
        _print_grid(_pair_from_args(args).to_matrix(args.size).to_strings())
    return 0


def _run_complex(args) -> int:
    c = _complex_from_args(args)
    if args.subcommand == "fvec":
        print(json.dumps(c.f_vector()))
    elif args.subcommand == "chi":
        print(c.chi())
    else:  # sd
        result = c.iterated_subdivision(args.iterations)
        maximal = [list(f) for f in result.maximal_faces()]
        print(json.dumps({"maximal": maximal}, sort_keys=True))
    return 0


def _format_basis(column) -> str:
    return "(" + ",".join(str(e) for e in column) + ")"


def _run_verify(args) -> int:
    if args.subcommand == "eigen":
        if args.max_window < 0:
            raise ValueError("--max-window must be nonnegative")
        all_ok = True
        for m in range(args.max_window + 1):
            space = verify.eigenspace_of_b(m)
            ok = space.dimension == 1
            shown = "-"
            if space.dimension >= 1:
                v = space.basis[0]
                if v[0]:
                    v = tuple(e / v[0] for e in v)
                shown = _format_basis(v)
                ok = ok and all(v[j] == Fraction(-1) ** j for j in range(m + 1))
            all_ok = all_ok and ok
            print(
                f"m={m} dim={space.dimension} basis={shown} "
                f"alternating={'true' if ok else 'false'}"
            )
        print(f"all_windows_unit_alternating={'true' if all_ok else 'false'}")
    elif args.subcommand == "uniqueness":
        k = Fraction(args.k)
        reconstructed = verify.homotopy_unique(k, args.prec)
        expected = Series.constant(k, args.prec) * Series([1, 1], args.prec).invert()
        matches = reconstructed.coeffs == expected.coeffs
        print(_series_json(reconstructed))
        print(f"k={k} precision={args.prec} equals_k_over_one_plus_x="
              f"{'true' if matches else 'false'}")
    elif args.subcommand == "sdinv":
        g = expressions.eval_text(args.series, args.prec)
        outcome = verify.check_sd_invariant(g)
        if outcome.invariant:
            print("invariant=true")
        else:
            print(f"invariant=false first_mismatch={outcome.first_mismatch}")
    else:  # report
        c = _complex_from_args(args)
        report = verify.chi_sd_report(c, args.kmax)
        for row in report.rows:
            print(
                f"k={row.k} fvec_complex={list(row.fvec_complex)} "
                f"fvec_matrix={list(row.fvec_matrix)} "
                f"chi_complex={row.chi_complex} chi_matrix={row.chi_matrix} "
                f"agree={'true' if row.agree else 'false'}"
            )
        print(f"all_agree={'true' if report.all_agree else 'false'}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "series":
            return _run_series(args)
        if args.command == "riordan":
            return _run_riordan(args)
        if args.command == "stirling":
            if args.size < 0:
                raise ValueError("--size must be nonnegative")
            _print_grid(stirling_triangle(args.kind, args.size))
            return 0
        if args.command == "bmatrix":
            _print_grid(matrix_B(args.size).to_strings())
            return 0
        if args.command == "complex":
            return _run_complex(args)
        if args.command == "verify":
            return _run_verify(args)
    except (ValueError, IndexError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser.error(f"unknown command {args.command!r}")
    return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
