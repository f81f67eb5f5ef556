"""Command line interface.

Subcommands::

    copoly families                      list the built-in weight families
    copoly compute   ...                 emit complementary rows and eigenvalues
    copoly verify    ...                 run exact identity suites over a grid
    copoly genfun    ...                 emit the generating series both ways

Families come either from the catalog (``--family hermite|laguerre|jacobi|
bessel``, with ``legendre`` accepted as jacobi at alpha = beta = 0), from a
JSON family file (``--family-file``), or from expressions (``--phi``/
``--psi`` with optional ``--u0``).  Exit codes: 0 success, 1 a verification
counterexample was found, 2 invalid input.

The environment variable ``COPOLY_MAX_ORDER`` (default 16) caps the series
order accepted by ``verify`` and ``genfun``; requests above the cap are
rejected rather than silently clamped.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction

from .errors import (
    AdmissibilityViolation,
    CopolyError,
    ExprSyntaxError,
    InvalidParameter,
    UnknownEquation,
    UnknownIdentifier,
    UnsupportedFamily,
)
from .genfun import genfun_closed_form, genfun_truncated
from .parsing import parse_poly_expr
from .poly import Poly, as_rational
from .render import poly_latex, poly_text, poly_to_strings, rational_latex, series_to_strings
from .rodrigues import (
    CATALOG,
    ClassicalPair,
    FamilySpec,
    bessel_family,
    complementary_table,
    custom_family,
    hermite_family,
    jacobi_family,
    lambda_n,
    laguerre_family,
    mu_eigenvalue,
    pair_from_family,
)
from .verify import SUITE_NAMES, VerifyReport, verify_pair

DEFAULT_MAX_ORDER_CAP = 16

_FAMILY_HELP = (
    "catalog family name (hermite, laguerre, jacobi, bessel; legendre is "
    "jacobi with alpha = beta = 0)"
)


def _max_order_cap() -> int:
    raw = os.environ.get("COPOLY_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"COPOLY_MAX_ORDER must be an integer, got {raw!r}")
    if cap < 2:
        raise ValueError(f"COPOLY_MAX_ORDER must be >= 2, got {cap}")
    return cap


def _check_order(order: int) -> int:
    cap = _max_order_cap()
    if order < 0:
        raise ValueError("series order must be >= 0")
    if order > cap:
        raise ValueError(
            f"series order {order} exceeds the COPOLY_MAX_ORDER cap of {cap}")
    return order


def load_family_file(path: str) -> FamilySpec:
    """Read a family description from JSON.

    Expected fields: ``name`` (text), ``phi`` and ``psi`` (ascending
    coefficient lists of rational strings), optional ``params`` (map of
    rational strings) and ``u0`` (rational string, default 1).
    """
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    for key in ("name", "phi", "psi"):
        if key not in data:
            raise InvalidParameter(f"family file is missing the {key!r} field")
    phi = Poly([as_rational(c) for c in data["phi"]])
    psi = Poly([as_rational(c) for c in data["psi"]])
    params = {k: as_rational(v) for k, v in data.get("params", {}).items()}
    u0 = as_rational(data.get("u0", 1))
    name = str(data["name"])
    if phi.degree > 2:
        raise InvalidParameter(f"phi must have degree <= 2, got degree {phi.degree}")
    if psi.degree != 1:
        raise InvalidParameter(f"psi must have degree exactly 1, got degree {psi.degree}")
    if name in CATALOG:
        reference = _catalog_spec(name, params.get("alpha"), params.get("beta"))
        if reference.phi != phi or reference.psi != psi:
            raise InvalidParameter(
                f"family file claims {name!r} but phi/psi do not match that catalog shape")
    return FamilySpec(name, phi, psi, params, u0)


def _catalog_spec(name: str, alpha: Fraction | None, beta: Fraction | None) -> FamilySpec:
    alpha = Fraction(0) if alpha is None else alpha
    beta = Fraction(0) if beta is None else beta
    if name == "hermite":
        return hermite_family()
    if name == "laguerre":
        return laguerre_family(alpha)
    if name == "jacobi":
        return jacobi_family(alpha, beta)
    if name == "bessel":
        return bessel_family(alpha)
    raise InvalidParameter(
        f"unknown family {name!r}; catalog families are {', '.join(CATALOG)} (or legendre)")


def resolve_family(args: argparse.Namespace) -> FamilySpec:
    """Build the family from exactly one of the accepted sources."""
    sources = [args.family_file is not None, args.family is not None,
               args.phi is not None or args.psi is not None]
    if sum(sources) > 1:
        raise ValueError("give exactly one of --family-file, --family, or --phi/--psi")
    if args.family_file is not None:
        return load_family_file(args.family_file)
    if args.family is not None:
        name = args.family.lower()
        if args.u0 is not None:
            raise ValueError("--u0 applies only to --phi/--psi pairs (catalog uses u0 = 1)")
        if name == "legendre":
            if args.alpha is not None or args.beta is not None:
                raise ValueError("legendre fixes alpha = beta = 0; omit --alpha/--beta")
            return jacobi_family(0, 0)
        allowed = {"hermite": (), "laguerre": ("alpha",),
                   "jacobi": ("alpha", "beta"), "bessel": ("alpha",)}.get(name, ())
        for flag in ("alpha", "beta"):
            if getattr(args, flag) is not None and flag not in allowed:
                raise ValueError(f"family {name!r} does not take --{flag}")
        return _catalog_spec(name, args.alpha, args.beta)
    if args.phi is None or args.psi is None:
        raise ValueError("no family given: use --family, --family-file, or both --phi and --psi")
    params = {}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.beta is not None:
        params["beta"] = args.beta
    phi = parse_poly_expr(args.phi, params)
    psi = parse_poly_expr(args.psi, params)
    u0 = args.u0 if args.u0 is not None else Fraction(1)
    return custom_family(phi, psi, u0, params)


def _params_doc(pair: ClassicalPair) -> dict[str, str]:
    return {name: str(value) for name, value in sorted(pair.params.items())}


def build_compute_document(pair: ClassicalPair, n: int, nu: int | None = None) -> dict:
    """The JSON document emitted by ``compute``; also used by tests directly."""
    table = complementary_table(pair, n)
    if nu is None:
        rows = table.rows
        mus = [mu_eigenvalue(pair, n, v) for v in range(n + 1)]
    else:
        rows = (table.rows[nu],)
        mus = [mu_eigenvalue(pair, n, nu)]
    return {
        "family": pair.name,
        "params": _params_doc(pair),
        "n": n,
        "rows": [poly_to_strings(row) for row in rows],
        "lambda": str(lambda_n(pair, n)),
        "mu": [[str(m) for m in mus]],
    }


def _print_compute_text(pair: ClassicalPair, n: int, nu: int | None) -> None:
    table = complementary_table(pair, n)
    params = _params_doc(pair)
    shown = " ".join(f"{k}={v}" for k, v in params.items()) or "(none)"
    print(f"family: {pair.name}  params: {shown}")
    print(f"n = {n}, lambda = {lambda_n(pair, n)}")
    indices = range(n + 1) if nu is None else (nu,)
    for v in indices:
        print(f"nu={v}  [mu={mu_eigenvalue(pair, n, v)}]  {poly_text(table.rows[v])}")


def _print_compute_latex(pair: ClassicalPair, n: int, nu: int | None) -> None:
    table = complementary_table(pair, n)
    print(f"% family {pair.name}, n = {n}, lambda = {rational_latex(lambda_n(pair, n))}")
    print("\\begin{array}{lll}")
    indices = range(n + 1) if nu is None else (nu,)
    for v in indices:
        mu = rational_latex(mu_eigenvalue(pair, n, v))
        print(f"\\nu={v} & \\mu={mu} & {poly_latex(table.rows[v])} \\\\")
    print("\\end{array}")


def cmd_compute(args: argparse.Namespace) -> int:
    spec = resolve_family(args)
    n = args.n
    if n < 0:
        raise ValueError("--n must be >= 0")
    nu = args.nu
    if nu is not None and not 0 <= nu <= n:
        raise ValueError(f"--nu must satisfy 0 <= nu <= n, got nu={nu}, n={n}")
    pair = pair_from_family(spec, max_order=n + 2)
    if args.format == "json":
        print(json.dumps(build_compute_document(pair, n, nu), indent=2))
    elif args.format == "latex":
        _print_compute_latex(pair, n, nu)
    else:
        _print_compute_text(pair, n, nu)
    return 0


def _report_to_dict(report: VerifyReport) -> dict:
    doc = dataclasses.asdict(report)
    doc["params"] = {k: str(v) for k, v in report.params.items()}
    doc["passed"] = report.passed
    doc["first_counterexample"] = report.first_counterexample
    return doc


def cmd_verify(args: argparse.Namespace) -> int:
    spec = resolve_family(args)
    if args.max_n < 0:
        raise ValueError("--max-n must be >= 0")
    order = _check_order(args.order)
    if order < 2:
        raise ValueError("--order must be >= 2")
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    pair = pair_from_family(spec, max_order=2 * args.max_n + 6)
    report = verify_pair(pair, suites, args.max_n, order)
    if args.format == "json":
        print(json.dumps(_report_to_dict(report), indent=2))
    else:
        params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items())) or "(none)"
        print(f"family: {report.family}  params: {params}")
        print(f"grid: max_n={report.max_n}, series order={report.series_order}")
        for suite in report.suites:
            status = "PASS" if suite.passed else "FAIL"
            print(f"  {suite.suite:<10} {status}  checks={suite.checks}  {suite.seconds:.2f}s")
            for line in suite.failures[:5]:
                print(f"      counterexample: {line}")
        for note in report.notes:
            print(f"note: {note}")
        print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def cmd_genfun(args: argparse.Namespace) -> int:
    spec = resolve_family(args)
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    order = _check_order(args.order)
    pair = pair_from_family(spec, max_order=max(args.n, 2))
    truncated = genfun_truncated(pair, args.n, order)
    closed = genfun_closed_form(pair, args.n, order)  # UnsupportedFamily for custom
    difference = truncated - closed
    if args.format == "latex":
        print(f"% family {pair.name}, n = {args.n}, order = {order}")
        print("\\begin{array}{lll}")
        for nu in range(order + 1):
            print(f"y^{{{nu}}} & {poly_latex(truncated.coeff(nu))} & "
                  f"{poly_latex(difference.coeff(nu))} \\\\")
        print("\\end{array}")
    else:
        doc = {
            "family": pair.name,
            "params": _params_doc(pair),
            "n": args.n,
            "order": order,
            "truncated": series_to_strings(truncated),
            "closed_form": series_to_strings(closed),
            "difference": series_to_strings(difference),
        }
        print(json.dumps(doc, indent=2))
    return 0


_FAMILY_ROWS = (
    ("hermite", "1", "-2*x", "none"),
    ("laguerre", "x", "(alpha + 1) - x", "alpha"),
    ("jacobi", "1 - x^2", "(beta - alpha) - (alpha + beta + 2)*x", "alpha, beta"),
    ("bessel", "x^2", "(alpha + 2)*x + 2", "alpha"),
)


def cmd_families(args: argparse.Namespace) -> int:
    if args.format == "json":
        doc = [{"name": name, "phi": phi, "psi": psi, "params": params}
               for name, phi, psi, params in _FAMILY_ROWS]
        print(json.dumps(doc, indent=2))
    else:
        print(f"{'name':<10} {'phi':<10} {'psi':<42} params")
        for name, phi, psi, params in _FAMILY_ROWS:
            print(f"{name:<10} {phi:<10} {psi:<42} {params}")
        print("alias: legendre = jacobi with alpha = beta = 0")
    return 0


def _add_family_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", help=_FAMILY_HELP)
    sub.add_argument("--family-file", help="path to a JSON family description")
    sub.add_argument("--phi", help="polynomial expression for phi (custom pair)")
    sub.add_argument("--psi", help="polynomial expression for psi (custom pair)")
    sub.add_argument("--u0", type=Fraction, default=None,
                     help="seed moment for a custom pair (default 1)")
    sub.add_argument("--alpha", type=Fraction, default=None, help="family parameter alpha")
    sub.add_argument("--beta", type=Fraction, default=None, help="family parameter beta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copoly",
        description="Exact construction and verification of complementary polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    families = sub.add_parser("families", help="list the built-in weight families")
    families.add_argument("--format", choices=("text", "json"), default="text")
    families.set_defaults(func=cmd_families)

    compute = sub.add_parser(
        "compute",
        help="emit complementary rows and eigenvalues",
        epilog="Text output lists terms by ascending degree; LaTeX by descending degree.",
    )
    _add_family_arguments(compute)
    compute.add_argument("--n", type=int, required=True, help="table size (top degree)")
    compute.add_argument("--nu", type=int, default=None, help="emit only row nu")
    compute.add_argument("--format", choices=("text", "json", "latex"), default="text")
    compute.set_defaults(func=cmd_compute)

    verify = sub.add_parser("verify", help="run exact identity suites over a grid")
    _add_family_arguments(verify)
    verify.add_argument("--max-n", type=int, default=8, help="largest n in the grid")
    verify.add_argument("--order", type=int, default=12, help="series truncation order")
    verify.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    genfun = sub.add_parser("genfun", help="emit the generating series both ways")
    _add_family_arguments(genfun)
    genfun.add_argument("--n", type=int, required=True)
    genfun.add_argument("--order", type=int, default=8, help="series truncation order")
    genfun.add_argument("--format", choices=("json", "latex"), default="json")
    genfun.set_defaults(func=cmd_genfun)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameter, AdmissibilityViolation, UnsupportedFamily, ExprSyntaxError,
            UnknownIdentifier, UnknownEquation, CopolyError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
