"""Command line front end: verification suites, family coefficients, caches.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 domain error (forbidden parameter values).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import modular as md
from . import shioda_inose as si
from . import weierstrass as w
from .errors import DomainError
from .suites import SUITE_NAMES, run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def parse_complex(text: str):
    """Accepts forms like '2', '1/2', 'i', '2i', '1+2i', '-0.5+1.25i'."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    if cleaned in ("j", "+j"):
        cleaned = "1j"
    elif cleaned == "-j":
        cleaned = "-1j"
    else:
        cleaned = cleaned.replace("+j", "+1j").replace("-j", "-1j")
    try:
        if "/" in cleaned and "j" not in cleaned:
            return mpmath.mpf(Fraction(cleaned).numerator) / Fraction(cleaned).denominator
        return mpmath.mpmathify(cleaned)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _fmt(value) -> str:
    """Deterministic decimal rendering of an mpmath number."""
    value = mpmath.chop(value, tol=mpmath.mpf(10) ** -40)
    return mpmath.nstr(value, 17)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3lab",
        description="verification workbench for the mirror family of "
                    "elliptically fibered K3 surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all",
                          choices=("all",) + SUITE_NAMES)
    p_verify.add_argument("--cache-dir", default=None)

    p_report = sub.add_parser("report", help="run a suite and emit a report")
    p_report.add_argument("--suite", default="all",
                          choices=("all",) + SUITE_NAMES)
    p_report.add_argument("--format", default="json", choices=("json", "text"))
    p_report.add_argument("--cache-dir", default=None)

    p_family = sub.add_parser("family", help="family coefficients for one member")
    p_family.add_argument("--j1", type=parse_rational)
    p_family.add_argument("--j2", type=parse_rational)
    p_family.add_argument("--lambda1", type=parse_rational)
    p_family.add_argument("--lambda2", type=parse_rational)
    p_family.add_argument("--tau", type=parse_complex)
    p_family.add_argument("--n", type=int)

    p_modpoly = sub.add_parser("modpoly", help="build or load a modular polynomial")
    p_modpoly.add_argument("--n", type=int, required=True, choices=(1, 2, 3))
    p_modpoly.add_argument("--cache-dir", default=None)

    return parser


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.cache_dir)
    for chk in report.checks:
        print(f"{chk.status.upper():4s} {chk.id}: {chk.description} [{chk.witness}]")
    print(f"suite {report.suite}: {report.status} "
          f"({len(report.checks)} checks, {report.elapsed_ms} ms)")
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def cmd_report(args) -> int:
    report = run_suite(args.suite, args.cache_dir)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        width = max(len(c.id) for c in report.checks)
        print(f"{'check':{width}s}  status  description")
        for chk in report.checks:
            print(f"{chk.id:{width}s}  {chk.status:6s}  {chk.description}")
        print(f"{'overall':{width}s}  {report.status:6s}  elapsed {report.elapsed_ms} ms")
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def _family_from_powers(powers, degenerate) -> None:
    print(f"a_cubed = {powers.a_cubed}")
    print(f"b_squared = {powers.b_squared}")
    print(f"degenerate = {'true' if degenerate else 'false'}")


def cmd_family(args) -> int:
    groups = {
        "j": (args.j1, args.j2),
        "lambda": (args.lambda1, args.lambda2),
        "tau": (args.tau, args.n),
    }
    complete = [name for name, vals in groups.items()
                if all(v is not None for v in vals)]
    partial = [name for name, vals in groups.items()
               if any(v is not None for v in vals)]
    if len(complete) != 1 or len(partial) != 1:
        print("family needs exactly one of: --j1/--j2, --lambda1/--lambda2, "
              "--tau/--n", file=sys.stderr)
        return EXIT_USAGE

    mode = complete[0]
    if mode == "j":
        j1, j2 = args.j1, args.j2
        powers = si.ab_powers_from_j(j1, j2)
        a, b = si.ab_numeric(j1, j2)
        _family_from_powers(powers, w.is_degenerate_powers(powers.a_cubed,
                                                           powers.b_squared))
    elif mode == "lambda":
        l1, l2 = args.lambda1, args.lambda2
        j1, j2 = si.j_from_lambda(l1), si.j_from_lambda(l2)
        powers = si.ab_powers_from_lambda(l1, l2)
        print(f"j1 = {j1}")
        print(f"j2 = {j2}")
        _family_from_powers(powers, w.is_degenerate_powers(powers.a_cubed,
                                                           powers.b_squared))
        a, b = si.ab_numeric(j1, j2)
    else:
        if args.n < 1:
            print("--n must be a positive integer", file=sys.stderr)
            return EXIT_USAGE
        j1, j2 = md.fricke_pair(args.tau, args.n)
        print(f"j1 = {_fmt(j1)}")
        print(f"j2 = {_fmt(j2)}")
        a, b = si.ab_numeric(j1, j2)
        degenerate = w.is_degenerate_numeric(a, b)
        print(f"degenerate = {'true' if degenerate else 'false'}")
    print(f"a = {_fmt(a)}")
    print(f"b = {_fmt(b)}")
    return EXIT_PASS


def cmd_modpoly(args) -> int:
    phi = md.modular_polynomial(args.n, args.cache_dir)
    print(f"n={phi.n}")
    for (i, j), coeff in sorted(phi.coefficients.items()):
        print(f"{i} {j} {coeff}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    handlers = {
        "verify": cmd_verify,
        "report": cmd_report,
        "family": cmd_family,
        "modpoly": cmd_modpoly,
    }
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
