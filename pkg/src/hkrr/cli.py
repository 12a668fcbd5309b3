"""Command-line surface: compute, verify and export every quantity the
library produces, with machine-readable JSON output.

Exit codes: 0 all checks pass, 1 mathematical verification failure,
2 usage or input error. Rationals serialize as decimal-free "p/q" strings
(plain "p" for integers) so JSON stays exact.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from math import factorial
from typing import Any, Sequence

from . import families, solver
from .algebra import Poly, binomial_poly
from .chern import chi_p_form, monomial_label
from .families import OG6, OG10, BBGram, HKFamily
from .solver import OG10_MONOMIALS, OG10_RING

FAMILY_NAMES = {"k3n": "K3n", "kumn": "Kumn", "og6": "OG6", "og10": "OG10"}

# Expected OG10 Chern numbers, in the OG10_MONOMIALS order.
OG10_EXPECTED = (
    Fraction(127370880),
    Fraction(53071200),
    Fraction(12383280),
    Fraction(1791720),
    Fraction(22113000),
    Fraction(5159700),
    Fraction(176904),
)


def fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, Poly):
        return str(value)
    return str(value)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def check(name: str, source: str, expected: Any, actual: Any) -> dict[str, Any]:
    return {
        "name": name,
        "source": source,
        "expected": fmt(expected),
        "actual": fmt(actual),
        "pass": fmt(expected) == fmt(actual),
    }


def poly_coefficients(p: Poly) -> list[str]:
    return [fmt(c) for c in p.coeffs]


def emit(report: dict[str, Any], fmt_kind: str) -> None:
    if fmt_kind == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if key == "checks":
            continue
        if isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k} = {v}")
        else:
            print(f"{key}: {value}")
    for c in report.get("checks", []):
        mark = "ok " if c["pass"] else "FAIL"
        print(f"[{mark}] {c['name']}: expected {c['expected']}, got {c['actual']}  ({c['source']})")


def checks_pass(report: dict[str, Any]) -> bool:
    return all(c["pass"] for c in report.get("checks", []))


def resolve_family(parser: argparse.ArgumentParser, name: str, n: int | None) -> HKFamily:
    kind = FAMILY_NAMES.get(name.lower())
    if kind is None:
        parser.error(f"unknown family {name!r} (choose from {', '.join(FAMILY_NAMES)})")
    if kind == "OG6":
        if n not in (None, 3):
            parser.error("OG6 has n = 3")
        return OG6
    if kind == "OG10":
        if n not in (None, 5):
            parser.error("OG10 has n = 5")
        return OG10
    if n is None:
        parser.error(f"--n is required for {name}")
    if n < 1:
        parser.error("--n must be a positive integer")
    return HKFamily(kind, n)


def cmd_rr(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family = resolve_family(parser, args.family, args.n)
    poly = families.rr_polynomial(family)
    constants = families.huybrechts_constants(family)
    report: dict[str, Any] = {
        "command": "rr",
        "inputs": {"family": family.kind, "n": str(family.n)},
        "results": {
            "polynomial": poly_coefficients(poly),
            "constants": {f"a_{i}": fmt(a) for i, a in enumerate(constants)},
            "fujiki_constant": fmt(families.fujiki_constant(family)),
        },
    }
    checks = [
        check(
            "constant_term",
            "holomorphic Euler characteristic equals n + 1",
            family.n + 1,
            poly(0),
        ),
        check(
            "leading_times_factorial",
            "a_n equals the Fujiki constant",
            families.fujiki_constant(family),
            constants[-1],
        ),
    ]
    if args.eval is not None:
        report["results"]["chi"] = fmt(families.chi_line_bundle(family, args.eval))
    report["checks"] = checks
    emit(report, args.format)
    return 0 if checks_pass(report) else 1


def cmd_chern(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.target.lower() != "og10":
        parser.error("chern numbers are computed for og10")
    rr_system = solver.assemble_rr_equations()
    combined = rr_system + solver.assemble_hodge_equations()
    numbers = solver.solve(combined)
    euler = solver.euler_characteristic_check(numbers)
    checks = [
        check("rr_equations_rank", "coefficient matching alone has rank 3", 3,
              rr_system.coefficient_rank()),
        check("combined_rank", "coefficient matching plus chi^p rows has full rank", 7,
              combined.coefficient_rank()),
        check("euler_characteristic", "alternating chi^p sum equals the c10 entry",
              numbers[(10,)], euler),
        check("chi0", "chi^0 equals n + 1 = 6", 6,
              chi_p_form(OG10_RING, 0).evaluate(numbers)),
    ]
    for source, residual in combined.residuals(numbers).items():
        checks.append(check(f"residual[{source}]", f"row from {source} is satisfied", 0, residual))
    report = {
        "family": "OG10",
        "chern_numbers": {
            monomial_label(m): fmt(numbers[m]) for m in OG10_MONOMIALS
        },
        "checks": checks,
    }
    emit(report, args.format)
    return 0 if checks_pass(report) else 1


def _verify_og10() -> list[dict[str, Any]]:
    shift = families.solve_og10_shift()
    return [
        check("og10_shift", "unique rational solution of binom(s + 5, 5) = 6", 1, shift),
        check("og10_shift_value", "binomial at the solved shift returns chi(O) = 6",
              6, binomial_poly(1, 5, 5)(shift)),
        check("og10_polynomial", "OG10 carries the K3^[5] polynomial binom(t/2 + 6, 5)",
              families.rr_polynomial(families.k3n(5)),
              families.rr_polynomial(OG10)),
    ]


def _verify_og6() -> list[dict[str, Any]]:
    a1, a2 = families.solve_og6_coefficients(families.OG6_DIVISORS)
    swapped = families.solve_og6_coefficients(tuple(reversed(families.OG6_DIVISORS)))
    return [
        check("og6_a1", "middle coefficient a_1 of the OG6 polynomial", Fraction(22, 3), a1),
        check("og6_a2", "middle coefficient a_2 of the OG6 polynomial", 24, a2),
        check("og6_row_order", "solution is invariant under swapping the divisors",
              (fmt(a1), fmt(a2)), (fmt(swapped[0]), fmt(swapped[1]))),
        check("og6_polynomial", "OG6 carries the Kum_3 polynomial 4*binom(t/2 + 3, 3)",
              families.rr_polynomial(families.kummer(3)),
              families.rr_polynomial(OG6)),
        check("og6_chi_sigma", "chi = -4 at q = -8 (exceptional divisor)",
              -4, families.chi_line_bundle(OG6, -8)),
        check("og6_chi_b", "chi = 0 at q = -2 (non-locally-free locus)",
              0, families.chi_line_bundle(OG6, -2)),
    ]


def _verify_fujiki() -> list[dict[str, Any]]:
    checks = [
        check("fujiki_og10", "Fujiki constant of OG10 equals 9!! = 945",
              945, families.fujiki_constant(OG10)),
        check("fujiki_og6", "Fujiki constant of OG6 equals 60",
              60, families.fujiki_constant(OG6)),
    ]
    gram = BBGram.from_lists(["Theta", "F"], [[0, 1], [1, 0]])
    value = families.fujiki_polarized(945, gram, ["Theta"] * 5 + ["F"] * 5)
    checks.append(check("theta_fiber_pairing",
                        "integral of Theta^5 F^5 equals 5! for q(F,F) = 0, q(Theta,F) = 1",
                        120, value))
    checks.append(check("matching_count", "the evaluator enumerates 9!! = 945 matchings",
                        945, sum(1 for _ in families.iter_matchings(10))))
    rng = random.Random(1837)
    all_ok = True
    for _ in range(20):
        n = rng.randint(1, 6)
        c = Fraction(rng.randint(1, 60), rng.randint(1, 9))
        q = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        gram1 = BBGram.from_lists(["a"], [[q]])
        all_ok &= families.fujiki_polarized(c, gram1, [0] * (2 * n)) == c * q**n
    checks.append(check("fujiki_self_intersection",
                        "polarized evaluator reduces to c*q^n on equal slots (20 seeded trials)",
                        True, all_ok))
    return checks


def _verify_identity() -> list[dict[str, Any]]:
    closed = solver.binomial_chi_expansion()
    rr_system = solver.assemble_rr_equations()
    combined = rr_system + solver.assemble_hodge_equations()
    numbers = solver.solve(combined)
    checks = [
        check("closed_side_degree", "binom(8y^2 - 2, 5) has degree 10", 10, closed.degree),
        check("closed_side_constant", "constant term binom(-2, 5) = -6", -6, closed.coefficient(0)),
        check("closed_side_at_1", "value 6 at y = 1, the trivial bundle", 6, closed(1)),
        check("rr_rank", "the six coefficient equations have rank 3", 3,
              rr_system.coefficient_rank()),
        check("combined_rank", "with the chi^p rows the rank is 7", 7,
              combined.coefficient_rank()),
        check("solution", "the seven solved Chern numbers",
              tuple(fmt(v) for v in OG10_EXPECTED),
              tuple(fmt(numbers[m]) for m in OG10_MONOMIALS)),
        check("all_rows_satisfied", "the solution satisfies every assembled row", True,
              not any(combined.residuals(numbers).values())),
        check("euler_characteristic", "alternating chi^p sum equals the c10 entry",
              numbers[(10,)], solver.euler_characteristic_check(numbers)),
        check("chi_symmetry", "chi^p and chi^(10-p) functionals coincide", True,
              all(chi_p_form(OG10_RING, p) == chi_p_form(OG10_RING, 10 - p)
                  for p in range(11))),
    ]
    return checks


VERIFY_SUITES = {
    "og10": _verify_og10,
    "og6": _verify_og6,
    "fujiki": _verify_fujiki,
    "identity": _verify_identity,
}


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    suite = args.suite.lower()
    if suite == "all":
        names = ["og10", "og6", "fujiki", "identity"]
    elif suite in VERIFY_SUITES:
        names = [suite]
    else:
        parser.error(f"unknown suite {args.suite!r}")
    checks: list[dict[str, Any]] = []
    for name in names:
        checks.extend(VERIFY_SUITES[name]())
    report = {
        "command": "verify",
        "inputs": {"suite": suite},
        "results": {"checks_run": str(len(checks))},
        "checks": checks,
    }
    emit(report, args.format)
    return 0 if checks_pass(report) else 1


def load_gram(parser: argparse.ArgumentParser, path: str) -> BBGram:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read Gram file: {exc}")
    try:
        labels = data["labels"]
        entries = data["entries"]
        rows = []
        for row in entries:
            converted = []
            for item in row:
                if isinstance(item, float):
                    raise ValueError("floating-point Gram entries are not exact")
                converted.append(Fraction(item))
            rows.append(converted)
        return BBGram.from_lists(labels, rows)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        parser.error(f"malformed Gram file: {exc}")
        raise AssertionError  # unreachable


def parse_slots(parser: argparse.ArgumentParser, spec: str) -> list[str]:
    slots: list[str] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            parser.error("empty slot token")
        label, _, power = token.partition("^")
        count = 1
        if power:
            try:
                count = int(power)
            except ValueError:
                parser.error(f"bad slot power in {token!r}")
            if count < 1:
                parser.error(f"slot power must be positive in {token!r}")
        slots.extend([label] * count)
    return slots


def cmd_fujiki(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    gram = load_gram(parser, args.gram)
    slots = parse_slots(parser, args.slots)
    if len(slots) % 2:
        parser.error("the slot multiset must have even size")
    try:
        value = families.fujiki_polarized(args.cx, gram, slots)
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError  # unreachable
    report = {
        "command": "fujiki",
        "inputs": {"cx": fmt(args.cx), "gram": args.gram, "slots": args.slots},
        "results": {"integral": fmt(value)},
        "checks": [],
    }
    emit(report, args.format)
    return 0


def cmd_chi(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    family = resolve_family(parser, args.family, args.n)
    value = families.chi_line_bundle(family, args.q)
    report = {
        "command": "chi",
        "inputs": {"family": family.kind, "n": str(family.n), "q": fmt(args.q)},
        "results": {"chi": fmt(value)},
        "checks": [],
    }
    emit(report, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkrr",
        description="Exact Riemann-Roch polynomials and Chern numbers of the "
        "known hyperkahler deformation families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rr = sub.add_parser("rr", help="Riemann-Roch polynomial of a family")
    p_rr.add_argument("family", help="k3n, kumn, og6 or og10")
    p_rr.add_argument("--n", type=int, help="half the complex dimension (k3n/kumn)")
    p_rr.add_argument("--eval", type=parse_fraction,
                      help="also evaluate chi at this Beauville-Bogomolov square")
    p_rr.add_argument("--format", choices=("table", "json"), default="table")

    p_chern = sub.add_parser("chern", help="solve for the Chern numbers of OG10")
    p_chern.add_argument("target", nargs="?", default="og10")
    p_chern.add_argument("--format", choices=("table", "json"), default="table")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", help="og6, og10, identity, fujiki or all")
    p_verify.add_argument("--format", choices=("table", "json"), default="table")

    p_fujiki = sub.add_parser("fujiki", help="evaluate a polarized Fujiki integral")
    p_fujiki.add_argument("--cx", type=parse_fraction, required=True,
                          help="Fujiki constant, as p or p/q")
    p_fujiki.add_argument("--gram", required=True,
                          help='JSON file {"labels": [...], "entries": [[...]]}')
    p_fujiki.add_argument("--slots", required=True,
                          help='class slots, e.g. "Theta^5,F^5"')
    p_fujiki.add_argument("--format", choices=("table", "json"), default="table")

    p_chi = sub.add_parser("chi", help="Euler characteristic of a line bundle")
    p_chi.add_argument("--family", required=True)
    p_chi.add_argument("--n", type=int)
    p_chi.add_argument("--q", type=parse_fraction, required=True)
    p_chi.add_argument("--format", choices=("table", "json"), default="table")

    return parser


COMMANDS = {
    "rr": cmd_rr,
    "chern": cmd_chern,
    "verify": cmd_verify,
    "fujiki": cmd_fujiki,
    "chi": cmd_chi,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
