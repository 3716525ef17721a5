"""Command-line interface.

Subcommands: kpoly, psi, fvalue, verify, assoc.  Run with ``--help``
for details.  Exit codes: 0 success, 1 internal invariant violation
(including a failed verification), 2 usage error, 3 oracle budget refused.

Class labels are written ``j:(multipartition)`` joined by ``;``, for
instance ``"1:((2)); 2:((1^2)); 3:((1))"``.  Inside a multipartition,
``(1^2)`` is the partition 1+1 while ``(1)^2`` is the partition (1)
taken twice.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import enumerate_psi, format_psi, parse_psi, psi_class_size, psi_nonempty_at
from .flags import enumerate_e_matrices, f_value_poly, parse_dimension_vector
from .gfq import field_of_order, prime_power
from .kcount import IntegralityError, check_association_invariance, k_eval, k_poly
from .oracle import (
    DEFAULT_ORACLE_BUDGET,
    BudgetExceeded,
    k_burnside,
    k_oracle,
)
from .poly import RationalPoly, divide_exact, format_poly

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

PSI_HELP = (
    "class label, e.g. \"1:((2)); 2:((1^2)); 3:((1))\"; "
    "(1^2) is the partition 1+1, (1)^2 is the partition (1) twice"
)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="parabolic-classes",
        description="Count P_{n,d}(q)-conjugacy classes in GL_n(q) as polynomials in q.",
        epilog=PSI_HELP,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_d=True):
        p.add_argument("--n", type=int, required=True, help="matrix size")
        if with_d:
            p.add_argument("--d", required=True, help="dimension vector, e.g. 1,2,3")
        p.add_argument("--out", help="write the result to this file instead of stdout")

    p = sub.add_parser("kpoly", help="k(P,G) as a polynomial in q")
    common(p)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--per-psi", action="store_true", help="include the per-label breakdown table")
    p.add_argument("--factor-q-minus-1", action="store_true", help="print as (q - 1) times the cofactor")

    p = sub.add_parser("psi", help="list class labels with their class-count polynomials")
    common(p, with_d=False)
    p.add_argument("--q", type=int, help="also evaluate at this prime power")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fvalue", help="number of flags of type d fixed by x(psi)")
    common(p)
    p.add_argument("--psi", required=True, help=PSI_HELP)

    p = sub.add_parser("verify", help="compare k(P,G) against brute-force counts")
    common(p)
    p.add_argument("--q", required=True, help="comma-separated prime powers")
    p.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET, help="oracle work limit")

    p = sub.add_parser("assoc", help="check that associated parabolics give equal counts")
    common(p)
    return ap


def _poly_text(p: RationalPoly, factor: bool) -> str:
    if not factor:
        return format_poly(p)
    cof = divide_exact(p, RationalPoly((-1, 1)))
    return f"(q - 1)({format_poly(cof)})"


def _cmd_kpoly(args, d) -> tuple[int, str]:
    report = k_poly(args.n, d)
    if args.json:
        obj = report.to_json()
        if not args.per_psi:
            obj.pop("per_psi")
        return EXIT_OK, json.dumps(obj, indent=2)
    lines = [
        _poly_text(report.k_poly, args.factor_q_minus_1),
        "coefficients (q^0 upward): " + ", ".join(map(str, report.k_coeffs)),
    ]
    if args.per_psi:
        lines.append("")
        lines.append(f"{'psi':<32} {'|psi~|':<28} f_P^G(x(psi))")
        for t in report.per_psi:
            lines.append(f"{format_psi(t.psi):<32} {format_poly(t.class_size):<28} {format_poly(t.f_value)}")
    return EXIT_OK, "\n".join(lines)


def _cmd_psi(args) -> tuple[int, str]:
    if args.q is not None and prime_power(args.q) is None:
        raise _UsageError(f"--q {args.q} is not a prime power")
    rows = []
    for psi in enumerate_psi(args.n):
        size = psi_class_size(psi)
        row = {"psi": format_psi(psi), "class_size": format_poly(size)}
        if args.q is not None:
            row["value"] = int(size(args.q))
            row["nonempty"] = psi_nonempty_at(psi, args.q)
        rows.append(row)
    if args.json:
        return EXIT_OK, json.dumps(rows, indent=2)
    lines = []
    for row in rows:
        line = f"{row['psi']:<32} {row['class_size']}"
        if args.q is not None:
            line += f"   [q={args.q}: {row['value']}{'' if row['nonempty'] else ', empty'}]"
        lines.append(line)
    return EXIT_OK, "\n".join(lines)


def _cmd_fvalue(args, d) -> tuple[int, str]:
    try:
        psi = parse_psi(args.psi)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if psi.n != args.n:
        raise _UsageError(f"label {args.psi!r} has n = {psi.n}, not {args.n}")
    poly = f_value_poly(psi, tuple(d))
    count = len(enumerate_e_matrices(psi, d))
    return EXIT_OK, f"{format_poly(poly)}\n({count} flag-dimension distributions)"


def _cmd_verify(args, d) -> tuple[int, str]:
    qs = []
    for item in args.q.split(","):
        item = item.strip()
        if not item.isdigit() or prime_power(int(item)) is None:
            raise _UsageError(f"{item!r} is not a prime power")
        qs.append(int(item))
    lines = [f"{'q':>4} {'k_eval':>10} {'k_oracle':>10} {'k_burnside':>11}  status"]
    ok = True
    for q0 in qs:
        F = field_of_order(q0)
        expected = k_eval(args.n, d, q0)
        oracle = k_oracle(F, args.n, d, budget=args.budget)
        try:
            burnside = k_burnside(F, args.n, d)
        except BudgetExceeded:
            burnside = None
        good = oracle == expected and burnside in (None, expected)
        ok &= good
        lines.append(
            f"{q0:>4} {expected:>10} {oracle:>10} {'-' if burnside is None else burnside:>11}  "
            + ("OK" if good else "MISMATCH")
        )
    return (EXIT_OK if ok else EXIT_INTERNAL), "\n".join(lines)


def _cmd_assoc(args, d) -> tuple[int, str]:
    check = check_association_invariance(args.n, d)
    lines = [f"{','.join(map(str, dv)):<16} {format_poly(p)}" for dv, p in check.witness]
    lines.append("association invariance: " + ("holds" if check.holds else "FAILS"))
    return (EXIT_OK if check.holds else EXIT_INTERNAL), "\n".join(lines)


class _UsageError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.n < 1:
        ap.error("--n must be positive")
    try:
        if args.command == "psi":
            code, text = _cmd_psi(args)
        else:
            try:
                d = parse_dimension_vector(args.d, args.n)
            except ValueError as exc:
                ap.error(f"--d: {exc}")
            handler = {
                "kpoly": _cmd_kpoly,
                "fvalue": _cmd_fvalue,
                "verify": _cmd_verify,
                "assoc": _cmd_assoc,
            }[args.command]
            code, text = handler(args, d)
    except _UsageError as exc:
        ap.error(str(exc))
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (IntegralityError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
