"""Command-line front end.

Subcommands: ``euler``, ``characters``, ``gen-euler``, ``power-sum``,
``fermionic`` and ``verify``.  Output is JSON (default) or CSV, written to
stdout or ``--output``.  ``verify`` exits 0 iff every report passes, 1
otherwise; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .dirichlet import select_characters
from .euler_classical import euler_numbers, euler_polynomial
from .exact_arith import CycloRational, format_rational, is_prime
from .gen_euler import alternating_power_sum, gen_euler_numbers, gen_euler_poly
from .identities import IDENTITIES, check_fermionic_congruence, sweep
from .powerseries import default_truncation

log = logging.getLogger("eulerchi")


class UsageError(Exception):
    pass


def _flatten(value: Any) -> str:
    """CSV cell for a CycloRational / polynomial: ``order:c0 c1 ...``."""
    if isinstance(value, CycloRational):
        return f"{value.order}:" + " ".join(format_rational(c) for c in value.coeffs)
    if isinstance(value, dict) and "order" in value and "coeffs" in value:
        return f"{value['order']}:" + " ".join(value["coeffs"])
    if isinstance(value, list):
        return "[" + "; ".join(_flatten(v) for v in value) + "]"
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _emit(rows: Any, fmt: str, output: Optional[str]) -> None:
    if fmt == "json":
        text = json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    else:
        buf = io.StringIO()
        fields = list(rows[0].keys()) if rows else []
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flatten(v) for k, v in row.items()})
        text = buf.getvalue()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _validate_moduli(moduli: Sequence[int]) -> None:
    for d in moduli:
        if d < 1 or d % 2 == 0:
            raise UsageError(f"modulus must be an odd positive integer, got {d}")


def _validate_odd(name: str, values: Sequence[int]) -> None:
    for w in values:
        if w < 1 or w % 2 == 0:
            raise UsageError(f"{name} values must be odd positive integers, got {w}")


def _validate_primes(primes: Sequence[int], moduli: Sequence[int], strict: bool) -> None:
    for p in primes:
        if p % 2 == 0 or not is_prime(p):
            raise UsageError(f"p must be an odd prime, got {p}")
        if strict:
            for d in moduli:
                if d % p == 0:
                    raise UsageError(f"p={p} divides modulus {d}")


def _single_character(args):
    _validate_moduli([args.modulus])
    try:
        return select_characters(args.modulus, "index", args.char_index)[0]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------


def cmd_euler(args) -> int:
    N = args.max if args.max is not None else default_truncation()
    if N < 0:
        raise UsageError("--max must be nonnegative")
    E = euler_numbers(N)
    rows = [
        {"n": n, "E_n": format_rational(E[n]), "E_n(x)": [format_rational(c.to_rational()) for c in euler_polynomial(n).coeffs]}
        for n in range(N + 1)
    ]
    _emit(rows, args.format, args.output)
    return 0


def cmd_characters(args) -> int:
    _validate_moduli(args.modulus)
    rows = []
    for d in args.modulus:
        rows.extend(chi.to_json() for chi in select_characters(d, args.chars))
    _emit(rows, args.format, args.output)
    return 0


def cmd_gen_euler(args) -> int:
    chi = _single_character(args)
    N = args.max if args.max is not None else default_truncation()
    if N < 0:
        raise UsageError("--max must be nonnegative")
    table = gen_euler_numbers(chi, N)
    row = {
        "character": chi.to_json(),
        "numbers": [v.to_json() for v in table.numbers],
        "polynomials": [gen_euler_poly(chi, n).to_json() for n in range(N + 1)],
    }
    if args.format == "csv":
        rows = [
            {"n": n, "E_n_chi": table.numbers[n], "E_n_chi(x)": [c for c in gen_euler_poly(chi, n).coeffs]}
            for n in range(N + 1)
        ]
        _emit(rows, "csv", args.output)
    else:
        _emit(row, "json", args.output)
    return 0


def cmd_power_sum(args) -> int:
    chi = _single_character(args)
    if args.n < 0 or any(k < 0 for k in args.k):
        raise UsageError("k and n must be nonnegative")
    rows = [
        {"modulus": chi.modulus, "char_index": chi.index, "k": k, "n": args.n,
         "T": alternating_power_sum(chi, k, args.n).to_json()}
        for k in args.k
    ]
    _emit(rows, args.format, args.output)
    return 0


def cmd_fermionic(args) -> int:
    chi = _single_character(args)
    _validate_primes([args.p], [chi.modulus], strict=True)
    if args.N < 1 or args.k < 0:
        raise UsageError("need N >= 1 and k >= 0")
    try:
        x = Fraction(args.x)
    except ValueError as exc:
        raise UsageError(f"--x must be rational, got {args.x!r}") from exc
    report = check_fermionic_congruence(chi, args.k, args.p, args.N, x)
    _emit([report.to_json()], args.format, args.output)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    _validate_moduli(args.modulus)
    _validate_odd("--w1", args.w1)
    _validate_odd("--w2", args.w2)
    _validate_odd("--n-values", args.n_values)
    if args.identity == "fermionic":
        _validate_primes(args.p, args.modulus, strict=not args.skip_divisible)
    if args.chars == "index" and args.char_index is None:
        raise UsageError("--chars index needs --char-index")
    try:
        reports = sweep(
            args.identity,
            moduli=args.modulus,
            chars=args.chars,
            char_index=args.char_index,
            w1s=args.w1,
            w2s=args.w2,
            max_l=args.max_l,
            max_n=args.max_n,
            max_k=args.max_k,
            n_values=args.n_values,
            L=args.L if args.L is not None else args.max_l,
            primes=args.p,
            max_N=args.N,
            samples=args.samples,
            max_shift=args.max_shift,
            seed=args.seed,
            include_x=not args.x_zero,
            weighted=not args.printed,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    failed = sum(not r.passed for r in reports)
    log.info("%s: %d checks, %d failed", args.identity, len(reports), failed)
    rows = [r.to_json() for r in reports]
    if args.format == "csv":
        rows = [
            {"identity": r["identity"], "parameters": r["parameters"], "passed": r["passed"],
             "discrepancy": r.get("discrepancy", r.get("difference"))}
            for r in rows
        ]
    _emit(rows, args.format, args.output)
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerchi",
        description="Exact generalized Euler numbers attached to Dirichlet characters.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    def character(p: argparse.ArgumentParser) -> None:
        p.add_argument("--modulus", "-d", type=int, required=True)
        p.add_argument("--char-index", "-j", type=int, default=0)

    p = sub.add_parser("euler", help="classical Euler numbers and polynomials")
    p.add_argument("--max", type=int, help="largest n (default: truncation order)")
    common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("characters", help="Dirichlet characters of odd modulus")
    p.add_argument("--modulus", "-d", type=int, nargs="+", required=True)
    p.add_argument("--chars", choices=("all", "primitive"), default="all")
    common(p)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("gen-euler", help="generalized Euler numbers and polynomials")
    character(p)
    p.add_argument("--max", type=int, help="largest n (default: truncation order)")
    common(p)
    p.set_defaults(func=cmd_gen_euler)

    p = sub.add_parser("power-sum", help="alternating character power sums T_{k,chi}(n)")
    character(p)
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_power_sum)

    p = sub.add_parser("fermionic", help="truncated fermionic sum and its p-adic congruence")
    character(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--x", default="0", help="rational shift, e.g. 1/3")
    common(p)
    p.set_defaults(func=cmd_fermionic)

    p = sub.add_parser("verify", help="exact identity sweeps")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("--modulus", "-d", type=int, nargs="+", default=[1, 3, 5, 7, 9])
    p.add_argument("--chars", choices=("all", "primitive", "index"), default="all")
    p.add_argument("--char-index", type=int)
    p.add_argument("--w1", type=int, nargs="+", default=[1, 3, 5])
    p.add_argument("--w2", type=int, nargs="+", default=[1, 3, 5])
    p.add_argument("--max-l", type=int, default=12)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--n-values", type=int, nargs="+", default=[1, 3, 5])
    p.add_argument("--L", type=int, help="series order for tchi-all (default: --max-l)")
    p.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    p.add_argument("--N", type=int, default=4, help="largest precision exponent for fermionic")
    p.add_argument("--skip-divisible", action="store_true",
                   help="skip (p, d) pairs with p | d instead of rejecting them")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-shift", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x-zero", action="store_true", help="theorem1 at x = 0 only")
    p.add_argument("--printed", action="store_true",
                   help="theorem2 as printed, without the chi(l) weight")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"eulerchi {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
