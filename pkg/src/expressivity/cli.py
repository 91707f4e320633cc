"""Command-line front end: compute, compare, verify-paper, trend, list.

Output is deterministic (no timestamps, fixed locale: decimal point,
thousands separators only under --pretty). Exit codes: 0 success,
1 unexpected verification mismatch, 2 unknown platform or file,
3 parse/validation failure, 4 exact count over the digit budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .dataset import (
    DatasetEntry,
    SpecFileError,
    builtin_platforms,
    builtin_years,
    find_platform,
    load_spec_file,
    paper_regressions,
    _slug,
)
from .engine import (
    DEFAULT_MAX_DECIMAL_DIGITS,
    ExactModeConfig,
    ExactTooLarge,
    capacity,
    eval_factorization,
    transistor_equivalent,
)
from .model import CapacityResult, PaperRegressionEntry, PlatformSpec, ProcessorSpec
from .trend import build_trend, compare, emit_csv

MAX_DIGITS_ENV = "EXPRESSIVITY_MAX_DIGITS"

STATUS_MATCH = "match"
STATUS_ROUNDING = "rounding_match"
STATUS_MISMATCH = "mismatch"

_EXIT_VERIFY = 1
_EXIT_UNKNOWN = 2
_EXIT_INVALID = 3
_EXIT_TOO_LARGE = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def classify_status(entry: PaperRegressionEntry, computed: CapacityResult) -> str:
    """Score a recomputed result against its printed values.

    match: bits within 0.5, exponent exact, mantissa within 0.05.
    rounding_match: bits within 1.5.
    mismatch: everything else.
    """
    if (abs(computed.bits - entry.printed_bits) <= 0.5
            and computed.decimal_exponent == entry.printed_exponent
            and abs(computed.mantissa - entry.printed_mantissa) <= 0.05):
        return STATUS_MATCH
    if abs(computed.bits - entry.printed_bits) <= 1.5:
        return STATUS_ROUNDING
    return STATUS_MISMATCH


@dataclass(frozen=True)
class VerifyRecord:
    """One verified regression entry, computed vs printed."""

    id: str
    computed_bits: float
    printed_bits: int
    bits_delta: float
    computed_mantissa: float
    computed_exponent: int
    printed_mantissa: float
    printed_exponent: int
    status: str
    expected_status: str

    @property
    def as_expected(self) -> bool:
        return self.status == self.expected_status


def build_verify_report() -> list[VerifyRecord]:
    """Recompute every transcribed printed computation and classify it."""
    records = []
    for entry in paper_regressions():
        computed = eval_factorization(entry.factorization)
        records.append(VerifyRecord(
            id=entry.id,
            computed_bits=computed.bits,
            printed_bits=entry.printed_bits,
            bits_delta=computed.bits - entry.printed_bits,
            computed_mantissa=computed.mantissa,
            computed_exponent=computed.decimal_exponent,
            printed_mantissa=entry.printed_mantissa,
            printed_exponent=entry.printed_exponent,
            status=classify_status(entry, computed),
            expected_status=entry.expected_status,
        ))
    return records


def _int_str(n: int, pretty: bool) -> str:
    return f"{n:,}" if pretty else str(n)


def _digit_count(n: int) -> int:
    # Exact, without str() (CPython caps int->str conversions).
    if n < 10**15:
        return len(str(n))
    d = (n.bit_length() - 1) * 30103 // 100000
    while 10 ** (d + 1) <= n:
        d += 1
    return d + 1


def _exact_count_str(n: int, pretty: bool) -> str:
    digits = _digit_count(n)
    if digits <= 120:
        return _int_str(n, pretty)
    leading = n // 10 ** (digits - 13)
    s = str(leading)
    return f"{s[0]}.{s[1:]}e{digits - 1} ({digits} digits)"


def _resolve_entry(source: str) -> DatasetEntry:
    entry = find_platform(source)
    if entry is not None:
        return entry
    path = Path(source)
    if path.exists():
        try:
            return load_spec_file(path)
        except SpecFileError as exc:
            raise CliError(_EXIT_INVALID, str(exc)) from exc
    raise CliError(_EXIT_UNKNOWN, f"unknown platform or missing file: {source}")


def _exact_config(args: argparse.Namespace) -> ExactModeConfig | None:
    if not args.exact:
        return None
    if args.max_digits is not None:
        return ExactModeConfig(args.max_digits)
    env = os.environ.get(MAX_DIGITS_ENV)
    if env is not None:
        try:
            return ExactModeConfig(int(env))
        except ValueError:
            raise CliError(_EXIT_INVALID, f"{MAX_DIGITS_ENV} must be an integer, got {env!r}")
    return ExactModeConfig(DEFAULT_MAX_DECIMAL_DIGITS)


def _print_result(name: str, result: CapacityResult, pretty: bool,
                  processor: ProcessorSpec | None = None) -> None:
    bits_round = transistor_equivalent(result.bits)
    print(f"{name}: {_int_str(bits_round, pretty)} bits ({result.bits:.1f}), "
          f"{result.mantissa:.1f}e{result.decimal_exponent} configurations")
    print(f"  bits (full precision): {result.bits!r}")
    print(f"  magnitude:             {result.mantissa:.6f} x 10^{result.decimal_exponent}")
    print(f"  transistor equivalent: {_int_str(bits_round, pretty)}")
    if processor is not None:
        print(f"  processor on board:    {processor.name}, "
              f"{_int_str(processor.transistor_count, pretty)} transistors")
    if result.exact_count is not None:
        print(f"  exact count:           {_exact_count_str(result.exact_count, pretty)}")
    if result.breakdown:
        print("  breakdown:")
        print(f"    {'label':<26} {'count':>6} {'states':>7} {'bits':>14}")
        for row in result.breakdown:
            print(f"    {row.label:<26} {row.count:>6} {row.states:>7} {row.bits:>14.6f}")
        total_dofs = sum(r.count for r in result.breakdown)
        print(f"    {'total':<26} {total_dofs:>6} {'':>7} {result.bits:>14.6f}")


def _cmd_compute(args: argparse.Namespace) -> int:
    entry = _resolve_entry(args.source)
    platform = entry.platform
    exact = _exact_config(args)
    try:
        result = capacity(platform, apply_dynamics=args.dynamics, exact=exact)
    except ExactTooLarge as exc:
        result = capacity(platform, apply_dynamics=args.dynamics)
        _print_result(platform.name, result, args.pretty, platform.processor)
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_TOO_LARGE
    _print_result(platform.name, result, args.pretty, platform.processor)
    return 0


def _resolve_comparable(source: str, dynamics: bool):
    if source.startswith("transistors="):
        raw = source.split("=", 1)[1]
        try:
            n = int(raw)
        except ValueError:
            raise CliError(_EXIT_UNKNOWN, f"bad transistor count: {raw!r}")
        if n < 1:
            raise CliError(_EXIT_UNKNOWN, f"transistor count must be >= 1, got {n}")
        return ProcessorSpec(f"{n}-transistor machine", n), f"{n}-transistor machine"
    entry = _resolve_entry(source)
    return capacity(entry.platform, apply_dynamics=dynamics), entry.platform.name


def _cmd_compare(args: argparse.Namespace) -> int:
    a, label_a = _resolve_comparable(args.a, args.dynamics)
    b, label_b = _resolve_comparable(args.b, args.dynamics)
    print(compare(a, b, label_a, label_b).render())
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    records = build_verify_report()
    header = (f"{'id':<26} {'printed':>8} {'computed':>12} {'delta':>10} "
              f"{'printed mag':>14} {'computed mag':>14} status")
    print(header)
    print("-" * len(header))
    unexpected = 0
    for r in records:
        status = r.status
        if r.as_expected:
            if status != STATUS_MATCH:
                status += " (expected)"
        else:
            status += f" (UNEXPECTED, wanted {r.expected_status})"
            unexpected += 1
        print(f"{r.id:<26} {r.printed_bits:>8} {r.computed_bits:>12.1f} "
              f"{r.bits_delta:>+10.1f} "
              f"{f'{r.printed_mantissa:.1f}e{r.printed_exponent}':>14} "
              f"{f'{r.computed_mantissa:.3f}e{r.computed_exponent}':>14} {status}")
    expected_odd = sum(1 for r in records if r.as_expected and r.status != STATUS_MATCH)
    print(f"\n{len(records)} entries: "
          f"{sum(1 for r in records if r.status == STATUS_MATCH)} match, "
          f"{expected_odd} known discrepancies, {unexpected} unexpected")
    if unexpected:
        print("verify-paper: FAIL")
        return _EXIT_VERIFY
    print("verify-paper: OK")
    return 0


def _cmd_trend(args: argparse.Namespace) -> int:
    rows = build_trend(builtin_platforms(), builtin_years())
    text = emit_csv(rows, f"fig{args.fig}")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def _cmd_list(args: argparse.Namespace) -> int:
    print(f"{'name':<24} {'key':<24} {'provenance':<28} {'groups':>6} {'DOFs':>5} {'transistors':>12}")
    for entry in builtin_platforms():
        p = entry.platform
        dofs = sum(g.count for g in p.groups)
        transistors = str(p.processor.transistor_count) if p.processor else "-"
        print(f"{p.name:<24} {_slug(p.name):<24} {entry.provenance.value:<28} "
              f"{len(p.groups):>6} {dofs:>5} {transistors:>12}")
    print(f"\n{len(builtin_platforms())} built-in platforms")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expressivity",
        description="Configuration-count expressivity of articulated platforms, in bits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="capacity of a built-in platform or spec file")
    p.add_argument("source", help="built-in name (see `list`) or path to a spec file")
    p.add_argument("--dynamics", action="store_true",
                   help="fold velocity states into groups that declare them")
    p.add_argument("--exact", action="store_true",
                   help="also materialize the exact configuration count")
    p.add_argument("--max-digits", type=int, default=None,
                   help=f"digit budget for --exact (default {DEFAULT_MAX_DECIMAL_DIGITS}; "
                        f"env {MAX_DIGITS_ENV} overrides)")
    p.add_argument("--pretty", action="store_true", help="thousands separators in output")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("compare", help="compare two platforms (or transistors=N)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--dynamics", action="store_true")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify-paper",
                       help="recompute every transcribed printed computation and "
                            "compare with its published result")
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("trend", help="emit figure data as CSV")
    p.add_argument("--fig", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=_cmd_trend)

    p = sub.add_parser("list", help="list built-in platforms")
    p.set_defaults(func=_cmd_list)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
