"""Computation-vs-mechanization trend tables and comparison statements.

Reproduces the data behind the published scatter plots as deterministic
CSV text: transistor counts over time, mechanization capacity over time,
and the head-to-head comparison of the two on the same platforms. Plotting
itself is left to external tools.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .dataset import DatasetEntry
from .engine import capacity, processor_bits, transistor_equivalent
from .model import CapacityResult, ProcessorSpec

FIGURES = ("fig1", "fig2", "fig3")


@dataclass(frozen=True)
class TrendRow:
    """One platform's mechanical and (optional) computational capacity."""

    name: str
    year: int | None
    mech_bits: float
    mech_decimal_exponent: int
    comp_bits: float | None = None
    comp_to_mech_ratio_log10: float | None = None


def build_trend(
    entries: Iterable[DatasetEntry],
    years: Mapping[str, int] | None = None,
) -> list[TrendRow]:
    """One row per platform; comp fields stay absent without a processor.

    `years` is a sidecar name->year table consulted when the platform
    itself carries no year; platforms missing from both still get a row
    (the comparison output needs no time axis).
    """
    years = years or {}
    rows: list[TrendRow] = []
    for entry in entries:
        p = entry.platform
        result = capacity(p)
        year = p.year if p.year is not None else years.get(p.name)
        comp = comp_ratio = None
        if p.processor is not None:
            comp = processor_bits(p.processor)
            comp_ratio = math.log10(comp) - math.log10(result.bits)
        rows.append(TrendRow(
            name=p.name,
            year=year,
            mech_bits=result.bits,
            mech_decimal_exponent=result.decimal_exponent,
            comp_bits=comp,
            comp_to_mech_ratio_log10=comp_ratio,
        ))
    return rows


def _sort_key(row: TrendRow) -> tuple:
    # Year, then name; rows without a year sort last so dated data leads.
    return (row.year is None, row.year if row.year is not None else 0, row.name)


def _real(x: float) -> str:
    return f"{x:.6g}"


def emit_csv(rows: Iterable[TrendRow], which: str) -> str:
    """Render one figure's data as CSV (header, LF endings, deterministic).

    fig1: name,year,transistors          (platforms with a processor)
    fig2: name,year,mech_decimal_exponent,mech_bits   (all platforms)
    fig3: name,comp_bits,mech_bits       (platforms with a processor)

    Reals carry 6 significant digits; integral columns print bare.
    """
    if which not in FIGURES:
        raise ValueError(f"unknown figure {which!r}; expected one of {FIGURES}")
    ordered = sorted(rows, key=_sort_key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if which == "fig1":
        writer.writerow(["name", "year", "transistors"])
        for r in ordered:
            if r.comp_bits is None:
                continue
            writer.writerow([r.name, "" if r.year is None else r.year, int(r.comp_bits)])
    elif which == "fig2":
        writer.writerow(["name", "year", "mech_decimal_exponent", "mech_bits"])
        for r in ordered:
            writer.writerow([r.name, "" if r.year is None else r.year,
                             r.mech_decimal_exponent, _real(r.mech_bits)])
    else:
        writer.writerow(["name", "comp_bits", "mech_bits"])
        for r in ordered:
            if r.comp_bits is None:
                continue
            writer.writerow([r.name, int(r.comp_bits), _real(r.mech_bits)])
    return buf.getvalue()


Comparable = Union[CapacityResult, ProcessorSpec]


@dataclass(frozen=True)
class ComparisonStatement:
    """Quantified comparison of two capacities.

    Differences are stated both in bits (capacity difference) and in
    decimal orders of magnitude (ratio of configuration counts is
    10^config_ratio_log10). `bits_ratio_orders_log10` is the order gap
    between the two bit counts themselves, the framing used when one
    machine is called "orders of magnitude more expressive" than another.
    """

    label_a: str
    label_b: str
    bits_a: float
    bits_b: float

    @property
    def bit_difference(self) -> float:
        return self.bits_a - self.bits_b

    @property
    def config_ratio_log10(self) -> float:
        return self.bit_difference * math.log10(2)

    @property
    def bits_ratio(self) -> float | None:
        if self.bits_a > 0 and self.bits_b > 0:
            return self.bits_a / self.bits_b
        return None

    @property
    def bits_ratio_orders_log10(self) -> float | None:
        ratio = self.bits_ratio
        return math.log10(ratio) if ratio is not None else None

    @property
    def same_order_of_magnitude(self) -> bool | None:
        """Whether both bit counts share a decimal order (floor of log10)."""
        if self.bits_a > 0 and self.bits_b > 0:
            return math.floor(math.log10(self.bits_a)) == math.floor(math.log10(self.bits_b))
        return None

    def render(self) -> str:
        a, b = self.label_a, self.label_b
        ta = transistor_equivalent(self.bits_a)
        tb = transistor_equivalent(self.bits_b)
        lines = [
            f"{a}: {self.bits_a:.1f} bits (transistor equivalent {ta})",
            f"{b}: {self.bits_b:.1f} bits (transistor equivalent {tb})",
        ]
        if self.bit_difference == 0:
            lines.append(f"{a} and {b} encode the same capacity: zero difference.")
        else:
            hi, lo = (a, b) if self.bit_difference > 0 else (b, a)
            delta = abs(self.bit_difference)
            lines.append(
                f"{hi} encodes {delta:.1f} more bits than {lo}; "
                f"~10^{abs(self.config_ratio_log10):.1f} times more configurations."
            )
            orders = self.bits_ratio_orders_log10
            if orders is not None:
                lines.append(
                    f"In capacity, {hi} is about {10 ** abs(orders):.1f}x "
                    f"({abs(orders):.1f} orders of magnitude) more expressive."
                )
        if self.same_order_of_magnitude:
            lines.append(f"{a} and {b} are the same order of magnitude in bits.")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def _bits_of(x: Comparable) -> float:
    if isinstance(x, CapacityResult):
        return x.bits
    if isinstance(x, ProcessorSpec):
        return processor_bits(x)
    raise TypeError(f"cannot compare {x!r}; expected CapacityResult or ProcessorSpec")


def compare(a: Comparable, b: Comparable, label_a: str = "A", label_b: str = "B") -> ComparisonStatement:
    """Compare two capacities (mechanical results or processors)."""
    return ComparisonStatement(label_a, label_b, _bits_of(a), _bits_of(b))
