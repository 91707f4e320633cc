"""Capacity computation: log-domain bits, decimal magnitudes, exact counts.

The capacity of a platform is the number of complete state assignments over
all of its degrees of freedom: the product over actuator groups of
states^count. Everything is computed in the log domain first (bits =
log2 of that product), which never overflows; exact big-integer counts are
materialized only on request and behind a digit-count guard.

All functions here are pure; results and inputs are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from typing import Iterable, Sequence

from .model import (
    ActuatorGroup,
    CapacityResult,
    Discrete,
    FactorizationExpr,
    GroupContribution,
    PlatformSpec,
    ProcessorSpec,
    Ranged,
    ranged_state_count,
)

# log10(2) to 50 places. A bare double-precision product bits * log10(2)
# loses ~bits * 2^-52 of its fractional part, which matters once bits
# reaches transistor scale (1e11); doing the product in Decimal keeps the
# derived mantissa good to full float precision at any magnitude.
_LOG10_2 = Decimal("0.30102999566398119521373889472449302676818988146211")

DEFAULT_MAX_DECIMAL_DIGITS = 1_000_000


@dataclass(frozen=True)
class ExactModeConfig:
    """Digit budget for materializing counts as big integers.

    The default admits every built-in platform (the largest exact count
    needs 13,138 digits) while refusing transistor-scale machines: the
    count for a 1.4e9-transistor processor would need ~4.2e8 digits.
    """

    max_decimal_digits: int = DEFAULT_MAX_DECIMAL_DIGITS


class ExactTooLarge(Exception):
    """The exact count would exceed the configured digit budget."""

    def __init__(self, predicted_digits: int, max_decimal_digits: int):
        super().__init__(
            f"exact count would need ~{predicted_digits} decimal digits, "
            f"over the {max_decimal_digits}-digit limit"
        )
        self.predicted_digits = predicted_digits
        self.max_decimal_digits = max_decimal_digits


def states_per_dof(group: ActuatorGroup) -> int:
    """Static states available to one DOF of the group.

    Discrete counts pass through unchanged; ranged motion counts
    resolution-sized intervals from min to max (no endpoint +1), so
    -119.5..119.5 at 0.1 gives 2390. Raises InconsistentRangeError when
    the quotient strays more than 1e-6 (relative) from an integer, which
    signals an inconsistent source row rather than a real actuator.
    """
    if isinstance(group.states, Discrete):
        return group.states.num_states
    if isinstance(group.states, Ranged):
        return ranged_state_count(group.states)
    raise TypeError(f"unsupported states kind: {group.states!r}")


def effective_states(group: ActuatorGroup, apply_dynamics: bool) -> int:
    """States per DOF, folding in velocity states when dynamics are on.

    With dynamics enabled, a group carrying velocity_states=100 and 160
    positions exposes 16000 states per DOF; groups without a velocity
    multiplier are unchanged.
    """
    base = states_per_dof(group)
    if apply_dynamics and group.velocity_states is not None:
        return base * group.velocity_states
    return base


def decimal_magnitude(bits: float) -> tuple[float, int]:
    """Decompose 2^bits as mantissa * 10^exponent with 1 <= mantissa < 10.

    The exponent is floor(bits * log10(2)) computed in 50-digit decimal
    arithmetic, so the split itself contributes < 1e-12 of error to the
    fractional part; the caller's `bits` carries its own rounding of at
    most bits * 2^-52. Even at bits = 1e11 the mantissa is therefore
    reliable to about four significant digits, and the exponent is exact.
    """
    if bits < 0:
        raise ValueError(f"bits must be >= 0, got {bits}")
    with localcontext() as ctx:
        ctx.prec = 50
        x = Decimal(bits) * _LOG10_2
        exponent = int(x.to_integral_value(rounding=ROUND_FLOOR))
        fractional = x - exponent
    mantissa = 10.0 ** float(fractional)
    if mantissa >= 10.0:  # fractional part rounded up to 1.0 in float
        mantissa /= 10.0
        exponent += 1
    return mantissa, exponent


def predicted_decimal_digits(bits: float) -> int:
    """Decimal digits a count of 2^bits configurations would occupy."""
    _, exponent = decimal_magnitude(bits)
    return exponent + 1


def processor_bits(processor: ProcessorSpec) -> float:
    """Capacity of an onboard processor, in bits.

    Transistors are binary DOFs, so a homogeneous machine of k transistors
    holds exactly k bits.
    """
    return float(processor.transistor_count)


def transistor_equivalent(bits: float) -> int:
    """Transistor count of a binary machine with the same capacity."""
    return round(bits)


def _assemble(
    breakdown: tuple[GroupContribution, ...],
    factors: Sequence[tuple[int, int]],
    exact: ExactModeConfig | None,
) -> CapacityResult:
    # math.fsum is an error-free-transformation (Shewchuk) summation, so the
    # only rounding left in `bits` is the per-term log2/multiply, ~1e-16
    # relative per group.
    bits = math.fsum(c.bits for c in breakdown)
    mantissa, exponent = decimal_magnitude(bits)
    exact_count: int | None = None
    if exact is not None:
        digits = exponent + 1
        if digits > exact.max_decimal_digits:
            raise ExactTooLarge(digits, exact.max_decimal_digits)
        n = 1
        for base, power in factors:
            n *= base**power
        exact_count = n
    return CapacityResult(
        bits=bits,
        decimal_exponent=exponent,
        mantissa=mantissa,
        exact_count=exact_count,
        breakdown=breakdown,
    )


def _group_rows(
    platform: PlatformSpec, apply_dynamics: bool, label_prefix: str = ""
) -> tuple[list[GroupContribution], list[tuple[int, int]]]:
    rows: list[GroupContribution] = []
    factors: list[tuple[int, int]] = []
    for g in platform.groups:
        r = effective_states(g, apply_dynamics)
        rows.append(GroupContribution(label_prefix + g.label, g.count, r, g.count * math.log2(r)))
        factors.append((r, g.count))
    return rows, factors


def capacity(
    platform: PlatformSpec,
    apply_dynamics: bool = False,
    exact: ExactModeConfig | None = None,
) -> CapacityResult:
    """Capacity of one platform.

    bits = sum over groups of count * log2(effective states). When `exact`
    is given, the full product is also materialized as a big integer,
    unless its predicted digit count exceeds the configured budget
    (ExactTooLarge, carrying that prediction).
    """
    rows, factors = _group_rows(platform, apply_dynamics)
    return _assemble(tuple(rows), factors, exact)


def combine(
    platforms: Iterable[PlatformSpec],
    apply_dynamics: bool = False,
    exact: ExactModeConfig | None = None,
) -> CapacityResult:
    """Joint capacity of independent platforms (a floor full of robots).

    Configuration spaces multiply, so bits add. An empty collection is the
    empty product: one configuration, zero bits.
    """
    rows: list[GroupContribution] = []
    factors: list[tuple[int, int]] = []
    for p in platforms:
        p_rows, p_factors = _group_rows(p, apply_dynamics, label_prefix=f"{p.name}: ")
        rows.extend(p_rows)
        factors.extend(p_factors)
    if not rows:
        return CapacityResult(bits=0.0, decimal_exponent=0, mantissa=1.0, exact_count=1)
    return _assemble(tuple(rows), factors, exact)


def eval_factorization(
    expr: FactorizationExpr, exact: ExactModeConfig | None = None
) -> CapacityResult:
    """Evaluate a literal product of powers, exactly as printed somewhere.

    This is the regression path for published capacity computations: it
    bypasses the platform model entirely and scores the printed
    factorization on its own terms.
    """
    if not expr.terms:
        raise ValueError("factorization needs at least one (base, exponent) term")
    rows: list[GroupContribution] = []
    for base, power in expr.terms:
        if not isinstance(base, int) or isinstance(base, bool) or base < 1:
            raise ValueError(f"base must be an integer >= 1, got {base!r}")
        if not isinstance(power, int) or isinstance(power, bool) or power < 0:
            raise ValueError(f"exponent must be an integer >= 0, got {power!r}")
        rows.append(GroupContribution(f"{base}^{power}", power, base, power * math.log2(base)))
    return _assemble(tuple(rows), list(expr.terms), exact)
