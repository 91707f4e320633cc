"""Domain model: actuator groups, platforms, processors, and capacity results.

Everything here is immutable after construction and safe to share across
threads. Constructors do NOT enforce invariants; `validate` reports every
violation as data so that loaders can batch-report problems instead of
dying on the first bad field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

# A derived state count must land within this relative distance of an
# integer; anything dirtier indicates an inconsistent source row rather
# than floating-point noise.
RANGE_QUOTIENT_TOLERANCE = 1e-6


class InconsistentRangeError(ValueError):
    """(max - min) / resolution is not an integral number of steps."""


@dataclass(frozen=True)
class Discrete:
    """A state count given directly (e.g. an open/close gripper has 2)."""

    num_states: int


@dataclass(frozen=True)
class Ranged:
    """An angular range in degrees, discretized by the actuator resolution."""

    min: float
    max: float
    resolution: float


States = Union[Discrete, Ranged]


def ranged_state_count(r: Ranged) -> int:
    """Number of distinguishable positions in a swept range.

    Counts resolution-sized intervals between min and max, not endpoints:
    -119.5..119.5 deg at 0.1 deg yields 2390 states, not 2391. Endpoint
    counting is the tempting alternative; interval counting is what the
    published tables this library reproduces actually use.

    Raises InconsistentRangeError when the quotient is not an integer
    (within RANGE_QUOTIENT_TOLERANCE, relative) or the range spans less
    than one resolution step.
    """
    span = r.max - r.min
    if not span > 0:
        raise InconsistentRangeError(f"max ({r.max}) must exceed min ({r.min})")
    if not r.resolution > 0:
        raise InconsistentRangeError(f"resolution must be positive, got {r.resolution}")
    quotient = span / r.resolution
    steps = round(quotient)
    if steps < 1:
        raise InconsistentRangeError(
            f"range {r.min}..{r.max} spans less than one {r.resolution} deg step"
        )
    if abs(quotient - steps) > RANGE_QUOTIENT_TOLERANCE * max(1.0, abs(steps)):
        raise InconsistentRangeError(
            f"({r.max} - {r.min}) / {r.resolution} = {quotient!r} is not an "
            "integral number of steps; the row is inconsistent"
        )
    return steps


@dataclass(frozen=True)
class ActuatorGroup:
    """A set of `count` identical degrees of freedom sharing one state count.

    `velocity_states`, when present, is the number of perceptually distinct
    arrival velocities per position; it multiplies the per-DOF state count
    only when dynamics are explicitly enabled at computation time.
    """

    label: str
    count: int
    states: States
    velocity_states: int | None = None


@dataclass(frozen=True)
class ProcessorSpec:
    """Onboard computation modeled as a transistor count.

    A transistor is a binary degree of freedom, so capacity in bits equals
    the transistor count.
    """

    name: str
    transistor_count: int


@dataclass(frozen=True)
class PlatformSpec:
    """A named machine: actuator groups plus optional processor and year.

    `year` is curator metadata for trend output, never derived data.
    """

    name: str
    groups: tuple[ActuatorGroup, ...]
    processor: ProcessorSpec | None = None
    year: int | None = None


class GroupContribution(NamedTuple):
    """One breakdown row: `count` DOFs with `states` states each."""

    label: str
    count: int
    states: int
    bits: float


@dataclass(frozen=True)
class CapacityResult:
    """Capacity of a platform, in bits and as a decimal magnitude.

    `bits` is the sum of the breakdown contributions. `mantissa` and
    `decimal_exponent` describe the configuration count as
    mantissa x 10^decimal_exponent with 1 <= mantissa < 10. `exact_count`
    is the arbitrary-precision count when exact mode was requested and
    the digit guard admitted it.
    """

    bits: float
    decimal_exponent: int
    mantissa: float
    exact_count: int | None = None
    breakdown: tuple[GroupContribution, ...] = ()


@dataclass(frozen=True)
class FactorizationExpr:
    """A literal product of (base, exponent) pairs.

    Used to re-evaluate published capacity computations exactly as printed,
    independently of the structured platform model.
    """

    terms: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PaperRegressionEntry:
    """One published capacity computation with its printed result.

    `expected_status` annotates known discrepancies in the published
    results ("match", "rounding_match" or "mismatch"); the verification
    report fails only on statuses that differ from the expectation.
    """

    id: str
    factorization: FactorizationExpr
    printed_bits: int
    printed_mantissa: float
    printed_exponent: int
    expected_status: str = "match"
    note: str = ""


@dataclass(frozen=True)
class Violation:
    """One invariant violation, naming the offending location and field."""

    where: str
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}.{self.field}: {self.message}"


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_real(x: object) -> bool:
    return (isinstance(x, (int, float)) and not isinstance(x, bool)
            and x == x and x not in (float("inf"), float("-inf")))


def _check_group(g: ActuatorGroup, where: str, out: list[Violation]) -> None:
    if not isinstance(g.label, str) or not g.label:
        out.append(Violation(where, "label", "label must be a nonempty string"))
    if not _is_int(g.count) or g.count < 1:
        out.append(Violation(where, "count", f"count must be an integer >= 1, got {g.count!r}"))
    states = g.states
    if isinstance(states, Discrete):
        if not _is_int(states.num_states) or states.num_states < 1:
            out.append(Violation(
                where, "states.num_states",
                f"num_states must be an integer >= 1, got {states.num_states!r}"))
    elif isinstance(states, Ranged):
        clean = True
        for name in ("min", "max", "resolution"):
            value = getattr(states, name)
            if not _is_real(value):
                out.append(Violation(where, f"states.{name}", f"must be a finite number, got {value!r}"))
                clean = False
        if clean:
            if not states.max > states.min:
                out.append(Violation(
                    where, "states.max",
                    f"max ({states.max}) must exceed min ({states.min})"))
            elif not states.resolution > 0:
                out.append(Violation(
                    where, "states.resolution",
                    f"resolution must be positive, got {states.resolution}"))
            else:
                try:
                    ranged_state_count(states)
                except InconsistentRangeError as exc:
                    out.append(Violation(where, "states", str(exc)))
    else:
        out.append(Violation(where, "states", f"states must be Discrete or Ranged, got {states!r}"))
    if g.velocity_states is not None and (not _is_int(g.velocity_states) or g.velocity_states < 1):
        out.append(Violation(
            where, "velocity_states",
            f"velocity_states must be an integer >= 1 when present, got {g.velocity_states!r}"))


def validate(platform: PlatformSpec) -> list[Violation]:
    """Check every invariant of a platform; an empty list means valid.

    Total by design: malformed fields become named violations, never
    exceptions.
    """
    out: list[Violation] = []
    if not isinstance(platform.name, str) or not platform.name:
        out.append(Violation("platform", "name", "name must be a nonempty string"))
    if platform.year is not None and not _is_int(platform.year):
        out.append(Violation("platform", "year", f"year must be an integer, got {platform.year!r}"))

    try:
        groups = list(platform.groups)
    except TypeError:
        out.append(Violation("platform", "groups", "groups must be a sequence of ActuatorGroup"))
        return out
    if not groups:
        out.append(Violation("platform", "groups", "a platform needs at least one actuator group"))

    seen: dict[str, int] = {}
    for idx, g in enumerate(groups):
        if not isinstance(g, ActuatorGroup):
            out.append(Violation(f"groups[{idx}]", "", f"expected ActuatorGroup, got {g!r}"))
            continue
        label = g.label if isinstance(g.label, str) else repr(g.label)
        where = f"groups[{idx}] ({label})"
        _check_group(g, where, out)
        if isinstance(g.label, str):
            if g.label in seen:
                out.append(Violation(
                    where, "label",
                    f"duplicate label also used by groups[{seen[g.label]}]"))
            else:
                seen[g.label] = idx

    proc = platform.processor
    if proc is not None:
        if not isinstance(proc, ProcessorSpec):
            out.append(Violation("processor", "", f"expected ProcessorSpec, got {proc!r}"))
        else:
            if not isinstance(proc.name, str):
                out.append(Violation("processor", "name", "processor name must be a string"))
            if not _is_int(proc.transistor_count) or proc.transistor_count < 1:
                out.append(Violation(
                    "processor", "transistor_count",
                    f"transistor_count must be an integer >= 1, got {proc.transistor_count!r}"))
    return out
