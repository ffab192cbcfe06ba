"""Gold-label computation: interval induction, ordering, durations, unit conversion.

Ordering comparisons live on discrete axes (hours, weekdays, month-days,
months, years, composite dates): intervals are normalized to closed bounds so
subset/disjointness tests agree with explicit point-set semantics. Future
offsets ("in 2 hours") live on a dense nonnegative duration axis, where
"before t" / "after t" keep their open endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .model import (
    After,
    Anchor,
    AtPoint,
    Axis,
    Before,
    ClaimMode,
    CompositeDate,
    DurationClaim,
    DurationUnit,
    DurationValue,
    FromTo,
    FutureOffset,
    Label,
    MONTHDAY_MAX,
    PointLike,
    TimePoint,
    point_coordinate,
)


class LabelingError(ValueError):
    """A premise/hypothesis combination outside the labeling contract."""


class _NegInf:
    __slots__ = ()

    def __lt__(self, other) -> bool:
        return not isinstance(other, _NegInf)

    def __gt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return True

    def __ge__(self, other) -> bool:
        return isinstance(other, _NegInf)

    def __eq__(self, other) -> bool:
        return isinstance(other, _NegInf)

    def __hash__(self) -> int:
        return hash("-inf")

    def __repr__(self) -> str:
        return "-inf"


class _PosInf:
    __slots__ = ()

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return not isinstance(other, _PosInf)

    def __le__(self, other) -> bool:
        return isinstance(other, _PosInf)

    def __ge__(self, other) -> bool:
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, _PosInf)

    def __hash__(self) -> int:
        return hash("+inf")

    def __repr__(self) -> str:
        return "+inf"


NEG_INF = _NegInf()
POS_INF = _PosInf()

Bound = Union[int, tuple, _NegInf, _PosInf]


@dataclass(frozen=True)
class InducedInterval:
    """An interval on a comparison axis, possibly unbounded on either side."""

    lower: Bound
    upper: Bound
    lower_open: bool = False
    upper_open: bool = False

    def is_empty(self) -> bool:
        if self.lower > self.upper:
            return True
        return self.lower == self.upper and (self.lower_open or self.upper_open)


def is_subset(a: InducedInterval, b: InducedInterval) -> bool:
    if a.is_empty():
        return True
    if b.is_empty():
        return False
    if a.lower < b.lower:
        return False
    if a.lower == b.lower and b.lower_open and not a.lower_open:
        return False
    if a.upper > b.upper:
        return False
    if a.upper == b.upper and b.upper_open and not a.upper_open:
        return False
    return True


def is_disjoint(a: InducedInterval, b: InducedInterval) -> bool:
    if a.is_empty() or b.is_empty():
        return True
    if a.upper < b.lower or (a.upper == b.lower and (a.upper_open or b.lower_open)):
        return True
    if b.upper < a.lower or (b.upper == a.lower and (b.upper_open or a.lower_open)):
        return True
    return False


# Clamped discrete axes; year and composite dates are unbounded on both sides
# (clamping cannot change any subset/disjoint outcome for in-range points).
_AXIS_BOUNDS: dict[Axis, tuple[Bound, Bound]] = {
    Axis.HOUR: (0, 23),
    Axis.WEEKDAY: (0, 6),
    Axis.MONTHDAY: (0, 27),
    Axis.MONTH: (0, 11),
    Axis.YEAR: (NEG_INF, POS_INF),
    Axis.DATE_MY: (NEG_INF, POS_INF),
    Axis.DATE_DMY: (NEG_INF, POS_INF),
}


def _succ(axis: Axis, value):
    if axis is Axis.DATE_MY:
        year, month, _ = value
        return (year, month + 1, 0) if month < 11 else (year + 1, 0, 0)
    if axis is Axis.DATE_DMY:
        year, month, day = value
        if day < MONTHDAY_MAX:
            return (year, month, day + 1)
        return (year, month + 1, 1) if month < 11 else (year + 1, 0, 1)
    return value + 1


def _pred(axis: Axis, value):
    if axis is Axis.DATE_MY:
        year, month, _ = value
        return (year, month - 1, 0) if month > 0 else (year - 1, 11, 0)
    if axis is Axis.DATE_DMY:
        year, month, day = value
        if day > 1:
            return (year, month, day - 1)
        return (year, month - 1, MONTHDAY_MAX) if month > 0 else (year - 1, 11, MONTHDAY_MAX)
    return value - 1


def _axis_of_point(point: PointLike) -> Axis:
    return point.axis


def induce_interval(spec: Union[AtPoint, Before, After, FromTo], axis: Axis) -> InducedInterval:
    """The set of axis positions a point claim makes the event compatible with.

    "before t" and "after t" are strict: t itself is excluded. Bounds are
    normalized to closed endpoints, so the interval is exactly the point set.
    """
    lo, hi = _AXIS_BOUNDS[axis]

    def coordinate(point: PointLike):
        if _axis_of_point(point) is not axis:
            raise LabelingError(
                f"point lives on the {_axis_of_point(point).value} axis, not {axis.value}"
            )
        return point_coordinate(point)

    if isinstance(spec, AtPoint):
        c = coordinate(spec.point)
        return InducedInterval(c, c)
    if isinstance(spec, Before):
        return InducedInterval(lo, _pred(axis, coordinate(spec.point)))
    if isinstance(spec, After):
        return InducedInterval(_succ(axis, coordinate(spec.point)), hi)
    if isinstance(spec, FromTo):
        if spec.wrapped:
            raise LabelingError("wrapped intervals have no place in ordering comparisons")
        a = coordinate(spec.start)
        b = coordinate(spec.end)
        if a >= b:
            raise LabelingError("interval start must strictly precede its end")
        return InducedInterval(a, b)
    raise LabelingError(f"cannot induce an interval from {type(spec).__name__}")


def _common_axis(premise, hypothesis) -> Axis:
    points = []
    for spec in (premise, hypothesis):
        if isinstance(spec, FromTo):
            points.extend([spec.start, spec.end])
        else:
            points.append(spec.point)
    axes = {_axis_of_point(p) for p in points}
    if len(axes) != 1:
        raise LabelingError(f"specs mix comparison axes: {sorted(a.value for a in axes)}")
    return axes.pop()


def order_label(
    premise: Union[AtPoint, Before, After, FromTo],
    hypothesis: Union[Before, After],
) -> Label:
    """Entailment if the premise interval is inside the hypothesis interval,
    contradiction if the two are disjoint, neutral otherwise."""
    if not isinstance(hypothesis, (Before, After)):
        raise LabelingError("ordering hypotheses must be 'before' or 'after' claims")
    axis = _common_axis(premise, hypothesis)
    p = induce_interval(premise, axis)
    h = induce_interval(hypothesis, axis)
    if p.is_empty():
        raise LabelingError("premise denotes an empty interval; the label is undefined")
    if is_subset(p, h):
        return Label.ENTAILMENT
    if is_disjoint(p, h):
        return Label.CONTRADICTION
    return Label.NEUTRAL


_AXIS_UNIT: dict[Axis, DurationUnit] = {
    Axis.HOUR: DurationUnit.HOURS,
    Axis.WEEKDAY: DurationUnit.DAYS,
    Axis.MONTHDAY: DurationUnit.DAYS,
    Axis.MONTH: DurationUnit.MONTHS,
    Axis.YEAR: DurationUnit.YEARS,
}

#: Cycle lengths of the axes where an end point may cross into the next cycle.
#: Month-days are excluded (the difference is ambiguous without knowing the
#: month) and years are excluded (the list is acyclic).
WRAP_CYCLE: dict[Axis, int] = {
    Axis.HOUR: 24,
    Axis.WEEKDAY: 7,
    Axis.MONTH: 12,
}


def gold_duration(start: TimePoint, end: TimePoint, wrapped: bool = False) -> DurationValue:
    """The true span between two list points, in the axis's own unit.

    Unwrapped spans are plain differences; wrapped spans (end index before
    start index) are modular differences across one cycle boundary.
    """
    if start.axis is not end.axis:
        raise LabelingError("duration endpoints must share a comparison axis")
    axis = start.axis
    s, e = start.index, end.index
    if wrapped:
        if axis not in WRAP_CYCLE:
            raise LabelingError(f"the {axis.value} axis does not support wrap-around spans")
        if e >= s:
            raise LabelingError("a wrapped span needs its end index before its start index")
        magnitude = (e - s) % WRAP_CYCLE[axis]
    else:
        if s >= e:
            raise LabelingError("span start must strictly precede its end")
        magnitude = e - s
    return DurationValue(_AXIS_UNIT[axis], magnitude=magnitude)


def composite_gold_duration(start: CompositeDate, end: CompositeDate) -> DurationValue:
    """Total months between two month+year dates; end must be strictly later."""
    if start.monthday is not None or end.monthday is not None:
        raise LabelingError("composite spans are computed over month+year dates only")
    total = (end.year - start.year) * 12 + (end.month - start.month)
    if total <= 0:
        raise LabelingError("span end must be strictly later than its start")
    return DurationValue(DurationUnit.MONTHS, magnitude=total)


def _normalized_count(value: DurationValue) -> tuple[DurationUnit, int]:
    # Years and year-month composites normalize to months; other units stand.
    if value.year_month is not None:
        return (DurationUnit.MONTHS, value.total())
    if value.unit is DurationUnit.YEARS:
        return (DurationUnit.MONTHS, value.total() * 12)
    return (value.unit, value.total())


def duration_label(gold: DurationValue, claim: DurationClaim) -> Label:
    """Entailment or contradiction depending on whether the gold span falls in
    the claimed range; exact claims demand equality, 'less than' is strict."""
    gold_unit, gold_count = _normalized_count(gold)
    claim_unit, claim_count = _normalized_count(claim.value)
    if gold_unit is not claim_unit:
        raise LabelingError(
            f"cannot compare a {gold_unit.value} span against a {claim_unit.value} claim"
        )
    if claim.mode is ClaimMode.EQUAL:
        return Label.ENTAILMENT if claim_count == gold_count else Label.CONTRADICTION
    return Label.ENTAILMENT if gold_count < claim_count else Label.CONTRADICTION


_UNIT_LADDER = (
    DurationUnit.SECONDS,
    DurationUnit.MINUTES,
    DurationUnit.HOURS,
    DurationUnit.DAYS,
    DurationUnit.MONTHS,
    DurationUnit.YEARS,
)

DEFAULT_DAYS_PER_MONTH = 30


@dataclass(frozen=True)
class UnitPair:
    """Two adjacent time units with their integer conversion factor."""

    higher: DurationUnit
    lower: DurationUnit
    factor: int


def adjacent_pair(higher: DurationUnit, days_per_month: int = DEFAULT_DAYS_PER_MONTH) -> UnitPair:
    position = _UNIT_LADDER.index(higher)
    if position == 0:
        raise LabelingError(f"{higher.value} has no adjacent lower unit")
    lower = _UNIT_LADDER[position - 1]
    factors = {
        DurationUnit.MINUTES: 60,
        DurationUnit.HOURS: 60,
        DurationUnit.DAYS: 24,
        DurationUnit.MONTHS: days_per_month,
        DurationUnit.YEARS: 12,
    }
    return UnitPair(higher, lower, factors[higher])


def convert_down(value: DurationValue, pair: UnitPair) -> DurationValue:
    """Re-express a duration in the pair's lower unit."""
    if value.magnitude is None:
        raise LabelingError("only plain magnitudes convert between units")
    if value.unit is not pair.higher:
        raise LabelingError(
            f"value is in {value.unit.value}, not the pair's higher unit {pair.higher.value}"
        )
    if _UNIT_LADDER.index(pair.higher) - _UNIT_LADDER.index(pair.lower) != 1:
        raise LabelingError("unit pairs must be adjacent")
    return DurationValue(pair.lower, magnitude=value.magnitude * pair.factor)


def _offset_interval(anchor: Anchor, t: int) -> InducedInterval:
    # Dense nonnegative axis: elapsed time is continuous, so "before t" and
    # "after t" keep open endpoints instead of snapping to integers.
    if anchor is Anchor.AT:
        return InducedInterval(t, t)
    if anchor is Anchor.BEFORE:
        return InducedInterval(0, t, upper_open=True)
    return InducedInterval(t, POS_INF, lower_open=True)


def cross_unit_label(
    premise: FutureOffset,
    hypothesis: FutureOffset,
    days_per_month: int = DEFAULT_DAYS_PER_MONTH,
) -> Label:
    """Ordering rule applied on the elapsed-time axis after converting the
    premise offset down into the hypothesis's unit."""
    if hypothesis.anchor is Anchor.AT:
        raise LabelingError("offset hypotheses must be 'before' or 'after' claims")
    if premise.value.unit is hypothesis.value.unit:
        raise LabelingError("premise and hypothesis offsets must use different units")
    pair = adjacent_pair(premise.value.unit, days_per_month)
    if pair.lower is not hypothesis.value.unit:
        raise LabelingError(
            f"{premise.value.unit.value} and {hypothesis.value.unit.value} are not adjacent units"
        )
    converted = convert_down(premise.value, pair).total()
    p = _offset_interval(premise.anchor, converted)
    h = _offset_interval(hypothesis.anchor, hypothesis.value.total())
    if p.is_empty():
        raise LabelingError("premise denotes an empty interval; the label is undefined")
    if is_subset(p, h):
        return Label.ENTAILMENT
    if is_disjoint(p, h):
        return Label.CONTRADICTION
    return Label.NEUTRAL
