"""Temporal expression lists, points, composite dates, durations, and claim forms."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union


class ListKind(str, enum.Enum):
    """The seven surface lists that temporal points are drawn from."""

    HOUR12 = "hour12"
    HOUR24 = "hour24"
    WEEKDAY = "weekday"
    MONTHDAY = "monthday"
    MONTH_FULL = "month_full"
    MONTH_ABBREV = "month_abbrev"
    YEAR = "year"


class Axis(str, enum.Enum):
    """Canonical comparison axes. Lists sharing an axis share one index space."""

    HOUR = "hour"
    WEEKDAY = "weekday"
    MONTHDAY = "monthday"
    MONTH = "month"
    YEAR = "year"
    DATE_MY = "date_my"
    DATE_DMY = "date_dmy"


class DurationUnit(str, enum.Enum):
    SECONDS = "seconds"
    MINUTES = "minutes"
    HOURS = "hours"
    DAYS = "days"
    MONTHS = "months"
    YEARS = "years"


class Label(str, enum.Enum):
    ENTAILMENT = "entailment"
    CONTRADICTION = "contradiction"
    NEUTRAL = "neutral"


#: Binary collapse used by two-way scorers: entailment vs everything else.
BINARY_ENTAILED = "entailed"
BINARY_NOT_ENTAILED = "not-entailed"


def collapse_label(label: Label) -> str:
    return BINARY_ENTAILED if label is Label.ENTAILMENT else BINARY_NOT_ENTAILED


MONTHS_FULL = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)
MONTHS_ABBREV = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
)
WEEKDAYS = ("Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday")

YEAR_MIN = 1900
YEAR_MAX = 2000
MONTHDAY_MAX = 28  # month-agnostic day list; no calendar awareness anywhere

# Composite dates are not limited to the year list's window (sampled dates
# stay inside it, but the oracle labels any plausible four-digit year).
DATE_YEAR_MIN = 1000
DATE_YEAR_MAX = 2999


def ordinal(n: int) -> str:
    """1 -> '1st', 2 -> '2nd', 11 -> '11th', 23 -> '23rd'."""
    if 10 <= n % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"


def _hour12_surface(i: int) -> str:
    # index 0 is "12 AM" (hour 0 of the day), index 12 is "12 PM".
    half = "AM" if i < 12 else "PM"
    h = i % 12
    return f"{12 if h == 0 else h} {half}"


@dataclass(frozen=True)
class TemporalList:
    """One ordered list of surface strings; comparisons are index based."""

    kind: ListKind
    items: tuple[str, ...]
    cyclic: bool

    def __len__(self) -> int:
        return len(self.items)

    def index_of(self, surface: str) -> int:
        try:
            return self.items.index(surface)
        except ValueError:
            raise KeyError(f"{surface!r} is not in the {self.kind.value} list") from None


LISTS: dict[ListKind, TemporalList] = {
    ListKind.HOUR12: TemporalList(
        ListKind.HOUR12, tuple(_hour12_surface(i) for i in range(24)), cyclic=True
    ),
    ListKind.HOUR24: TemporalList(
        ListKind.HOUR24, tuple(f"{i:02d}:00" for i in range(24)), cyclic=True
    ),
    ListKind.WEEKDAY: TemporalList(ListKind.WEEKDAY, WEEKDAYS, cyclic=True),
    ListKind.MONTHDAY: TemporalList(
        ListKind.MONTHDAY, tuple(ordinal(d) for d in range(1, MONTHDAY_MAX + 1)), cyclic=True
    ),
    ListKind.MONTH_FULL: TemporalList(ListKind.MONTH_FULL, MONTHS_FULL, cyclic=True),
    ListKind.MONTH_ABBREV: TemporalList(ListKind.MONTH_ABBREV, MONTHS_ABBREV, cyclic=True),
    ListKind.YEAR: TemporalList(
        ListKind.YEAR, tuple(str(y) for y in range(YEAR_MIN, YEAR_MAX + 1)), cyclic=False
    ),
}

AXIS_OF_KIND: dict[ListKind, Axis] = {
    ListKind.HOUR12: Axis.HOUR,
    ListKind.HOUR24: Axis.HOUR,
    ListKind.WEEKDAY: Axis.WEEKDAY,
    ListKind.MONTHDAY: Axis.MONTHDAY,
    ListKind.MONTH_FULL: Axis.MONTH,
    ListKind.MONTH_ABBREV: Axis.MONTH,
    ListKind.YEAR: Axis.YEAR,
}


@dataclass(frozen=True)
class TimePoint:
    """An index into one of the seven lists."""

    kind: ListKind
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < len(LISTS[self.kind]):
            raise ValueError(f"index {self.index} out of range for {self.kind.value}")

    @property
    def surface(self) -> str:
        return LISTS[self.kind].items[self.index]

    @property
    def axis(self) -> Axis:
        return AXIS_OF_KIND[self.kind]


def point_of(kind: ListKind, surface: str) -> TimePoint:
    return TimePoint(kind, LISTS[kind].index_of(surface))


def canonical_index(p: TimePoint) -> int:
    """Position on the point's comparison axis.

    hour12 and hour24 map to hour-of-day 0-23; the two month lists map to
    month 0-11; every other list is its own axis, so the index stands.
    """
    return p.index


@dataclass(frozen=True)
class CompositeDate:
    """A month+year date, optionally with a month-day. Month is canonical 0-11."""

    month: int
    year: int
    monthday: Optional[int] = None
    month_style: ListKind = ListKind.MONTH_FULL

    def __post_init__(self) -> None:
        if not 0 <= self.month <= 11:
            raise ValueError(f"month {self.month} out of range")
        if not DATE_YEAR_MIN <= self.year <= DATE_YEAR_MAX:
            raise ValueError(f"year {self.year} out of range")
        if self.monthday is not None and not 1 <= self.monthday <= MONTHDAY_MAX:
            raise ValueError(f"monthday {self.monthday} out of range")
        if self.month_style not in (ListKind.MONTH_FULL, ListKind.MONTH_ABBREV):
            raise ValueError("month_style must be one of the two month lists")

    @property
    def axis(self) -> Axis:
        return Axis.DATE_DMY if self.monthday is not None else Axis.DATE_MY


def date_key(d: CompositeDate) -> tuple[int, int, int]:
    """Chronological comparison key (year, month, monthday-or-0).

    Keys of day-level and month-level dates must never be compared with each
    other; callers enforce same granularity (see compare_dates).
    """
    return (d.year, d.month, d.monthday or 0)


def compare_dates(a: CompositeDate, b: CompositeDate) -> int:
    """-1/0/1 ordering of two same-granularity dates."""
    if (a.monthday is None) != (b.monthday is None):
        raise ValueError("cannot compare a day-level date with a month-level date")
    ka, kb = date_key(a), date_key(b)
    return (ka > kb) - (ka < kb)


PointLike = Union[TimePoint, CompositeDate]


class Anchor(str, enum.Enum):
    AT = "at"
    BEFORE = "before"
    AFTER = "after"


class ClaimMode(str, enum.Enum):
    EQUAL = "equal"
    LESS_THAN = "less_than"


@dataclass(frozen=True)
class DurationValue:
    """A magnitude in one unit, or a year-month composite (unit = months)."""

    unit: DurationUnit
    magnitude: Optional[int] = None
    year_month: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if (self.magnitude is None) == (self.year_month is None):
            raise ValueError("exactly one of magnitude or year_month must be set")
        if self.magnitude is not None and self.magnitude < 0:
            raise ValueError("magnitude must be nonnegative")
        if self.year_month is not None:
            if self.unit is not DurationUnit.MONTHS:
                raise ValueError("year-month composites are month-valued")
            years, months = self.year_month
            if years < 0 or not 0 <= months <= 11:
                raise ValueError(f"bad year-month composite {self.year_month}")

    def total(self) -> int:
        """Magnitude in this value's own unit (composites in total months)."""
        if self.year_month is not None:
            years, months = self.year_month
            return years * 12 + months
        assert self.magnitude is not None
        return self.magnitude


def months_value(total: int, composite: bool = False) -> DurationValue:
    """A months-valued duration, rendered either as plain months or years+months."""
    if composite:
        return DurationValue(DurationUnit.MONTHS, year_month=(total // 12, total % 12))
    return DurationValue(DurationUnit.MONTHS, magnitude=total)


@dataclass(frozen=True)
class AtPoint:
    point: PointLike


@dataclass(frozen=True)
class Before:
    point: PointLike


@dataclass(frozen=True)
class After:
    point: PointLike


@dataclass(frozen=True)
class FromTo:
    start: PointLike
    end: PointLike
    wrapped: bool = False


@dataclass(frozen=True)
class DurationClaim:
    mode: ClaimMode
    value: DurationValue

    def __post_init__(self) -> None:
        if self.value.total() <= 0:
            raise ValueError("duration claims must be strictly positive")


@dataclass(frozen=True)
class FutureOffset:
    anchor: Anchor
    value: DurationValue

    def __post_init__(self) -> None:
        if self.value.magnitude is None or self.value.magnitude <= 0:
            raise ValueError("future offsets must be plain, strictly positive durations")


TemporalSpec = Union[AtPoint, Before, After, FromTo, DurationClaim, FutureOffset]

PointSpec = Union[AtPoint, Before, After]


def spec_axis(spec: Union[AtPoint, Before, After]) -> Axis:
    point = spec.point
    if isinstance(point, TimePoint):
        return point.axis
    return point.axis


def point_coordinate(point: PointLike):
    """The point's position on its axis: a canonical index or a date key."""
    if isinstance(point, TimePoint):
        return canonical_index(point)
    return date_key(point)
