"""Parsing generated sentences back into logical forms, and re-deriving labels.

The grammar is exactly the realizer's output language: point phrases with
at/on/in/before/after (final or fronted), "from X to Y" and
"began at X and lasted until Y" span premises, "for [less than] N unit(s)"
and "for Y years M months" span claims, and "in/before/after N unit(s)"
future offsets. It is deliberately not a general temporal tagger.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from .model import (
    After,
    Anchor,
    AtPoint,
    Before,
    ClaimMode,
    CompositeDate,
    DurationClaim,
    DurationUnit,
    DurationValue,
    FromTo,
    FutureOffset,
    Label,
    ListKind,
    MONTHS_ABBREV,
    MONTHS_FULL,
    PointLike,
    TimePoint,
    WEEKDAYS,
    ordinal,
    point_coordinate,
    point_of,
)
from .oracle import (
    LabelingError,
    WRAP_CYCLE,
    composite_gold_duration,
    cross_unit_label,
    duration_label,
    gold_duration,
    order_label,
)


class ParseError(ValueError):
    """Raised when a sentence does not belong to the generator grammar."""


class SetKind(str, enum.Enum):
    ORDER = "order"
    DURATION = "duration"
    CROSS_UNIT = "cross_unit"


@dataclass(frozen=True)
class ParsedClaim:
    stem: str
    spec: Union[AtPoint, Before, After, FromTo, DurationClaim, FutureOffset]
    set_kind: SetKind
    fronted: bool = False


def _alternation(words) -> str:
    return "|".join(re.escape(w) for w in words)


_HOUR12_RE = r"(?:1[0-2]|[1-9]) (?:AM|PM)"
_HOUR24_RE = r"(?:[01][0-9]|2[0-3]):00"
_WEEKDAY_RE = _alternation(WEEKDAYS)
_MONTH_RE = _alternation(sorted(MONTHS_FULL + MONTHS_ABBREV, key=len, reverse=True))
_ORDINAL_RE = r"(?:2[0-8]|1[0-9]|[1-9])(?:st|nd|rd|th)"
_YEAR_RE = r"(?:19[0-9][0-9]|2000)"
_DATE_YEAR_RE = r"(?:[12][0-9]{3})"

# Longest forms first so "21st Sep 2013" is not chopped into pieces.
_POINT_RE = (
    rf"(?:{_ORDINAL_RE} (?:{_MONTH_RE}) {_DATE_YEAR_RE}"
    rf"|(?:{_MONTH_RE}) {_DATE_YEAR_RE}"
    rf"|{_HOUR12_RE}"
    rf"|{_HOUR24_RE}"
    rf"|{_WEEKDAY_RE}"
    rf"|{_ORDINAL_RE}"
    rf"|(?:{_MONTH_RE})"
    rf"|{_YEAR_RE})"
)

_UNIT_RE = r"(?:seconds?|minutes?|hours?|days?|months?|years?)"

_DMY = re.compile(rf"^({_ORDINAL_RE}) ({_MONTH_RE}) ({_DATE_YEAR_RE})$")
_MY = re.compile(rf"^({_MONTH_RE}) ({_DATE_YEAR_RE})$")

_FROM_TO = re.compile(rf"^(?P<stem>.+) from (?P<start>{_POINT_RE}) to (?P<end>{_POINT_RE})\.$")
_BEGAN_UNTIL = re.compile(
    rf"^(?P<stem>.+) (?:began|begins) (?:at|in|on) (?P<start>{_POINT_RE})"
    rf" and (?:lasted|lasts) until (?P<end>{_POINT_RE})\.$"
)
_SPAN_CLAIM_COMPOSITE = re.compile(
    r"^(?P<stem>.+) for (?P<less>less than )?(?P<years>\d+) years? (?P<months>\d+) months?\.$"
)
_SPAN_CLAIM = re.compile(
    rf"^(?P<stem>.+) for (?P<less>less than )?(?P<count>\d+) (?P<unit>{_UNIT_RE})\.$"
)
_OFFSET_FINAL = re.compile(
    rf"^(?P<stem>.+) (?P<anchor>in|before|after) (?P<count>\d+) (?P<unit>{_UNIT_RE})\.$"
)
_OFFSET_FRONTED = re.compile(
    rf"^(?P<anchor>In|Before|After) (?P<count>\d+) (?P<unit>{_UNIT_RE}), (?P<stem>.+)\.$"
)
_ORDER_FINAL = re.compile(
    rf"^(?P<stem>.+) (?P<prep>at|in|on|before|after) (?P<point>{_POINT_RE})\.$"
)
_ORDER_FRONTED = re.compile(
    rf"^(?P<prep>At|In|On|Before|After) (?P<point>{_POINT_RE}), (?P<stem>.+)\.$"
)


def _month_index(name: str) -> tuple[int, ListKind]:
    if name in MONTHS_FULL:
        return MONTHS_FULL.index(name), ListKind.MONTH_FULL
    return MONTHS_ABBREV.index(name), ListKind.MONTH_ABBREV


def parse_point(surface: str) -> PointLike:
    """Bare point: '12 PM', 'Sunday', '3rd', 'Jan 2011', '21st Sep 2013'."""
    m = _DMY.match(surface)
    if m:
        day = int(re.match(r"\d+", m.group(1)).group())
        if m.group(1) != ordinal(day):
            raise ParseError(f"malformed ordinal {m.group(1)!r} in {surface!r}")
        month, style = _month_index(m.group(2))
        return CompositeDate(month=month, year=int(m.group(3)), monthday=day, month_style=style)
    m = _MY.match(surface)
    if m:
        month, style = _month_index(m.group(1))
        return CompositeDate(month=month, year=int(m.group(2)), month_style=style)
    for kind in (
        ListKind.HOUR12,
        ListKind.HOUR24,
        ListKind.WEEKDAY,
        ListKind.MONTHDAY,
        ListKind.MONTH_FULL,
        ListKind.MONTH_ABBREV,
        ListKind.YEAR,
    ):
        try:
            return point_of(kind, surface)
        except KeyError:
            continue
    raise ParseError(f"unrecognized temporal point: {surface!r}")


def _parse_duration(count: int, unit_word: str) -> DurationValue:
    unit = DurationUnit(unit_word if unit_word.endswith("s") else unit_word + "s")
    return DurationValue(unit, magnitude=count)


def _point_spec(prep: str, surface: str):
    point = parse_point(surface)
    if prep in ("at", "in", "on"):
        return AtPoint(point)
    if prep == "before":
        return Before(point)
    return After(point)


def parse_sentence(text: str) -> ParsedClaim:
    """Parse one generated sentence into its stem and temporal logical form."""
    m = _FROM_TO.match(text) or _BEGAN_UNTIL.match(text)
    if m:
        start = parse_point(m.group("start"))
        end = parse_point(m.group("end"))
        spec = FromTo(start, end, wrapped=_infer_wrap(start, end))
        return ParsedClaim(m.group("stem"), spec, SetKind.DURATION)

    m = _SPAN_CLAIM_COMPOSITE.match(text)
    if m:
        total = int(m.group("years")) * 12 + int(m.group("months"))
        value = DurationValue(DurationUnit.MONTHS, year_month=(int(m.group("years")), int(m.group("months"))))
        if total <= 0:
            raise ParseError(f"zero-length span claim in: {text!r}")
        mode = ClaimMode.LESS_THAN if m.group("less") else ClaimMode.EQUAL
        return ParsedClaim(m.group("stem"), DurationClaim(mode, value), SetKind.DURATION)

    m = _SPAN_CLAIM.match(text)
    if m:
        value = _parse_duration(int(m.group("count")), m.group("unit"))
        if value.total() <= 0:
            raise ParseError(f"zero-length span claim in: {text!r}")
        mode = ClaimMode.LESS_THAN if m.group("less") else ClaimMode.EQUAL
        return ParsedClaim(m.group("stem"), DurationClaim(mode, value), SetKind.DURATION)

    m = _OFFSET_FRONTED.match(text)
    if m:
        anchor = {"In": Anchor.AT, "Before": Anchor.BEFORE, "After": Anchor.AFTER}[m.group("anchor")]
        value = _parse_duration(int(m.group("count")), m.group("unit"))
        return ParsedClaim(
            m.group("stem"), FutureOffset(anchor, value), SetKind.CROSS_UNIT, fronted=True
        )

    m = _OFFSET_FINAL.match(text)
    if m:
        anchor = {"in": Anchor.AT, "before": Anchor.BEFORE, "after": Anchor.AFTER}[m.group("anchor")]
        value = _parse_duration(int(m.group("count")), m.group("unit"))
        return ParsedClaim(m.group("stem"), FutureOffset(anchor, value), SetKind.CROSS_UNIT)

    m = _ORDER_FRONTED.match(text)
    if m:
        spec = _point_spec(m.group("prep").lower(), m.group("point"))
        return ParsedClaim(m.group("stem"), spec, SetKind.ORDER, fronted=True)

    m = _ORDER_FINAL.match(text)
    if m:
        spec = _point_spec(m.group("prep"), m.group("point"))
        return ParsedClaim(m.group("stem"), spec, SetKind.ORDER)

    raise ParseError(f"no temporal phrase recognized in: {text!r}")


def _infer_wrap(start: PointLike, end: PointLike) -> bool:
    # "from 9 PM to 3 AM" crossed into the next cycle; the text itself carries
    # no wrap marker, so an earlier end point on a wrappable axis means wrap.
    if not isinstance(start, TimePoint) or not isinstance(end, TimePoint):
        return False
    if start.axis is not end.axis or start.axis not in WRAP_CYCLE:
        return False
    return point_coordinate(end) < point_coordinate(start)


def relabel(premise: ParsedClaim, hypothesis: ParsedClaim) -> Label:
    """Recompute the gold label of a parsed premise/hypothesis pair."""
    h = hypothesis.spec
    p = premise.spec

    if isinstance(h, DurationClaim):
        if not isinstance(p, FromTo):
            raise LabelingError("span claims need a from/to premise")
        if isinstance(p.start, CompositeDate) or isinstance(p.end, CompositeDate):
            if not (isinstance(p.start, CompositeDate) and isinstance(p.end, CompositeDate)):
                raise LabelingError("span premises cannot mix dates with list points")
            gold = composite_gold_duration(p.start, p.end)
        else:
            gold = gold_duration(p.start, p.end, wrapped=p.wrapped)
        return duration_label(gold, h)

    if isinstance(h, FutureOffset):
        if not isinstance(p, FutureOffset):
            raise LabelingError("offset hypotheses need an offset premise")
        return cross_unit_label(p, h)

    if isinstance(h, (Before, After)):
        if not isinstance(p, (AtPoint, Before, After)):
            raise LabelingError("ordering hypotheses need a point-claim premise")
        return order_label(p, h)

    raise LabelingError("hypothesis must be a before/after, span, or offset claim")


def label_sentence_pair(premise_text: str, hypothesis_text: str) -> Label:
    """Parse-and-label in one step; the text-level oracle used by the CLI."""
    return relabel(parse_sentence(premise_text), parse_sentence(hypothesis_text))
