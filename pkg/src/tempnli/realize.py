"""Rendering of logical forms into premise/hypothesis sentences.

Every sentence is a template clause plus exactly one temporal phrase (two for
span premises), ends in a single period, and reproduces list surface forms
literally. Hypothesis phrases with before/after never carry at/in/on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import (
    After,
    Anchor,
    AtPoint,
    Before,
    ClaimMode,
    DurationClaim,
    DurationValue,
    FutureOffset,
    LISTS,
    ListKind,
    PointLike,
    TimePoint,
    ordinal,
)
from .templates import EventTemplate


class RealizationError(ValueError):
    pass


class Position(str, enum.Enum):
    FINAL = "final"
    FRONTED = "fronted"


class Tense(str, enum.Enum):
    PAST = "past"
    FUTURE = "future"


class Wording(str, enum.Enum):
    FROM_TO = "from_to"
    BEGAN_UNTIL = "began_until"


@dataclass(frozen=True)
class RealizationStyle:
    position: Position = Position.FINAL
    tense: Tense = Tense.PAST
    wording: Wording = Wording.FROM_TO


def point_surface(p: PointLike) -> str:
    """Bare surface string: '12 PM', 'October 2011', '21st Sep 2013'."""
    if isinstance(p, TimePoint):
        return p.surface
    month = LISTS[p.month_style].items[p.month]
    if p.monthday is None:
        return f"{month} {p.year}"
    return f"{ordinal(p.monthday)} {month} {p.year}"


_PREPOSITION = {
    ListKind.HOUR12: "at",
    ListKind.HOUR24: "at",
    ListKind.WEEKDAY: "on",
    ListKind.MONTHDAY: "on",
    ListKind.MONTH_FULL: "in",
    ListKind.MONTH_ABBREV: "in",
    ListKind.YEAR: "in",
}


def point_preposition(p: PointLike) -> str:
    if isinstance(p, TimePoint):
        return _PREPOSITION[p.kind]
    return "on" if p.monthday is not None else "in"


def render_point_phrase(p: PointLike) -> str:
    """Prepositioned phrase for an exact point: 'at 12 PM', 'in March'."""
    return f"{point_preposition(p)} {point_surface(p)}"


def _capitalize(text: str) -> str:
    return text[0].upper() + text[1:]


def _assemble(clause: str, phrase: str, position: Position) -> str:
    if position is Position.FRONTED:
        return f"{_capitalize(phrase)}, {clause}."
    return f"{_capitalize(clause)} {phrase}."


def _occurrence_clause(template: EventTemplate, tense: Tense) -> str:
    clause = template.occurrence_past if tense is Tense.PAST else template.occurrence_future
    if clause is None:
        raise RealizationError(f"template {template.id!r} has no occurrence clause")
    return clause


def render_order_sentence(template: EventTemplate, spec, style: RealizationStyle) -> str:
    """Point or one-sided interval claim: 'He left his job before 5 PM.'"""
    if isinstance(spec, AtPoint):
        phrase = render_point_phrase(spec.point)
    elif isinstance(spec, Before):
        phrase = f"before {point_surface(spec.point)}"
    elif isinstance(spec, After):
        phrase = f"after {point_surface(spec.point)}"
    else:
        raise RealizationError(f"cannot realize {type(spec).__name__} as an ordering claim")
    return _assemble(_occurrence_clause(template, style.tense), phrase, style.position)


def _duration_stem(template: EventTemplate) -> str:
    if template.duration_stem is None:
        raise RealizationError(f"template {template.id!r} has no duration wording")
    return template.duration_stem


def render_duration_premise(
    template: EventTemplate, start: PointLike, end: PointLike, style: RealizationStyle
) -> str:
    if style.wording is Wording.FROM_TO:
        stem = _duration_stem(template)
        return f"{_capitalize(stem)} from {point_surface(start)} to {point_surface(end)}."
    if template.duration_alt is None:
        raise RealizationError(f"template {template.id!r} has no alternate duration wording")
    sentence = template.duration_alt.format(
        start=render_point_phrase(start), end=point_surface(end)
    )
    return f"{_capitalize(sentence)}."


def duration_surface(value: DurationValue) -> str:
    """'5 hours', '1 hour', '4 years 4 months'; zero components are dropped."""
    if value.year_month is not None:
        years, months = value.year_month
        parts = []
        if years:
            parts.append(f"{years} {'years' if years != 1 else 'year'}")
        if months:
            parts.append(f"{months} {'months' if months != 1 else 'month'}")
        if not parts:
            raise RealizationError("cannot render a zero-length span")
        return " ".join(parts)
    count = value.total()
    unit = value.unit.value if count != 1 else value.unit.value[:-1]
    return f"{count} {unit}"


def render_duration_claim_phrase(claim: DurationClaim) -> str:
    if claim.mode is ClaimMode.EQUAL:
        return f"for {duration_surface(claim.value)}"
    return f"for less than {duration_surface(claim.value)}"


def render_duration_hypothesis(template: EventTemplate, claim: DurationClaim) -> str:
    stem = _duration_stem(template)
    return f"{_capitalize(stem)} {render_duration_claim_phrase(claim)}."


def render_future_offset(template: EventTemplate, spec: FutureOffset, style: RealizationStyle) -> str:
    """Future event at/within an offset: 'The store will close in 2 hours.'"""
    surface = duration_surface(spec.value)
    if spec.anchor is Anchor.AT:
        phrase = f"in {surface}"
    else:
        phrase = f"{spec.anchor.value} {surface}"
    return _assemble(_occurrence_clause(template, Tense.FUTURE), phrase, style.position)
