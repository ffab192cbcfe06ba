"""Event template inventory: loading, validation, and unit/split filters.

Template file schema (UTF-8 TSV, one record per template):

    id, split, occurrence_units, duration_units,
    occurrence_past, occurrence_future, duration_stem, duration_alt

occurrence_units is a comma-separated subset of {hour, weekday, monthday,
month, year} ("day" is accepted as an alias of "weekday"); duration_units of
{hours, days, months, years}. Clauses are stored with mid-sentence casing;
the realizer capitalizes sentence-initial words. duration_alt must follow the
"... began {start} and lasted until {end}" frame (present-tense begins/lasts
also accepted) so that generated sentences stay parseable.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

OCCURRENCE_UNITS = ("hour", "weekday", "monthday", "month", "year")
DURATION_UNITS = ("hours", "days", "months", "years")
_UNIT_ALIASES = {"day": "weekday"}

SPLITS = ("train", "test")

_ALT_FRAME = re.compile(r"^.+ (?:began|begins) \{start\} and (?:lasted|lasts) until \{end\}$")

_COLUMNS = (
    "id",
    "split",
    "occurrence_units",
    "duration_units",
    "occurrence_past",
    "occurrence_future",
    "duration_stem",
    "duration_alt",
)


class TemplateError(ValueError):
    """Raised when a template file violates the documented schema."""


@dataclass(frozen=True)
class EventTemplate:
    id: str
    split: str
    occurrence_units: frozenset[str]
    duration_units: frozenset[str]
    occurrence_past: Optional[str]
    occurrence_future: Optional[str]
    duration_stem: Optional[str]
    duration_alt: Optional[str]


@dataclass(frozen=True)
class TemplateBank:
    templates: tuple[EventTemplate, ...]

    def __len__(self) -> int:
        return len(self.templates)

    def split(self, split: str) -> tuple[EventTemplate, ...]:
        if split not in SPLITS:
            raise TemplateError(f"unknown split {split!r}")
        return tuple(t for t in self.templates if t.split == split)

    def split_counts(self) -> dict[str, int]:
        return {s: len(self.split(s)) for s in SPLITS}


def _parse_units(raw: str, vocabulary: tuple[str, ...], row: int) -> frozenset[str]:
    units = set()
    for token in filter(None, (t.strip() for t in raw.split(","))):
        token = _UNIT_ALIASES.get(token, token)
        if token not in vocabulary:
            raise TemplateError(f"row {row}: unknown unit {token!r}")
        units.add(token)
    return frozenset(units)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise TemplateError(message)


def parse_templates(text: str, source: str = "<templates>") -> TemplateBank:
    reader = csv.reader(io.StringIO(text), delimiter="\t")
    rows = list(reader)
    _require(bool(rows), f"{source}: empty template file")
    _require(tuple(rows[0]) == _COLUMNS, f"{source}: bad header {rows[0]!r}")

    templates = []
    seen: set[str] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell for cell in row):
            continue
        _require(len(row) <= len(_COLUMNS), f"{source}:{lineno}: expected {len(_COLUMNS)} columns")
        row = list(row) + [""] * (len(_COLUMNS) - len(row))
        record = dict(zip(_COLUMNS, (cell.strip() for cell in row)))
        tid = record["id"]
        _require(bool(tid), f"{source}:{lineno}: empty template id")
        _require(tid not in seen, f"{source}:{lineno}: duplicate template id {tid!r}")
        seen.add(tid)
        _require(record["split"] in SPLITS, f"{source}:{lineno}: bad split {record['split']!r}")

        occurrence = _parse_units(record["occurrence_units"], OCCURRENCE_UNITS, lineno)
        duration = _parse_units(record["duration_units"], DURATION_UNITS, lineno)
        _require(
            bool(occurrence or duration),
            f"{source}:{lineno}: template {tid!r} has no occurrence or duration units",
        )
        if occurrence:
            _require(
                bool(record["occurrence_past"] and record["occurrence_future"]),
                f"{source}:{lineno}: {tid!r} needs both occurrence clause variants",
            )
        if duration:
            _require(
                bool(record["duration_stem"] and record["duration_alt"]),
                f"{source}:{lineno}: {tid!r} needs a duration stem and alternate wording",
            )
            _require(
                _ALT_FRAME.match(record["duration_alt"]) is not None,
                f"{source}:{lineno}: {tid!r} alternate wording does not follow the "
                "'began {start} and lasted until {end}' frame",
            )
        templates.append(
            EventTemplate(
                id=tid,
                split=record["split"],
                occurrence_units=occurrence,
                duration_units=duration,
                occurrence_past=record["occurrence_past"] or None,
                occurrence_future=record["occurrence_future"] or None,
                duration_stem=record["duration_stem"] or None,
                duration_alt=record["duration_alt"] or None,
            )
        )
    return TemplateBank(tuple(templates))


def load_templates(source: Union[str, Path, None] = None) -> TemplateBank:
    """Load and validate a template bank; defaults to the packaged inventory."""
    if source is None:
        text = resources.files("tempnli").joinpath("data/templates.tsv").read_text("utf-8")
        return parse_templates(text, "templates.tsv")
    path = Path(source)
    return parse_templates(path.read_text("utf-8"), str(path))


def serialize_templates(bank: TemplateBank) -> str:
    """Inverse of parse_templates, up to unit ordering normalization."""
    out = io.StringIO()
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    writer.writerow(_COLUMNS)
    for t in bank.templates:
        writer.writerow(
            [
                t.id,
                t.split,
                ",".join(u for u in OCCURRENCE_UNITS if u in t.occurrence_units),
                ",".join(u for u in DURATION_UNITS if u in t.duration_units),
                t.occurrence_past or "",
                t.occurrence_future or "",
                t.duration_stem or "",
                t.duration_alt or "",
            ]
        )
    return out.getvalue()


def templates_for(bank: TemplateBank, split: str, unit: str) -> tuple[EventTemplate, ...]:
    """Templates in a split that support a unit, in stable id order."""
    unit = _UNIT_ALIASES.get(unit, unit)
    matches = [
        t
        for t in bank.split(split)
        if unit in t.occurrence_units or unit in t.duration_units
    ]
    return tuple(sorted(matches, key=lambda t: t.id))
