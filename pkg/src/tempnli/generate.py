"""Deterministic construction of the three challenge sets.

Each (template, method, iteration) cell gets its own hash-derived RNG, so the
emitted pairs are a pure function of the master seed and config; results are
stably sorted before writing, which makes worker count irrelevant to output.
Every stored label comes from an oracle call, never from construction logic.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping

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
    FutureOffset,
    Label,
    LISTS,
    ListKind,
    TimePoint,
    months_value,
    point_coordinate,
)
from .oracle import (
    WRAP_CYCLE,
    adjacent_pair,
    composite_gold_duration,
    convert_down,
    cross_unit_label,
    duration_label,
    gold_duration,
    order_label,
)
from .realize import (
    Position,
    RealizationStyle,
    Tense,
    Wording,
    render_duration_hypothesis,
    render_duration_premise,
    render_future_offset,
    render_order_sentence,
)
from .templates import EventTemplate, TemplateBank

SET_ORDER = "temp-order"
SET_DURATION = "temp-duration"
SET_CROSS_UNIT = "cross-unit"
SET_IDS = (SET_ORDER, SET_DURATION, SET_CROSS_UNIT)

#: Year windows follow the half-length rule of the 101-year list.
MAX_YEAR_GAP = 50

_SAMPLE_RETRIES = 10_000


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenerationConfig:
    master_seed: int = 0
    iterations: int = 5
    difference_range: int = 5
    days_per_month: int = 30
    t1_magnitudes: Mapping[DurationUnit, tuple[int, ...]] = field(
        default_factory=lambda: dict(DEFAULT_T1_MAGNITUDES)
    )
    include_position_variants: bool = True
    include_tense_variants: bool = True
    include_interval_premises: bool = True
    include_cross_list: bool = True
    include_composite_dates: bool = True

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if self.difference_range < 1:
            raise ValueError("difference range must be at least 1")
        if any(m < 1 for values in self.t1_magnitudes.values() for m in values):
            raise ValueError("premise offset magnitudes must be at least 1")


DEFAULT_T1_MAGNITUDES: dict[DurationUnit, tuple[int, ...]] = {
    DurationUnit.MINUTES: (2, 5, 10, 30),
    DurationUnit.HOURS: (2, 3, 4, 6, 8, 12),
    DurationUnit.DAYS: (2, 3, 4, 5, 10),
    DurationUnit.MONTHS: (2, 3, 4, 6, 10),
    DurationUnit.YEARS: (2, 3, 5, 10),
}


@dataclass(frozen=True)
class PairMeta:
    set_id: str
    template_id: str
    split: str
    sampling_method: str
    variation: str
    hypothesis_type: str
    unit_pair: str
    seed_path: str


@dataclass(frozen=True)
class NLIPair:
    premise: str
    hypothesis: str
    label: Label
    meta: PairMeta

    def sort_key(self) -> tuple[str, str, str]:
        return (self.meta.template_id, self.meta.sampling_method, self.meta.seed_path)


@dataclass
class GenerationReport:
    pair_count: int = 0
    skipped_templates: int = 0
    skipped_blocks: int = 0


def derive_seed(master_seed: int, set_id: str, template_id: str, iteration: int, method_id: str) -> int:
    """Collision-resistant per-cell seed; independent streams per tuple."""
    key = f"{master_seed}|{set_id}|{template_id}|{iteration}|{method_id}"
    return int.from_bytes(hashlib.sha256(key.encode("utf-8")).digest()[:8], "big")


def sample_point_pair(
    kind: ListKind, rng: random.Random, with_replacement: bool
) -> tuple[TimePoint, TimePoint]:
    """Two indices from one list, at most half the list length apart."""
    length = len(LISTS[kind])
    i, j = _pair_indices(rng, length, length // 2, with_replacement)
    return TimePoint(kind, i), TimePoint(kind, j)


def _pair_indices(
    rng: random.Random, length: int, max_distance: int, with_replacement: bool
) -> tuple[int, int]:
    for _ in range(_SAMPLE_RETRIES):
        i = rng.randrange(length)
        j = rng.randrange(length)
        if not with_replacement and i == j:
            continue
        if abs(i - j) <= max_distance:
            return i, j
    raise GenerationError("point-pair sampling failed to satisfy the distance bound")


def _sample_my_date(rng: random.Random, monthday: bool) -> CompositeDate:
    return CompositeDate(
        month=rng.randrange(12),
        year=rng.randrange(1900, 2001),
        monthday=rng.randint(1, 28) if monthday else None,
        month_style=rng.choice((ListKind.MONTH_FULL, ListKind.MONTH_ABBREV)),
    )


def _sample_date_pair(rng: random.Random, monthday: bool) -> tuple[CompositeDate, CompositeDate]:
    for _ in range(_SAMPLE_RETRIES):
        a = _sample_my_date(rng, monthday)
        b = _sample_my_date(rng, monthday)
        if abs(a.year - b.year) <= MAX_YEAR_GAP:
            return a, b
    raise GenerationError("date sampling failed to satisfy the year-gap bound")


# ---------------------------------------------------------------------------
# Temp-Order: 11 ways of choosing the two instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderMethod:
    id: str
    required_units: frozenset[str]
    cross_list: bool
    sample: Callable[[random.Random], tuple]


def _same_list_sampler(kind: ListKind):
    def sample(rng: random.Random):
        return sample_point_pair(kind, rng, with_replacement=True)

    return sample


def _mixed_sampler(kind_a: ListKind, kind_b: ListKind):
    def sample(rng: random.Random):
        length = len(LISTS[kind_a])
        i, j = _pair_indices(rng, length, length // 2, with_replacement=True)
        first, second = rng.choice(((kind_a, kind_b), (kind_b, kind_a)))
        return TimePoint(first, i), TimePoint(second, j)

    return sample


def _date_sampler(monthday: bool):
    def sample(rng: random.Random):
        return _sample_date_pair(rng, monthday)

    return sample


ORDER_METHODS: tuple[OrderMethod, ...] = (
    OrderMethod("hour12", frozenset({"hour"}), False, _same_list_sampler(ListKind.HOUR12)),
    OrderMethod("hour24", frozenset({"hour"}), False, _same_list_sampler(ListKind.HOUR24)),
    OrderMethod(
        "hour_mix", frozenset({"hour"}), True, _mixed_sampler(ListKind.HOUR12, ListKind.HOUR24)
    ),
    OrderMethod("weekday", frozenset({"weekday"}), False, _same_list_sampler(ListKind.WEEKDAY)),
    OrderMethod("monthday", frozenset({"monthday"}), False, _same_list_sampler(ListKind.MONTHDAY)),
    OrderMethod(
        "month_full", frozenset({"month"}), False, _same_list_sampler(ListKind.MONTH_FULL)
    ),
    OrderMethod(
        "month_abbrev", frozenset({"month"}), False, _same_list_sampler(ListKind.MONTH_ABBREV)
    ),
    OrderMethod(
        "month_mix",
        frozenset({"month"}),
        True,
        _mixed_sampler(ListKind.MONTH_FULL, ListKind.MONTH_ABBREV),
    ),
    OrderMethod("year", frozenset({"year"}), False, _same_list_sampler(ListKind.YEAR)),
    OrderMethod("date_my", frozenset({"month", "year"}), True, _date_sampler(False)),
    OrderMethod("date_dmy", frozenset({"monthday", "month", "year"}), True, _date_sampler(True)),
)


def _order_methods_for(template: EventTemplate, config: GenerationConfig) -> list[OrderMethod]:
    methods = []
    for method in ORDER_METHODS:
        if not method.required_units <= template.occurrence_units:
            continue
        if method.cross_list and not config.include_cross_list:
            continue
        if method.id in ("date_my", "date_dmy") and not config.include_composite_dates:
            continue
        methods.append(method)
    return methods


_POINT_STYLES: tuple[tuple[str, RealizationStyle], ...] = (
    ("point_final_past", RealizationStyle(Position.FINAL, Tense.PAST)),
    ("point_fronted_past", RealizationStyle(Position.FRONTED, Tense.PAST)),
    ("point_final_future", RealizationStyle(Position.FINAL, Tense.FUTURE)),
)

_INTERVAL_GRID: tuple[tuple[str, type, type], ...] = (
    ("interval_before_before", Before, Before),
    ("interval_before_after", Before, After),
    ("interval_after_before", After, Before),
    ("interval_after_after", After, After),
)


def _premise_interval_ok(spec, point) -> bool:
    # A before/after premise whose interval is empty on its clamped axis
    # ("before 12 AM") has no defined label; resample instead.
    if isinstance(point, CompositeDate):
        return True
    axis = point.axis
    if axis is Axis.YEAR:
        return True
    length = len(LISTS[point.kind])
    index = point_coordinate(point)
    if spec is Before:
        return index > 0
    return index < length - 1


def _order_cell(
    template: EventTemplate, method: OrderMethod, iteration: int, config: GenerationConfig
) -> list[NLIPair]:
    rng = random.Random(derive_seed(config.master_seed, SET_ORDER, template.id, iteration, method.id))
    pairs: list[NLIPair] = []
    ordinal = 0

    styles = _POINT_STYLES
    if not config.include_position_variants:
        styles = tuple(s for s in styles if "fronted" not in s[0])
    if not config.include_tense_variants:
        styles = tuple(s for s in styles if "future" not in s[0])

    def emit(variation: str, premise_spec, hypothesis_spec, style: RealizationStyle, htype: str):
        nonlocal ordinal
        label = order_label(premise_spec, hypothesis_spec)
        premise = render_order_sentence(template, premise_spec, style)
        hypothesis = render_order_sentence(template, hypothesis_spec, style)
        meta = PairMeta(
            set_id=SET_ORDER,
            template_id=template.id,
            split=template.split,
            sampling_method=method.id,
            variation=variation,
            hypothesis_type=htype,
            unit_pair="",
            seed_path=f"{SET_ORDER}/{template.id}/{method.id}/i{iteration:03d}/p{ordinal:02d}",
        )
        pairs.append(NLIPair(premise, hypothesis, label, meta))
        ordinal += 1

    for variation, style in styles:
        first, second = method.sample(rng)
        direction = rng.choice((Before, After))
        emit(variation, AtPoint(first), direction(second), style, direction.__name__.lower())

    if config.include_interval_premises:
        for variation, premise_op, hypothesis_op in _INTERVAL_GRID:
            for _ in range(_SAMPLE_RETRIES):
                first, second = method.sample(rng)
                if _premise_interval_ok(premise_op, first):
                    break
            else:
                raise GenerationError("could not sample a nonempty premise interval")
            emit(
                variation,
                premise_op(first),
                hypothesis_op(second),
                RealizationStyle(Position.FINAL, Tense.PAST),
                hypothesis_op.__name__.lower(),
            )

    return pairs


# ---------------------------------------------------------------------------
# Temp-Duration: span premises with a six-hypothesis fan-out
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DurationMethod:
    id: str
    required_unit: str
    kinds: tuple[ListKind, ...]  # empty for composite dates
    cross_list: bool
    composite: bool = False

    @property
    def wrappable(self) -> bool:
        if self.composite:
            return False
        return AXIS_OF_METHOD[self.id] in WRAP_CYCLE


AXIS_OF_METHOD = {
    "hour12": Axis.HOUR,
    "hour24": Axis.HOUR,
    "hour_mix": Axis.HOUR,
    "weekday": Axis.WEEKDAY,
    "monthday": Axis.MONTHDAY,
    "month_full": Axis.MONTH,
    "month_abbrev": Axis.MONTH,
    "month_mix": Axis.MONTH,
    "year": Axis.YEAR,
    "date_my": Axis.DATE_MY,
}

DURATION_METHODS: tuple[DurationMethod, ...] = (
    DurationMethod("hour12", "hours", (ListKind.HOUR12, ListKind.HOUR12), False),
    DurationMethod("hour24", "hours", (ListKind.HOUR24, ListKind.HOUR24), False),
    DurationMethod("hour_mix", "hours", (ListKind.HOUR12, ListKind.HOUR24), True),
    DurationMethod("weekday", "days", (ListKind.WEEKDAY, ListKind.WEEKDAY), False),
    DurationMethod("monthday", "days", (ListKind.MONTHDAY, ListKind.MONTHDAY), False),
    DurationMethod("month_full", "months", (ListKind.MONTH_FULL, ListKind.MONTH_FULL), False),
    DurationMethod("month_abbrev", "months", (ListKind.MONTH_ABBREV, ListKind.MONTH_ABBREV), False),
    DurationMethod("month_mix", "months", (ListKind.MONTH_FULL, ListKind.MONTH_ABBREV), True),
    DurationMethod("year", "years", (ListKind.YEAR, ListKind.YEAR), False),
    DurationMethod("date_my", "years", (), True, composite=True),
)

_FAN_OUT: tuple[tuple[str, ClaimMode, Callable[[int], int]], ...] = (
    ("equal_gold", ClaimMode.EQUAL, lambda g: g),
    ("equal_gold_plus_1", ClaimMode.EQUAL, lambda g: g + 1),
    ("equal_gold_times_10", ClaimMode.EQUAL, lambda g: g * 10),
    ("less_than_gold", ClaimMode.LESS_THAN, lambda g: g),
    ("less_than_gold_plus_1", ClaimMode.LESS_THAN, lambda g: g + 1),
    ("less_than_gold_times_10", ClaimMode.LESS_THAN, lambda g: g * 10),
)


def _duration_methods_for(template: EventTemplate, config: GenerationConfig) -> list[DurationMethod]:
    methods = []
    for method in DURATION_METHODS:
        if method.required_unit not in template.duration_units:
            continue
        if method.cross_list and method.composite and not config.include_composite_dates:
            continue
        if method.cross_list and not method.composite and not config.include_cross_list:
            continue
        methods.append(method)
    return methods


def _sample_span(
    method: DurationMethod, rng: random.Random, wrapped: bool
) -> tuple[TimePoint, TimePoint]:
    kind_a, kind_b = method.kinds
    length = len(LISTS[kind_a])
    start_kind, end_kind = rng.choice(((kind_a, kind_b), (kind_b, kind_a)))
    if wrapped:
        # Fix the wrapped gold in [1, half-length]; the start sits near the
        # cycle end so the end index lands before it.
        gold = rng.randint(1, length // 2)
        start = rng.randint(length - gold, length - 1)
        end = start + gold - length
    else:
        i, j = _pair_indices(rng, length, length // 2, with_replacement=False)
        start, end = min(i, j), max(i, j)
    return TimePoint(start_kind, start), TimePoint(end_kind, end)


def _sample_composite_span(rng: random.Random) -> tuple[CompositeDate, CompositeDate]:
    # Spans of at least a year keep the year-month rendering distinct from
    # the months-only rendering.
    for _ in range(_SAMPLE_RETRIES):
        a, b = _sample_date_pair(rng, monthday=False)
        total = (b.year - a.year) * 12 + (b.month - a.month)
        if total < 0:
            a, b = b, a
            total = -total
        if total >= 12:
            return a, b
    raise GenerationError("composite span sampling failed")


def _duration_cell(
    template: EventTemplate, method: DurationMethod, iteration: int, config: GenerationConfig
) -> list[NLIPair]:
    rng = random.Random(
        derive_seed(config.master_seed, SET_DURATION, template.id, iteration, method.id)
    )
    pairs: list[NLIPair] = []
    ordinal = 0

    def emit(variation: str, premise: str, claim: DurationClaim, gold: DurationValue, htype: str):
        nonlocal ordinal
        label = duration_label(gold, claim)
        hypothesis = render_duration_hypothesis(template, claim)
        meta = PairMeta(
            set_id=SET_DURATION,
            template_id=template.id,
            split=template.split,
            sampling_method=method.id,
            variation=variation,
            hypothesis_type=htype,
            unit_pair="",
            seed_path=f"{SET_DURATION}/{template.id}/{method.id}/i{iteration:03d}/p{ordinal:02d}",
        )
        pairs.append(NLIPair(premise, hypothesis, label, meta))
        ordinal += 1

    wordings = (Wording.FROM_TO, Wording.BEGAN_UNTIL)
    wraps = (False, True) if method.wrappable else (False,)

    for wording in wordings:
        for wrapped in wraps:
            style = RealizationStyle(wording=wording)
            variation = wording.value + ("_wrapped" if wrapped else "")
            if method.composite:
                start, end = _sample_composite_span(rng)
                gold = composite_gold_duration(start, end)
                premise = render_duration_premise(template, start, end, style)
                for fmt, composite in (("year_month", True), ("months_only", False)):
                    for htype, mode, perturb in _FAN_OUT:
                        claim = DurationClaim(mode, months_value(perturb(gold.total()), composite))
                        emit(f"{variation}_{fmt}", premise, claim, gold, htype)
            else:
                start, end = _sample_span(method, rng, wrapped)
                gold = gold_duration(start, end, wrapped=wrapped)
                premise = render_duration_premise(template, start, end, style)
                for htype, mode, perturb in _FAN_OUT:
                    claim = DurationClaim(mode, DurationValue(gold.unit, perturb(gold.total())))
                    emit(variation, premise, claim, gold, htype)

    return pairs


# ---------------------------------------------------------------------------
# Cross-Unit: twelve-pair blocks over adjacent units
# ---------------------------------------------------------------------------

_OCCURRENCE_TO_OFFSET_UNIT = {
    "hour": DurationUnit.HOURS,
    "weekday": DurationUnit.DAYS,
    "monthday": DurationUnit.DAYS,
    "month": DurationUnit.MONTHS,
    "year": DurationUnit.YEARS,
}

_UNIT_PAIR_ORDER = (DurationUnit.HOURS, DurationUnit.DAYS, DurationUnit.MONTHS, DurationUnit.YEARS)


def unit_pairs_for(template: EventTemplate) -> list[DurationUnit]:
    """Higher units of the adjacent pairs a template's occurrence values admit."""
    mapped = {_OCCURRENCE_TO_OFFSET_UNIT[u] for u in template.occurrence_units}
    return [u for u in _UNIT_PAIR_ORDER if u in mapped]


_BLOCK_ANCHORS = (Anchor.AT, Anchor.BEFORE, Anchor.AFTER)
_BLOCK_HYPOTHESES = (("before", "high"), ("before", "low"), ("after", "high"), ("after", "low"))


def _cross_unit_cell(
    template: EventTemplate, higher: DurationUnit, iteration: int, config: GenerationConfig
) -> tuple[list[NLIPair], int]:
    pair = adjacent_pair(higher, config.days_per_month)
    method_id = f"{pair.higher.value}_{pair.lower.value}"
    rng = random.Random(
        derive_seed(config.master_seed, SET_CROSS_UNIT, template.id, iteration, method_id)
    )
    pairs: list[NLIPair] = []
    skipped = 0
    ordinal = 0

    for t1 in config.t1_magnitudes.get(higher, ()):
        converted = convert_down(DurationValue(higher, t1), pair).total()
        bound = config.difference_range * pair.factor
        if converted - 1 < max(1, converted - bound):
            skipped += 1
            continue
        t2_low = rng.randint(max(1, converted - bound), converted - 1)
        t2_high = rng.randint(converted + 1, converted + bound)
        sides = {"high": t2_high, "low": t2_low}

        for anchor in _BLOCK_ANCHORS:
            for direction, side in _BLOCK_HYPOTHESES:
                premise_spec = FutureOffset(anchor, DurationValue(higher, t1))
                hypothesis_spec = FutureOffset(
                    Anchor(direction), DurationValue(pair.lower, sides[side])
                )
                label = cross_unit_label(premise_spec, hypothesis_spec, config.days_per_month)
                position = ordinal % 3 if config.include_position_variants else 0
                premise_style = RealizationStyle(
                    Position.FRONTED if position == 1 else Position.FINAL, Tense.FUTURE
                )
                hypothesis_style = RealizationStyle(
                    Position.FRONTED if position == 2 else Position.FINAL, Tense.FUTURE
                )
                premise = render_future_offset(template, premise_spec, premise_style)
                hypothesis = render_future_offset(template, hypothesis_spec, hypothesis_style)
                variation = "point" if anchor is Anchor.AT else f"interval_{anchor.value}"
                meta = PairMeta(
                    set_id=SET_CROSS_UNIT,
                    template_id=template.id,
                    split=template.split,
                    sampling_method=method_id,
                    variation=variation,
                    hypothesis_type=f"{direction}_{side}",
                    unit_pair=method_id,
                    seed_path=(
                        f"{SET_CROSS_UNIT}/{template.id}/{method_id}/t{t1:04d}"
                        f"/i{iteration:03d}/p{ordinal:03d}"
                    ),
                )
                pairs.append(NLIPair(premise, hypothesis, label, meta))
                ordinal += 1

    return pairs, skipped


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

def generate_pairs(
    set_id: str,
    config: GenerationConfig,
    bank: TemplateBank,
    split: str,
    workers: int = 1,
) -> tuple[list[NLIPair], GenerationReport]:
    """All pairs of one challenge set and split, stably sorted."""
    if set_id not in SET_IDS:
        raise ValueError(f"unknown set {set_id!r}")
    report = GenerationReport()
    tasks: list[Callable[[], list[NLIPair]]] = []

    for template in sorted(bank.split(split), key=lambda t: t.id):
        if set_id == SET_ORDER:
            methods = _order_methods_for(template, config)
            if not methods:
                report.skipped_templates += 1
            for method in methods:
                for iteration in range(config.iterations):
                    tasks.append(
                        lambda t=template, m=method, i=iteration: _order_cell(t, m, i, config)
                    )
        elif set_id == SET_DURATION:
            methods = _duration_methods_for(template, config)
            if not methods:
                report.skipped_templates += 1
            for method in methods:
                for iteration in range(config.iterations):
                    tasks.append(
                        lambda t=template, m=method, i=iteration: _duration_cell(t, m, i, config)
                    )
        else:
            highers = unit_pairs_for(template)
            if not highers:
                report.skipped_templates += 1
            for higher in highers:
                for iteration in range(config.iterations):
                    tasks.append(
                        lambda t=template, h=higher, i=iteration: _cross_unit_cell(t, h, i, config)
                    )

    def run(task):
        return task()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [task() for task in tasks]

    pairs: list[NLIPair] = []
    for result in results:
        if set_id == SET_CROSS_UNIT:
            cell_pairs, skipped = result
            report.skipped_blocks += skipped
            pairs.extend(cell_pairs)
        else:
            pairs.extend(result)

    pairs.sort(key=NLIPair.sort_key)
    report.pair_count = len(pairs)
    return pairs, report


def generate_temp_order(
    config: GenerationConfig, bank: TemplateBank, split: str, workers: int = 1
) -> tuple[list[NLIPair], GenerationReport]:
    return generate_pairs(SET_ORDER, config, bank, split, workers)


def generate_temp_duration(
    config: GenerationConfig, bank: TemplateBank, split: str, workers: int = 1
) -> tuple[list[NLIPair], GenerationReport]:
    return generate_pairs(SET_DURATION, config, bank, split, workers)


def generate_cross_unit(
    config: GenerationConfig, bank: TemplateBank, split: str, workers: int = 1
) -> tuple[list[NLIPair], GenerationReport]:
    return generate_pairs(SET_CROSS_UNIT, config, bank, split, workers)
