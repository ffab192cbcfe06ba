"""Generator tests: determinism, sampling constraints, fan-out structure,
label provenance, and split hygiene."""

import random
from collections import Counter, defaultdict

import pytest

from tempnli.generate import (
    GenerationConfig,
    ORDER_METHODS,
    derive_seed,
    generate_pairs,
    sample_point_pair,
    unit_pairs_for,
)
from tempnli.model import DurationUnit, Label, ListKind
from tempnli.parsing import parse_sentence
from tempnli.templates import load_templates

E, C, N = Label.ENTAILMENT, Label.CONTRADICTION, Label.NEUTRAL


@pytest.fixture(scope="module")
def bank():
    return load_templates()


@pytest.fixture(scope="module")
def small_config():
    return GenerationConfig(master_seed=13, iterations=2)


@pytest.fixture(scope="module")
def order_test(bank, small_config):
    pairs, _ = generate_pairs("temp-order", small_config, bank, "test")
    return pairs


@pytest.fixture(scope="module")
def duration_test(bank, small_config):
    pairs, _ = generate_pairs("temp-duration", small_config, bank, "test")
    return pairs


@pytest.fixture(scope="module")
def cross_unit_test(bank, small_config):
    pairs, _ = generate_pairs("cross-unit", small_config, bank, "test")
    return pairs


def test_sampling_methods_are_eleven():
    assert len(ORDER_METHODS) == 11
    assert len({m.id for m in ORDER_METHODS}) == 11


def test_sample_point_pair_distance_bound():
    rng = random.Random(0)
    for kind, bound in ((ListKind.HOUR12, 12), (ListKind.WEEKDAY, 3), (ListKind.YEAR, 50)):
        for _ in range(300):
            a, b = sample_point_pair(kind, rng, with_replacement=True)
            assert abs(a.index - b.index) <= bound


def test_sample_without_replacement_never_repeats():
    rng = random.Random(1)
    for _ in range(300):
        a, b = sample_point_pair(ListKind.WEEKDAY, rng, with_replacement=False)
        assert a.index != b.index


def test_admissible_partner_window():
    # i=3 on a 24-item list leaves exactly the window [0, 15]
    rng = random.Random(2)
    seen = set()
    for _ in range(5000):
        a, b = sample_point_pair(ListKind.HOUR12, rng, with_replacement=True)
        if a.index == 3:
            seen.add(b.index)
    assert seen <= set(range(0, 16))


def test_derive_seed_is_deterministic_and_collision_free():
    assert derive_seed(1, "temp-order", "x", 0, "hour12") == derive_seed(
        1, "temp-order", "x", 0, "hour12"
    )
    seeds = {
        derive_seed(seed, set_id, template, iteration, method)
        for seed in (0, 1)
        for set_id in ("temp-order", "temp-duration")
        for template in (f"t{i}" for i in range(25))
        for iteration in range(10)
        for method in ("hour12", "weekday", "date_my")
    }
    assert len(seeds) == 2 * 2 * 25 * 10 * 3


def test_generation_is_deterministic(bank, small_config, order_test):
    again, _ = generate_pairs("temp-order", small_config, bank, "test")
    assert again == order_test


def test_worker_count_does_not_change_output(bank, small_config, cross_unit_test):
    for workers in (2, 5):
        pairs, _ = generate_pairs("cross-unit", small_config, bank, "test", workers=workers)
        assert pairs == cross_unit_test


def test_split_hygiene(bank, small_config, order_test):
    train, _ = generate_pairs("temp-order", small_config, bank, "train")
    train_ids = {p.meta.template_id for p in train}
    test_ids = {p.meta.template_id for p in order_test}
    assert not train_ids & test_ids
    assert all(p.meta.split == "test" for p in order_test)


def test_stored_labels_match_oracle_recomputation(order_test, duration_test, cross_unit_test):
    from tempnli.parsing import relabel

    for pairs in (order_test, duration_test, cross_unit_test):
        for pair in pairs:
            assert relabel(parse_sentence(pair.premise), parse_sentence(pair.hypothesis)) is pair.label


def test_order_rows_respect_half_length_bound(order_test):
    same_list_axes = {
        "hour12": 12, "hour24": 12, "hour_mix": 12,
        "weekday": 3, "monthday": 14,
        "month_full": 6, "month_abbrev": 6, "month_mix": 6,
        "year": 50,
    }
    from tempnli.model import point_coordinate

    checked = 0
    for pair in order_test:
        bound = same_list_axes.get(pair.meta.sampling_method)
        if bound is None:
            continue
        premise_point = parse_sentence(pair.premise).spec.point
        hypothesis_point = parse_sentence(pair.hypothesis).spec.point
        assert abs(point_coordinate(premise_point) - point_coordinate(hypothesis_point)) <= bound
        checked += 1
    assert checked


def test_order_variations_cover_all_shapes(order_test):
    variations = {p.meta.variation for p in order_test}
    assert {
        "point_final_past",
        "point_fronted_past",
        "point_final_future",
        "interval_before_before",
        "interval_before_after",
        "interval_after_before",
        "interval_after_after",
    } <= variations


def test_order_methods_reach_all_eleven(order_test):
    assert {p.meta.sampling_method for p in order_test} == {m.id for m in ORDER_METHODS}


def _blocks(pairs, size):
    groups = defaultdict(list)
    for pair in pairs:
        prefix, ordinal = pair.meta.seed_path.rsplit("/p", 1)
        groups[(prefix, int(ordinal) // size)].append(pair)
    return groups


def test_duration_fan_out_blocks(duration_test):
    blocks = _blocks(duration_test, 6)
    for block in blocks.values():
        assert len(block) == 6
        labels = Counter(p.label for p in block)
        assert labels[E] == 3 and labels[C] == 3
        assert len({p.premise for p in block}) == 1
        assert len({p.hypothesis for p in block}) == 6
        assert {p.meta.hypothesis_type for p in block} == {
            "equal_gold",
            "equal_gold_plus_1",
            "equal_gold_times_10",
            "less_than_gold",
            "less_than_gold_plus_1",
            "less_than_gold_times_10",
        }


def test_duration_dataset_is_exactly_balanced(duration_test):
    labels = Counter(p.label for p in duration_test)
    assert labels[E] == labels[C]
    assert labels[N] == 0


def test_duration_wrapped_rows_only_on_wrappable_lists(duration_test):
    for pair in duration_test:
        if "wrapped" in pair.meta.variation:
            assert pair.meta.sampling_method not in ("monthday", "year", "date_my")


def test_composite_rows_emit_both_claim_formats(duration_test):
    composite_variations = {
        p.meta.variation for p in duration_test if p.meta.sampling_method == "date_my"
    }
    assert any(v.endswith("year_month") for v in composite_variations)
    assert any(v.endswith("months_only") for v in composite_variations)


def test_cross_unit_blocks_are_twelve_with_exact_thirds(cross_unit_test):
    groups = defaultdict(list)
    for pair in cross_unit_test:
        prefix, _ = pair.meta.seed_path.rsplit("/p", 1)
        t_prefix = prefix  # includes template, unit pair, t1 magnitude, iteration
        groups[t_prefix].append(pair)
    for block in groups.values():
        assert len(block) == 12
        labels = Counter(p.label for p in block)
        assert labels[E] == labels[C] == labels[N] == 4


def test_cross_unit_dataset_is_exactly_thirds(cross_unit_test):
    labels = Counter(p.label for p in cross_unit_test)
    assert labels[E] == labels[C] == labels[N]


def test_cross_unit_t2_stays_in_difference_window(cross_unit_test):
    factors = {"hours_minutes": 60, "days_hours": 24, "months_days": 30, "years_months": 12}
    for pair in cross_unit_test:
        premise = parse_sentence(pair.premise).spec
        hypothesis = parse_sentence(pair.hypothesis).spec
        factor = factors[pair.meta.unit_pair]
        converted = premise.value.total() * factor
        difference = abs(hypothesis.value.total() - converted)
        assert 1 <= difference <= 5 * factor


def test_unit_pairs_follow_occurrence_values(bank):
    for template in bank.templates:
        highers = unit_pairs_for(template)
        if "hour" in template.occurrence_units:
            assert DurationUnit.HOURS in highers
        if "year" in template.occurrence_units:
            assert DurationUnit.YEARS in highers
        if {"weekday", "monthday"} & template.occurrence_units:
            assert DurationUnit.DAYS in highers


def test_variation_toggles_trim_output(bank):
    config = GenerationConfig(
        master_seed=13,
        iterations=1,
        include_interval_premises=False,
        include_cross_list=False,
        include_composite_dates=False,
        include_position_variants=False,
        include_tense_variants=False,
    )
    pairs, _ = generate_pairs("temp-order", config, bank, "test")
    assert {p.meta.variation for p in pairs} == {"point_final_past"}
    assert {p.meta.sampling_method for p in pairs} <= {
        "hour12", "hour24", "weekday", "monthday", "month_full", "month_abbrev", "year"
    }


def test_config_validation():
    with pytest.raises(ValueError):
        GenerationConfig(iterations=0)
    with pytest.raises(ValueError):
        GenerationConfig(difference_range=0)
    with pytest.raises(ValueError):
        GenerationConfig(t1_magnitudes={DurationUnit.HOURS: (0,)})
