"""Dataset serialization (TSV and JSONL) and corpus statistics."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .generate import NLIPair, PairMeta
from .model import Label

COLUMNS = (
    "premise",
    "hypothesis",
    "label",
    "set_id",
    "template_id",
    "split",
    "sampling_method",
    "variation",
    "hypothesis_type",
    "unit_pair",
    "seed_path",
)

FORMATS = ("tsv", "jsonl")

#: Meta columns that stats and score breakdowns facet over.
FACET_COLUMNS = ("sampling_method", "variation", "hypothesis_type", "unit_pair")


class DatasetFormatError(ValueError):
    """A dataset file that does not match the documented schema."""


def _row_values(pair: NLIPair) -> list[str]:
    meta = pair.meta
    return [
        pair.premise,
        pair.hypothesis,
        pair.label.value,
        meta.set_id,
        meta.template_id,
        meta.split,
        meta.sampling_method,
        meta.variation,
        meta.hypothesis_type,
        meta.unit_pair,
        meta.seed_path,
    ]


def _check_writable(values: Sequence[str]) -> None:
    for value in values:
        if "\t" in value or "\n" in value or "\r" in value:
            raise DatasetFormatError(f"field contains a tab or newline: {value!r}")


def write_dataset(pairs: Sequence[NLIPair], path: Union[str, Path], fmt: str = "tsv") -> None:
    """Write pairs in stable order; identical inputs give identical bytes."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if not pairs:
        raise ValueError("refusing to write an empty dataset")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    if fmt == "tsv":
        lines.append("\t".join(COLUMNS))
        for pair in pairs:
            values = _row_values(pair)
            _check_writable(values)
            lines.append("\t".join(values))
    else:
        for pair in pairs:
            values = _row_values(pair)
            _check_writable(values)
            lines.append(json.dumps(dict(zip(COLUMNS, values)), ensure_ascii=False))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _pair_from_values(values: Sequence[str], lineno: int, source: str) -> NLIPair:
    record = dict(zip(COLUMNS, values))
    try:
        label = Label(record["label"])
    except ValueError:
        raise DatasetFormatError(f"{source}:{lineno}: unknown label {record['label']!r}") from None
    meta = PairMeta(
        set_id=record["set_id"],
        template_id=record["template_id"],
        split=record["split"],
        sampling_method=record["sampling_method"],
        variation=record["variation"],
        hypothesis_type=record["hypothesis_type"],
        unit_pair=record["unit_pair"],
        seed_path=record["seed_path"],
    )
    return NLIPair(record["premise"], record["hypothesis"], label, meta)


def read_dataset(path: Union[str, Path]) -> list[NLIPair]:
    """Read a TSV or JSONL dataset file (format detected from the content)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise DatasetFormatError(f"{path}: empty dataset file")

    pairs = []
    if lines[0].lstrip().startswith("{"):
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetFormatError(f"{path}:{lineno}: bad JSON: {exc}") from None
            missing = [c for c in COLUMNS if c not in record]
            if missing:
                raise DatasetFormatError(f"{path}:{lineno}: missing fields {missing}")
            pairs.append(_pair_from_values([record[c] for c in COLUMNS], lineno, str(path)))
    else:
        if tuple(lines[0].split("\t")) != COLUMNS:
            raise DatasetFormatError(f"{path}:1: bad header")
        for lineno, line in enumerate(lines[1:], start=2):
            if not line:
                continue
            values = line.split("\t")
            if len(values) != len(COLUMNS):
                raise DatasetFormatError(
                    f"{path}:{lineno}: expected {len(COLUMNS)} columns, found {len(values)}"
                )
            pairs.append(_pair_from_values(values, lineno, str(path)))
    if not pairs:
        raise DatasetFormatError(f"{path}: no rows")
    return pairs


@dataclass(frozen=True)
class DatasetStats:
    row_count: int
    label_counts: dict[str, int]
    facets: dict[str, dict[str, int]]

    def label_percentages(self) -> dict[str, float]:
        return {
            label: 100.0 * count / self.row_count for label, count in self.label_counts.items()
        }


def compute_stats(pairs: Sequence[NLIPair]) -> DatasetStats:
    if not pairs:
        raise ValueError("no rows to summarize")
    labels = Counter(pair.label.value for pair in pairs)
    facets = {}
    for column in FACET_COLUMNS:
        counts = Counter(getattr(pair.meta, column) for pair in pairs)
        counts.pop("", None)
        if counts:
            facets[column] = dict(sorted(counts.items()))
    return DatasetStats(
        row_count=len(pairs),
        label_counts={label.value: labels.get(label.value, 0) for label in Label},
        facets=facets,
    )


def format_stats(stats: DatasetStats) -> str:
    lines = [f"rows\t{stats.row_count}"]
    for label, count in stats.label_counts.items():
        share = 100.0 * count / stats.row_count
        lines.append(f"label\t{label}\t{count}\t{share:.2f}%")
    for column, counts in stats.facets.items():
        for value, count in counts.items():
            lines.append(f"{column}\t{value}\t{count}")
    return "\n".join(lines)


def stats_as_json(stats: DatasetStats) -> str:
    payload = {
        "rows": stats.row_count,
        "labels": stats.label_counts,
        "label_percentages": {k: round(v, 4) for k, v in stats.label_percentages().items()},
        "facets": stats.facets,
    }
    return json.dumps(payload, indent=2, sort_keys=True)
