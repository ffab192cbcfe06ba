"""Challenge-set tooling for temporal-expression NLI: an exact labeling
oracle, deterministic generators for three probe sets (ordering, fine-grained
duration, cross-unit duration comparison), a round-trip verifier, and a CLI.
"""

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
    ListKind,
    TimePoint,
    canonical_index,
    collapse_label,
    date_key,
    point_of,
)
from .oracle import (
    LabelingError,
    UnitPair,
    adjacent_pair,
    composite_gold_duration,
    convert_down,
    cross_unit_label,
    duration_label,
    gold_duration,
    induce_interval,
    order_label,
)
from .parsing import ParseError, ParsedClaim, label_sentence_pair, parse_sentence, relabel
from .templates import EventTemplate, TemplateBank, load_templates, templates_for
from .generate import (
    GenerationConfig,
    NLIPair,
    PairMeta,
    generate_cross_unit,
    generate_pairs,
    generate_temp_duration,
    generate_temp_order,
)
from .dataset import compute_stats, read_dataset, write_dataset

__version__ = "0.1.0"
