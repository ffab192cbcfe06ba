"""Command-line interface: generate, stats, verify, oracle.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 file I/O or dataset format error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .dataset import (
    DatasetFormatError,
    compute_stats,
    format_stats,
    read_dataset,
    stats_as_json,
    write_dataset,
)
from .generate import GenerationConfig, SET_IDS, generate_pairs
from .oracle import LabelingError
from .parsing import ParseError, label_sentence_pair, parse_sentence, relabel
from .templates import TemplateError, load_templates

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); the contract is 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tempnli", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a challenge set")
    gen.add_argument("--set", required=True, choices=SET_IDS, dest="set_id")
    gen.add_argument("--split", required=True, choices=("train", "test", "both"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--templates", default=None, help="template file (default: packaged bank)")
    gen.add_argument("--out", required=True, help="output file, or directory when --split both")
    gen.add_argument("--iterations", type=int, default=5)
    gen.add_argument("--difference-range", type=int, default=5)
    gen.add_argument("--days-per-month", type=int, default=30)
    gen.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    gen.add_argument("--workers", type=int, default=1)

    stats = sub.add_parser("stats", help="summarize a generated dataset")
    stats.add_argument("--in", dest="path", required=True)
    stats.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="re-parse and re-label every row")
    verify.add_argument("--in", dest="path", required=True)

    oracle = sub.add_parser("oracle", help="label one premise/hypothesis pair")
    oracle.add_argument("--premise", required=True)
    oracle.add_argument("--hypothesis", required=True)

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    bank = load_templates(args.templates)
    config = GenerationConfig(
        master_seed=args.seed,
        iterations=args.iterations,
        difference_range=args.difference_range,
        days_per_month=args.days_per_month,
    )
    splits = ("train", "test") if args.split == "both" else (args.split,)
    out = Path(args.out)
    for split in splits:
        pairs, report = generate_pairs(args.set_id, config, bank, split, workers=args.workers)
        if args.split == "both":
            path = out / f"{args.set_id}.{split}.{args.format}"
        else:
            path = out
        write_dataset(pairs, path, args.format)
        message = f"wrote {report.pair_count} rows to {path}"
        if report.skipped_templates:
            message += f" ({report.skipped_templates} templates without compatible units skipped)"
        if report.skipped_blocks:
            message += f" ({report.skipped_blocks} infeasible blocks skipped)"
        print(message)
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    stats = compute_stats(read_dataset(args.path))
    print(stats_as_json(stats) if args.json else format_stats(stats))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    pairs = read_dataset(args.path)
    failures = 0
    for index, pair in enumerate(pairs, start=1):
        try:
            relabeled = relabel(parse_sentence(pair.premise), parse_sentence(pair.hypothesis))
        except (ParseError, LabelingError) as exc:
            failures += 1
            if failures <= 10:
                print(f"row {index}: {exc}", file=sys.stderr)
            continue
        if relabeled is not pair.label:
            failures += 1
            if failures <= 10:
                print(
                    f"row {index}: stored {pair.label.value}, re-derived {relabeled.value}",
                    file=sys.stderr,
                )
    if failures:
        print(f"verification failed on {failures} of {len(pairs)} rows", file=sys.stderr)
        return EXIT_VERIFY
    print(f"verified {len(pairs)} rows")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    print(label_sentence_pair(args.premise, args.hypothesis).value)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_oracle(args)
    except (ParseError, LabelingError, TemplateError, ValueError) as exc:
        if isinstance(exc, DatasetFormatError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
