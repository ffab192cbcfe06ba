#!/usr/bin/env node
/**
 * Scoring CLI for generated challenge sets.
 *
 *   tempnli-eval score     --dataset D --predictions P [P2 ...] [--collapse] [--json]
 *   tempnli-eval majority  --dataset D --mode ternary|binary [--json]
 *   tempnli-eval breakdown --dataset D --predictions P --facet COLUMN [--collapse] [--json]
 *
 * Any classifier can plug in: read the dataset file, write one predicted
 * label per line (or `seed_path<TAB>label`), then score it here.
 */

import { majorityBaseline } from "./baseline.js";
import { breakdown } from "./breakdown.js";
import { readDataset } from "./dataset.js";
import { readPredictions } from "./predictions.js";
import { renderAggregate, renderBreakdown, renderScore } from "./report.js";
import { aggregate, scoreRows } from "./score.js";

interface Flags {
  values: Map<string, string>;
  lists: Map<string, string[]>;
  switches: Set<string>;
}

function parseFlags(argv: string[], listFlags: Set<string>, switchFlags: Set<string>): Flags {
  const flags: Flags = { values: new Map(), lists: new Map(), switches: new Set() };
  let index = 0;
  while (index < argv.length) {
    const token = argv[index];
    if (!token.startsWith("--")) throw new Error(`unexpected argument ${token}`);
    const name = token.slice(2);
    if (switchFlags.has(name)) {
      flags.switches.add(name);
      index += 1;
      continue;
    }
    const values: string[] = [];
    index += 1;
    while (index < argv.length && !argv[index].startsWith("--")) {
      values.push(argv[index]);
      index += 1;
    }
    if (values.length === 0) throw new Error(`--${name} needs a value`);
    if (listFlags.has(name)) {
      flags.lists.set(name, values);
    } else {
      if (values.length > 1) throw new Error(`--${name} takes one value`);
      flags.values.set(name, values[0]);
    }
  }
  return flags;
}

function required(flags: Flags, name: string): string {
  const value = flags.values.get(name);
  if (value === undefined) throw new Error(`--${name} is required`);
  return value;
}

function run(argv: string[]): number {
  const [command, ...rest] = argv;
  if (!command || command === "--help" || command === "-h") {
    console.log(
      "usage: tempnli-eval <score|majority|breakdown> --dataset FILE [options]\n" +
        "  score     --predictions FILE [FILE ...] [--collapse] [--json]\n" +
        "  majority  --mode ternary|binary [--json]\n" +
        "  breakdown --predictions FILE --facet COLUMN [--collapse] [--json]"
    );
    return command ? 0 : 1;
  }

  const flags = parseFlags(rest, new Set(["predictions"]), new Set(["collapse", "json"]));
  const asJson = flags.switches.has("json");
  const rows = readDataset(required(flags, "dataset"));

  if (command === "score") {
    const paths = flags.lists.get("predictions");
    if (!paths || paths.length === 0) throw new Error("--predictions is required");
    const results = paths.map((path) => {
      const predictions = readPredictions(path, rows);
      const collapse = flags.switches.has("collapse") || predictions.binary;
      return scoreRows(rows, predictions.labels, collapse);
    });
    if (results.length === 1) {
      console.log(asJson ? JSON.stringify(results[0], null, 2) : renderScore(results[0]));
    } else {
      const combined = aggregate(results);
      console.log(asJson ? JSON.stringify(combined, null, 2) : renderAggregate(combined));
    }
    return 0;
  }

  if (command === "majority") {
    const mode = required(flags, "mode");
    if (mode !== "ternary" && mode !== "binary") {
      throw new Error(`--mode must be ternary or binary, not ${mode}`);
    }
    const result = majorityBaseline(rows, mode);
    console.log(asJson ? JSON.stringify(result, null, 2) : renderScore(result));
    return 0;
  }

  if (command === "breakdown") {
    const paths = flags.lists.get("predictions");
    if (!paths || paths.length !== 1) throw new Error("--predictions takes exactly one file");
    const predictions = readPredictions(paths[0], rows);
    const collapse = flags.switches.has("collapse") || predictions.binary;
    const result = breakdown(rows, predictions.labels, required(flags, "facet"), collapse);
    console.log(asJson ? JSON.stringify(result, null, 2) : renderBreakdown(result));
    return 0;
  }

  throw new Error(`unknown command ${command}`);
}

try {
  process.exitCode = run(process.argv.slice(2));
} catch (error) {
  console.error(`error: ${(error as Error).message}`);
  process.exitCode = 1;
}
