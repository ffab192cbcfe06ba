/**
 * Acceptance checks against real generator output, consumed purely through
 * the primary package's public CLI and file formats.
 */

import assert from "node:assert/strict";
import { execFileSync } from "node:child_process";
import { existsSync, mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { before, test } from "node:test";

import { majorityBaseline } from "../src/baseline.js";
import { breakdown } from "../src/breakdown.js";
import { DatasetRow, FACET_COLUMNS, readDataset } from "../src/dataset.js";
import { scoreRows } from "../src/score.js";

const SETS = ["temp-order", "temp-duration", "cross-unit"] as const;
type SetId = (typeof SETS)[number];

const datasets = new Map<SetId, DatasetRow[]>();
const paths = new Map<SetId, string>();

before(() => {
  const dir = mkdtempSync(join(tmpdir(), "tempnli-sets-"));
  for (const setId of SETS) {
    const out = join(dir, `${setId}.test.tsv`);
    execFileSync(
      "python3",
      [
        "-m", "tempnli.cli", "generate",
        "--set", setId, "--split", "test", "--seed", "0", "--out", out,
      ],
      { stdio: "pipe" }
    );
    assert.ok(existsSync(out));
    paths.set(setId, out);
    datasets.set(setId, readDataset(out));
  }
});

test("gold scored against itself is 100/100 on every set", () => {
  for (const setId of SETS) {
    const rows = datasets.get(setId)!;
    const result = scoreRows(rows, rows.map((row) => row.label), false);
    assert.equal(result.accuracy, 100, setId);
    assert.equal(result.weightedF1, 100, setId);
    console.log(`PASS scorer sanity: score(gold, gold) = 100/100 on ${setId} (${rows.length} rows)`);
  }
});

test("majority baselines on cross-unit output are exactly 33.33 and 66.67 percent", () => {
  const rows = datasets.get("cross-unit")!;
  const ternary = majorityBaseline(rows, "ternary");
  const binary = majorityBaseline(rows, "binary");
  assert.equal(ternary.accuracy.toFixed(2), "33.33");
  assert.equal(ternary.weightedF1.toFixed(2), "16.67");
  assert.equal(binary.accuracy.toFixed(2), "66.67");
  assert.equal(binary.weightedF1.toFixed(2), "53.33");
  console.log(
    `PASS baseline reproduction (cross-unit): ternary ${ternary.accuracy.toFixed(2)}/${ternary.weightedF1.toFixed(2)}, ` +
      `binary ${binary.accuracy.toFixed(2)}/${binary.weightedF1.toFixed(2)}`
  );
});

test("majority baselines on span-duration output are exactly 50.00 in both modes", () => {
  const rows = datasets.get("temp-duration")!;
  const ternary = majorityBaseline(rows, "ternary");
  const binary = majorityBaseline(rows, "binary");
  assert.equal(ternary.accuracy.toFixed(2), "50.00");
  assert.equal(binary.accuracy.toFixed(2), "50.00");
  assert.equal(binary.weightedF1.toFixed(2), "33.33");
  console.log(
    `PASS baseline reproduction (temp-duration): ternary ${ternary.accuracy.toFixed(2)}, ` +
      `binary ${binary.accuracy.toFixed(2)} (no neutral rows, so the modes agree)`
  );
});

test("ternary majority on ordering output lands within 3 points of 40.29", () => {
  const rows = datasets.get("temp-order")!;
  const ternary = majorityBaseline(rows, "ternary");
  assert.ok(
    Math.abs(ternary.accuracy - 40.29) <= 3.0,
    `ternary majority accuracy ${ternary.accuracy.toFixed(2)} strays from 40.29`
  );
  console.log(
    `PASS baseline reproduction (temp-order): ternary majority ${ternary.accuracy.toFixed(2)} vs 40.29 ± 3`
  );
});

test("breakdown facets cover every meta value and supports sum to row count", () => {
  for (const setId of SETS) {
    const rows = datasets.get(setId)!;
    const gold = rows.map((row) => row.label);
    for (const facet of FACET_COLUMNS) {
      const values = new Set(rows.map((row) => row[facet as keyof DatasetRow]));
      const result = breakdown(rows, gold, facet);
      assert.equal(result.entries.length, values.size, `${setId}/${facet}`);
      assert.equal(
        result.entries.reduce((sum, entry) => sum + entry.support, 0),
        rows.length,
        `${setId}/${facet}`
      );
    }
  }
  const duration = datasets.get("temp-duration")!;
  const byType = breakdown(duration, duration.map((row) => row.label), "hypothesis_type");
  assert.equal(byType.entries.length, 6);
  const crossUnit = datasets.get("cross-unit")!;
  const byPair = breakdown(crossUnit, crossUnit.map((row) => row.label), "unit_pair");
  assert.ok(byPair.entries.length >= 1);
  console.log(
    `PASS breakdown coverage: all facets partition all sets; ` +
      `${byType.entries.length} hypothesis types, ${byPair.entries.length} unit pairs`
  );
});

test("facet accuracies, support-weighted, average to the global accuracy", () => {
  const rows = datasets.get("temp-order")!;
  // A deliberately imperfect predictor: everything is entailment.
  const predictions = rows.map(() => "entailment" as const);
  const global = scoreRows(rows, predictions, false);
  const byMethod = breakdown(rows, predictions, "sampling_method");
  const weighted =
    byMethod.entries.reduce((sum, entry) => sum + entry.accuracy * entry.support, 0) / rows.length;
  assert.equal(weighted.toFixed(6), global.accuracy.toFixed(6));
});

test("the scoring CLI scores a prediction file end to end", () => {
  const rows = datasets.get("temp-duration")!;
  const dir = mkdtempSync(join(tmpdir(), "tempnli-preds-"));
  const predictionsPath = join(dir, "preds.txt");
  writeFileSync(predictionsPath, rows.map((row) => row.label).join("\n") + "\n");
  const cli = new URL("../src/cli.js", import.meta.url).pathname;
  const output = execFileSync(
    "node",
    [cli, "score", "--dataset", paths.get("temp-duration")!, "--predictions", predictionsPath],
    { encoding: "utf-8" }
  );
  assert.match(output, /accuracy\t100\.00/);
  assert.match(output, /weighted_f1\t100\.00/);

  const majorityOut = execFileSync(
    "node",
    [cli, "majority", "--dataset", paths.get("cross-unit")!, "--mode", "binary"],
    { encoding: "utf-8" }
  );
  assert.match(majorityOut, /accuracy\t66\.67/);

  const breakdownOut = execFileSync(
    "node",
    [
      cli, "breakdown",
      "--dataset", paths.get("temp-duration")!,
      "--predictions", predictionsPath,
      "--facet", "hypothesis_type",
    ],
    { encoding: "utf-8" }
  );
  assert.match(breakdownOut, /equal_gold\t/);
});
