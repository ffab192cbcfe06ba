import assert from "node:assert/strict";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { test } from "node:test";

import { majorityBaseline } from "../src/baseline.js";
import { breakdown } from "../src/breakdown.js";
import { DatasetRow } from "../src/dataset.js";
import { collapseLabel, normalizeLabel } from "../src/labels.js";
import { readPredictions } from "../src/predictions.js";
import { aggregate, scoreLabels, scoreRows } from "../src/score.js";

function row(label: DatasetRow["label"], overrides: Partial<DatasetRow> = {}): DatasetRow {
  return {
    premise: "p",
    hypothesis: "h",
    label,
    set_id: "temp-order",
    template_id: "t",
    split: "test",
    sampling_method: "hour12",
    variation: "point_final_past",
    hypothesis_type: "before",
    unit_pair: "",
    seed_path: `temp-order/t/hour12/i000/p${Math.random().toString(36).slice(2)}`,
    ...overrides,
  };
}

test("normalizeLabel accepts the documented spellings", () => {
  assert.equal(normalizeLabel(" Entailment "), "entailment");
  assert.equal(normalizeLabel("NOT_ENTAILED"), "not-entailed");
  assert.equal(normalizeLabel("c"), "contradiction");
  assert.throws(() => normalizeLabel("maybe"));
});

test("collapse maps entailment against everything else and is idempotent", () => {
  assert.equal(collapseLabel("entailment"), "entailed");
  assert.equal(collapseLabel("contradiction"), "not-entailed");
  assert.equal(collapseLabel("neutral"), "not-entailed");
  assert.equal(collapseLabel(collapseLabel("neutral")), "not-entailed");
  assert.equal(collapseLabel(collapseLabel("entailment")), "entailed");
});

test("perfect predictions score 100/100", () => {
  const gold = ["entailment", "contradiction", "neutral", "entailment"] as const;
  const result = scoreLabels(gold, [...gold], false);
  assert.equal(result.accuracy, 100);
  assert.equal(result.weightedF1, 100);
});

test("hand-worked six-row case matches the manual confusion computation", () => {
  const gold = [
    "entailment",
    "entailment",
    "contradiction",
    "contradiction",
    "neutral",
    "neutral",
  ] as const;
  const predicted = [
    "entailment",
    "contradiction",
    "contradiction",
    "contradiction",
    "neutral",
    "entailment",
  ] as const;
  const result = scoreLabels(gold, predicted, false);

  // By hand: E predicted twice with one hit (P=1/2, R=1/2, F1=1/2);
  // C predicted three times with two hits (P=2/3, R=1, F1=4/5);
  // N predicted once with one hit (P=1, R=1/2, F1=2/3).
  const manualF1 = ((1 / 2 + 4 / 5 + 2 / 3) / 3) * 100;
  assert.equal(result.accuracy.toFixed(2), "66.67");
  assert.equal(result.weightedF1.toFixed(2), manualF1.toFixed(2));
  assert.equal(result.weightedF1.toFixed(2), "65.56");
});

test("binary collapse scoring compares two-way labels", () => {
  const rows = [row("entailment"), row("contradiction"), row("neutral")];
  const result = scoreRows(rows, ["entailed", "not-entailed", "entailed"], true);
  assert.equal(result.rows, 3);
  assert.equal(result.accuracy.toFixed(2), "66.67");
  assert.deepEqual(
    result.perClass.map((c) => c.label),
    ["entailed", "not-entailed"]
  );
});

test("mismatched lengths are rejected", () => {
  assert.throws(() => scoreLabels(["entailment"], [], false));
});

test("aggregate reports mean and population standard deviation", () => {
  const a = scoreLabels(["entailment", "neutral"], ["entailment", "neutral"], false);
  const b = scoreLabels(["entailment", "neutral"], ["entailment", "contradiction"], false);
  const combined = aggregate([a, b]);
  assert.equal(combined.meanAccuracy, 75);
  assert.equal(combined.stdAccuracy, 25);
});

test("majority baseline equals the modal label share", () => {
  const rows = [
    row("contradiction"),
    row("contradiction"),
    row("entailment"),
    row("neutral"),
  ];
  const ternary = majorityBaseline(rows, "ternary");
  assert.equal(ternary.accuracy, 50);
  const binary = majorityBaseline(rows, "binary");
  assert.equal(binary.accuracy, 75); // not-entailed covers C and N
});

test("majority baseline on an even two-way split is exactly 50", () => {
  const rows = [row("entailment"), row("contradiction")];
  assert.equal(majorityBaseline(rows, "ternary").accuracy, 50);
  assert.equal(majorityBaseline(rows, "binary").accuracy, 50);
});

test("breakdown partitions the dataset and matches global accuracy", () => {
  const rows = [
    row("entailment", { sampling_method: "hour12" }),
    row("contradiction", { sampling_method: "hour12" }),
    row("neutral", { sampling_method: "weekday" }),
  ];
  const predictions = ["entailment", "entailment", "neutral"] as const;
  const result = breakdown(rows, [...predictions], "sampling_method");
  assert.equal(
    result.entries.reduce((sum, entry) => sum + entry.support, 0),
    rows.length
  );
  const weighted =
    result.entries.reduce((sum, entry) => sum + entry.accuracy * entry.support, 0) / rows.length;
  const global = scoreRows(rows, [...predictions], false);
  assert.equal(weighted.toFixed(6), global.accuracy.toFixed(6));
  assert.throws(() => breakdown(rows, [...predictions], "premise"));
});

test("gold-as-predictions breakdown by label is 100 per class", () => {
  const rows = [row("entailment"), row("contradiction"), row("neutral")];
  const result = breakdown(rows, rows.map((r) => r.label), "label");
  for (const entry of result.entries) assert.equal(entry.accuracy, 100);
});

test("prediction files: one label per line, aligned by order", () => {
  const dir = mkdtempSync(join(tmpdir(), "evalharness-"));
  const rows = [row("entailment"), row("contradiction")];
  const path = join(dir, "preds.txt");
  writeFileSync(path, "entailment\nneutral\n");
  const file = readPredictions(path, rows);
  assert.deepEqual(file.labels, ["entailment", "neutral"]);
  assert.equal(file.binary, false);

  writeFileSync(path, "entailment\n");
  assert.throws(() => readPredictions(path, rows), /1 predictions for 2/);
});

test("prediction files: id and label columns keyed by seed_path", () => {
  const dir = mkdtempSync(join(tmpdir(), "evalharness-"));
  const first = row("entailment", { seed_path: "a" });
  const second = row("contradiction", { seed_path: "b" });
  const path = join(dir, "preds.tsv");
  writeFileSync(path, "b\tnot-entailed\na\tentailed\n");
  const file = readPredictions(path, [first, second]);
  assert.deepEqual(file.labels, ["entailed", "not-entailed"]);
  assert.equal(file.binary, true);

  writeFileSync(path, "a\tentailed\n");
  assert.throws(() => readPredictions(path, [first, second]), /no prediction/);
});

test("mixed label vocabularies are rejected", () => {
  const dir = mkdtempSync(join(tmpdir(), "evalharness-"));
  const rows = [row("entailment"), row("contradiction")];
  const path = join(dir, "preds.txt");
  writeFileSync(path, "entailed\nneutral\n");
  assert.throws(() => readPredictions(path, rows), /mixed/);
});
