import { DatasetRow } from "./dataset.js";
import { AnyLabel, collapseLabel } from "./labels.js";

export interface ClassScore {
  label: string;
  support: number;
  precision: number;
  recall: number;
  f1: number;
}

export interface ScoreResult {
  rows: number;
  accuracy: number;
  weightedF1: number;
  collapsed: boolean;
  perClass: ClassScore[];
}

export interface AggregateResult {
  files: ScoreResult[];
  meanAccuracy: number;
  stdAccuracy: number;
  meanWeightedF1: number;
  stdWeightedF1: number;
}

function percentage(value: number): number {
  return 100 * value;
}

/**
 * Exact-match accuracy plus support-weighted per-class F1. With `collapse`,
 * both gold and predictions are mapped to the two-way entailed/not-entailed
 * vocabulary before comparison.
 */
export function scoreLabels(
  gold: readonly AnyLabel[],
  predicted: readonly AnyLabel[],
  collapse: boolean
): ScoreResult {
  if (gold.length !== predicted.length) {
    throw new Error(`gold has ${gold.length} rows but predictions have ${predicted.length}`);
  }
  if (gold.length === 0) throw new Error("nothing to score");

  const goldLabels = collapse ? gold.map(collapseLabel) : gold.slice();
  const predictedLabels = collapse ? predicted.map(collapseLabel) : predicted.slice();

  let correct = 0;
  const support = new Map<string, number>();
  const truePositives = new Map<string, number>();
  const predictedCounts = new Map<string, number>();
  const bump = (map: Map<string, number>, key: string) => map.set(key, (map.get(key) ?? 0) + 1);

  goldLabels.forEach((goldLabel, index) => {
    const prediction = predictedLabels[index];
    bump(support, goldLabel);
    bump(predictedCounts, prediction);
    if (goldLabel === prediction) {
      correct += 1;
      bump(truePositives, goldLabel);
    }
  });

  const perClass: ClassScore[] = [...support.keys()].sort().map((label) => {
    const tp = truePositives.get(label) ?? 0;
    const predictedTotal = predictedCounts.get(label) ?? 0;
    const supportTotal = support.get(label) ?? 0;
    const precision = predictedTotal === 0 ? 0 : tp / predictedTotal;
    const recall = tp / supportTotal;
    const f1 = precision + recall === 0 ? 0 : (2 * precision * recall) / (precision + recall);
    return { label, support: supportTotal, precision, recall, f1 };
  });

  const weightedF1 =
    perClass.reduce((sum, entry) => sum + entry.f1 * entry.support, 0) / goldLabels.length;

  return {
    rows: goldLabels.length,
    accuracy: percentage(correct / goldLabels.length),
    weightedF1: percentage(weightedF1),
    collapsed: collapse,
    perClass,
  };
}

export function scoreRows(
  rows: readonly DatasetRow[],
  predicted: readonly AnyLabel[],
  collapse: boolean
): ScoreResult {
  return scoreLabels(rows.map((row) => row.label), predicted, collapse);
}

function meanAndStd(values: number[]): [number, number] {
  const mean = values.reduce((a, b) => a + b, 0) / values.length;
  const variance = values.reduce((sum, v) => sum + (v - mean) ** 2, 0) / values.length;
  return [mean, Math.sqrt(variance)];
}

/** Mean and population standard deviation over several prediction files. */
export function aggregate(results: ScoreResult[]): AggregateResult {
  if (results.length === 0) throw new Error("no results to aggregate");
  const [meanAccuracy, stdAccuracy] = meanAndStd(results.map((r) => r.accuracy));
  const [meanWeightedF1, stdWeightedF1] = meanAndStd(results.map((r) => r.weightedF1));
  return { files: results, meanAccuracy, stdAccuracy, meanWeightedF1, stdWeightedF1 };
}
