import { Breakdown } from "./breakdown.js";
import { AggregateResult, ScoreResult } from "./score.js";

const pct = (value: number): string => value.toFixed(2);

export function renderScore(result: ScoreResult): string {
  const lines = [
    `rows\t${result.rows}`,
    `accuracy\t${pct(result.accuracy)}`,
    `weighted_f1\t${pct(result.weightedF1)}`,
    `labels\t${result.collapsed ? "binary" : "ternary"}`,
  ];
  for (const entry of result.perClass) {
    lines.push(
      `class\t${entry.label}\t${entry.support}\t` +
        `P=${pct(100 * entry.precision)}\tR=${pct(100 * entry.recall)}\tF1=${pct(100 * entry.f1)}`
    );
  }
  return lines.join("\n");
}

export function renderAggregate(result: AggregateResult): string {
  const lines = result.files.map(
    (file, index) =>
      `file ${index + 1}\taccuracy=${pct(file.accuracy)}\tweighted_f1=${pct(file.weightedF1)}`
  );
  lines.push(
    `aggregate\taccuracy=${pct(result.meanAccuracy)} ± ${pct(result.stdAccuracy)}` +
      `\tweighted_f1=${pct(result.meanWeightedF1)} ± ${pct(result.stdWeightedF1)}`
  );
  return lines.join("\n");
}

export function renderBreakdown(result: Breakdown): string {
  const lines = [`facet\t${result.facet}\trows\t${result.rows}`];
  for (const entry of result.entries) {
    lines.push(`${entry.value}\t${entry.support}\t${pct(entry.accuracy)}`);
  }
  return lines.join("\n");
}
