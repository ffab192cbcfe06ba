import { DatasetRow } from "./dataset.js";
import { AnyLabel, BINARY_LABELS, TERNARY_LABELS, collapseLabel } from "./labels.js";
import { ScoreResult, scoreRows } from "./score.js";

export type BaselineMode = "ternary" | "binary";

/**
 * Predicts the modal (possibly collapsed) gold label for every row, then
 * scores. Ties break on the fixed label order, which cannot change the
 * resulting accuracy.
 */
export function majorityBaseline(rows: readonly DatasetRow[], mode: BaselineMode): ScoreResult {
  if (rows.length === 0) throw new Error("empty dataset");
  const vocabulary: readonly AnyLabel[] = mode === "binary" ? BINARY_LABELS : TERNARY_LABELS;
  const gold =
    mode === "binary" ? rows.map((row) => collapseLabel(row.label)) : rows.map((row) => row.label);

  const counts = new Map<AnyLabel, number>();
  for (const label of gold) counts.set(label, (counts.get(label) ?? 0) + 1);
  let modal: AnyLabel = vocabulary[0];
  for (const label of vocabulary) {
    if ((counts.get(label) ?? 0) > (counts.get(modal) ?? 0)) modal = label;
  }

  const predictions = rows.map(() => modal);
  return scoreRows(rows, predictions, mode === "binary");
}
