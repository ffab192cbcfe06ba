import { readFileSync } from "node:fs";

import { DatasetRow } from "./dataset.js";
import { AnyLabel, isBinaryLabel, normalizeLabel } from "./labels.js";

export interface PredictionFile {
  labels: AnyLabel[];
  binary: boolean;
}

/**
 * One predicted label per dataset row. Two layouts are accepted:
 * a bare label per line (aligned by row order), or `id<TAB>label` keyed by
 * the dataset's seed_path column (any line order).
 */
export function readPredictions(path: string, rows: DatasetRow[]): PredictionFile {
  const text = readFileSync(path, "utf-8");
  const lines = text.split("\n").filter((line) => line.trim() !== "");
  if (lines.length === 0) throw new Error(`${path}: empty prediction file`);

  let labels: AnyLabel[];
  if (lines[0].includes("\t")) {
    const byId = new Map<string, AnyLabel>();
    lines.forEach((line, index) => {
      const parts = line.split("\t");
      if (parts.length !== 2) {
        throw new Error(`${path}:${index + 1}: expected id<TAB>label`);
      }
      try {
        byId.set(parts[0], normalizeLabel(parts[1]));
      } catch (error) {
        throw new Error(`${path}:${index + 1}: ${String((error as Error).message)}`);
      }
    });
    labels = rows.map((row) => {
      const label = byId.get(row.seed_path);
      if (label === undefined) {
        throw new Error(`${path}: no prediction for row ${row.seed_path}`);
      }
      return label;
    });
  } else {
    if (lines.length !== rows.length) {
      throw new Error(
        `${path}: ${lines.length} predictions for ${rows.length} dataset rows`
      );
    }
    labels = lines.map((line, index) => {
      try {
        return normalizeLabel(line);
      } catch (error) {
        throw new Error(`${path}:${index + 1}: ${String((error as Error).message)}`);
      }
    });
  }

  const binaryCount = labels.filter((label) => isBinaryLabel(label)).length;
  if (binaryCount !== 0 && binaryCount !== labels.length) {
    throw new Error(`${path}: mixed binary and ternary label vocabularies`);
  }
  return { labels, binary: binaryCount === labels.length };
}
