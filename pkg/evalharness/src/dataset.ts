import { readFileSync } from "node:fs";

import { TernaryLabel, isTernaryLabel } from "./labels.js";

export const DATASET_COLUMNS = [
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
] as const;

export type DatasetColumn = (typeof DATASET_COLUMNS)[number];

export interface DatasetRow {
  premise: string;
  hypothesis: string;
  label: TernaryLabel;
  set_id: string;
  template_id: string;
  split: string;
  sampling_method: string;
  variation: string;
  hypothesis_type: string;
  unit_pair: string;
  seed_path: string;
}

export const FACET_COLUMNS: readonly DatasetColumn[] = [
  "set_id",
  "template_id",
  "split",
  "sampling_method",
  "variation",
  "hypothesis_type",
  "unit_pair",
  "label",
];

function rowFromRecord(record: Record<string, string>, where: string): DatasetRow {
  for (const column of DATASET_COLUMNS) {
    if (record[column] === undefined) {
      throw new Error(`${where}: missing column ${column}`);
    }
  }
  if (!isTernaryLabel(record.label)) {
    throw new Error(`${where}: unknown gold label ${JSON.stringify(record.label)}`);
  }
  return record as unknown as DatasetRow;
}

/** Reads a generated challenge-set file; TSV or JSONL is detected from content. */
export function readDataset(path: string): DatasetRow[] {
  const text = readFileSync(path, "utf-8");
  const lines = text.split("\n");
  while (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) throw new Error(`${path}: empty dataset`);

  const rows: DatasetRow[] = [];
  if (lines[0].trimStart().startsWith("{")) {
    lines.forEach((line, index) => {
      if (!line.trim()) return;
      let record: Record<string, string>;
      try {
        record = JSON.parse(line) as Record<string, string>;
      } catch (error) {
        throw new Error(`${path}:${index + 1}: bad JSON (${String(error)})`);
      }
      rows.push(rowFromRecord(record, `${path}:${index + 1}`));
    });
  } else {
    const header = lines[0].split("\t");
    if (header.join(",") !== DATASET_COLUMNS.join(",")) {
      throw new Error(`${path}:1: unexpected header`);
    }
    lines.slice(1).forEach((line, index) => {
      const values = line.split("\t");
      if (values.length !== DATASET_COLUMNS.length) {
        throw new Error(`${path}:${index + 2}: expected ${DATASET_COLUMNS.length} columns`);
      }
      const record: Record<string, string> = {};
      DATASET_COLUMNS.forEach((column, position) => {
        record[column] = values[position];
      });
      rows.push(rowFromRecord(record, `${path}:${index + 2}`));
    });
  }
  if (rows.length === 0) throw new Error(`${path}: no rows`);
  return rows;
}
