import { DatasetColumn, DatasetRow, FACET_COLUMNS } from "./dataset.js";
import { AnyLabel, collapseLabel } from "./labels.js";

export interface FacetScore {
  value: string;
  support: number;
  accuracy: number;
}

export interface Breakdown {
  facet: DatasetColumn;
  rows: number;
  entries: FacetScore[];
}

/** Per-facet-value accuracy; facet values partition the dataset. */
export function breakdown(
  rows: readonly DatasetRow[],
  predicted: readonly AnyLabel[],
  facet: string,
  collapse = false
): Breakdown {
  if (!(FACET_COLUMNS as readonly string[]).includes(facet)) {
    throw new Error(`unknown facet ${JSON.stringify(facet)}; choose one of ${FACET_COLUMNS.join(", ")}`);
  }
  if (rows.length !== predicted.length) {
    throw new Error(`dataset has ${rows.length} rows but predictions have ${predicted.length}`);
  }
  const column = facet as DatasetColumn;
  const supports = new Map<string, number>();
  const hits = new Map<string, number>();
  rows.forEach((row, index) => {
    const value = row[column as keyof DatasetRow];
    const gold = collapse ? collapseLabel(row.label) : row.label;
    const prediction = collapse ? collapseLabel(predicted[index]) : predicted[index];
    supports.set(value, (supports.get(value) ?? 0) + 1);
    if (gold === prediction) hits.set(value, (hits.get(value) ?? 0) + 1);
  });

  const entries: FacetScore[] = [...supports.keys()].sort().map((value) => ({
    value,
    support: supports.get(value) ?? 0,
    accuracy: (100 * (hits.get(value) ?? 0)) / (supports.get(value) ?? 1),
  }));
  return { facet: column, rows: rows.length, entries };
}
