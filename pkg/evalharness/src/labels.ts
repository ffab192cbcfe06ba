export const TERNARY_LABELS = ["entailment", "contradiction", "neutral"] as const;
export type TernaryLabel = (typeof TERNARY_LABELS)[number];

export const BINARY_LABELS = ["entailed", "not-entailed"] as const;
export type BinaryLabel = (typeof BINARY_LABELS)[number];

export type AnyLabel = TernaryLabel | BinaryLabel;

export function isTernaryLabel(value: string): value is TernaryLabel {
  return (TERNARY_LABELS as readonly string[]).includes(value);
}

export function isBinaryLabel(value: string): value is BinaryLabel {
  return (BINARY_LABELS as readonly string[]).includes(value);
}

/** Two-way view used by binary classifiers: entailment vs everything else. */
export function collapseLabel(label: AnyLabel): BinaryLabel {
  if (label === "entailed" || label === "not-entailed") return label;
  return label === "entailment" ? "entailed" : "not-entailed";
}

/** Accepts the few spellings that show up in prediction files. */
export function normalizeLabel(raw: string): AnyLabel {
  const token = raw.trim().toLowerCase().replace(/_/g, "-");
  if (isTernaryLabel(token) || isBinaryLabel(token)) return token;
  if (token === "e") return "entailment";
  if (token === "c") return "contradiction";
  if (token === "n") return "neutral";
  throw new Error(`unknown label ${JSON.stringify(raw)}`);
}
