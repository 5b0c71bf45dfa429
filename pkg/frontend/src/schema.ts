/** Figure kinds and the CSV columns each one requires. */

export const FIGURE_KINDS = [
  "esc_sweep",
  "heatmap",
  "alpha_sweep",
  "asymptotic",
  "mgf_compare",
] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export const REQUIRED_COLUMNS: Record<FigureKind, string[]> = {
  esc_sweep: ["mu_b_db", "scheme", "esc_bits", "esc_stderr", "c_lb_bits", "c_asym_bits"],
  heatmap: ["theta_deg", "range_m", "scheme", "corr_abs"],
  alpha_sweep: ["alpha", "N", "avg_esc_mc", "avg_esc_mc_stderr", "avg_esc_lb"],
  asymptotic: ["N", "esc_mc", "esc_stderr", "esc_asym"],
  mgf_compare: ["alpha", "mu_b_db", "kind", "avg_esc"],
};

/** Fixed output pixel dimensions per kind. */
export const FIGURE_SIZE: Record<FigureKind, { width: number; height: number }> = {
  esc_sweep: { width: 760, height: 520 },
  heatmap: { width: 1180, height: 430 },
  alpha_sweep: { width: 760, height: 520 },
  asymptotic: { width: 760, height: 520 },
  mgf_compare: { width: 760, height: 520 },
};

export class SchemaError extends Error {}

export function isFigureKind(value: string): value is FigureKind {
  return (FIGURE_KINDS as readonly string[]).includes(value);
}

/** Throws a SchemaError naming the expected columns when the header is wrong. */
export function validateHeader(kind: FigureKind, header: string[]): void {
  const missing = REQUIRED_COLUMNS[kind].filter((col) => !header.includes(col));
  if (missing.length > 0) {
    throw new SchemaError(
      `header mismatch for kind ${kind}: missing column(s) ${missing.join(", ")}; ` +
        `expected columns ${REQUIRED_COLUMNS[kind].join(", ")}`,
    );
  }
}
