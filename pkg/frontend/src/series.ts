/** Pivot validated CSV tables into plottable series and heatmap panels. */

import { Table, num } from "./csv";
import { SchemaError } from "./schema";

export interface LineSeries {
  label: string;
  x: number[];
  y: number[];
  /** half-width of the shaded uncertainty band (3 standard errors) */
  band?: number[];
  dashed?: boolean;
}

export interface HeatPanel {
  label: string;
  thetas: number[];
  ranges: number[];
  /** values[ti][ri] in [0, 1] */
  values: number[][];
}

const BAND_SIGMAS = 3;

function sortedUnique(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function groupBy(table: Table, column: string): Map<string, Record<string, string>[]> {
  const groups = new Map<string, Record<string, string>[]>();
  for (const row of table.rows) {
    const key = row[column];
    const bucket = groups.get(key);
    if (bucket) bucket.push(row);
    else groups.set(key, [row]);
  }
  return groups;
}

function lineOf(
  rows: Record<string, string>[],
  xCol: string,
  yCol: string,
  label: string,
  seCol?: string,
  dashed?: boolean,
): LineSeries {
  const sorted = [...rows].sort((a, b) => num(a, xCol) - num(b, xCol));
  return {
    label,
    x: sorted.map((r) => num(r, xCol)),
    y: sorted.map((r) => num(r, yCol)),
    band: seCol ? sorted.map((r) => BAND_SIGMAS * num(r, seCol)) : undefined,
    dashed,
  };
}

export function escSweepSeries(table: Table): LineSeries[] {
  const out: LineSeries[] = [];
  for (const [scheme, rows] of groupBy(table, "scheme")) {
    out.push(lineOf(rows, "mu_b_db", "esc_bits", scheme, "esc_stderr"));
  }
  return out;
}

export function alphaSweepSeries(table: Table): LineSeries[] {
  const out: LineSeries[] = [];
  for (const [n, rows] of groupBy(table, "N")) {
    out.push(lineOf(rows, "alpha", "avg_esc_mc", `N=${n} (mc)`, "avg_esc_mc_stderr"));
    out.push(lineOf(rows, "alpha", "avg_esc_lb", `N=${n} (closed form)`, undefined, true));
  }
  return out;
}

export function asymptoticSeries(table: Table): LineSeries[] {
  return [
    lineOf(table.rows, "N", "esc_mc", "Monte Carlo", "esc_stderr"),
    lineOf(table.rows, "N", "esc_asym", "large-N form", undefined, true),
  ];
}

export function mgfCompareSeries(table: Table): LineSeries[] {
  const out: LineSeries[] = [];
  for (const [kind, kindRows] of groupBy(table, "kind")) {
    const byMu = new Map<number, Record<string, string>[]>();
    for (const row of kindRows) {
      const mu = num(row, "mu_b_db");
      const bucket = byMu.get(mu);
      if (bucket) bucket.push(row);
      else byMu.set(mu, [row]);
    }
    for (const mu of [...byMu.keys()].sort((a, b) => a - b)) {
      out.push(lineOf(byMu.get(mu)!, "alpha", "avg_esc", `${kind} ${mu} dB`, undefined, kind === "disc"));
    }
  }
  return out;
}

/**
 * Assemble the three heatmap panels (pa, lfda, and the random realization;
 * the analytic "-rms" series stays available in the CSV but is not drawn).
 */
export function heatmapPanels(table: Table): HeatPanel[] {
  const groups = groupBy(table, "scheme");
  const labels = [...groups.keys()];
  const random = labels.find((l) => l !== "pa" && l !== "lfda" && !l.endsWith("-rms"));
  if (!groups.has("pa") || !groups.has("lfda") || random === undefined) {
    throw new SchemaError(
      `heatmap needs schemes pa, lfda and one random realization; got ${labels.join(", ")}`,
    );
  }
  return ["pa", "lfda", random].map((label) => panelOf(label, groups.get(label)!));
}

function panelOf(label: string, rows: Record<string, string>[]): HeatPanel {
  const thetas = sortedUnique(rows.map((r) => num(r, "theta_deg")));
  const ranges = sortedUnique(rows.map((r) => num(r, "range_m")));
  const ti = new Map(thetas.map((v, i) => [v, i]));
  const ri = new Map(ranges.map((v, i) => [v, i]));
  const values = thetas.map(() => new Array<number>(ranges.length).fill(NaN));
  for (const row of rows) {
    values[ti.get(num(row, "theta_deg"))!][ri.get(num(row, "range_m"))!] = num(row, "corr_abs");
  }
  for (const rowVals of values) {
    for (const v of rowVals) {
      if (Number.isNaN(v)) throw new SchemaError(`heatmap series ${label} is not a full grid`);
    }
  }
  return { label, thetas, ranges, values };
}

/** Grid cell holding the panel's maximum (the brightest rendered pixel). */
export function brightestCell(panel: HeatPanel): { theta: number; range: number; value: number } {
  let best = { theta: panel.thetas[0], range: panel.ranges[0], value: -Infinity };
  for (let i = 0; i < panel.thetas.length; i++) {
    for (let j = 0; j < panel.ranges.length; j++) {
      if (panel.values[i][j] > best.value) {
        best = { theta: panel.thetas[i], range: panel.ranges[j], value: panel.values[i][j] };
      }
    }
  }
  return best;
}
