/** Build one SVG figure per kind from a validated table. */

import { Table } from "./csv";
import { FIGURE_SIZE, FigureKind, validateHeader } from "./schema";
import {
  HeatPanel,
  LineSeries,
  alphaSweepSeries,
  asymptoticSeries,
  escSweepSeries,
  heatmapPanels,
  mgfCompareSeries,
} from "./series";
import { PALETTE, Scale, bandPath, esc, fmt, linearScale, niceTicks, polylinePath, viridis } from "./svg";

export interface Figure {
  svg: string;
  width: number;
  height: number;
  /** pre-rasterization cell grids, heatmap kind only (for max-locator checks) */
  panels?: HeatPanel[];
}

const AXIS_LABELS: Record<FigureKind, { x: string; y: string }> = {
  esc_sweep: { x: "mu_b [dB]", y: "secrecy capacity [bits/s/Hz]" },
  heatmap: { x: "range [m]", y: "angle [deg]" },
  alpha_sweep: { x: "alpha", y: "average secrecy capacity [bits/s/Hz]" },
  asymptotic: { x: "number of elements N", y: "secrecy capacity [bits/s/Hz]" },
  mgf_compare: { x: "alpha", y: "average secrecy capacity [bits/s/Hz]" },
};

export function renderFigure(kind: FigureKind, table: Table): Figure {
  validateHeader(kind, table.header);
  if (kind === "heatmap") {
    return renderHeatmap(table);
  }
  const series = {
    esc_sweep: escSweepSeries,
    alpha_sweep: alphaSweepSeries,
    asymptotic: asymptoticSeries,
    mgf_compare: mgfCompareSeries,
  }[kind](table);
  return renderLines(kind, series);
}

function svgDocument(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n${body}</svg>\n`
  );
}

function drawAxes(
  x: Scale,
  y: Scale,
  xTicks: number[],
  yTicks: number[],
  box: { left: number; right: number; top: number; bottom: number },
  labels: { x: string; y: string },
  logX = false,
): string {
  const parts: string[] = [];
  parts.push(
    `<rect x="${box.left}" y="${box.top}" width="${box.right - box.left}" ` +
      `height="${box.bottom - box.top}" fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of xTicks) {
    const px = x(logX ? Math.log2(t) : t);
    parts.push(`<line x1="${px.toFixed(1)}" y1="${box.bottom}" x2="${px.toFixed(1)}" y2="${box.bottom + 5}" stroke="#333"/>`);
    parts.push(
      `<text x="${px.toFixed(1)}" y="${box.bottom + 18}" font-size="11" text-anchor="middle">${fmt(t)}</text>`,
    );
    parts.push(
      `<line x1="${px.toFixed(1)}" y1="${box.top}" x2="${px.toFixed(1)}" y2="${box.bottom}" stroke="#ddd" stroke-width="0.5"/>`,
    );
  }
  for (const t of yTicks) {
    const py = y(t);
    parts.push(`<line x1="${box.left - 5}" y1="${py.toFixed(1)}" x2="${box.left}" y2="${py.toFixed(1)}" stroke="#333"/>`);
    parts.push(
      `<text x="${box.left - 8}" y="${(py + 3.5).toFixed(1)}" font-size="11" text-anchor="end">${fmt(t)}</text>`,
    );
    parts.push(
      `<line x1="${box.left}" y1="${py.toFixed(1)}" x2="${box.right}" y2="${py.toFixed(1)}" stroke="#ddd" stroke-width="0.5"/>`,
    );
  }
  const cx = (box.left + box.right) / 2;
  const cy = (box.top + box.bottom) / 2;
  parts.push(`<text x="${cx}" y="${box.bottom + 36}" font-size="12" text-anchor="middle">${esc(labels.x)}</text>`);
  parts.push(
    `<text x="${box.left - 42}" y="${cy}" font-size="12" text-anchor="middle" ` +
      `transform="rotate(-90 ${box.left - 42} ${cy})">${esc(labels.y)}</text>`,
  );
  return parts.join("\n");
}

function renderLines(kind: FigureKind, series: LineSeries[]): Figure {
  const { width, height } = FIGURE_SIZE[kind];
  const box = { left: 64, right: width - 16, top: 16, bottom: height - 48 };
  const logX = kind === "asymptotic";

  const xsAll = series.flatMap((s) => s.x);
  const xLo = Math.min(...xsAll);
  const xHi = Math.max(...xsAll);
  const ysAll = series.flatMap((s) => s.y.map((v, i) => [v - (s.band?.[i] ?? 0), v + (s.band?.[i] ?? 0)]).flat());
  let yLo = Math.min(0, ...ysAll);
  let yHi = Math.max(...ysAll);
  if (yHi <= yLo) yHi = yLo + 1;
  yHi += 0.05 * (yHi - yLo);

  const xDom = logX ? [Math.log2(xLo), Math.log2(xHi)] : [xLo, xHi];
  const x = linearScale(xDom[0], xDom[1], box.left, box.right);
  const y = linearScale(yLo, yHi, box.bottom, box.top);
  const xTicks = logX ? series[0].x : niceTicks(xLo, xHi, 8);
  const yTicks = niceTicks(yLo, yHi, 7);

  const parts: string[] = [drawAxes(x, y, xTicks, yTicks, box, AXIS_LABELS[kind], logX)];
  const toPx = (v: number) => x(logX ? Math.log2(v) : v);

  series.forEach((s, idx) => {
    const color = PALETTE[idx % PALETTE.length];
    const px = s.x.map(toPx);
    if (s.band) {
      const hi = s.y.map((v, i) => y(v + s.band![i]));
      const lo = s.y.map((v, i) => y(v - s.band![i]));
      parts.push(`<path d="${bandPath(px, lo, hi)}" fill="${color}" fill-opacity="0.15" stroke="none"/>`);
    }
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(
      `<path d="${polylinePath(px, s.y.map(y))}" fill="none" stroke="${color}" stroke-width="1.8"${dash}/>`,
    );
  });

  // legend, top-right inside the plot box
  const legendX = box.right - 190;
  let legendY = box.top + 14;
  series.forEach((s, idx) => {
    const color = PALETTE[idx % PALETTE.length];
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(
      `<line x1="${legendX}" y1="${legendY - 4}" x2="${legendX + 26}" y2="${legendY - 4}" ` +
        `stroke="${color}" stroke-width="2"${dash}/>`,
    );
    parts.push(`<text x="${legendX + 32}" y="${legendY}" font-size="11">${esc(s.label)}</text>`);
    legendY += 16;
  });

  return { svg: svgDocument(width, height, parts.join("\n")), width, height };
}

function renderHeatmap(table: Table): Figure {
  const { width, height } = FIGURE_SIZE.heatmap;
  const panels = heatmapPanels(table);
  const panelWidth = 320;
  const panelHeight = height - 90;
  const top = 40;
  const gap = 36;
  const parts: string[] = [];

  panels.forEach((panel, idx) => {
    const left = 56 + idx * (panelWidth + gap);
    parts.push(panelSvg(panel, left, top, panelWidth, panelHeight, idx === 0));
  });

  // shared colorbar for the fixed [0, 1] scale
  const barX = 56 + 3 * (panelWidth + gap) - 16;
  const barH = panelHeight;
  const steps = 64;
  for (let i = 0; i < steps; i++) {
    const v = 1 - i / (steps - 1);
    const yPix = top + (i / steps) * barH;
    parts.push(
      `<rect x="${barX}" y="${yPix.toFixed(1)}" width="14" height="${(barH / steps + 0.5).toFixed(1)}" ` +
        `fill="${viridis(v)}" stroke="none"/>`,
    );
  }
  parts.push(`<rect x="${barX}" y="${top}" width="14" height="${barH}" fill="none" stroke="#333"/>`);
  for (const t of [0, 0.5, 1]) {
    const yPix = top + (1 - t) * barH;
    parts.push(`<text x="${barX + 18}" y="${(yPix + 3).toFixed(1)}" font-size="10">${fmt(t)}</text>`);
  }
  parts.push(`<text x="${barX + 7}" y="${top - 8}" font-size="11" text-anchor="middle">|corr|</text>`);

  return { svg: svgDocument(width, height, parts.join("\n")), width, height, panels };
}

function panelSvg(
  panel: HeatPanel,
  left: number,
  top: number,
  panelWidth: number,
  panelHeight: number,
  withYLabel: boolean,
): string {
  const parts: string[] = [];
  const nTheta = panel.thetas.length;
  const nRange = panel.ranges.length;
  const cellW = panelWidth / nRange;
  const cellH = panelHeight / nTheta;
  // theta increases upward, range rightward
  for (let i = 0; i < nTheta; i++) {
    const yPix = top + panelHeight - (i + 1) * cellH;
    for (let j = 0; j < nRange; j++) {
      const xPix = left + j * cellW;
      parts.push(
        `<rect x="${xPix.toFixed(2)}" y="${yPix.toFixed(2)}" width="${(cellW + 0.05).toFixed(2)}" ` +
          `height="${(cellH + 0.05).toFixed(2)}" fill="${viridis(panel.values[i][j])}" stroke="none"/>`,
      );
    }
  }
  parts.push(
    `<rect x="${left}" y="${top}" width="${panelWidth}" height="${panelHeight}" fill="none" stroke="#333"/>`,
  );
  parts.push(
    `<text x="${left + panelWidth / 2}" y="${top - 10}" font-size="13" text-anchor="middle">${esc(panel.label)}</text>`,
  );
  for (const t of niceTicks(panel.ranges[0], panel.ranges[nRange - 1], 5)) {
    const xPix = left + ((t - panel.ranges[0]) / (panel.ranges[nRange - 1] - panel.ranges[0])) * panelWidth;
    parts.push(`<line x1="${xPix.toFixed(1)}" y1="${top + panelHeight}" x2="${xPix.toFixed(1)}" y2="${top + panelHeight + 4}" stroke="#333"/>`);
    parts.push(
      `<text x="${xPix.toFixed(1)}" y="${top + panelHeight + 16}" font-size="10" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${left + panelWidth / 2}" y="${top + panelHeight + 32}" font-size="11" text-anchor="middle">range [m]</text>`,
  );
  for (const t of niceTicks(panel.thetas[0], panel.thetas[nTheta - 1], 5)) {
    const yPix = top + panelHeight - ((t - panel.thetas[0]) / (panel.thetas[nTheta - 1] - panel.thetas[0])) * panelHeight;
    parts.push(`<line x1="${left - 4}" y1="${yPix.toFixed(1)}" x2="${left}" y2="${yPix.toFixed(1)}" stroke="#333"/>`);
    parts.push(
      `<text x="${left - 6}" y="${(yPix + 3).toFixed(1)}" font-size="10" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  if (withYLabel) {
    parts.push(
      `<text x="${left - 38}" y="${top + panelHeight / 2}" font-size="11" text-anchor="middle" ` +
        `transform="rotate(-90 ${left - 38} ${top + panelHeight / 2})">angle [deg]</text>`,
    );
  }
  return parts.join("\n");
}
