import { mkdtempSync, readFileSync, existsSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { run } from "../src/cli";
import { loadTable } from "../src/csv";
import { renderFigure } from "../src/render";
import { FIGURE_SIZE, FigureKind } from "../src/schema";
import { brightestCell } from "../src/series";

const DATA = join(__dirname, "..", "testdata");
const GOLDEN: Record<FigureKind, string> = {
  esc_sweep: join(DATA, "esc_sweep.csv"),
  heatmap: join(DATA, "heatmap.csv"),
  alpha_sweep: join(DATA, "alpha_sweep.csv"),
  asymptotic: join(DATA, "asymptotic.csv"),
  mgf_compare: join(DATA, "mgf_compare.csv"),
};

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "render-figures-"));
}

describe("rendering the golden CSVs", () => {
  for (const [kind, csvPath] of Object.entries(GOLDEN)) {
    it(`renders ${kind} to PNG and leaves the input untouched`, () => {
      const before = readFileSync(csvPath);
      const out = join(tmp(), `${kind}.png`);
      const code = run(["--in", csvPath, "--kind", kind, "--out", out]);
      expect(code).toBe(0);
      const png = readFileSync(out);
      expect(Array.from(png.subarray(0, 4))).toEqual([0x89, 0x50, 0x4e, 0x47]);
      expect(readFileSync(csvPath).equals(before)).toBe(true);
    });

    it(`gives ${kind} its fixed dimensions`, () => {
      const figure = renderFigure(kind as FigureKind, loadTable(csvPath));
      expect(figure.width).toBe(FIGURE_SIZE[kind as FigureKind].width);
      expect(figure.height).toBe(FIGURE_SIZE[kind as FigureKind].height);
      expect(figure.svg).toContain(`width="${figure.width}"`);
      expect(figure.svg).toContain(`height="${figure.height}"`);
    });
  }

  it("writes SVG directly when asked", () => {
    const out = join(tmp(), "fig.svg");
    const code = run(["--in", GOLDEN.esc_sweep, "--kind", "esc_sweep", "--out", out]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("<svg");
  });
});

describe("heatmap panels", () => {
  it("Bob's grid cell attains the maximum in every panel", () => {
    const figure = renderFigure("heatmap", loadTable(GOLDEN.heatmap));
    expect(figure.panels).toHaveLength(3);
    expect(figure.panels!.map((p) => p.label)).toEqual(["pa", "lfda", "rfda-cont"]);
    for (const panel of figure.panels!) {
      const ti = panel.thetas.indexOf(45);
      const ri = panel.ranges.indexOf(120);
      expect(ti).toBeGreaterThanOrEqual(0);
      expect(ri).toBeGreaterThanOrEqual(0);
      const atBob = panel.values[ti][ri];
      expect(atBob).toBeCloseTo(1.0, 9);
      expect(brightestCell(panel).value).toBeCloseTo(atBob, 9);
    }
  });

  it("the random panel's maximum is uniquely at Bob", () => {
    // pa repeats its maximum along the whole Bob direction and lfda on its
    // coupling rings; the random realization peaks only at Bob himself
    const figure = renderFigure("heatmap", loadTable(GOLDEN.heatmap));
    const panel = figure.panels!.find((p) => p.label === "rfda-cont")!;
    const best = brightestCell(panel);
    expect(best.theta).toBe(45);
    expect(best.range).toBe(120);
    let second = -Infinity;
    for (let i = 0; i < panel.thetas.length; i++) {
      for (let j = 0; j < panel.ranges.length; j++) {
        if (panel.thetas[i] === 45 && panel.ranges[j] === 120) continue;
        second = Math.max(second, panel.values[i][j]);
      }
    }
    expect(second).toBeLessThan(best.value - 0.05);
  });

  it("keeps the shared color scale on [0, 1]", () => {
    const figure = renderFigure("heatmap", loadTable(GOLDEN.heatmap));
    for (const panel of figure.panels!) {
      for (const row of panel.values) {
        for (const v of row) {
          expect(v).toBeGreaterThanOrEqual(0);
          expect(v).toBeLessThanOrEqual(1 + 1e-9);
        }
      }
    }
  });
});

describe("failure modes", () => {
  it("header mismatch exits nonzero and names the expected columns", () => {
    const out = join(tmp(), "bad.png");
    const code = run(["--in", GOLDEN.alpha_sweep, "--kind", "esc_sweep", "--out", out]);
    expect(code).toBe(2);
    expect(existsSync(out)).toBe(false);
  });

  it("empty CSV body exits nonzero without writing an image", () => {
    const dir = tmp();
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "mu_b_db,scheme,esc_bits,esc_stderr,c_lb_bits,c_asym_bits\n");
    const out = join(dir, "empty.png");
    const code = run(["--in", empty, "--kind", "esc_sweep", "--out", out]);
    expect(code).toBe(2);
    expect(existsSync(out)).toBe(false);
  });

  it("unknown kind and missing flags exit nonzero", () => {
    expect(run(["--in", GOLDEN.esc_sweep, "--kind", "pie", "--out", "x.png"])).toBe(2);
    expect(run(["--in", GOLDEN.esc_sweep])).toBe(2);
    expect(run(["--in", join(DATA, "missing.csv"), "--kind", "esc_sweep", "--out", "x.png"])).toBe(2);
  });
});

describe("line figure content", () => {
  it("a zero pa series renders as a flat line", () => {
    const figure = renderFigure("esc_sweep", loadTable(GOLDEN.esc_sweep));
    // first series is pa (scheme-major CSV order); its stroke is the first
    // palette color, so grab that polyline and check the y pixels are equal
    const match = figure.svg.match(/<path d="(M[^"]+)" fill="none" stroke="#1f77b4"/);
    expect(match).not.toBeNull();
    const ys = [...match![1].matchAll(/[ML][-0-9.]+,([-0-9.]+)/g)].map((m) => Number(m[1]));
    expect(ys.length).toBeGreaterThan(3);
    for (const y of ys) expect(y).toBeCloseTo(ys[0], 6);
  });

  it("legend lists one entry per series", () => {
    const figure = renderFigure("mgf_compare", loadTable(GOLDEN.mgf_compare));
    const labels = [...figure.svg.matchAll(/font-size="11">([^<]*)<\/text>/g)].map((m) => m[1]);
    expect(labels).toContain("cont 0 dB");
    expect(labels).toContain("disc 20 dB");
  });
});
