#!/usr/bin/env node
/**
 * render_figures --in <csv> --kind <kind> --out <png|svg>
 *
 * Renders one figure from an fda-secrecy CSV. Kinds: esc_sweep, heatmap,
 * alpha_sweep, asymptotic, mgf_compare. A .png output is rasterized from
 * the internally built SVG; a .svg output is written as is. Exit codes:
 * 0 success, 2 bad arguments / malformed or mismatched input.
 */

import { writeFileSync } from "node:fs";

import { loadTable } from "./csv";
import { renderFigure } from "./render";
import { FIGURE_KINDS, SchemaError, isFigureKind } from "./schema";

function parseArgs(argv: string[]): { input: string; kind: string; out: string } {
  const values: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new SchemaError(`bad argument ${flag}; usage: render_figures --in <csv> --kind <k> --out <png>`);
    }
    values[flag.slice(2)] = value;
  }
  for (const required of ["in", "kind", "out"]) {
    if (!(required in values)) {
      throw new SchemaError(`missing --${required}; usage: render_figures --in <csv> --kind <k> --out <png>`);
    }
  }
  return { input: values["in"], kind: values["kind"], out: values["out"] };
}

export function run(argv: string[]): number {
  let args;
  try {
    args = parseArgs(argv);
    if (!isFigureKind(args.kind)) {
      throw new SchemaError(`unknown kind ${args.kind}; expected one of ${FIGURE_KINDS.join(", ")}`);
    }
    const table = loadTable(args.input);
    const figure = renderFigure(args.kind, table);
    if (args.out.endsWith(".svg")) {
      writeFileSync(args.out, figure.svg);
    } else {
      // rasterize at the figure's native pixel size
      const { Resvg } = require("@resvg/resvg-js");
      const png = new Resvg(figure.svg).render().asPng();
      writeFileSync(args.out, png);
    }
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`render_figures: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(run(process.argv.slice(2)));
}
