import { readFileSync } from "node:fs";

import Papa from "papaparse";

import { SchemaError } from "./schema";

export interface Table {
  header: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string): Table {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const header = parsed.meta.fields ?? [];
  if (header.length === 0) {
    throw new SchemaError("CSV has no header row");
  }
  if (parsed.data.length === 0) {
    throw new SchemaError("CSV has a header but no data rows");
  }
  return { header, rows: parsed.data };
}

export function loadTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new SchemaError(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseCsv(text);
}

export function num(row: Record<string, string>, column: string): number {
  const value = Number(row[column]);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`non-numeric value ${JSON.stringify(row[column])} in column ${column}`);
  }
  return value;
}
