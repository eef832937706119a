/**
 * Reader for the simulator CLI's CSV dialect: `#`-prefixed metadata
 * lines (`# key: value`), one header row, then data rows.
 *
 * Cells are kept as the raw strings from the file so that downstream
 * output (--dump-table) can be byte-compared against the source.
 */

export interface CsvTable {
  meta: Record<string, string>;
  columns: string[];
  rows: string[][];
}

export function parseCsv(text: string): CsvTable {
  const meta: Record<string, string> = {};
  const lines = text.split("\n");
  let i = 0;
  for (; i < lines.length; i++) {
    const line = lines[i];
    if (!line.startsWith("#")) break;
    const body = line.replace(/^#\s?/, "");
    const sep = body.indexOf(": ");
    if (sep >= 0) {
      meta[body.slice(0, sep)] = body.slice(sep + 2);
    }
  }
  if (i >= lines.length || lines[i].trim() === "") {
    throw new Error("CSV has no header row");
  }
  const columns = lines[i].split(",");
  const rows: string[][] = [];
  for (i += 1; i < lines.length; i++) {
    if (lines[i] === "") continue; // trailing newline
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new Error(
        `row ${rows.length + 1} has ${cells.length} cells, expected ${columns.length}`,
      );
    }
    rows.push(cells);
  }
  if (rows.length === 0) {
    throw new Error("CSV body is empty");
  }
  return { meta, columns, rows };
}

/** The run configuration echoed into the metadata header by the CLI. */
export function configOf(table: CsvTable): Record<string, unknown> {
  const raw = table.meta["config"];
  if (raw === undefined) return {};
  return JSON.parse(raw) as Record<string, unknown>;
}

export function columnIndex(table: CsvTable, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new Error(`column ${name} not found (have: ${table.columns.join(",")})`);
  }
  return idx;
}

/** Numeric view of one column. */
export function columnValues(table: CsvTable, name: string): number[] {
  const idx = columnIndex(table, name);
  return table.rows.map((row, r) => {
    const v = Number(row[idx]);
    if (!Number.isFinite(v)) {
      throw new Error(`column ${name} row ${r + 1}: not a number: ${row[idx]}`);
    }
    return v;
  });
}

/** Raw string cells of the chosen columns, in the given order. */
export function selectColumns(table: CsvTable, names: string[]): string[][] {
  const idx = names.map((n) => columnIndex(table, n));
  return table.rows.map((row) => idx.map((i) => row[i]));
}
