/**
 * CLI: render one figure from simulator CSVs, or dump the plotted
 * matrix for byte-level verification against the source files.
 *
 *   render --fig fig4 --in results.csv --out fig4.svg
 *   render --fig fig3 --in a.csv --in b.csv --dump-table
 */

import { readFileSync, writeFileSync } from "node:fs";
import { basename } from "node:path";
import { parseArgs } from "node:util";

import { parseCsv } from "./csv.js";
import { FigureInput, buildFigure, dumpTable } from "./figures.js";
import { renderChart } from "./svg.js";

export function run(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        fig: { type: "string" },
        in: { type: "string", multiple: true },
        out: { type: "string" },
        "dump-table": { type: "boolean", default: false },
      },
      allowPositionals: false,
    });
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  const { fig, out } = parsed.values;
  const dump = parsed.values["dump-table"] as boolean;
  const inPaths = (parsed.values.in ?? []).flatMap((p) => p.split(","));
  if (!fig || inPaths.length === 0 || (!out && !dump)) {
    console.error(
      "error: --fig and --in are required, plus --out unless --dump-table",
    );
    return 2;
  }
  try {
    const inputs: FigureInput[] = inPaths.map((path) => ({
      name: basename(path),
      table: parseCsv(readFileSync(path, "utf-8")),
    }));
    const figure = buildFigure(fig, inputs);
    if (dump) {
      process.stdout.write(dumpTable(figure));
    }
    if (out) {
      writeFileSync(out, renderChart(figure));
    }
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("render.js") || entry.endsWith("render.ts")) {
  process.exit(run(process.argv.slice(2)));
}
