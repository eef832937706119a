/**
 * Figure definitions: which CSV columns each figure consumes and which
 * series it draws. Column sets are contracts; a mismatch is a hard
 * error that reports the exact diff rather than drawing a partial plot.
 */

import { CsvTable, columnValues, configOf, selectColumns } from "./csv.js";

export type FigureId = "fig2" | "fig3" | "fig4" | "fig5" | "fig6";

export const FIGURE_IDS: FigureId[] = ["fig2", "fig3", "fig4", "fig5", "fig6"];

export interface Series {
  label: string;
  x: number[];
  y: number[];
}

/** Raw-string view of the plotted columns of one input, for --dump-table. */
export interface FigureBlock {
  source: string;
  columns: string[];
  rows: string[][];
}

export interface Figure {
  id: FigureId;
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  blocks: FigureBlock[];
}

export interface FigureInput {
  name: string;
  table: CsvTable;
}

function checkColumns(id: FigureId, name: string, got: string[],
                      expected: string[]): void {
  const missing = expected.filter((c) => !got.includes(c));
  const extra = got.filter((c) => !expected.includes(c));
  if (missing.length || extra.length) {
    throw new Error(
      `${id}: ${name}: column mismatch: missing [${missing.join(", ")}], ` +
      `extra [${extra.join(", ")}]`,
    );
  }
}

function requireSingle(id: FigureId, inputs: FigureInput[]): FigureInput {
  if (inputs.length !== 1) {
    throw new Error(`${id} takes exactly one input CSV, got ${inputs.length}`);
  }
  return inputs[0];
}

function block(input: FigureInput, columns: string[]): FigureBlock {
  return {
    source: input.name,
    columns,
    rows: selectColumns(input.table, columns),
  };
}

function seriesFrom(table: CsvTable, xCol: string, yCol: string,
                    label: string): Series {
  return { label, x: columnValues(table, xCol), y: columnValues(table, yCol) };
}

const ALPHA_LABEL = "power split alpha (fraction to device 1)";
const RATE_LABEL = "secrecy rate (bits/s/Hz)";
const MIN_RATE_LABEL = "min secrecy rate (bits/s/Hz)";
const SNR_LABEL = "transmit SNR rho_t (dB)";

function buildFig2(inputs: FigureInput[]): Figure {
  const input = requireSingle("fig2", inputs);
  checkColumns("fig2", input.name, input.table.columns,
               ["alpha", "rs1_d2", "rs2_d2", "min_d2",
                "rs1_d4", "rs2_d4", "min_d4"]);
  const plotted = ["rs1_d2", "rs2_d2", "rs1_d4", "rs2_d4"];
  return {
    id: "fig2",
    title: "Per-device secrecy rates vs power split",
    xLabel: ALPHA_LABEL,
    yLabel: RATE_LABEL,
    series: plotted.map((c) => seriesFrom(input.table, "alpha", c, c)),
    blocks: [block(input, ["alpha", ...plotted])],
  };
}

function buildFig3(inputs: FigureInput[]): Figure {
  if (inputs.length === 0) {
    throw new Error("fig3 needs at least one input CSV");
  }
  const series: Series[] = [];
  const blocks: FigureBlock[] = [];
  for (const input of inputs) {
    checkColumns("fig3", input.name, input.table.columns,
                 ["alpha", "rs1_d2", "rs2_d2", "min_d2"]);
    const cfg = configOf(input.table);
    const label = `b21=${cfg["b21"]}, b12=${cfg["b12"]}`;
    series.push(seriesFrom(input.table, "alpha", "min_d2", label));
    blocks.push(block(input, ["alpha", "min_d2"]));
  }
  return {
    id: "fig3",
    title: "Max-min secrecy rate vs power split",
    xLabel: ALPHA_LABEL,
    yLabel: MIN_RATE_LABEL,
    series,
    blocks,
  };
}

function buildFig4(inputs: FigureInput[]): Figure {
  const input = requireSingle("fig4", inputs);
  const cols = input.table.columns;
  const valueCols = cols.filter((c) => /^value_d2_.+$/.test(c));
  const extra = cols.filter((c) => c !== "rho_t_db" && !valueCols.includes(c));
  if (!cols.includes("rho_t_db") || valueCols.length === 0 || extra.length) {
    throw new Error(
      `fig4: ${input.name}: column mismatch: missing ` +
      `[${cols.includes("rho_t_db") ? "" : "rho_t_db"}` +
      `${valueCols.length === 0 ? (cols.includes("rho_t_db") ? "" : ", ") + "value_d2_*" : ""}], ` +
      `extra [${extra.join(", ")}]`,
    );
  }
  return {
    id: "fig4",
    title: "Average optimal secrecy rate vs transmit SNR",
    xLabel: SNR_LABEL,
    yLabel: "mean " + MIN_RATE_LABEL,
    series: valueCols.map((c) => seriesFrom(
      input.table, "rho_t_db", c, `d2 = ${c.slice("value_d2_".length)} m`)),
    blocks: [block(input, ["rho_t_db", ...valueCols])],
  };
}

function buildFig5(inputs: FigureInput[]): Figure {
  const input = requireSingle("fig5", inputs);
  const schemes = ["joint", "odep", "odfp", "fdep", "fdfp"];
  checkColumns("fig5", input.name, input.table.columns,
               ["rho_t_db", ...schemes]);
  return {
    id: "fig5",
    title: "Joint optimum vs fixed benchmark policies",
    xLabel: SNR_LABEL,
    yLabel: "mean " + MIN_RATE_LABEL,
    series: schemes.map((c) => seriesFrom(
      input.table, "rho_t_db", c, c.toUpperCase())),
    blocks: [block(input, ["rho_t_db", ...schemes])],
  };
}

function buildFig6(inputs: FigureInput[]): Figure {
  const input = requireSingle("fig6", inputs);
  checkColumns("fig6", input.name, input.table.columns,
               ["alpha", "rs1_d1", "rs2_d1", "min_d1",
                "rs1_d2", "rs2_d2", "min_d2"]);
  const plotted = ["min_d1", "min_d2"];
  return {
    id: "fig6",
    title: "Max-min secrecy by decoding order",
    xLabel: ALPHA_LABEL,
    yLabel: MIN_RATE_LABEL,
    series: plotted.map((c) => seriesFrom(input.table, "alpha", c, c)),
    blocks: [block(input, ["alpha", ...plotted])],
  };
}

const BUILDERS: Record<FigureId, (inputs: FigureInput[]) => Figure> = {
  fig2: buildFig2,
  fig3: buildFig3,
  fig4: buildFig4,
  fig5: buildFig5,
  fig6: buildFig6,
};

export function buildFigure(id: string, inputs: FigureInput[]): Figure {
  const builder = BUILDERS[id as FigureId];
  if (!builder) {
    throw new Error(`unknown figure id ${id} (one of ${FIGURE_IDS.join(", ")})`);
  }
  return builder(inputs);
}

/**
 * The plotted matrix as text. Data lines are raw source cells, so
 * stripping the `# source:` lines leaves bytes identical to cutting
 * the matching columns out of the input CSVs.
 */
export function dumpTable(figure: Figure): string {
  const lines: string[] = [];
  for (const b of figure.blocks) {
    lines.push(`# source: ${b.source}`);
    lines.push(b.columns.join(","));
    for (const row of b.rows) lines.push(row.join(","));
  }
  return lines.join("\n") + "\n";
}
