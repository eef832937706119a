import { existsSync, mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import { parseCsv } from "../src/csv.js";
import { buildFigure } from "../src/figures.js";
import { run } from "../src/render.js";
import { niceTicks, renderChart } from "../src/svg.js";

const FIXTURES = join(__dirname, "fixtures");
const ALL = [
  ["fig2", ["fig2.csv"]],
  ["fig3", ["fig3_beta02.csv", "fig3_beta05.csv"]],
  ["fig4", ["fig4.csv"]],
  ["fig5", ["fig5.csv"]],
  ["fig6", ["fig6.csv"]],
] as const;

const scratch = mkdtempSync(join(tmpdir(), "noma-figs-"));
afterAll(() => rmSync(scratch, { recursive: true, force: true }));

function load(name: string) {
  return {
    name,
    table: parseCsv(readFileSync(join(FIXTURES, name), "utf-8")),
  };
}

describe("niceTicks", () => {
  it("uses 1/2/5 steps covering the range", () => {
    expect(niceTicks(0, 1)).toEqual([0, 0.2, 0.4, 0.6, 0.8, 1]);
    expect(niceTicks(40, 80)).toEqual([40, 50, 60, 70, 80]);
    const ticks = niceTicks(0, 0.37);
    expect(ticks[0]).toBe(0);
    expect(ticks[ticks.length - 1]).toBeLessThanOrEqual(0.37);
  });
});

describe("renderChart", () => {
  it("draws one polyline per series with axes and legend", () => {
    for (const [fig, files] of ALL) {
      const figure = buildFigure(fig, files.map(load));
      const svg = renderChart(figure);
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
      const polylines = svg.match(/<polyline /g) ?? [];
      expect(polylines).toHaveLength(figure.series.length);
      expect(svg).toContain(figure.title);
      expect(svg).toContain(figure.xLabel);
      for (const s of figure.series) expect(svg).toContain(s.label);
    }
  });

  it("is deterministic", () => {
    const figure = buildFigure("fig5", [load("fig5.csv")]);
    expect(renderChart(figure)).toBe(renderChart(figure));
  });
});

describe("render CLI", () => {
  it("regenerates every figure from the golden CSVs", () => {
    for (const [fig, files] of ALL) {
      const out = join(scratch, `${fig}.svg`);
      const args = [
        "--fig", fig,
        ...files.flatMap((f) => ["--in", join(FIXTURES, f)]),
        "--out", out,
      ];
      expect(run(args)).toBe(0);
      expect(existsSync(out)).toBe(true);
      expect(readFileSync(out, "utf-8")).toContain("</svg>");
    }
  });

  it("accepts comma-separated inputs", () => {
    const out = join(scratch, "fig3-comma.svg");
    const joined = ["fig3_beta02.csv", "fig3_beta05.csv"]
      .map((f) => join(FIXTURES, f))
      .join(",");
    expect(run(["--fig", "fig3", "--in", joined, "--out", out])).toBe(0);
    expect(existsSync(out)).toBe(true);
  });

  it("dumps the plotted matrix to stdout", () => {
    const chunks: string[] = [];
    const original = process.stdout.write.bind(process.stdout);
    process.stdout.write = ((chunk: string | Uint8Array) => {
      chunks.push(chunk.toString());
      return true;
    }) as typeof process.stdout.write;
    try {
      const rc = run(["--fig", "fig5", "--in", join(FIXTURES, "fig5.csv"),
                      "--dump-table"]);
      expect(rc).toBe(0);
    } finally {
      process.stdout.write = original;
    }
    const dump = chunks.join("");
    expect(dump).toContain("# source: fig5.csv");
    expect(dump).toContain("rho_t_db,joint,odep,odfp,fdep,fdfp");
  });

  it("fails cleanly on bad arguments and bad inputs", () => {
    expect(run([])).toBe(2);
    expect(run(["--fig", "fig2"])).toBe(2);
    expect(run(["--fig", "fig2", "--in", join(FIXTURES, "fig2.csv")])).toBe(2);
    expect(run(["--unknown-flag"])).toBe(2);
    expect(run(["--fig", "fig9", "--in", join(FIXTURES, "fig2.csv"),
                "--out", join(scratch, "x.svg")])).toBe(1);
    expect(run(["--fig", "fig2", "--in", join(FIXTURES, "fig5.csv"),
                "--out", join(scratch, "x.svg")])).toBe(1);
    expect(run(["--fig", "fig2", "--in", join(FIXTURES, "missing.csv"),
                "--out", join(scratch, "x.svg")])).toBe(1);
  });
});
