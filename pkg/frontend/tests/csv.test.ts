import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { columnValues, configOf, parseCsv, selectColumns } from "../src/csv.js";

const FIXTURES = join(__dirname, "fixtures");

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf-8");
}

describe("parseCsv", () => {
  it("splits metadata, header, and rows", () => {
    const table = parseCsv(fixture("fig4.csv"));
    expect(table.meta["command"]).toBe("sweep-snr");
    expect(table.meta["tool"]).toMatch(/^noma-secrecy /);
    expect(table.columns).toEqual([
      "rho_t_db", "value_d2_100", "value_d2_150", "value_d2_200",
    ]);
    expect(table.rows).toHaveLength(9);
    for (const row of table.rows) expect(row).toHaveLength(4);
  });

  it("keeps cells as raw strings", () => {
    const table = parseCsv(fixture("fig4.csv"));
    expect(table.rows[0][0]).toBe("40.0");
    // repr-formatted floats survive untouched
    const joined = table.rows.map((r) => r.join(",")).join("\n");
    expect(fixture("fig4.csv")).toContain(joined);
  });

  it("exposes the echoed config", () => {
    const cfg = configOf(parseCsv(fixture("fig3_beta05.csv")));
    expect(cfg["b21"]).toBe(0.5);
    expect(cfg["b12"]).toBe(0.5);
    expect(cfg["seed"]).toBe(42);
  });

  it("rejects an empty body", () => {
    expect(() => parseCsv("# tool: x\na,b\n")).toThrow(/empty/);
    expect(() => parseCsv("# tool: x\n")).toThrow(/header/);
    expect(() => parseCsv("")).toThrow(/header/);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1,2\n3\n")).toThrow(/expected 2/);
  });
});

describe("column access", () => {
  it("reads numeric columns", () => {
    const table = parseCsv(fixture("fig4.csv"));
    const snr = columnValues(table, "rho_t_db");
    expect(snr[0]).toBe(40);
    expect(snr[snr.length - 1]).toBe(80);
  });

  it("errors on unknown columns", () => {
    const table = parseCsv(fixture("fig4.csv"));
    expect(() => columnValues(table, "nope")).toThrow(/not found/);
  });

  it("selects raw cells in the requested order", () => {
    const table = parseCsv(fixture("fig4.csv"));
    const cut = selectColumns(table, ["value_d2_100", "rho_t_db"]);
    expect(cut[0][1]).toBe("40.0");
    expect(cut[0][0]).toBe(table.rows[0][1]);
  });
});
