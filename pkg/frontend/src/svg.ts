/**
 * Minimal deterministic SVG line charts: no dependencies, no wall
 * clock, fixed palette and layout, so identical figures rerender to
 * identical bytes.
 */

import { Figure } from "./figures.js";

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                 "#8c564b"];
const MARGIN = { top: 48, right: 24, bottom: 56, left: 72 };

export interface ChartOptions {
  width?: number;
  height?: number;
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Tick positions at a 1/2/5 step covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) {
    hi = lo + 1;
  }
  const raw = (hi - lo) / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = (norm <= 1 ? 1 : norm <= 2 ? 2 : norm <= 5 ? 5 : 10) * mag;
  const ticks: number[] = [];
  const decimals = Math.max(0, -Math.floor(Math.log10(step)) + 1);
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Number(v.toFixed(decimals + 2)));
  }
  return ticks;
}

function fmtTick(v: number): string {
  if (v !== 0 && (Math.abs(v) >= 1e4 || Math.abs(v) < 1e-3)) {
    return v.toExponential(1);
  }
  return String(Number(v.toPrecision(10)));
}

function px(v: number): string {
  return v.toFixed(2);
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

export function renderChart(figure: Figure, opts: ChartOptions = {}): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const allX = figure.series.flatMap((s) => s.x);
  const allY = figure.series.flatMap((s) => s.y);
  let [x0, x1] = extent(allX);
  let [y0, y1] = extent(allY);
  if (!(x1 > x0)) x1 = x0 + 1;
  if (y0 > 0) y0 = 0; // rates start at zero; keep the baseline honest
  if (!(y1 > y0)) y1 = y0 + 1;
  y1 += (y1 - y0) * 0.05;

  const sx = (v: number) => MARGIN.left + ((v - x0) / (x1 - x0)) * plotW;
  const sy = (v: number) => MARGIN.top + plotH - ((v - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}" ` +
    `font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${px(width / 2)}" y="24" text-anchor="middle" ` +
    `font-size="15">${escapeXml(figure.title)}</text>`,
  );

  for (const t of niceTicks(x0, x1)) {
    const x = px(sx(t));
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top}" x2="${x}" ` +
      `y2="${MARGIN.top + plotH}" stroke="#e0e0e0" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" ` +
      `font-size="11">${fmtTick(t)}</text>`,
    );
  }
  for (const t of niceTicks(y0, y1)) {
    const y = px(sy(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" ` +
      `y2="${y}" stroke="#e0e0e0" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${y}" text-anchor="end" ` +
      `dominant-baseline="middle" font-size="11">${fmtTick(t)}</text>`,
    );
  }

  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" ` +
    `height="${plotH}" fill="none" stroke="#333" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${px(MARGIN.left + plotW / 2)}" y="${height - 12}" ` +
    `text-anchor="middle" font-size="12">${escapeXml(figure.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${px(MARGIN.top + plotH / 2)}" text-anchor="middle" ` +
    `font-size="12" transform="rotate(-90 18 ${px(MARGIN.top + plotH / 2)})">` +
    `${escapeXml(figure.yLabel)}</text>`,
  );

  figure.series.forEach((series, i) => {
    const colour = PALETTE[i % PALETTE.length];
    const points = series.x
      .map((v, j) => `${px(sx(v))},${px(sy(series.y[j]))}`)
      .join(" ");
    parts.push(
      `<polyline points="${points}" fill="none" stroke="${colour}" ` +
      `stroke-width="1.5"/>`,
    );
  });

  const legendX = MARGIN.left + 12;
  figure.series.forEach((series, i) => {
    const colour = PALETTE[i % PALETTE.length];
    const y = MARGIN.top + 14 + i * 16;
    parts.push(
      `<line x1="${legendX}" y1="${y}" x2="${legendX + 22}" y2="${y}" ` +
      `stroke="${colour}" stroke-width="1.5"/>`,
    );
    parts.push(
      `<text x="${legendX + 28}" y="${y}" dominant-baseline="middle" ` +
      `font-size="11">${escapeXml(series.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
