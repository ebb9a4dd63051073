import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { METRICS, groupMeans, ratioSeries, seriesByAgents, tradeoffSeries } from "./aggregate.js";
import { parseResultsCsv } from "./csv.js";
import { lineChart, stackCharts } from "./svg.js";
import { FIGURE_KINDS, type FigureKind, type FigureSpec, type GroupMean } from "./types.js";

function buildFigure(kind: FigureKind, means: GroupMean[], baseline: string): string {
  switch (kind) {
    case "value":
      return lineChart({
        title: "Mean objective value vs fleet size",
        xLabel: "agents",
        yLabel: "mean value",
        series: seriesByAgents(means, "meanValue"),
      });
    case "evals":
      return lineChart({
        title: "Mean objective evaluations vs fleet size",
        xLabel: "agents",
        yLabel: "mean evaluations (log)",
        series: seriesByAgents(means, "meanEvals"),
        logY: true,
      });
    case "steps":
      return lineChart({
        title: "Mean consensus steps vs fleet size",
        xLabel: "agents",
        yLabel: "mean consensus steps",
        series: seriesByAgents(means, "meanSteps"),
      });
    case "ratio":
      return lineChart({
        title: `Metric ratios vs ${baseline}`,
        xLabel: "agents",
        yLabel: `ratio (${baseline} = 1)`,
        series: ratioSeries(means, baseline),
      });
    case "tradeoff": {
      const panels = METRICS.map(({ key, label }) =>
        lineChart({
          title: `Trade-off: mean ${label} vs epsilon`,
          xLabel: "epsilon",
          yLabel: `mean ${label}`,
          series: tradeoffSeries(means, key),
        }),
      );
      return stackCharts(panels);
    }
  }
}

/** Render the requested figure kinds from a results CSV; returns the
 * written file paths in kind order. */
export function renderFigures(spec: FigureSpec): string[] {
  const rows = parseResultsCsv(readFileSync(spec.csvPath, "utf8"));
  if (rows.length === 0) {
    throw new Error(`no data rows in ${spec.csvPath}`);
  }
  for (const kind of spec.kinds) {
    if (!FIGURE_KINDS.includes(kind)) {
      throw new Error(`unknown figure kind "${kind}"`);
    }
  }
  const means = groupMeans(rows);
  mkdirSync(spec.outDir, { recursive: true });
  const written: string[] = [];
  for (const kind of spec.kinds) {
    const svg = buildFigure(kind, means, spec.baseline);
    const path = join(spec.outDir, `figure_${kind}.svg`);
    writeFileSync(path, svg + "\n");
    written.push(path);
  }
  return written;
}
