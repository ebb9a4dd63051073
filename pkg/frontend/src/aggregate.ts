import type { GroupMean, ResultRow, Series } from "./types.js";

type Metric = "meanValue" | "meanEvals" | "meanSteps";

export const METRICS: { key: Metric; label: string }[] = [
  { key: "meanValue", label: "value" },
  { key: "meanEvals", label: "evals" },
  { key: "meanSteps", label: "steps" },
];

function groupKey(algo: string, nAgents: number, epsilon: number | null): string {
  return `${algo}|${nAgents}|${epsilon ?? ""}`;
}

/** Per-(algo, fleet size, epsilon) means over trials. */
export function groupMeans(rows: ResultRow[]): GroupMean[] {
  const acc = new Map<
    string,
    { algo: string; nAgents: number; epsilon: number | null; sums: [number, number, number]; runs: number }
  >();
  for (const row of rows) {
    const key = groupKey(row.algo, row.nAgents, row.epsilon);
    let g = acc.get(key);
    if (!g) {
      g = { algo: row.algo, nAgents: row.nAgents, epsilon: row.epsilon, sums: [0, 0, 0], runs: 0 };
      acc.set(key, g);
    }
    g.sums[0] += row.value;
    g.sums[1] += row.evalsTotal;
    g.sums[2] += row.consensusSteps;
    g.runs += 1;
  }
  const out = [...acc.values()].map((g) => ({
    algo: g.algo,
    nAgents: g.nAgents,
    epsilon: g.epsilon,
    meanValue: g.sums[0] / g.runs,
    meanEvals: g.sums[1] / g.runs,
    meanSteps: g.sums[2] / g.runs,
    runs: g.runs,
  }));
  out.sort(
    (a, b) =>
      a.algo.localeCompare(b.algo) || a.nAgents - b.nAgents || (a.epsilon ?? -1) - (b.epsilon ?? -1),
  );
  return out;
}

function seriesLabel(algo: string, epsilon: number | null, multiEps: boolean): string {
  return multiEps && epsilon !== null ? `${algo} (eps=${epsilon})` : algo;
}

function hasMultipleEpsilons(means: GroupMean[], algo: string): boolean {
  return new Set(means.filter((m) => m.algo === algo).map((m) => m.epsilon)).size > 1;
}

/** One series per (algo, epsilon) with fleet size on the x axis. */
export function seriesByAgents(means: GroupMean[], metric: Metric): Series[] {
  const byLine = new Map<string, Series>();
  for (const m of means) {
    const label = seriesLabel(m.algo, m.epsilon, hasMultipleEpsilons(means, m.algo));
    let s = byLine.get(label);
    if (!s) {
      s = { label, points: [] };
      byLine.set(label, s);
    }
    s.points.push({ x: m.nAgents, y: m[metric] });
  }
  const out = [...byLine.values()];
  for (const s of out) s.points.sort((a, b) => a.x - b.x);
  return out;
}

/** Ratio of each group's mean metrics to the baseline algo at the same
 * fleet size; the baseline itself shows up as a flat line at 1. */
export function ratioSeries(means: GroupMean[], baseline: string): Series[] {
  const base = new Map<number, GroupMean>();
  for (const m of means) {
    if (m.algo === baseline) base.set(m.nAgents, m);
  }
  if (base.size === 0) {
    throw new Error(`baseline algo "${baseline}" has no rows in the CSV`);
  }
  const out: Series[] = [];
  const lines = new Map<string, Series>();
  for (const m of means) {
    const b = base.get(m.nAgents);
    if (!b) {
      throw new Error(`baseline "${baseline}" missing for n_agents=${m.nAgents}`);
    }
    const who = seriesLabel(m.algo, m.epsilon, hasMultipleEpsilons(means, m.algo));
    for (const { key, label } of METRICS) {
      const id = `${who} ${label}`;
      let s = lines.get(id);
      if (!s) {
        s = { label: id, points: [] };
        lines.set(id, s);
        out.push(s);
      }
      s.points.push({ x: m.nAgents, y: m[key] / b[key] });
    }
  }
  for (const s of out) s.points.sort((a, b) => a.x - b.x);
  return out;
}

/** Trade-off view: for every algo that swept several epsilons, one
 * series per (algo, fleet size) with epsilon on the x axis. */
export function tradeoffSeries(
  means: GroupMean[],
  metric: Metric,
): Series[] {
  const swept = new Set(
    means.filter((m) => m.epsilon !== null).map((m) => m.algo),
  );
  const lines = new Map<string, Series>();
  for (const m of means) {
    if (m.epsilon === null || !swept.has(m.algo)) continue;
    const id = `${m.algo} @ ${m.nAgents} agents`;
    let s = lines.get(id);
    if (!s) {
      s = { label: id, points: [] };
      lines.set(id, s);
    }
    s.points.push({ x: m.epsilon, y: m[metric] });
  }
  const out = [...lines.values()];
  for (const s of out) s.points.sort((a, b) => a.x - b.x);
  return out;
}
