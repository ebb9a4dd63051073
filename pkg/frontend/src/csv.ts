import Papa from "papaparse";
import type { ResultRow } from "./types.js";

export const REQUIRED_COLUMNS = [
  "trial",
  "algo",
  "n_agents",
  "n_tasks",
  "epsilon",
  "seed",
  "value",
  "evals_total",
  "evals_per_agent_max",
  "consensus_steps",
  "threshold_levels",
  "wall_ms",
] as const;

function toNumber(raw: string, column: string, line: number): number {
  const v = Number(raw);
  if (raw === "" || Number.isNaN(v)) {
    throw new Error(`row ${line}: column ${column} is not numeric: "${raw}"`);
  }
  return v;
}

/** Parse a benchmark results CSV into typed rows. Rejects files whose
 * header is missing any schema column, naming the gaps. */
export function parseResultsCsv(text: string): ResultRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`CSV parse error at row ${first.row}: ${first.message}`);
  }
  const headers = parsed.meta.fields ?? [];
  const missing = REQUIRED_COLUMNS.filter((c) => !headers.includes(c));
  if (missing.length > 0) {
    throw new Error(`results CSV is missing columns: ${missing.join(", ")}`);
  }
  return parsed.data.map((rec, i) => {
    const line = i + 2; // header is line 1
    return {
      trial: toNumber(rec.trial, "trial", line),
      algo: rec.algo,
      nAgents: toNumber(rec.n_agents, "n_agents", line),
      nTasks: toNumber(rec.n_tasks, "n_tasks", line),
      epsilon: rec.epsilon === "" ? null : toNumber(rec.epsilon, "epsilon", line),
      seed: toNumber(rec.seed, "seed", line),
      value: toNumber(rec.value, "value", line),
      evalsTotal: toNumber(rec.evals_total, "evals_total", line),
      evalsPerAgentMax: toNumber(rec.evals_per_agent_max, "evals_per_agent_max", line),
      consensusSteps: toNumber(rec.consensus_steps, "consensus_steps", line),
      thresholdLevels: toNumber(rec.threshold_levels, "threshold_levels", line),
      wallMs: toNumber(rec.wall_ms, "wall_ms", line),
    };
  });
}
