export interface ResultRow {
  trial: number;
  algo: string;
  nAgents: number;
  nTasks: number;
  /** null for algorithms without a threshold parameter (the baseline). */
  epsilon: number | null;
  seed: number;
  value: number;
  evalsTotal: number;
  evalsPerAgentMax: number;
  consensusSteps: number;
  thresholdLevels: number;
  wallMs: number;
}

export const FIGURE_KINDS = ["value", "evals", "steps", "ratio", "tradeoff"] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface FigureSpec {
  csvPath: string;
  outDir: string;
  kinds: FigureKind[];
  baseline: string;
}

export interface GroupMean {
  algo: string;
  nAgents: number;
  epsilon: number | null;
  meanValue: number;
  meanEvals: number;
  meanSteps: number;
  runs: number;
}

export interface Point {
  x: number;
  y: number;
}

export interface Series {
  label: string;
  points: Point[];
}
