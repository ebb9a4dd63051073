#!/usr/bin/env node
import { renderFigures } from "./figures.js";
import { FIGURE_KINDS, type FigureKind } from "./types.js";

const USAGE = `usage: figures --csv results.csv --out figs/ \\
    [--kinds value,evals,steps,ratio,tradeoff] [--baseline sga]`;

export interface CliArgs {
  csv: string;
  out: string;
  kinds: FigureKind[];
  baseline: string;
}

export function parseArgs(argv: string[]): CliArgs {
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith("--") || value === undefined) {
      throw new Error(USAGE);
    }
    flags.set(key.slice(2), value);
  }
  const csv = flags.get("csv");
  const out = flags.get("out");
  if (!csv || !out) {
    throw new Error(USAGE);
  }
  const kindsRaw = flags.get("kinds") ?? FIGURE_KINDS.join(",");
  const kinds = kindsRaw.split(",").map((k) => {
    const kind = k.trim() as FigureKind;
    if (!FIGURE_KINDS.includes(kind)) {
      throw new Error(`unknown figure kind "${k}" (choose from ${FIGURE_KINDS.join(", ")})`);
    }
    return kind;
  });
  return { csv, out, kinds, baseline: flags.get("baseline") ?? "sga" };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  try {
    const written = renderFigures({
      csvPath: args.csv,
      outDir: args.out,
      kinds: args.kinds,
      baseline: args.baseline,
    });
    for (const path of written) console.log(`wrote ${path}`);
    return 0;
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
