import { existsSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { renderFigures } from "../src/figures.js";
import { FIGURE_KINDS } from "../src/types.js";

const FIXTURES = join(__dirname, "fixtures");
const tmpDirs: string[] = [];

function tmp(): string {
  const dir = mkdtempSync(join(tmpdir(), "figures-"));
  tmpDirs.push(dir);
  return dir;
}

afterEach(() => {
  while (tmpDirs.length) rmSync(tmpDirs.pop()!, { recursive: true, force: true });
});

describe("renderFigures", () => {
  it("produces all five figure kinds from a harness CSV", () => {
    const out = tmp();
    const written = renderFigures({
      csvPath: join(FIXTURES, "sample.csv"),
      outDir: out,
      kinds: [...FIGURE_KINDS],
      baseline: "sga",
    });
    expect(written.length).toBe(5);
    for (const kind of FIGURE_KINDS) {
      const path = join(out, `figure_${kind}.svg`);
      expect(existsSync(path)).toBe(true);
      const svg = readFileSync(path, "utf8");
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
    }
  });

  it("renders the baseline steps series as the constant task count", () => {
    const out = tmp();
    renderFigures({
      csvPath: join(FIXTURES, "sample.csv"),
      outDir: out,
      kinds: ["steps"],
      baseline: "sga",
    });
    const svg = readFileSync(join(out, "figure_steps.svg"), "utf8");
    expect(svg).toContain(">sga<");
    // Both fleet sizes share the same y pixel: one flat polyline whose
    // coordinates repeat the same y value (30 tasks in the fixture).
    const polylines = [...svg.matchAll(/<polyline points="([^"]+)"/g)].map((m) => m[1]);
    const flat = polylines.some((pts) => {
      const ys = pts.split(" ").map((pair) => pair.split(",")[1]);
      return ys.length > 1 && new Set(ys).size === 1;
    });
    expect(flat).toBe(true);
  });

  it("draws the trade-off panels from an epsilon sweep", () => {
    const out = tmp();
    renderFigures({
      csvPath: join(FIXTURES, "tradeoff.csv"),
      outDir: out,
      kinds: ["tradeoff"],
      baseline: "sga",
    });
    const svg = readFileSync(join(out, "figure_tradeoff.svg"), "utf8");
    for (const label of ["value", "evals", "steps"]) {
      expect(svg).toContain(`Trade-off: mean ${label} vs epsilon`);
    }
  });

  it("rejects CSVs missing schema columns", () => {
    const out = tmp();
    const bad = join(out, "bad.csv");
    writeFileSync(bad, "trial,algo\n0,sga\n");
    expect(() =>
      renderFigures({ csvPath: bad, outDir: out, kinds: ["value"], baseline: "sga" }),
    ).toThrowError(/missing columns/);
  });
});

describe("cli", () => {
  it("writes the requested kinds and exits zero", () => {
    const out = tmp();
    const code = main([
      "--csv", join(FIXTURES, "sample.csv"),
      "--out", out,
      "--kinds", "value,ratio",
      "--baseline", "sga",
    ]);
    expect(code).toBe(0);
    expect(existsSync(join(out, "figure_value.svg"))).toBe(true);
    expect(existsSync(join(out, "figure_ratio.svg"))).toBe(true);
    expect(existsSync(join(out, "figure_steps.svg"))).toBe(false);
  });

  it("exits 2 on bad usage and 1 on bad input", () => {
    expect(main(["--csv", "only.csv"])).toBe(2);
    expect(main(["--csv", "does-not-exist.csv", "--out", tmp()])).toBe(1);
  });

  it("rejects unknown figure kinds", () => {
    expect(main(["--csv", "x.csv", "--out", "y", "--kinds", "sparkline"])).toBe(2);
  });
});
