// Scripted client against a real server process: the UI contract.
// Step drives the toy grammar to its fixpoint and the final tree of
// the unique parse is rendered; the displayed edge count equals the
// server's after every action; reset restores the preset exactly.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

import { ChartTool } from "../src/app.js";
import { renderView } from "../src/view.js";
import { findAll, findFirst, text } from "../src/vdom.js";

const PORT = 8637;
const BASE = `http://127.0.0.1:${PORT}`;
const ROOT = join(dirname(fileURLToPath(import.meta.url)), "..", "..");

const TOY_GRAMMAR = "S -> NP VP\nNP -> 'I'\nVP -> 'sleep'";

let server: ChildProcess;

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "lingkit.cli", "serve", "--port", String(PORT), "--presets", "demos/data/presets.json"],
    { cwd: ROOT, stdio: "ignore" },
  );
  for (let attempt = 0; attempt < 50; attempt++) {
    try {
      const ping = await fetch(`${BASE}/api/v1/presets`);
      if (ping.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("session service did not come up");
}, 20000);

afterAll(() => {
  server?.kill();
});

async function assertCountMatchesServer(tool: ChartTool): Promise<void> {
  const shown = text(findFirst(renderView(tool.state), "edge-count")!);
  const server = await tool.serverEdgeCount();
  expect(shown).toBe(`${server} edges`);
  expect(tool.displayedEdgeCount()).toBe(server);
}

describe("chart tool against the live service", () => {
  it("steps to the fixpoint and renders the unique parse", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "TopDown");
    await assertCountMatchesServer(tool);

    let rounds = 0;
    while (!tool.state.done) {
      await tool.step();
      await assertCountMatchesServer(tool);
      rounds += 1;
      expect(rounds).toBeLessThan(100);
    }

    expect(tool.state.parses).toHaveLength(1);
    expect(tool.state.parses![0].text).toBe("(S (NP I) (VP sleep))");
    const view = renderView(tool.state);
    expect(text(findFirst(view, "notice")!)).toContain("parsing complete");
    const labels = findAll(view, "tree-label").map(text);
    expect(labels).toEqual(["S", "NP", "VP"]);
    expect(findAll(view, "tree-leaf").map(text)).toEqual(["I", "sleep"]);
  }, 30000);

  it("keeps the displayed count equal to the server count across mixed actions", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "TopDown");
    await tool.step();
    await assertCountMatchesServer(tool);
    await tool.applyRule("LexicalInsert");
    await assertCountMatchesServer(tool);
    await tool.switchStrategy("BottomUp");
    await assertCountMatchesServer(tool);
    await tool.step();
    await assertCountMatchesServer(tool);
    await tool.undo();
    await assertCountMatchesServer(tool);
    await tool.undo();
    await assertCountMatchesServer(tool);
  }, 30000);

  it("selecting an edge shows its partial tree from the server", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "TopDown");
    await tool.step(); // TopDownInit: [0:0] S -> * NP VP
    const edgeId = tool.state.snapshot.edges[0].id;
    await tool.selectEdge(edgeId);
    expect(tool.state.selectedTree?.text).toBe("(S NP? VP?)");
    const view = renderView(tool.state);
    expect(findAll(view, "tree-placeholder").map(text)).toEqual(["NP?", "VP?"]);
  }, 30000);

  it("reset restores the preset snapshot exactly", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "TopDown");
    await tool.step();
    await tool.step();
    await tool.reset("toy-after-four-steps");
    const preset = await tool.fetchPresetSnapshot("toy-after-four-steps");
    expect(tool.state.snapshot).toEqual(preset);
    await assertCountMatchesServer(tool);
    expect(tool.state.snapshot.edges).toHaveLength(4);
  }, 30000);

  it("an API error becomes a banner and leaves the chart alone", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "TopDown");
    await tool.step();
    const before = tool.state.snapshot;
    await tool.reset("no-such-preset");
    expect(tool.state.notice).toContain("409");
    expect(tool.state.snapshot).toEqual(before);
  }, 30000);

  it("undo after apply removes the whole batch", async () => {
    const tool = await ChartTool.start(BASE, TOY_GRAMMAR, "I sleep", "BottomUp");
    await tool.applyRule("LexicalInsert");
    expect(tool.displayedEdgeCount()).toBe(2);
    await tool.undo();
    expect(tool.displayedEdgeCount()).toBe(0);
    await assertCountMatchesServer(tool);
  }, 30000);
});
