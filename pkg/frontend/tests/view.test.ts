import { describe, expect, it } from "vitest";

import { initialState, appendEdges, removeEdges } from "../src/state.js";
import { edgeLabel, renderView } from "../src/view.js";
import { findAll, findFirst, text } from "../src/vdom.js";
import type { ChartSnapshot, EdgeDto } from "../src/types.js";

const EDGE_PREDICT: EdgeDto = {
  id: 0, i: 0, j: 0, lhs: "S", rhs: ["NP", "VP"], dot: 0, children: [],
};
const EDGE_LEAF: EdgeDto = {
  id: 1, i: 0, j: 1, lhs: "'I'", rhs: ["'I'"], dot: 1, children: [],
};
const EDGE_MID: EdgeDto = {
  id: 2, i: 0, j: 1, lhs: "S", rhs: ["NP", "VP"], dot: 1, children: [1],
};

function snapshot(edges: EdgeDto[]): ChartSnapshot {
  return { grammar: "S -> NP VP", tokens: ["I", "sleep"], edges };
}

describe("renderView", () => {
  it("lays out the three panes in order: tree, sentence, chart", () => {
    const state = initialState("s1", snapshot([]), "TopDown", []);
    const view = renderView(state);
    const classes = view.children.map((c) => (typeof c === "string" ? "" : c.attrs["class"]));
    expect(classes).toEqual(["pane tree-pane", "pane sentence-pane", "pane chart-pane"]);
  });

  it("shows the sentence with an index ruler", () => {
    const state = initialState("s1", snapshot([]), "TopDown", []);
    const view = renderView(state);
    const tokens = findAll(view, "token").map(text);
    const ruler = findAll(view, "ruler-index").map(text);
    expect(tokens).toEqual(["I", "sleep"]);
    expect(ruler).toEqual(["0", "1", "2"]);
  });

  it("draws one bar per edge with completeness and dot position", () => {
    const state = initialState("s1", snapshot([EDGE_PREDICT, EDGE_LEAF, EDGE_MID]), "TopDown", []);
    const view = renderView(state);
    const bars = findAll(view, "edge");
    expect(bars).toHaveLength(3);
    expect(findAll(view, "edge-incomplete")).toHaveLength(2);
    expect(findAll(view, "edge-complete")).toHaveLength(1);
    expect(text(bars[0])).toBe("S → • NP VP");
    expect(text(bars[2])).toBe("S → NP • VP");
    expect(bars[1].attrs["data-span"]).toBe("0:1");
  });

  it("reports the edge count in the chart header", () => {
    const state = initialState("s1", snapshot([EDGE_PREDICT, EDGE_LEAF]), "TopDown", []);
    expect(text(findFirst(renderView(state), "edge-count")!)).toBe("2 edges");
  });

  it("marks selection and the last-step highlight", () => {
    const base = initialState("s1", snapshot([EDGE_PREDICT, EDGE_MID]), "TopDown", []);
    const state = { ...base, selected: [2], highlight: 0 };
    const view = renderView(state);
    expect(findFirst(view, "edge-selected")!.attrs["data-edge-id"]).toBe("2");
    expect(findFirst(view, "edge-highlight")!.attrs["data-edge-id"]).toBe("0");
  });

  it("renders a partial tree with placeholders for unconsumed symbols", () => {
    const base = initialState("s1", snapshot([EDGE_MID]), "TopDown", []);
    const state = {
      ...base,
      selectedTree: {
        edge: 2,
        text: "(S (NP I) VP?)",
        tree: {
          node: "S",
          children: [
            { node: "NP", children: [{ leaf: "I", tag: null, start: 0, end: 1 }] },
            { placeholder: "VP" },
          ],
        },
      },
    };
    const view = renderView(state);
    expect(findAll(view, "tree-placeholder").map(text)).toEqual(["VP?"]);
    expect(findAll(view, "tree-leaf").map(text)).toEqual(["I"]);
    expect(text(findFirst(view, "parse-text")!)).toBe("(S (NP I) VP?)");
  });

  it("shows a banner for a notice without hiding the panes", () => {
    const base = initialState("s1", snapshot([]), "TopDown", []);
    const view = renderView({ ...base, notice: "409: no preset named 'x'" });
    expect(text(findFirst(view, "banner")!)).toContain("409");
    expect(findAll(view, "pane")).toHaveLength(3);
  });
});

describe("state transitions", () => {
  it("append and remove keep the snapshot consistent", () => {
    let state = initialState("s1", snapshot([]), "TopDown", []);
    state = appendEdges(state, [EDGE_PREDICT, EDGE_LEAF]);
    expect(state.snapshot.edges).toHaveLength(2);
    state = { ...state, selected: [1], highlight: 1 };
    state = removeEdges(state, [1]);
    expect(state.snapshot.edges.map((e) => e.id)).toEqual([0]);
    expect(state.selected).toEqual([]);
    expect(state.highlight).toBeNull();
  });

  it("edgeLabel puts the dot where the edge says", () => {
    expect(edgeLabel(EDGE_LEAF)).toBe("'I' → 'I' •");
  });
});
