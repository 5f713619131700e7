// The three-pane layout: selected-edge tree on top, the sentence in
// the middle, the chart at the bottom.  Edges draw as horizontal bars
// spanning their token positions; complete and incomplete edges are
// visually distinct and the dot position is written into the label.

import { h, type VNode } from "./vdom.js";
import type { EdgeDto, TreeDto } from "./types.js";
import { isComplete } from "./types.js";
import type { ViewState } from "./state.js";

export interface ViewHandlers {
  onSelectEdge?: (edgeId: number, additive: boolean) => void;
}

export function edgeLabel(edge: EdgeDto): string {
  const rhs = [...edge.rhs.slice(0, edge.dot), "•", ...edge.rhs.slice(edge.dot)];
  return `${edge.lhs} → ${rhs.join(" ")}`;
}

function treeNode(tree: TreeDto): VNode {
  if ("leaf" in tree) {
    const tag = tree.tag ? `/${tree.tag}` : "";
    return h("li", { class: "tree-leaf" }, [`${tree.leaf}${tag}`]);
  }
  if ("placeholder" in tree) {
    return h("li", { class: "tree-placeholder" }, [`${tree.placeholder}?`]);
  }
  return h("li", { class: "tree-node" }, [
    h("span", { class: "tree-label" }, [tree.node]),
    h("ul", { class: "tree-children" }, tree.children.map(treeNode)),
  ]);
}

function treePane(state: ViewState): VNode {
  if (state.done && state.parses !== null) {
    if (state.parses.length === 0) {
      return h("section", { class: "pane tree-pane" }, [
        h("p", { class: "notice" }, ["parsing complete: no parse covers the sentence"]),
      ]);
    }
    return h("section", { class: "pane tree-pane" }, [
      h("p", { class: "notice" }, [`parsing complete: ${state.parses.length} parse(s)`]),
      ...state.parses.map((p) =>
        h("div", { class: "parse" }, [
          h("ul", { class: "tree-root" }, [treeNode(p.tree)]),
          h("code", { class: "parse-text" }, [p.text]),
        ]),
      ),
    ]);
  }
  if (state.selectedTree === null) {
    return h("section", { class: "pane tree-pane" }, [
      h("p", { class: "hint" }, ["select one edge to see its partial tree"]),
    ]);
  }
  return h("section", { class: "pane tree-pane" }, [
    h("ul", { class: "tree-root" }, [treeNode(state.selectedTree.tree)]),
    h("code", { class: "parse-text" }, [state.selectedTree.text]),
  ]);
}

function sentencePane(state: ViewState): VNode {
  const cells: VNode[] = [];
  state.snapshot.tokens.forEach((token, index) => {
    cells.push(h("span", { class: "ruler-index" }, [String(index)]));
    cells.push(h("span", { class: "token" }, [token]));
  });
  cells.push(h("span", { class: "ruler-index" }, [String(state.snapshot.tokens.length)]));
  return h("section", { class: "pane sentence-pane" }, cells);
}

function edgeBar(state: ViewState, edge: EdgeDto, handlers: ViewHandlers): VNode {
  const n = Math.max(state.snapshot.tokens.length, 1);
  const classes = ["edge"];
  classes.push(isComplete(edge) ? "edge-complete" : "edge-incomplete");
  if (state.selected.includes(edge.id)) {
    classes.push("edge-selected");
  }
  if (state.highlight === edge.id) {
    classes.push("edge-highlight");
  }
  if (edge.i === edge.j) {
    classes.push("edge-point");
  }
  const left = (edge.i / n) * 100;
  const width = Math.max(((edge.j - edge.i) / n) * 100, 2);
  return h(
    "div",
    {
      class: classes.join(" "),
      "data-edge-id": String(edge.id),
      "data-span": `${edge.i}:${edge.j}`,
      style: `left:${left}%;width:${width}%`,
      title: `edge ${edge.id} [${edge.i}:${edge.j}]`,
    },
    [edgeLabel(edge)],
    {
      click: (event) =>
        handlers.onSelectEdge?.(
          edge.id,
          (event as MouseEvent).shiftKey || (event as MouseEvent).ctrlKey,
        ),
    },
  );
}

function chartPane(state: ViewState, handlers: ViewHandlers): VNode {
  const rows = state.snapshot.edges.map((edge) =>
    h("div", { class: "edge-row" }, [edgeBar(state, edge, handlers)]),
  );
  return h("section", { class: "pane chart-pane" }, [
    h("header", { class: "chart-header" }, [
      h("span", { class: "edge-count" }, [`${state.snapshot.edges.length} edges`]),
      h("span", { class: "strategy-name" }, [state.strategy]),
    ]),
    h("div", { class: "chart-rows" }, rows),
  ]);
}

export function renderView(state: ViewState, handlers: ViewHandlers = {}): VNode {
  const children: VNode[] = [];
  if (state.notice !== null) {
    children.push(h("div", { class: "banner", role: "alert" }, [state.notice]));
  }
  children.push(treePane(state));
  children.push(sentencePane(state));
  children.push(chartPane(state, handlers));
  return h("main", { class: "chart-tool" }, children);
}
