// The single source of truth mirrored from the server.  The UI never
// invents parse state: edges come from action responses (step/apply
// deltas, undo removals) or from full snapshot refetches on session
// load and reset.

import type { ChartSnapshot, EdgeDto, ParseDto, StrategyName, TreeResponse } from "./types.js";

export interface ViewState {
  sessionId: string;
  snapshot: ChartSnapshot;
  selected: number[];
  strategy: StrategyName;
  highlight: number | null;
  presets: string[];
  notice: string | null;
  selectedTree: TreeResponse | null;
  parses: ParseDto[] | null;
  done: boolean;
}

export function initialState(
  sessionId: string,
  snapshot: ChartSnapshot,
  strategy: StrategyName,
  presets: string[],
): ViewState {
  return {
    sessionId,
    snapshot,
    selected: [],
    strategy,
    highlight: null,
    presets,
    notice: null,
    selectedTree: null,
    parses: null,
    done: false,
  };
}

export function appendEdges(state: ViewState, edges: EdgeDto[]): ViewState {
  return {
    ...state,
    snapshot: { ...state.snapshot, edges: state.snapshot.edges.concat(edges) },
  };
}

export function removeEdges(state: ViewState, ids: number[]): ViewState {
  const gone = new Set(ids);
  return {
    ...state,
    snapshot: {
      ...state.snapshot,
      edges: state.snapshot.edges.filter((e) => !gone.has(e.id)),
    },
    selected: state.selected.filter((id) => !gone.has(id)),
    highlight: state.highlight !== null && gone.has(state.highlight) ? null : state.highlight,
    selectedTree:
      state.selectedTree && gone.has(state.selectedTree.edge) ? null : state.selectedTree,
    parses: null,
    done: false,
  };
}

export function replaceSnapshot(state: ViewState, snapshot: ChartSnapshot): ViewState {
  return {
    ...state,
    snapshot,
    selected: [],
    highlight: null,
    selectedTree: null,
    parses: null,
    done: false,
    notice: null,
  };
}

export function edgeCount(state: ViewState): number {
  return state.snapshot.edges.length;
}
