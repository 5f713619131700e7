// The controller: every user action maps to exactly one session-API
// call, and the view state is updated from the response (or from a
// full snapshot refetch on load and reset).  An API failure surfaces
// as a banner and leaves the state untouched.

import { ApiError, SessionApi, getPreset, listPresets } from "./api.js";
import {
  appendEdges,
  edgeCount,
  initialState,
  removeEdges,
  replaceSnapshot,
  type ViewState,
} from "./state.js";
import type { RuleName, StrategyName } from "./types.js";

export class ChartTool {
  state: ViewState;
  private listeners: ((state: ViewState) => void)[] = [];

  private constructor(
    private api: SessionApi,
    state: ViewState,
  ) {
    this.state = state;
  }

  static async start(
    base: string,
    grammar: string,
    sentence: string,
    strategy: StrategyName = "TopDown",
  ): Promise<ChartTool> {
    const api = await SessionApi.create(base, grammar, sentence, strategy);
    const snapshot = await api.chart();
    const presets = (await listPresets(base)).presets;
    return new ChartTool(api, initialState(api.sessionId, snapshot, strategy, presets));
  }

  onChange(listener: (state: ViewState) => void): void {
    this.listeners.push(listener);
  }

  private commit(state: ViewState): void {
    this.state = state;
    for (const listener of this.listeners) {
      listener(state);
    }
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    try {
      return await work();
    } catch (err) {
      const message = err instanceof ApiError ? `${err.status}: ${err.message}` : String(err);
      this.commit({ ...this.state, notice: message });
      return undefined;
    }
  }

  /** One engine step; at the fixpoint fetches the final parses. */
  async step(): Promise<void> {
    await this.guard(async () => {
      const result = await this.api.step();
      if (result.done) {
        const parses = (await this.api.parses()).parses;
        this.commit({
          ...this.state,
          done: true,
          parses,
          notice: "parsing complete",
        });
        return;
      }
      const added = appendEdges(this.state, [result.new_edge!]);
      this.commit({
        ...added,
        highlight: result.new_edge!.id,
        notice: null,
        done: false,
        parses: null,
      });
    });
  }

  async applyRule(rule: RuleName): Promise<void> {
    await this.guard(async () => {
      const result = await this.api.apply(rule, this.state.selected);
      const added = appendEdges(this.state, result.new_edges);
      this.commit({
        ...added,
        highlight: result.new_edges.length
          ? result.new_edges[result.new_edges.length - 1].id
          : this.state.highlight,
        notice: result.new_edges.length ? null : `${rule} added nothing new`,
      });
    });
  }

  /** Click selection; additive keeps the previous picks (for the
   * fundamental rule's two sides). A single selection shows its tree. */
  async selectEdge(edgeId: number, additive = false): Promise<void> {
    const base = additive ? this.state.selected : [];
    const selected = base.includes(edgeId)
      ? base.filter((id) => id !== edgeId)
      : base.concat(edgeId);
    this.commit({ ...this.state, selected });
    if (selected.length === 1) {
      await this.guard(async () => {
        const tree = await this.api.tree(selected[0]);
        this.commit({ ...this.state, selectedTree: tree });
      });
    } else {
      this.commit({ ...this.state, selectedTree: null });
    }
  }

  async switchStrategy(name: StrategyName): Promise<void> {
    await this.guard(async () => {
      const result = await this.api.strategy(name);
      this.commit({ ...this.state, strategy: result.strategy as StrategyName, done: false, parses: null });
    });
  }

  async reset(preset: string): Promise<void> {
    await this.guard(async () => {
      await this.api.reset(preset);
      const snapshot = await this.api.chart();
      this.commit(replaceSnapshot(this.state, snapshot));
    });
  }

  async undo(): Promise<void> {
    await this.guard(async () => {
      const result = await this.api.undo();
      if (result.removed.length === 0) {
        this.commit({ ...this.state, notice: "nothing to undo" });
        return;
      }
      this.commit({ ...removeEdges(this.state, result.removed), notice: null });
    });
  }

  /** The count the header shows; tests compare it to the server's. */
  displayedEdgeCount(): number {
    return edgeCount(this.state);
  }

  async serverEdgeCount(): Promise<number> {
    return (await this.api.chart()).edges.length;
  }

  async fetchPresetSnapshot(name: string) {
    return getPreset(this.api.base, name);
  }
}
