// Browser bootstrap: session form, control buttons, keyboard
// shortcuts (s = step, u = undo for live demonstrations), and
// re-rendering the three panes after every state change.

import { ChartTool } from "./app.js";
import { renderView } from "./view.js";
import { mount } from "./vdom.js";
import { RULE_NAMES, type RuleName, type StrategyName } from "./types.js";

const DEFAULT_GRAMMAR = `S  -> NP VP
NP -> 'I'
VP -> 'sleep'`;

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

async function boot(): Promise<void> {
  const grammarBox = el<HTMLTextAreaElement>("grammar");
  const sentenceBox = el<HTMLInputElement>("sentence");
  const strategyBox = el<HTMLSelectElement>("strategy");
  const presetBox = el<HTMLSelectElement>("preset");
  const controls = el<HTMLDivElement>("controls");
  const viewRoot = el<HTMLDivElement>("view");
  grammarBox.value = DEFAULT_GRAMMAR;
  sentenceBox.value = "I sleep";

  let tool: ChartTool | null = null;

  function redraw(): void {
    if (!tool) {
      return;
    }
    viewRoot.replaceChildren(
      mount(
        renderView(tool.state, {
          onSelectEdge: (id, additive) => void tool!.selectEdge(id, additive),
        }),
        document,
      ),
    );
    presetBox.replaceChildren(
      ...["(preset)", ...tool.state.presets].map((name) => {
        const option = document.createElement("option");
        option.value = name === "(preset)" ? "" : name;
        option.textContent = name;
        return option;
      }),
    );
  }

  el<HTMLButtonElement>("start").addEventListener("click", async () => {
    tool = await ChartTool.start(
      "",
      grammarBox.value,
      sentenceBox.value,
      strategyBox.value as StrategyName,
    );
    tool.onChange(redraw);
    redraw();
  });

  const buttons: [string, (tool: ChartTool) => Promise<void>][] = [
    ["step", (t) => t.step()],
    ["undo", (t) => t.undo()],
    ...RULE_NAMES.map(
      (rule): [string, (tool: ChartTool) => Promise<void>] => [
        `apply-${rule}`,
        (t) => t.applyRule(rule as RuleName),
      ],
    ),
  ];
  for (const [id, action] of buttons) {
    el<HTMLButtonElement>(id).addEventListener("click", () => {
      if (tool) {
        void action(tool);
      }
    });
  }

  strategyBox.addEventListener("change", () => {
    if (tool) {
      void tool.switchStrategy(strategyBox.value as StrategyName);
    }
  });

  presetBox.addEventListener("change", () => {
    if (tool && presetBox.value) {
      void tool.reset(presetBox.value);
    }
  });

  document.addEventListener("keydown", (event) => {
    if (!tool || event.target instanceof HTMLInputElement || event.target instanceof HTMLTextAreaElement) {
      return;
    }
    if (event.key === "s") {
      void tool.step();
    } else if (event.key === "u") {
      void tool.undo();
    }
  });

  controls.hidden = false;
}

void boot();
