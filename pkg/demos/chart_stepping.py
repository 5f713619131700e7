#!/usr/bin/env python3
"""Watch a chart parser run one edge at a time.

The chart records every hypothesis the parser makes; a strategy is just
an ordering over the rules that add edges.  Here we step a top-down
parse of "I sleep", print each rule firing, peek at the partial tree of
an incomplete edge, then reparse bottom-up and compare the charts.
"""

from pathlib import Path

from lingkit.chart import (
    BOTTOM_UP,
    TOP_DOWN,
    chart_init,
    extract_parses,
    run_to_fixpoint,
    step,
    tree_for_edge,
)
from lingkit.grammar import parse_cfg
from lingkit.tokens import whitespace_tokenize
from lingkit.tree import format_tree

DATA = Path(__file__).parent / "data"

grammar = parse_cfg((DATA / "toy.cfg").read_text())
tokens = whitespace_tokenize("I sleep")

print("grammar:")
for p in grammar.productions:
    print("   ", p)
print("\nsentence:", " ".join(t.text for t in tokens))

print("\n--- stepping top-down ---")
chart = chart_init(grammar, tokens)
while True:
    outcome = step(chart, TOP_DOWN)
    if outcome is None:
        break
    rule, edge = outcome
    marker = "complete  " if edge.is_complete() else "incomplete"
    print(f"{rule.value:15s} {marker} {edge}")

print(f"\nchart closed with {len(chart)} edges")
for tree in extract_parses(chart):
    print("parse:", format_tree(tree))

# Any edge can be rendered as a (partial) tree; symbols still right of
# the dot show up as placeholders.
partial = next(e for e in chart.edges if not e.is_complete() and e.dot > 0)
print("\na partial tree mid-derivation:")
print("   ", format_tree(tree_for_edge(chart, chart.id_of(partial))))

print("\n--- same sentence, bottom-up ---")
bu = chart_init(grammar, tokens)
added = run_to_fixpoint(bu, BOTTOM_UP)
print(f"closure added {added} edges (top-down needed {len(chart)})")
print("same parses either way:", [format_tree(t) for t in extract_parses(bu)])

# An ambiguous grammar keeps every derivation on the chart.
amb = parse_cfg((DATA / "ambiguous.cfg").read_text())
three = whitespace_tokenize("a a a")
chart = chart_init(amb, three)
run_to_fixpoint(chart, BOTTOM_UP)
print("\n'a a a' under S -> S S | 'a' has", len(extract_parses(chart)), "parses:")
for tree in extract_parses(chart):
    print("   ", format_tree(tree))
