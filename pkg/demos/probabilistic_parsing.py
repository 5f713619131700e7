#!/usr/bin/env python3
"""Probabilistic grammars and highest-probability parsing.

A weighted grammar ranks the parses an ambiguous sentence has.  The
classic example: does "with the telescope" attach to the seeing or to
the man?  The rule probabilities decide.
"""

from pathlib import Path

from lingkit.chart import BOTTOM_UP, chart_init, extract_parses, run_to_fixpoint
from lingkit.grammar import parse_pcfg
from lingkit.tokens import whitespace_tokenize
from lingkit.tree import format_tree
from lingkit.viterbi import tree_probability, viterbi_parse

DATA = Path(__file__).parent / "data"

grammar = parse_pcfg((DATA / "attach.pcfg").read_text())
sentence = "I saw the man with the telescope"
tokens = whitespace_tokenize(sentence)
print("sentence:", sentence)

# Every parse, via the chart, each weighted by its rule products.
chart = chart_init(grammar, tokens)
run_to_fixpoint(chart, BOTTOM_UP)
parses = extract_parses(chart)
print(f"\nthe chart finds {len(parses)} parses:")
for tree in sorted(parses, key=lambda t: -tree_probability(grammar, t)):
    print(f"  p={tree_probability(grammar, tree):.6g}  {format_tree(tree)}")

best = viterbi_parse(grammar, tokens)
print("\nviterbi picks:", format_tree(best.tree))
print("probability:  ", f"{best.prob:.6g}")
assert best.prob == max(tree_probability(grammar, t) for t in parses)

# The tiny two-rule grammar makes the arithmetic easy to follow.
toy = parse_pcfg((DATA / "toy.pcfg").read_text())
scored = viterbi_parse(toy, whitespace_tokenize("a b"))
print("\ntoy grammar on 'a b':", format_tree(scored.tree))
print("p = 1.0 * 0.4 * 0.6 =", scored.prob)
