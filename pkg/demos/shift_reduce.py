#!/usr/bin/env python3
"""The greedy shift-reduce parser, including the way it fails.

The parser reduces with the first matching production whenever it can,
and shifts otherwise.  That greed is a feature here: the trace shows
exactly where an early reduction eats material a later rule needed.
"""

from pathlib import Path

from lingkit.grammar import parse_cfg
from lingkit.shiftreduce import sr_parse
from lingkit.tokens import whitespace_tokenize
from lingkit.tree import format_tree

DATA = Path(__file__).parent / "data"

grammar = parse_cfg((DATA / "lexicon.cfg").read_text())
sentence = "the dog saw a man"
print("sentence:", sentence)
tree, trace = sr_parse(grammar, whitespace_tokenize(sentence))
for entry in trace:
    print("  ", entry)
print("result:", format_tree(tree) if tree else "no parse")

# A grammar where greed loses: reducing the first 'a' to A means
# B -> 'a' 'b' can never assemble, although S -> A B covers "a a b".
print("\n--- a greedy dead end ---")
tricky = parse_cfg("S -> A B\nA -> 'a'\nB -> 'a' 'b'")
tree, trace = sr_parse(tricky, whitespace_tokenize("a a b"))
for entry in trace:
    print("  ", entry)
print("result:", format_tree(tree) if tree else "no parse (a chart parser finds one)")
