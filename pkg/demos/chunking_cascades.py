#!/usr/bin/env python3
"""Three ways to find base noun phrases with rule cascades.

Rules rewrite a flat chunk structure: chunk what matches, chink out
what should not have been swallowed, dissolve, merge, split.  The three
cascades below take very different routes to the same task; the scorer
says which one wins on a small gold standard.
"""

from pathlib import Path

from lingkit.chunk import (
    apply_cascade,
    chink_rule,
    chunk_rule,
    format_gold_line,
    high_rate_chunk_rule,
    merge_rule,
    np_tag_rates,
    read_gold_file,
    render_tag_string,
    score_chunks,
    split_rule,
    unchunk,
    unchunk_rule,
)

DATA = Path(__file__).parent / "data"

cascades = {
    "many small rules": [
        chunk_rule("<DT><NN.*><VB.><NN.*>"),
        chunk_rule("<DT><VB.><NN.*>"),
        chunk_rule("<.*>"),
        unchunk_rule("<IN|VB.*|CC|MD|RB.*>"),
        unchunk_rule("<,|\\.|``|''>"),
        merge_rule("<NN.*|DT|JJ.*|CD>", "<NN.*|DT|JJ.*|CD>"),
        split_rule("<NN.*>", "<DT|JJ>"),
    ],
    "one starred alternation": [
        chunk_rule("<\\$|CD|DT|EX|PDT|PRP.*|WP.*|\\#|FW|JJ.*|NN.*|POS|RBS|WDT>*"),
    ],
    "chunk all, chink the rest": [
        chunk_rule("<.*>+"),
        chink_rule("<VB.*|IN|CC|R.*|MD|WRB|TO|.|,>+"),
    ],
}

gold = read_gold_file((DATA / "gold.txt").read_text())
print(f"gold standard: {len(gold)} sentences")
print("first sentence:", format_gold_line(gold[0]))
print("encoded:       ", render_tag_string(gold[0]))

for name, cascade in cascades.items():
    hits = n_test = n_gold = 0
    for sentence in gold:
        guess = apply_cascade(unchunk(sentence), cascade)
        score = score_chunks(sentence, guess)
        both = set(sentence.chunks) & set(guess.chunks)
        hits += len(both)
        n_test += len(guess.chunks)
        n_gold += len(sentence.chunks)
    precision = hits / n_test if n_test else 1.0
    recall = hits / n_gold if n_gold else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    print(f"\n[{name}]")
    print(f"  precision {precision:.3f}  recall {recall:.3f}  f1 {f1:.3f}")
    guess = apply_cascade(unchunk(gold[0]), cascade)
    print("  first sentence came out:", format_gold_line(guess))

# The statistical shortcut: measure how often each tag sits inside a
# chunk, then chunk runs of every tag that is inside more often than not.
rates = np_tag_rates(gold)
print("\nper-tag in-chunk rates:")
for tag in sorted(rates):
    print(f"   {tag:4s} {rates[tag]:.2f}")
learned = high_rate_chunk_rule(rates, threshold=0.5)
print("derived rule:", learned.patterns[0])
guess = apply_cascade(unchunk(gold[0]), [learned])
print("applied to the first sentence:", format_gold_line(guess))
