#!/usr/bin/env python3
"""Building a tagger out of smaller taggers.

Each tagger handles what it knows and defers the rest down a backoff
chain: trained word statistics first, a suffix rule next, a blanket
default at the end.
"""

from pathlib import Path

from lingkit.tag import DefaultTagger, RegexpTagger, evaluate_tagger, train_unigram
from lingkit.tokens import read_tagged, untag, whitespace_tokenize

DATA = Path(__file__).parent / "data"

corpus = [read_tagged(line) for line in (DATA / "tagged.txt").read_text().splitlines() if line.strip()]
print(f"training corpus: {len(corpus)} sentences")

default = DefaultTagger("NN")
suffixes = RegexpTagger(
    [(r".*s$", "VBZ"), (r".*ed$", "VBD"), (r".*ing$", "VBG")],
    backoff=default,
)
unigram = train_unigram(corpus, backoff=suffixes)

sentence = whitespace_tokenize("the dog chased swimming zebras")
print("\ninput:", " ".join(t.text for t in sentence))
for name, tagger in [("default only", default), ("suffix rules", suffixes), ("unigram chain", unigram)]:
    tagged = tagger.tag(sentence)
    print(f"{name:14s}", " ".join(f"{t.text}/{t.tag}" for t in tagged))

print("\naccuracy on the training sentences themselves:")
for name, tagger in [("default only", default), ("suffix rules", suffixes), ("unigram chain", unigram)]:
    print(f"  {name:14s} {evaluate_tagger(tagger, corpus):.3f}")

# Unknown words fall through every stage and get the UNK sentinel when
# even the end of the chain cannot answer.
bare = train_unigram(corpus)  # no backoff at all
print("\nwithout any backoff:", " ".join(t.tag for t in bare.tag(untag(sentence))))
