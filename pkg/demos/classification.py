#!/usr/bin/env python3
"""Naive Bayes and maximum entropy on one feature encoding.

Both classifiers see the exact same binary presence vectors, so any
difference in their answers comes from the models, not the features.
The maxent training prints its per-iteration constraint violation: the
number that must shrink for the fit to mean anything.
"""

import warnings
from pathlib import Path

from lingkit.classify import encode, read_corpus, select_features, train_maxent, train_naive_bayes
from lingkit.classify.features import encode_corpus

DATA = Path(__file__).parent / "data"

corpus = read_corpus((DATA / "sentiment.tsv").read_text())
vocabulary = select_features(corpus, count_cutoff=2)
print("vocabulary:", vocabulary)
examples = encode_corpus(corpus, vocabulary)

nb = train_naive_bayes(examples, gamma=1.0)
print("\nnaive bayes likelihoods P(word present | class):")
for label in nb.classes:
    row = ", ".join(f"{w}={p:.2f}" for w, p in zip(vocabulary, nb.likelihoods[label]))
    print(f"   {label}: {row}")

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    gis = train_maxent(examples, algorithm="gis")
    iis = train_maxent(examples, algorithm="iis")

print(f"\ngis converged in {gis.iterations} iterations, violations:")
print("  ", " ".join(f"{v:.1e}" for v in gis.violations[:8]), "...")
print(f"iis converged in {iis.iterations} iterations")

print("\nhead-to-head on fresh documents:")
for text in ["good good story", "bad ending", "fine film", "good bad"]:
    x = encode(text.split(), vocabulary)
    nb_label, nb_post = nb.classify(x)
    me_label, me_post = gis.classify(x)
    print(
        f"   {text!r:20s} nb: {nb_label} ({nb_post[nb_label]:.2f})"
        f"   maxent: {me_label} ({me_post[me_label]:.2f})"
    )
