"""A Naive Bayes text classifier over binary presence features.

Class priors are maximum-likelihood estimates over the training
labels.  Each per-class feature likelihood P(f=1 | c) is a Lidstone
estimate over two bins (present / absent), so no likelihood is ever
exactly 0 or 1 and unseen combinations stay usable.

Scoring multiplies the prior with the likelihoods of the features that
are PRESENT in the input; absent features contribute nothing.  An empty
input therefore falls back to the priors alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import MissingClass
from ..probability import FreqDist, LidstoneProbDist, MleProbDist
from .features import FeatureVector, LabeledExample


@dataclass
class NaiveBayesModel:
    classes: list[str]
    dimension: int
    priors: MleProbDist
    likelihoods: dict[str, list[float]]  # P(f_i = 1 | c) per class
    label_counts: FreqDist | None = None

    def classify(self, x: FeatureVector) -> tuple[str, dict[str, float]]:
        """The best label and the full normalized posterior.

        Score ties go to the lexicographically smallest label.
        """
        scores = {}
        for c in self.classes:
            score = self.priors.prob(c)
            for i in x.on:
                score *= self.likelihoods[c][i]
            scores[c] = score
        total = sum(scores.values())
        posterior = {c: s / total for c, s in scores.items()}
        best = min(self.classes, key=lambda c: (-posterior[c], c))
        return best, posterior

    def to_json(self, vocabulary: list[str] | None = None) -> str:
        counts = self.label_counts or FreqDist()
        return json.dumps(
            {
                "kind": "naivebayes",
                "classes": self.classes,
                "vocabulary": vocabulary or [],
                "priors": {c: self.priors.prob(c) for c in self.classes},
                "label_counts": {c: counts.count(c) for c in self.classes},
                "likelihoods": self.likelihoods,
            },
            indent=2,
        )


def train_naive_bayes(
    corpus: list[LabeledExample],
    gamma: float = 1.0,
    classes: list[str] | None = None,
) -> NaiveBayesModel:
    """Fit priors and per-class feature likelihoods.

    When an explicit class list is declared, every class must occur in
    the corpus at least once.
    """
    if classes is None:
        classes = sorted({ex.label for ex in corpus})
    label_counts = FreqDist()
    for ex in corpus:
        label_counts.increment(ex.label)
    for c in classes:
        if label_counts.count(c) == 0:
            raise MissingClass(c)
    dimension = corpus[0].features.dimension if corpus else 0

    likelihoods: dict[str, list[float]] = {}
    for c in classes:
        examples = [ex for ex in corpus if ex.label == c]
        row = []
        for i in range(dimension):
            fd = FreqDist()
            for ex in examples:
                fd.increment("on" if i in ex.features else "off")
            row.append(LidstoneProbDist(fd, gamma, bins=2).prob("on"))
        likelihoods[c] = row

    return NaiveBayesModel(
        classes=list(classes),
        dimension=dimension,
        priors=MleProbDist(label_counts),
        likelihoods=likelihoods,
        label_counts=label_counts,
    )


def naive_bayes_from_json(text: str) -> tuple[NaiveBayesModel, list[str]]:
    data = json.loads(text)
    counts = FreqDist({c: n for c, n in data["label_counts"].items() if n > 0})
    model = NaiveBayesModel(
        classes=list(data["classes"]),
        dimension=len(next(iter(data["likelihoods"].values()), [])),
        priors=MleProbDist(counts),
        likelihoods={c: list(v) for c, v in data["likelihoods"].items()},
        label_counts=counts,
    )
    return model, list(data["vocabulary"])
