"""Text classification: feature encoding, Naive Bayes, maximum entropy.

Both classifiers consume the same binary feature encoding, so they can
be compared head to head on identical inputs.  Feature selection, the
encoders, and the corpus file format live in :mod:`.features`; the
models in :mod:`.naivebayes` and :mod:`.maxent`.
"""

from .features import (
    FeatureVector,
    LabeledExample,
    encode,
    read_corpus,
    select_features,
)
from .maxent import MaxentModel, train_maxent
from .naivebayes import NaiveBayesModel, train_naive_bayes

__all__ = [
    "FeatureVector",
    "LabeledExample",
    "encode",
    "read_corpus",
    "select_features",
    "NaiveBayesModel",
    "train_naive_bayes",
    "MaxentModel",
    "train_maxent",
]
