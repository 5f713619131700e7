"""Feature encoding and selection for the classifiers.

Documents are encoded as binary presence vectors over a fixed,
ordered vocabulary: feature ``i`` is on when the i-th vocabulary word
occurs in the document.  The vocabulary is chosen before any encoding
happens, so different classifiers can be compared on identical feature
sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptyCorpus


@dataclass(frozen=True)
class FeatureVector:
    """Indices of the features that are on, out of ``dimension`` many."""

    on: frozenset[int]
    dimension: int

    def __post_init__(self):
        object.__setattr__(self, "on", frozenset(self.on))
        for i in self.on:
            if not (0 <= i < self.dimension):
                raise ValueError(f"feature id {i} outside dimension {self.dimension}")

    def __len__(self):
        return len(self.on)

    def __contains__(self, i):
        return i in self.on


@dataclass(frozen=True)
class LabeledExample:
    features: FeatureVector
    label: str


def encode(tokens: list[str], vocabulary: list[str]) -> FeatureVector:
    """Binary presence encoding; words outside the vocabulary are ignored."""
    index = {word: i for i, word in enumerate(vocabulary)}
    on = {index[t] for t in tokens if t in index}
    return FeatureVector(frozenset(on), len(vocabulary))


def select_features(
    corpus: list[tuple[str, list[str]]],
    count_cutoff: int = 1,
    budget: int | None = None,
) -> list[str]:
    """Choose a vocabulary from labeled token documents.

    Words occurring at least ``count_cutoff`` times qualify; the result
    is ordered by descending count, ties alphabetically, and truncated
    to ``budget`` entries when one is given.  The same corpus always
    yields the same vocabulary.
    """
    if not corpus:
        raise EmptyCorpus("feature selection needs at least one document")
    counts: dict[str, int] = {}
    for _, tokens in corpus:
        for token in tokens:
            counts[token] = counts.get(token, 0) + 1
    qualifying = [w for w, c in counts.items() if c >= count_cutoff]
    qualifying.sort(key=lambda w: (-counts[w], w))
    if budget is not None:
        qualifying = qualifying[:budget]
    return qualifying


def encode_corpus(
    corpus: list[tuple[str, list[str]]], vocabulary: list[str]
) -> list[LabeledExample]:
    return [LabeledExample(encode(tokens, vocabulary), label) for label, tokens in corpus]


def read_corpus(text: str) -> list[tuple[str, list[str]]]:
    """Corpus files carry one document per line: ``label<TAB>tokens...``."""
    corpus = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if "\t" not in line:
            raise ValueError(f"line {lineno}: expected 'label<TAB>token ...'")
        label, body = line.split("\t", 1)
        corpus.append((label.strip(), body.split()))
    if not corpus:
        raise EmptyCorpus("corpus file holds no documents")
    return corpus
