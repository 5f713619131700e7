"""Part-of-speech taggers with backoff chaining.

Three implementations share one interface: a default tagger that
assigns a single tag everywhere, a regular-expression tagger that tries
an ordered pattern list, and a unigram tagger trained on a tagged
corpus.  A tagger that cannot decide defers to its backoff; when the
end of the chain still has no answer the token gets the ``UNK``
sentinel, because a pipeline should never abort halfway through a
corpus over one unknown word.
"""

from __future__ import annotations

import json
import re

from .errors import EmptyCorpus
from .probability import CondFreqDist
from .tokens import TaggedToken

UNKNOWN_TAG = "UNK"


class Tagger:
    """Interface: assign tags, deferring to a backoff when unsure."""

    def __init__(self, backoff: "Tagger | None" = None):
        self.backoff = backoff
        seen = set()
        link = self
        while link is not None:
            if id(link) in seen:
                raise ValueError("backoff chain forms a cycle")
            seen.add(id(link))
            link = link.backoff

    def tag_word(self, text: str) -> str | None:
        raise NotImplementedError

    def tag(self, tokens: list[TaggedToken]) -> list[TaggedToken]:
        """Tag every token, walking the backoff chain per word.

        Text and order are untouched; only tags change.
        """
        out = []
        for token in tokens:
            tag = None
            link: Tagger | None = self
            while tag is None and link is not None:
                tag = link.tag_word(token.text)
                link = link.backoff
            out.append(TaggedToken(token.text, tag or UNKNOWN_TAG, token.loc))
        return out


class DefaultTagger(Tagger):
    """The same tag for every word; the usual end of a backoff chain."""

    def __init__(self, tag: str, backoff: Tagger | None = None):
        super().__init__(backoff)
        self._tag = tag

    def tag_word(self, text: str) -> str | None:
        return self._tag


class RegexpTagger(Tagger):
    """An ordered (pattern, tag) list; first match wins.

    Patterns are tried with an unanchored search, so authors write
    their own anchors (``.*ing$`` and so on).
    """

    def __init__(self, rules: list[tuple[str, str]], backoff: Tagger | None = None):
        super().__init__(backoff)
        self._rules = [(re.compile(p), tag) for p, tag in rules]

    def tag_word(self, text: str) -> str | None:
        for pattern, tag in self._rules:
            if pattern.search(text):
                return tag
        return None

    @classmethod
    def from_json(cls, text: str, backoff: Tagger | None = None) -> "RegexpTagger":
        """Spec file: a JSON array of {pattern, tag}, order preserved."""
        data = json.loads(text)
        return cls([(entry["pattern"], entry["tag"]) for entry in data], backoff)


class UnigramTagger(Tagger):
    """Each word gets its most frequent training tag.

    Count ties go to the lexicographically smaller tag, so training is
    reproducible run to run.
    """

    def __init__(self, counts: CondFreqDist, backoff: Tagger | None = None):
        super().__init__(backoff)
        self._counts = counts

    def tag_word(self, text: str) -> str | None:
        if text in self._counts and self._counts[text].N > 0:
            return self._counts[text].max()
        return None

    def counts_as_dict(self) -> dict[str, dict[str, int]]:
        return {
            word: dict(self._counts[word].items()) for word in self._counts.conditions()
        }


def train_unigram(
    corpus: list[list[TaggedToken]], backoff: Tagger | None = None
) -> UnigramTagger:
    """Accumulate per-word tag counts from tagged sentences."""
    if not corpus:
        raise EmptyCorpus("unigram training needs at least one sentence")
    counts = CondFreqDist()
    for sentence in corpus:
        for token in sentence:
            if token.tag is not None:
                counts[token.text].increment(token.tag)
    return UnigramTagger(counts, backoff)


def evaluate_tagger(tagger: Tagger, gold: list[list[TaggedToken]]) -> float:
    """Token accuracy of the tagger against tagged sentences."""
    if not gold:
        raise EmptyCorpus("evaluation needs at least one sentence")
    right = 0
    total = 0
    for sentence in gold:
        tagged = tagger.tag(sentence)
        for got, want in zip(tagged, sentence):
            total += 1
            if got.tag == want.tag:
                right += 1
    if total == 0:
        raise EmptyCorpus("evaluation corpus has no tokens")
    return right / total
