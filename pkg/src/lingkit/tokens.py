"""Text units: locations, tagged tokens, and plain/tagged tokenization.

A :class:`Location` addresses a token-index range within a source text;
spans are measured in tokens, not characters, because every downstream
structure (chart edges, chunk spans) indexes between words.  A
:class:`TaggedToken` couples a word with an optional part-of-speech tag
and its location.  Both are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedTaggedItem


@dataclass(frozen=True, order=True)
class Location:
    """A half-open token-index span ``[start, end)`` in a source text.

    Locations from the same source are comparable; two of them overlap
    unless one ends at or before the other's start.
    """

    start: int
    end: int
    source: str | None = None

    def __post_init__(self):
        if not (0 <= self.start <= self.end):
            raise ValueError(f"bad location bounds [{self.start}, {self.end})")

    def precedes(self, other: "Location") -> bool:
        return self.end <= other.start

    def overlaps(self, other: "Location") -> bool:
        if self.source != other.source:
            return False
        return not (self.precedes(other) or other.precedes(self))

    def __str__(self):
        src = f"@{self.source}" if self.source else ""
        return f"{self.start}:{self.end}{src}"


@dataclass(frozen=True)
class TaggedToken:
    """A single word with an optional tag and its location.

    The text must be non-empty and whitespace-free; tags are opaque
    non-empty strings when present (no closed tag set is enforced).
    """

    text: str
    tag: str | None
    loc: Location

    def __post_init__(self):
        if not self.text or any(c.isspace() for c in self.text):
            raise ValueError(f"token text must be non-empty and whitespace-free: {self.text!r}")
        if self.tag is not None and not self.tag:
            raise ValueError("tag, when present, must be non-empty")

    def __str__(self):
        if self.tag is None:
            return f"{self.text}@{self.loc}"
        return f"{self.text}/{self.tag}@{self.loc}"


def whitespace_tokenize(text: str, source: str | None = None) -> list[TaggedToken]:
    """Split ``text`` on runs of whitespace into untagged tokens.

    Token locations are 0-based positions in token units; an empty or
    all-whitespace input yields an empty list.
    """
    tokens = []
    for i, word in enumerate(text.split()):
        tokens.append(TaggedToken(word, None, Location(i, i + 1, source)))
    return tokens


def read_tagged(text: str, source: str | None = None) -> list[TaggedToken]:
    """Parse ``word/TAG`` items separated by whitespace.

    The split is on the LAST slash, so words containing slashes (like
    ``1/2``) survive as long as a tag follows.  An item with no slash
    raises :class:`MalformedTaggedItem` with its token position.
    """
    tokens = []
    for i, item in enumerate(text.split()):
        word, sep, tag = item.rpartition("/")
        if not sep or not word or not tag:
            raise MalformedTaggedItem(i, item)
        tokens.append(TaggedToken(word, tag, Location(i, i + 1, source)))
    return tokens


def format_tagged(tokens: list[TaggedToken]) -> str:
    """Render tokens as ``word/TAG`` text, the inverse of :func:`read_tagged`."""
    return " ".join(f"{t.text}/{t.tag}" for t in tokens)


def untag(tokens: list[TaggedToken]) -> list[TaggedToken]:
    """Strip tags, keeping text and locations."""
    return [TaggedToken(t.text, None, t.loc) for t in tokens]
