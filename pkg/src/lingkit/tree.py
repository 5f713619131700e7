"""Ordered labeled trees over tokens.

A :class:`Tree` has a string label and an ordered tuple of children,
each another tree or a leaf token.  Leaves, read left to right, must
occupy strictly increasing, adjacent locations; this is what makes a
tree a structure *over a text* rather than an arbitrary nesting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tokens import Location, TaggedToken


@dataclass(frozen=True)
class Tree:
    node: str
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        for child in self.children:
            if not isinstance(child, (Tree, TaggedToken)):
                raise TypeError(f"tree child must be Tree or TaggedToken, got {type(child).__name__}")
        locs = [leaf.loc for leaf in leaves(self)]
        for a, b in zip(locs, locs[1:]):
            if a.source != b.source or a.end != b.start:
                raise ValueError(f"leaf locations must be adjacent and increasing: {a} then {b}")

    def __str__(self):
        return format_tree(self)


def leaves(t: Tree | TaggedToken) -> list[TaggedToken]:
    """The left-to-right sequence of leaf tokens under ``t``."""
    if isinstance(t, TaggedToken):
        return [t]
    out = []
    for child in t.children:
        out.extend(leaves(child))
    return out


def height(t: Tree | TaggedToken) -> int:
    """1 for a leaf or childless node, else 1 + the tallest child."""
    if isinstance(t, TaggedToken) or not t.children:
        return 1
    return 1 + max(height(c) for c in t.children)


def format_tree(t: Tree | TaggedToken) -> str:
    """Render as a single-line bracketed string like ``(S (NP the dog))``."""
    if isinstance(t, TaggedToken):
        return t.text if t.tag is None else f"{t.text}/{t.tag}"
    if not t.children:
        return t.node
    inner = " ".join(format_tree(c) for c in t.children)
    return f"({t.node} {inner})"


def parse_tree(text: str, source: str | None = None) -> Tree:
    """Parse a bracketed tree string, the inverse of :func:`format_tree`.

    Leaf tokens are assigned sequential locations starting at 0.  Leaves
    written as ``word/TAG`` keep the tag (last-slash split), bare words
    stay untagged.
    """
    pieces = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0
    index = 0

    def parse_node():
        nonlocal pos, index
        if pos >= len(pieces):
            raise ValueError("unexpected end of tree text")
        if pieces[pos] == "(":
            pos += 1
            if pos >= len(pieces) or pieces[pos] in "()":
                raise ValueError("expected a node label after '('")
            label = pieces[pos]
            pos += 1
            children = []
            while pos < len(pieces) and pieces[pos] != ")":
                children.append(parse_node())
            if pos >= len(pieces):
                raise ValueError("missing ')'")
            pos += 1
            return Tree(label, tuple(children))
        if pieces[pos] == ")":
            raise ValueError("unexpected ')'")
        word, sep, tag = pieces[pos].rpartition("/")
        pos += 1
        loc = Location(index, index + 1, source)
        index += 1
        if sep and word and tag:
            return TaggedToken(word, tag, loc)
        return TaggedToken(pieces[pos - 1], None, loc)

    result = parse_node()
    if pos != len(pieces):
        raise ValueError(f"trailing material after tree: {' '.join(pieces[pos:])}")
    if isinstance(result, TaggedToken):
        raise ValueError("a tree, not a bare token, was expected")
    return result
