"""Transformational regular-expression chunking.

A chunk structure is a flat partition of a tagged sentence: some spans
are chunks (say, base noun phrases), the rest is loose material.  Rules
rewrite the partition and are written against *tag patterns*: regular
expressions over whole part-of-speech tags, where each tag is written
as an angle-bracket unit.  ``<NN.*>`` matches one noun-like tag,
``<DT><NN>`` a determiner then a noun, ``<JJ>*`` any run of adjectives.
A ``.`` inside brackets matches any character except ``{}<>``, so a
wildcard can never leak across a tag boundary.

Five rule types transform a structure:

* ``chunk``   - matches in unchunked material each become a chunk
* ``chink``   - matches inside a chunk are cut out of it
* ``unchunk`` - chunks wholly matching the pattern are dissolved
* ``merge``   - two adjacent chunks fuse when the first ends with a
  match of one pattern and the second starts with a match of another
* ``split``   - a chunk is cut at points where one pattern ends and
  the other begins

Matching is leftmost with greedy quantifiers (host regex semantics),
single pass per application: a rule never re-applies to its own output
within one application.  Zero-width matches are ignored everywhere.
rules compose into cascades, applied strictly in order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import EmptyCorpus, MalformedTaggedItem, PatternSyntax, TokenMismatch
from .tokens import Location, TaggedToken

RULE_KINDS = {"chunk": 1, "chink": 1, "unchunk": 1, "merge": 2, "split": 2}


class CompiledTagPattern:
    """A tag pattern compiled to regexes over the ``<TAG><TAG>`` encoding.

    Every literal in the compiled form matches one whole unit, so any
    match begins and ends on unit boundaries by construction.
    """

    def __init__(self, source: str):
        self.source = source
        body = _translate(source)
        try:
            self.regex = re.compile(body)
            self._at_end = re.compile(f"(?:{body})$")
        except re.error as err:
            raise PatternSyntax(f"bad tag pattern {source!r}: {err}")

    def finditer(self, text: str):
        """Non-empty, non-overlapping matches, leftmost first."""
        for m in self.regex.finditer(text):
            if m.start() != m.end():
                yield m

    def covers(self, text: str) -> bool:
        """Does the pattern match the entire (non-empty) string?"""
        m = self.regex.fullmatch(text)
        return m is not None and text != ""

    def match_end(self, text: str):
        """A non-empty match ending exactly at the end of ``text``."""
        m = self._at_end.search(text)
        if m is not None and m.start() != m.end():
            return m
        return None

    def match_at(self, text: str, pos: int):
        """A non-empty match starting exactly at ``pos``."""
        m = self.regex.match(text, pos)
        if m is not None and m.start() != m.end():
            return m
        return None

    def __repr__(self):
        return f"CompiledTagPattern({self.source!r})"


def _translate(source: str) -> str:
    # Whitespace is insignificant; long alternations get wrapped in
    # source files and that must not change their meaning.
    src = "".join(source.split())
    out = []
    inside = False
    i = 0
    while i < len(src):
        c = src[i]
        if c == "<":
            if inside:
                raise PatternSyntax(f"nested '<' in {source!r}")
            inside = True
            out.append("(?:<(?:")
        elif c == ">":
            if not inside:
                raise PatternSyntax(f"unmatched '>' in {source!r}")
            inside = False
            out.append(")>)")
        elif inside:
            if c == "\\":
                if i + 1 >= len(src):
                    raise PatternSyntax(f"dangling escape in {source!r}")
                out.append(src[i : i + 2])
                i += 2
                continue
            if c == ".":
                out.append(r"[^\{\}<>]")
            elif c in "{}":
                raise PatternSyntax(f"braces are not allowed inside tags: {source!r}")
            else:
                out.append(c)
        else:
            if c in "*+?|()":
                out.append(c)
            else:
                raise PatternSyntax(f"unexpected {c!r} between tags in {source!r}")
        i += 1
    if inside:
        raise PatternSyntax(f"unclosed '<' in {source!r}")
    return "".join(out)


_COMPILED: dict[str, CompiledTagPattern] = {}


def compile_tag_pattern(source: str) -> CompiledTagPattern:
    if source not in _COMPILED:
        _COMPILED[source] = CompiledTagPattern(source)
    return _COMPILED[source]


@dataclass(frozen=True)
class ChunkRuleSpec:
    """One rule of a cascade: a kind, its pattern(s), and a free note."""

    kind: str
    patterns: tuple[str, ...]
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if len(self.patterns) != RULE_KINDS[self.kind]:
            raise ValueError(
                f"{self.kind} takes {RULE_KINDS[self.kind]} pattern(s), got {len(self.patterns)}"
            )
        for p in self.patterns:
            compile_tag_pattern(p)


def chunk_rule(pattern: str, note: str = "") -> ChunkRuleSpec:
    return ChunkRuleSpec("chunk", (pattern,), note)


def chink_rule(pattern: str, note: str = "") -> ChunkRuleSpec:
    return ChunkRuleSpec("chink", (pattern,), note)


def unchunk_rule(pattern: str, note: str = "") -> ChunkRuleSpec:
    return ChunkRuleSpec("unchunk", (pattern,), note)


def merge_rule(tail: str, head: str, note: str = "") -> ChunkRuleSpec:
    return ChunkRuleSpec("merge", (tail, head), note)


def split_rule(left: str, right: str, note: str = "") -> ChunkRuleSpec:
    return ChunkRuleSpec("split", (left, right), note)


@dataclass(frozen=True)
class ChunkStructure:
    """A tagged sentence plus disjoint, sorted chunk spans."""

    tokens: tuple[TaggedToken, ...]
    chunks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "chunks", tuple(tuple(c) for c in self.chunks))
        n = len(self.tokens)
        last_end = None
        for i, j in self.chunks:
            if not (0 <= i < j <= n):
                raise ValueError(f"chunk ({i}, {j}) outside the sentence of {n} tokens")
            if last_end is not None and i < last_end:
                raise ValueError("chunks must be sorted and disjoint")
            last_end = j

    @property
    def n(self):
        return len(self.tokens)

    def tags(self) -> list[str]:
        return [t.tag or "" for t in self.tokens]

    def with_chunks(self, chunks) -> "ChunkStructure":
        return ChunkStructure(self.tokens, tuple(sorted(chunks)))

    def __str__(self):
        return format_gold_line(self)


def unchunk(cs: ChunkStructure) -> ChunkStructure:
    """The same tokens with every chunk dissolved."""
    return ChunkStructure(cs.tokens, ())


class _TagString:
    """The sentence rendered as concatenated ``<TAG>`` units, with maps
    between character offsets and token indices."""

    def __init__(self, cs: ChunkStructure):
        self.units = [f"<{t.tag or ''}>" for t in cs.tokens]
        self.offsets = [0]
        for unit in self.units:
            self.offsets.append(self.offsets[-1] + len(unit))
        self.text = "".join(self.units)
        self._tok_at = {off: k for k, off in enumerate(self.offsets)}

    def slice(self, i: int, j: int) -> str:
        return self.text[self.offsets[i] : self.offsets[j]]

    def to_token(self, char_offset: int) -> int:
        # Compiled tag patterns can only match whole units, so a match
        # boundary is always a unit boundary.
        return self._tok_at[char_offset]


def _apply_chunk(cs: ChunkStructure, pattern: CompiledTagPattern) -> ChunkStructure:
    ts = _TagString(cs)
    new_chunks = list(cs.chunks)
    regions = _unchunked_regions(cs)
    for a, b in regions:
        base = ts.offsets[a]
        for m in pattern.finditer(ts.slice(a, b)):
            new_chunks.append((ts.to_token(base + m.start()), ts.to_token(base + m.end())))
    return cs.with_chunks(new_chunks)


def _unchunked_regions(cs: ChunkStructure) -> list[tuple[int, int]]:
    regions = []
    at = 0
    for i, j in cs.chunks:
        if at < i:
            regions.append((at, i))
        at = j
    if at < cs.n:
        regions.append((at, cs.n))
    return regions


def _apply_chink(cs: ChunkStructure, pattern: CompiledTagPattern) -> ChunkStructure:
    ts = _TagString(cs)
    new_chunks = []
    for i, j in cs.chunks:
        base = ts.offsets[i]
        keep_from = i
        for m in pattern.finditer(ts.slice(i, j)):
            cut_i = ts.to_token(base + m.start())
            cut_j = ts.to_token(base + m.end())
            if keep_from < cut_i:
                new_chunks.append((keep_from, cut_i))
            keep_from = cut_j
        if keep_from < j:
            new_chunks.append((keep_from, j))
    return cs.with_chunks(new_chunks)


def _apply_unchunk(cs: ChunkStructure, pattern: CompiledTagPattern) -> ChunkStructure:
    ts = _TagString(cs)
    kept = [(i, j) for i, j in cs.chunks if not pattern.covers(ts.slice(i, j))]
    return cs.with_chunks(kept)


def _apply_merge(cs: ChunkStructure, tail: CompiledTagPattern, head: CompiledTagPattern) -> ChunkStructure:
    ts = _TagString(cs)
    chunks = list(cs.chunks)
    k = 0
    # Left to right, and a merged chunk may merge again with the next
    # one, so a whole run can collapse in one application.
    while k + 1 < len(chunks):
        (i1, j1), (i2, j2) = chunks[k], chunks[k + 1]
        if j1 == i2 and tail.match_end(ts.slice(i1, j1)) and head.match_at(ts.slice(i2, j2), 0):
            chunks[k : k + 2] = [(i1, j2)]
        else:
            k += 1
    return cs.with_chunks(chunks)


def _apply_split(cs: ChunkStructure, left: CompiledTagPattern, right: CompiledTagPattern) -> ChunkStructure:
    ts = _TagString(cs)
    new_chunks = []
    for i, j in cs.chunks:
        text = ts.slice(i, j)
        base = ts.offsets[i]
        cuts = [i]
        consumed = 0  # char offset within text; match sites may not overlap
        for k in range(i + 1, j):
            c = ts.offsets[k] - base
            if c < consumed:
                continue
            left_m = left.match_end(text[consumed:c])
            if left_m is None:
                continue
            right_m = right.match_at(text, c)
            if right_m is None or right_m.end() > len(text):
                continue
            cuts.append(k)
            consumed = right_m.end()
        cuts.append(j)
        for a, b in zip(cuts, cuts[1:]):
            new_chunks.append((a, b))
    return cs.with_chunks(new_chunks)


def apply_chunk_rule(cs: ChunkStructure, rule: ChunkRuleSpec) -> ChunkStructure:
    """Apply one rule, returning a new structure; tokens never change."""
    compiled = [compile_tag_pattern(p) for p in rule.patterns]
    if rule.kind == "chunk":
        return _apply_chunk(cs, compiled[0])
    if rule.kind == "chink":
        return _apply_chink(cs, compiled[0])
    if rule.kind == "unchunk":
        return _apply_unchunk(cs, compiled[0])
    if rule.kind == "merge":
        return _apply_merge(cs, compiled[0], compiled[1])
    if rule.kind == "split":
        return _apply_split(cs, compiled[0], compiled[1])
    raise ValueError(f"unknown rule kind {rule.kind!r}")  # pragma: no cover


def apply_cascade(cs: ChunkStructure, rules: list[ChunkRuleSpec]) -> ChunkStructure:
    """Apply rules strictly in order, each to the previous output."""
    for rule in rules:
        cs = apply_chunk_rule(cs, rule)
    return cs


# ---------------------------------------------------------------------------
# Scoring


@dataclass(frozen=True)
class ChunkScore:
    precision: float
    recall: float
    f1: float
    missed: tuple[tuple[int, int], ...]
    incorrect: tuple[tuple[int, int], ...]


def score_chunks(gold: ChunkStructure, test: ChunkStructure) -> ChunkScore:
    """Exact-span precision/recall/F1 of ``test`` against ``gold``.

    An empty test side scores precision 1, an empty gold side scores
    recall 1; F1 is 0 whenever precision + recall is.  ``missed`` are
    gold spans absent from test, ``incorrect`` the reverse.
    """
    if [(t.text, t.tag) for t in gold.tokens] != [(t.text, t.tag) for t in test.tokens]:
        raise TokenMismatch("gold and test structures cover different tokens")
    gold_set = set(gold.chunks)
    test_set = set(test.chunks)
    hits = len(gold_set & test_set)
    precision = hits / len(test_set) if test_set else 1.0
    recall = hits / len(gold_set) if gold_set else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return ChunkScore(
        precision,
        recall,
        f1,
        tuple(sorted(gold_set - test_set)),
        tuple(sorted(test_set - gold_set)),
    )


def np_tag_rates(corpus: list[ChunkStructure]) -> dict[str, float]:
    """For each tag, the fraction of its occurrences inside chunks."""
    if not corpus:
        raise EmptyCorpus("tag rates need at least one sentence")
    inside: dict[str, int] = {}
    total: dict[str, int] = {}
    for cs in corpus:
        chunked = set()
        for i, j in cs.chunks:
            chunked.update(range(i, j))
        for k, token in enumerate(cs.tokens):
            tag = token.tag or ""
            total[tag] = total.get(tag, 0) + 1
            if k in chunked:
                inside[tag] = inside.get(tag, 0) + 1
    return {tag: inside.get(tag, 0) / total[tag] for tag in total}


def high_rate_chunk_rule(rates: dict[str, float], threshold: float = 0.5) -> ChunkRuleSpec:
    """A single chunk rule over every tag whose in-chunk rate exceeds
    the threshold: runs of such tags become chunks.

    This reproduces the brute-force strategy of chunking any tag that
    sits inside a noun phrase more often than not.
    """
    chosen = sorted(tag for tag, rate in rates.items() if rate > threshold)
    if not chosen:
        raise ValueError(f"no tag has a rate above {threshold}")
    alternation = "|".join(re.escape(tag) for tag in chosen)
    return chunk_rule(f"<{alternation}>*", note=f"tags with in-chunk rate > {threshold}")


# ---------------------------------------------------------------------------
# Text formats


def render_tag_string(cs: ChunkStructure) -> str:
    """The braced tag encoding, e.g. ``{<DT><NN>}<VBD>``."""
    out = []
    opens = {i for i, _ in cs.chunks}
    closes = {j for _, j in cs.chunks}
    for k, token in enumerate(cs.tokens):
        if k in closes:
            out.append("}")
        if k in opens:
            out.append("{")
        out.append(f"<{token.tag or ''}>")
    if cs.n in closes:
        out.append("}")
    return "".join(out)


def parse_tag_string(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    """Invert :func:`render_tag_string`: tags plus chunk spans."""
    tags = []
    spans = []
    open_at = None
    i = 0
    while i < len(text):
        c = text[i]
        if c == "{":
            if open_at is not None:
                raise ValueError("nested '{' in tag string")
            open_at = len(tags)
            i += 1
        elif c == "}":
            if open_at is None:
                raise ValueError("unmatched '}' in tag string")
            if open_at == len(tags):
                raise ValueError("empty chunk in tag string")
            spans.append((open_at, len(tags)))
            open_at = None
            i += 1
        elif c == "<":
            end = text.find(">", i)
            if end < 0:
                raise ValueError("unclosed '<' in tag string")
            tags.append(text[i + 1 : end])
            i = end + 1
        else:
            raise ValueError(f"unexpected {c!r} in tag string")
    if open_at is not None:
        raise ValueError("unclosed '{' in tag string")
    return tags, spans


def parse_gold_line(line: str, source: str | None = None) -> ChunkStructure:
    """Read one bracketed gold sentence: ``[ the/DT cat/NN ] sat/VBD``."""
    tokens = []
    chunks = []
    open_at = None
    for item in line.split():
        if item == "[":
            if open_at is not None:
                raise ValueError("nested '[' in gold line")
            open_at = len(tokens)
        elif item == "]":
            if open_at is None:
                raise ValueError("unmatched ']' in gold line")
            if open_at == len(tokens):
                raise ValueError("empty chunk in gold line")
            chunks.append((open_at, len(tokens)))
            open_at = None
        else:
            word, sep, tag = item.rpartition("/")
            if not sep or not word or not tag:
                raise MalformedTaggedItem(len(tokens), item)
            tokens.append(TaggedToken(word, tag, Location(len(tokens), len(tokens) + 1, source)))
    if open_at is not None:
        raise ValueError("unclosed '[' in gold line")
    return ChunkStructure(tuple(tokens), tuple(chunks))


def format_gold_line(cs: ChunkStructure) -> str:
    out = []
    opens = {i for i, _ in cs.chunks}
    closes = {j for _, j in cs.chunks}
    for k, token in enumerate(cs.tokens):
        if k in closes:
            out.append("]")
        if k in opens:
            out.append("[")
        out.append(f"{token.text}/{token.tag}")
    if cs.n in closes:
        out.append("]")
    return " ".join(out)


def read_gold_file(text: str, source: str | None = None) -> list[ChunkStructure]:
    """One sentence per non-blank line."""
    corpus = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        corpus.append(parse_gold_line(line, source=f"{source or 'gold'}:{lineno}"))
    return corpus


def load_cascade(text: str) -> list[ChunkRuleSpec]:
    """Cascade files are JSON arrays of {kind, patterns, note}."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("a cascade file must hold a JSON array")
    rules = []
    for entry in data:
        rules.append(
            ChunkRuleSpec(entry["kind"], tuple(entry["patterns"]), entry.get("note", ""))
        )
    return rules


def dump_cascade(rules: list[ChunkRuleSpec]) -> str:
    data = [{"kind": r.kind, "patterns": list(r.patterns), "note": r.note} for r in rules]
    return json.dumps(data, indent=2)
