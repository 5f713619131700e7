"""The chart: edges, chart rules, strategies, and a single-step engine.

A chart records every parsing hypothesis made about a sentence.  Each
hypothesis is an :class:`Edge`: a dotted production over a token span,
where material left of the dot has been recognized and material right
of it is still being sought.  An edge whose dot has reached the end of
its right-hand side is *complete*.

Edges are keyed by (span, production, dot, children).  Because the
children (the ids of the complete edges consumed so far) are part of
the key, distinct derivations of the same constituent live side by
side, and :func:`extract_parses` can read every parse tree straight off
the chart.  The cost is a chart that grows with the number of
derivations, which is fine at classroom scale.

Five rules create edges:

* ``TopDownInit`` seeds predictions for the start symbol at position 0.
* ``LexicalInsert`` adds one complete leaf edge per token, covering the
  token with itself.  Leaf edges are what the fundamental rule combines
  with when an edge's dot sits before a terminal.
* ``TopDownPredict`` expands a nonterminal right of a dot into fresh
  predictions at the dot's position.
* ``BottomUpPredict`` proposes every production whose right-hand side
  starts with the symbol of a complete edge.
* ``Fundamental`` advances an incomplete edge over an adjacent complete
  edge whose symbol matches the one after the dot.

A :class:`Strategy` is an ordering over these rules; ``step`` walks the
ordering and adds exactly one new edge per call, which is what lets a
person watch (and steer) the algorithm edge by edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    CyclicGrammar,
    EpsilonProduction,
    UncoveredTokens,
    UnknownEdgeId,
)
from .grammar import (
    Grammar,
    Nonterminal,
    Production,
    check_coverage,
    format_cfg,
    is_terminal,
    parse_cfg,
    symbol_str,
)
from .tokens import TaggedToken, whitespace_tokenize
from .tree import Tree


@dataclass(frozen=True)
class Edge:
    """A dotted production over the span ``[i, j)``.

    ``children`` holds the ids of the complete edges consumed for the
    symbols left of the dot, in order.  Leaf edges (inserted for the
    tokens themselves) carry a terminal as their production's lhs and
    have no children.
    """

    i: int
    j: int
    production: Production
    dot: int
    children: tuple[int, ...] = ()

    def __post_init__(self):
        if not (0 <= self.dot <= len(self.production.rhs)):
            raise ValueError(f"dot {self.dot} outside rhs of {self.production}")
        if self.i == self.j and self.dot != 0:
            raise ValueError("a zero-width edge must be a fresh prediction")

    @property
    def lhs(self):
        return self.production.lhs

    def is_complete(self) -> bool:
        return self.dot == len(self.production.rhs)

    def next_symbol(self):
        """The symbol right of the dot, or None when complete."""
        if self.is_complete():
            return None
        return self.production.rhs[self.dot]

    def key(self):
        return (self.i, self.j, self.production, self.dot, self.children)

    def __str__(self):
        rhs = [symbol_str(s) for s in self.production.rhs]
        dotted = " ".join(rhs[: self.dot] + ["*"] + rhs[self.dot :])
        return f"[{self.i}:{self.j}] {symbol_str(self.lhs)} -> {dotted}"


class ChartRule(Enum):
    TOP_DOWN_INIT = "TopDownInit"
    TOP_DOWN_PREDICT = "TopDownPredict"
    BOTTOM_UP_PREDICT = "BottomUpPredict"
    FUNDAMENTAL = "Fundamental"
    LEXICAL_INSERT = "LexicalInsert"

    @classmethod
    def from_name(cls, name: str) -> "ChartRule":
        for rule in cls:
            if rule.value == name:
                return rule
        raise ValueError(f"unknown chart rule {name!r}")


@dataclass(frozen=True)
class Strategy:
    """A named rule ordering the stepper cycles through."""

    name: str
    ordering: tuple[ChartRule, ...]


TOP_DOWN = Strategy(
    "TopDown",
    (
        ChartRule.TOP_DOWN_INIT,
        ChartRule.LEXICAL_INSERT,
        ChartRule.TOP_DOWN_PREDICT,
        ChartRule.FUNDAMENTAL,
    ),
)

BOTTOM_UP = Strategy(
    "BottomUp",
    (
        ChartRule.LEXICAL_INSERT,
        ChartRule.BOTTOM_UP_PREDICT,
        ChartRule.FUNDAMENTAL,
    ),
)

STRATEGIES = {
    "TopDown": TOP_DOWN,
    "BottomUp": BOTTOM_UP,
    "td": TOP_DOWN,
    "bu": BOTTOM_UP,
}


def _leaf_production(text: str) -> Production:
    # Internal to the chart: covers a token with its own terminal.
    # Never part of any Grammar, so the no-terminal-lhs rule is intact.
    return Production(text, (text,))


def _check_unary_cycles(g: Grammar):
    # Unary production cycles (A =>+ A through single-nonterminal sides)
    # make the set of distinct derivations infinite, and with children
    # in the edge key the chart would grow forever.  Refuse them.
    graph: dict[Nonterminal, set[Nonterminal]] = {}
    for p in g.productions:
        if len(p.rhs) == 1 and not is_terminal(p.rhs[0]):
            graph.setdefault(p.lhs, set()).add(p.rhs[0])
    visiting: set[Nonterminal] = set()
    done: set[Nonterminal] = set()

    def visit(node):
        if node in done:
            return
        if node in visiting:
            raise CyclicGrammar(f"unary production cycle through {node}")
        visiting.add(node)
        for nxt in graph.get(node, ()):
            visit(nxt)
        visiting.discard(node)
        done.add(node)

    for node in list(graph):
        visit(node)


class Chart:
    """An insertion-ordered, deduplicated set of edges over a sentence.

    The chart only ever grows; every edge gets a stable integer id equal
    to its insertion index.  One chart belongs to one parsing session
    and is mutated by a single writer.
    """

    def __init__(self, grammar: Grammar, tokens: list[TaggedToken]):
        for p in grammar.productions:
            if len(p.rhs) == 0:
                raise EpsilonProduction(f"empty right-hand side for {p.lhs}")
        _check_unary_cycles(grammar)
        uncovered = check_coverage(grammar, tokens)
        if uncovered:
            raise UncoveredTokens(uncovered)
        self.grammar = grammar
        self.tokens = list(tokens)
        self.n = len(tokens)
        self.edges: list[Edge] = []
        self._index: dict[tuple, int] = {}

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge: Edge):
        return edge.key() in self._index

    def get(self, edge_id: int) -> Edge:
        if not (0 <= edge_id < len(self.edges)):
            raise UnknownEdgeId(edge_id)
        return self.edges[edge_id]

    def id_of(self, edge: Edge) -> int:
        return self._index[edge.key()]

    def insert(self, edge: Edge) -> int | None:
        """Add an edge; returns its new id, or None if already present."""
        if edge.key() in self._index:
            return None
        edge_id = len(self.edges)
        self.edges.append(edge)
        self._index[edge.key()] = edge_id
        return edge_id

    def truncate(self, length: int):
        """Drop edges back to the first ``length``; used by session undo.

        Children always reference earlier ids, so any prefix of the
        insertion order is a consistent chart.
        """
        if not (0 <= length <= len(self.edges)):
            raise ValueError(f"cannot truncate to {length}")
        for edge in self.edges[length:]:
            del self._index[edge.key()]
        del self.edges[length:]

    def complete_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.is_complete()]

    def incomplete_edges(self) -> list[Edge]:
        return [e for e in self.edges if not e.is_complete()]


def chart_init(grammar: Grammar, tokens: list[TaggedToken]) -> Chart:
    """An empty chart for the sentence; fails fast on vocabulary gaps,
    epsilon productions, and unary production cycles."""
    return Chart(grammar, tokens)


def _candidates(chart: Chart, rule: ChartRule, selected: set[int] | None = None):
    """Yield the edges the rule would add, in deterministic order.

    Candidates may duplicate edges already in the chart; callers filter
    through ``Chart.insert``.  When a selection is given, it restricts
    the edges a rule reads: the incomplete side of TopDownPredict and
    Fundamental, the complete side of BottomUpPredict and Fundamental.
    A selection that names only one side of the fundamental rule leaves
    the other side unrestricted, so a single chosen edge is combined
    with every compatible partner.
    """
    g = chart.grammar

    def chosen(want_complete, unselected_fallback):
        if selected is None:
            pool = chart.edges
        else:
            pool = [chart.get(i) for i in sorted(selected)]
        relevant = [e for e in pool if e.is_complete() == want_complete]
        if selected is not None and not relevant and unselected_fallback:
            relevant = [e for e in chart.edges if e.is_complete() == want_complete]
        return relevant

    if rule is ChartRule.TOP_DOWN_INIT:
        for p in g.productions:
            if p.lhs == g.start:
                yield Edge(0, 0, p, 0)

    elif rule is ChartRule.LEXICAL_INSERT:
        for k, token in enumerate(chart.tokens):
            yield Edge(k, k + 1, _leaf_production(token.text), 1)

    elif rule is ChartRule.TOP_DOWN_PREDICT:
        for edge in chosen(want_complete=False, unselected_fallback=False):
            nxt = edge.next_symbol()
            if nxt is None or is_terminal(nxt):
                continue
            for p in g.productions:
                if p.lhs == nxt:
                    yield Edge(edge.j, edge.j, p, 0)

    elif rule is ChartRule.BOTTOM_UP_PREDICT:
        for edge in chosen(want_complete=True, unselected_fallback=False):
            for p in g.productions:
                if p.rhs[0] == edge.lhs:
                    yield Edge(edge.i, edge.i, p, 0)

    elif rule is ChartRule.FUNDAMENTAL:
        lefts = chosen(want_complete=False, unselected_fallback=True)
        rights = chosen(want_complete=True, unselected_fallback=True)
        for left in lefts:
            nxt = left.next_symbol()
            for right in rights:
                if right.i != left.j or right.lhs != nxt:
                    continue
                yield Edge(
                    left.i,
                    right.j,
                    left.production,
                    left.dot + 1,
                    left.children + (chart.id_of(right),),
                )

    else:  # pragma: no cover - the enum is closed
        raise ValueError(f"unhandled rule {rule}")


def apply_rule(
    chart: Chart,
    rule: ChartRule,
    selected: set[int] | None = None,
) -> list[Edge]:
    """Apply one chart rule everywhere it fits; returns the new edges.

    The chart grows monotonically, so re-applying a rule to the same
    inputs adds nothing.  Selected edge ids must exist.
    """
    if selected:
        for edge_id in selected:
            chart.get(edge_id)
    added = []
    # A rule application reads one snapshot of the chart, so an edge it
    # creates is not fed back into the same application.
    for edge in list(_candidates(chart, rule, selected)):
        if chart.insert(edge) is not None:
            added.append(edge)
    return added


def step(chart: Chart, strategy: Strategy) -> tuple[ChartRule, Edge] | None:
    """Add exactly one edge: the first new candidate found by walking
    the strategy's rule ordering over the chart in insertion order.

    Returns the rule used and the edge added, or None once the chart is
    closed under the strategy.
    """
    for rule in strategy.ordering:
        for edge in _candidates(chart, rule):
            if chart.insert(edge) is not None:
                return rule, edge
    return None


def run_to_fixpoint(chart: Chart, strategy: Strategy) -> int:
    """Apply the strategy's rules in rounds until nothing new appears.

    Reaches the same closure ``step`` would, in far fewer passes over
    the chart; returns the number of edges added.
    """
    before = len(chart)
    changed = True
    while changed:
        changed = False
        for rule in strategy.ordering:
            if apply_rule(chart, rule):
                changed = True
    return len(chart) - before


def tree_for_edge(chart: Chart, edge_id: int) -> Tree | TaggedToken:
    """The (possibly partial) tree an edge stands for.

    Consumed symbols are expanded through the recorded children;
    symbols still right of the dot appear as childless placeholder
    nodes whose label carries a trailing ``?``.
    """
    edge = chart.get(edge_id)
    return _edge_tree(chart, edge)


def _edge_tree(chart: Chart, edge: Edge) -> Tree | TaggedToken:
    if is_terminal(edge.lhs):
        return chart.tokens[edge.i]
    children = []
    for child_id in edge.children:
        children.append(_edge_tree(chart, chart.get(child_id)))
    for sym in edge.production.rhs[edge.dot :]:
        children.append(Tree(f"{symbol_str(sym)}?", ()))
    return Tree(edge.lhs.name, tuple(children))


def extract_parses(chart: Chart) -> list[Tree]:
    """Every parse tree on the chart: one per complete edge that spans
    the whole sentence with the start symbol, in insertion order."""
    parses = []
    for edge in chart.edges:
        if (
            edge.is_complete()
            and edge.i == 0
            and edge.j == chart.n
            and edge.lhs == chart.grammar.start
        ):
            parses.append(_edge_tree(chart, edge))
    return parses


def parse(grammar: Grammar, tokens: list[TaggedToken], strategy: Strategy = BOTTOM_UP) -> list[Tree]:
    """Close a fresh chart under the strategy and read off all parses."""
    chart = chart_init(grammar, tokens)
    run_to_fixpoint(chart, strategy)
    return extract_parses(chart)


def _symbol_from_str(text: str):
    if len(text) >= 2 and text[0] == "'" and text[-1] == "'":
        return text[1:-1]
    return Nonterminal(text)


def edge_to_dict(chart: Chart, edge: Edge) -> dict:
    return {
        "id": chart.id_of(edge),
        "i": edge.i,
        "j": edge.j,
        "lhs": symbol_str(edge.lhs),
        "rhs": [symbol_str(s) for s in edge.production.rhs],
        "dot": edge.dot,
        "children": list(edge.children),
    }


def snapshot(chart: Chart) -> dict:
    """A chart as plain data: grammar text, token texts, edge list.

    Snapshots are the preset format and the wire format of the session
    service; :func:`restore` turns one back into a live chart with the
    same edge ids.
    """
    return {
        "grammar": format_cfg(chart.grammar),
        "tokens": [t.text for t in chart.tokens],
        "edges": [edge_to_dict(chart, e) for e in chart.edges],
    }


def restore(data: dict) -> Chart:
    """Rebuild a chart from a snapshot, checking that ids are the
    insertion order and children point backwards."""
    grammar = parse_cfg(data["grammar"])
    tokens = whitespace_tokenize(" ".join(data["tokens"]))
    chart = Chart(grammar, tokens)
    for expect_id, spec in enumerate(data["edges"]):
        if spec["id"] != expect_id:
            raise ValueError(f"snapshot edge ids must be 0..n in order, got {spec['id']}")
        for child in spec["children"]:
            if not (0 <= child < expect_id):
                raise ValueError(f"edge {expect_id} references later edge {child}")
        prod = Production(
            _symbol_from_str(spec["lhs"]),
            tuple(_symbol_from_str(s) for s in spec["rhs"]),
        )
        edge = Edge(spec["i"], spec["j"], prod, spec["dot"], tuple(spec["children"]))
        if chart.insert(edge) is None:
            raise ValueError(f"duplicate edge in snapshot at id {expect_id}")
    return chart
