"""Highest-probability parsing for probabilistic grammars.

The parser runs a dynamic program over the same dotted-span structure
the chart uses, so right-hand sides of any length work directly; no
conversion to a normal form is needed.  For each span and nonterminal
it keeps the single best subtree, filling spans shortest-first and
closing each span over unary productions until nothing improves.

Ties are broken toward the tree found first: productions are tried in
grammar order and split points left to right, and a later candidate
replaces the incumbent only when it is strictly better.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownProduction
from .grammar import Nonterminal, PcfgGrammar, is_terminal
from .tokens import TaggedToken
from .tree import Tree


@dataclass(frozen=True)
class ScoredTree:
    """A parse and its probability: the product of its rule probabilities."""

    tree: Tree
    prob: float


def tree_probability(grammar: PcfgGrammar, tree: Tree) -> float:
    """The product of the probabilities of every production used in the
    tree, walking depth first; unknown local trees are an error."""
    by_signature = {}
    for p in grammar.productions:
        by_signature.setdefault((p.lhs, p.rhs), grammar.prob(p))

    def walk(t: Tree) -> float:
        rhs = []
        for child in t.children:
            if isinstance(child, TaggedToken):
                rhs.append(child.text)
            else:
                rhs.append(Nonterminal(child.node))
        key = (Nonterminal(t.node), tuple(rhs))
        if key not in by_signature:
            raise UnknownProduction(t.node)
        prob = by_signature[key]
        for child in t.children:
            if isinstance(child, Tree):
                prob *= walk(child)
        return prob

    return walk(tree)


def viterbi_parse(grammar: PcfgGrammar, tokens: list[TaggedToken]) -> ScoredTree | None:
    """The maximum-probability parse of the sentence, or None.

    The reported probability is recomputed from the winning tree with
    :func:`tree_probability`, so the two always agree exactly.
    """
    n = len(tokens)
    if n == 0:
        return None
    # best[(i, j)][lhs] = (prob, tree) for the best derivation of span i..j
    best: dict[tuple[int, int], dict[Nonterminal, tuple[float, Tree]]] = {}

    def best_sequence(symbols, i, j):
        """Best way to split span (i, j) across the symbol sequence;
        returns (probability product, child list) or None."""
        if not symbols:
            return (1.0, []) if i == j else None
        first, rest = symbols[0], symbols[1:]
        if is_terminal(first):
            if i < j and tokens[i].text == first:
                tail = best_sequence(rest, i + 1, j)
                if tail is not None:
                    return tail[0], [tokens[i]] + tail[1]
            return None
        outcome = None
        # The final symbol must absorb the rest of the span.
        ends = range(i + 1, j + 1) if rest else range(j, j + 1)
        for split in ends:
            entry = best.get((i, split), {}).get(first)
            if entry is None:
                continue
            tail = best_sequence(rest, split, j)
            if tail is None:
                continue
            prob = entry[0] * tail[0]
            if outcome is None or prob > outcome[0]:
                outcome = (prob, [entry[1]] + tail[1])
        return outcome

    for width in range(1, n + 1):
        for i in range(0, n - width + 1):
            j = i + width
            cell: dict[Nonterminal, tuple[float, Tree]] = {}
            best[(i, j)] = cell
            # Lexical and multi-symbol productions first; their pieces
            # only use strictly shorter spans.
            for p in grammar.productions:
                if len(p.rhs) == 1 and not is_terminal(p.rhs[0]):
                    continue
                seq = best_sequence(p.rhs, i, j)
                if seq is None:
                    continue
                prob = grammar.prob(p) * seq[0]
                incumbent = cell.get(p.lhs)
                if incumbent is None or prob > incumbent[0]:
                    cell[p.lhs] = (prob, Tree(p.lhs.name, tuple(seq[1])))
            # Close the cell over unary productions.  Each pass must
            # strictly improve something, so this terminates even when
            # unary rules form cycles.
            improved = True
            while improved:
                improved = False
                for p in grammar.productions:
                    if len(p.rhs) != 1 or is_terminal(p.rhs[0]):
                        continue
                    entry = cell.get(p.rhs[0])
                    if entry is None:
                        continue
                    prob = grammar.prob(p) * entry[0]
                    incumbent = cell.get(p.lhs)
                    if incumbent is None or prob > incumbent[0]:
                        cell[p.lhs] = (prob, Tree(p.lhs.name, (entry[1],)))
                        improved = True

    winner = best[(0, n)].get(grammar.start)
    if winner is None:
        return None
    tree = winner[1]
    return ScoredTree(tree, tree_probability(grammar, tree))
