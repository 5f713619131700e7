"""A deliberately simple shift-reduce parser with a full action trace.

The strategy is greedy: whenever some production's right-hand side
matches the top of the stack, reduce with the FIRST such production in
grammar order; otherwise shift the next token.  This parser is
incomplete on purpose.  Grammars exist where an early reduction eats
material a later production needed, and the trace makes exactly that
failure visible, which is the point of keeping it around next to the
chart parser.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Grammar, Production, is_terminal
from .tokens import TaggedToken
from .tree import Tree


@dataclass(frozen=True)
class ShiftAction:
    token: TaggedToken

    def __str__(self):
        return f"shift {self.token.text}"


@dataclass(frozen=True)
class ReduceAction:
    production: Production

    def __str__(self):
        return f"reduce {self.production}"


@dataclass(frozen=True)
class TraceStep:
    """One parser action plus the state it left behind."""

    action: ShiftAction | ReduceAction
    stack_after: tuple
    remaining: int

    def __str__(self):
        stack = " ".join(_item_label(x) for x in self.stack_after)
        return f"{self.action}  | stack: [{stack}]  | remaining: {self.remaining}"


def _item_label(item) -> str:
    return item.text if isinstance(item, TaggedToken) else item.node


def _matches(symbol, item) -> bool:
    if is_terminal(symbol):
        return isinstance(item, TaggedToken) and item.text == symbol
    return isinstance(item, Tree) and item.node == symbol.name


def _find_reduction(grammar: Grammar, stack: list) -> Production | None:
    for production in grammar.productions:
        rhs = production.rhs
        if len(rhs) > len(stack):
            continue
        tail = stack[len(stack) - len(rhs) :]
        if all(_matches(sym, item) for sym, item in zip(rhs, tail)):
            return production
    return None


def sr_parse(grammar: Grammar, tokens: list[TaggedToken]) -> tuple[Tree | None, list[TraceStep]]:
    """Greedy shift-reduce parse; returns (tree or None, full trace).

    Succeeds only when the stack ends as exactly one tree labeled with
    the start symbol and no input remains.  Failure still returns the
    trace, so dead ends can be inspected.
    """
    stack: list = []
    trace: list[TraceStep] = []
    position = 0

    while True:
        production = _find_reduction(grammar, stack)
        if production is not None:
            popped = stack[len(stack) - len(production.rhs) :]
            del stack[len(stack) - len(production.rhs) :]
            stack.append(Tree(production.lhs.name, tuple(popped)))
            trace.append(TraceStep(ReduceAction(production), tuple(stack), len(tokens) - position))
            continue
        if position < len(tokens):
            stack.append(tokens[position])
            position += 1
            trace.append(TraceStep(ShiftAction(stack[-1]), tuple(stack), len(tokens) - position))
            continue
        break

    if len(stack) == 1 and isinstance(stack[0], Tree) and stack[0].node == grammar.start.name:
        return stack[0], trace
    return None, trace
