"""Context-free grammars, their probabilistic extension, and text formats.

Grammar files carry one production per non-blank line::

    S  -> NP VP
    NP -> 'I' | 'dogs'
    VP -> 'sleep' | 'chase' NP   # mixed terminal/nonterminal sides are fine

Quoted symbols are terminals, everything else is a nonterminal, ``|``
separates alternatives, ``#`` starts a comment, and the first left-hand
side names the start symbol.  The probabilistic format appends ``[p]``
to each alternative; the probabilities for one left-hand side must sum
to 1 within 1e-6.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    GrammarSyntax,
    InvalidProbability,
    InvalidProduction,
    NotNormalized,
)
from .tokens import TaggedToken

PCFG_SUM_TOLERANCE = 1e-6


@dataclass(frozen=True, order=True)
class Nonterminal:
    """A grammar variable.  Terminals are plain strings."""

    name: str

    def __str__(self):
        return self.name


def is_terminal(symbol) -> bool:
    return isinstance(symbol, str)


def symbol_str(symbol) -> str:
    """Render a symbol the way grammar files write it."""
    return f"'{symbol}'" if is_terminal(symbol) else symbol.name


@dataclass(frozen=True)
class Production:
    """``lhs -> rhs``; the right-hand side is a non-empty symbol tuple."""

    lhs: Nonterminal
    rhs: tuple

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(self.rhs))

    def __str__(self):
        return f"{symbol_str(self.lhs)} -> {' '.join(symbol_str(s) for s in self.rhs)}"


class Grammar:
    """An immutable CFG with a designated start symbol.

    Construction checks the structural invariants: the start symbol has
    at least one production, right-hand sides are non-empty, terminals
    never appear on a left-hand side (guaranteed by typing), and every
    nonterminal mentioned on a right-hand side has productions of its
    own.
    """

    def __init__(self, start: Nonterminal, productions: list[Production]):
        self.start = start
        self.productions = tuple(productions)
        lhs_set = {p.lhs for p in self.productions}
        if start not in lhs_set:
            raise InvalidProduction(0, f"start symbol {start} has no production")
        for p in self.productions:
            if len(p.rhs) == 0:
                raise InvalidProduction(0, f"empty right-hand side for {p.lhs}")
            for sym in p.rhs:
                if not is_terminal(sym) and sym not in lhs_set:
                    raise InvalidProduction(0, f"nonterminal {sym} is never defined")

    def productions_for(self, lhs: Nonterminal) -> list[Production]:
        return [p for p in self.productions if p.lhs == lhs]

    def terminals(self) -> set[str]:
        return {sym for p in self.productions for sym in p.rhs if is_terminal(sym)}

    def nonterminals(self) -> set[Nonterminal]:
        return {p.lhs for p in self.productions}

    def __eq__(self, other):
        if not isinstance(other, Grammar):
            return NotImplemented
        return self.start == other.start and sorted(
            map(str, self.productions)
        ) == sorted(map(str, other.productions))

    def __str__(self):
        return format_cfg(self)


class PcfgGrammar(Grammar):
    """A CFG whose productions carry probabilities summing to 1 per lhs."""

    def __init__(self, start: Nonterminal, scored: list[tuple[Production, float]]):
        self.probabilities = {}
        productions = []
        for prod, p in scored:
            productions.append(prod)
            self.probabilities[prod] = p
        super().__init__(start, productions)
        sums: dict[Nonterminal, float] = {}
        for prod, p in scored:
            if not (0.0 < p <= 1.0):
                raise InvalidProbability(0, p)
            sums[prod.lhs] = sums.get(prod.lhs, 0.0) + p
        for lhs, total in sums.items():
            if abs(total - 1.0) > PCFG_SUM_TOLERANCE:
                raise NotNormalized(lhs, total)

    def prob(self, production: Production) -> float:
        return self.probabilities[production]

    def __str__(self):
        return format_pcfg(self)


_ARROW = re.compile(r"\s*->\s*")
_SYMBOL = re.compile(
    r"'(?P<sq>[^']+)'"      # single-quoted terminal
    r"|\"(?P<dq>[^\"]+)\""  # double-quoted terminal
    r"|(?P<nt>[^\s'\"|\[\]]+)"
)
_PROB = re.compile(r"\[\s*([^\]\s]+)\s*\]\s*$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_symbols(text: str, lineno: int) -> list:
    symbols = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _SYMBOL.match(text, pos)
        if not m:
            raise GrammarSyntax(lineno, f"cannot read a symbol at {text[pos:]!r}")
        if m.group("sq") is not None:
            symbols.append(m.group("sq"))
        elif m.group("dq") is not None:
            symbols.append(m.group("dq"))
        else:
            symbols.append(Nonterminal(m.group("nt")))
        pos = m.end()
    return symbols


def _parse_lines(text: str):
    """Yield (lineno, lhs, alternative-text) triples."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        parts = _ARROW.split(line, maxsplit=1)
        if len(parts) != 2:
            raise GrammarSyntax(lineno, "expected 'LHS -> ...'")
        lhs_text, rhs_text = parts
        lhs_syms = _parse_symbols(lhs_text, lineno)
        if len(lhs_syms) != 1:
            raise GrammarSyntax(lineno, f"expected one left-hand symbol, got {lhs_text!r}")
        if is_terminal(lhs_syms[0]):
            raise InvalidProduction(lineno, f"terminal {lhs_syms[0]!r} on a left-hand side")
        for alt in rhs_text.split("|"):
            yield lineno, lhs_syms[0], alt.strip()


def parse_cfg(text: str) -> Grammar:
    """Parse the plain grammar format; the first lhs is the start symbol."""
    productions = []
    start = None
    for lineno, lhs, alt in _parse_lines(text):
        rhs = _parse_symbols(alt, lineno)
        if not rhs:
            raise GrammarSyntax(lineno, "empty right-hand side")
        if start is None:
            start = lhs
        productions.append(Production(lhs, tuple(rhs)))
    if start is None:
        raise GrammarSyntax(1, "no productions found")
    return Grammar(start, productions)


def parse_pcfg(text: str) -> PcfgGrammar:
    """Parse the probabilistic format: each alternative ends in ``[p]``."""
    scored = []
    start = None
    for lineno, lhs, alt in _parse_lines(text):
        m = _PROB.search(alt)
        if not m:
            raise GrammarSyntax(lineno, "alternative is missing its [probability]")
        try:
            p = float(m.group(1))
        except ValueError:
            raise GrammarSyntax(lineno, f"unreadable probability {m.group(1)!r}")
        if not (0.0 < p <= 1.0):
            raise InvalidProbability(lineno, p)
        rhs = _parse_symbols(alt[: m.start()], lineno)
        if not rhs:
            raise GrammarSyntax(lineno, "empty right-hand side")
        if start is None:
            start = lhs
        scored.append((Production(lhs, tuple(rhs)), p))
    if start is None:
        raise GrammarSyntax(1, "no productions found")
    return PcfgGrammar(start, scored)


def format_cfg(g: Grammar) -> str:
    """Pretty-print a grammar; parsing the result reproduces the grammar."""
    lines = []
    for p in g.productions:
        lines.append(str(p))
    return "\n".join(lines)


def format_pcfg(g: PcfgGrammar) -> str:
    lines = []
    for p in g.productions:
        lines.append(f"{p} [{g.prob(p)!r}]")
    return "\n".join(lines)


def check_coverage(g: Grammar, tokens: list[TaggedToken]) -> set[str]:
    """Token texts with no matching terminal anywhere in the grammar.

    An empty result means the grammar's lexicon can account for every
    word of the sentence.
    """
    terminals = g.terminals()
    return {t.text for t in tokens if t.text not in terminals}
