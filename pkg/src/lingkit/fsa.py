"""Finite state automata and their construction from regular expressions.

The regex dialect is deliberately small: single-character symbols, the
operators ``| * + ?``, grouping parentheses, and juxtaposition for
concatenation.  :func:`regex_to_nfa` builds a classic construction with
epsilon moves (two fresh states per operator); :func:`nfa_to_dfa`
determinizes it by the subset construction over epsilon closures,
emitting only reachable states and no minimization, so the redundancy
the construction introduces stays visible.

:func:`simulate` runs either machine on an input string and records the
active state set at every position, which is the step-by-step view a
demonstration wants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import RegexSyntax

EPSILON = None
_OPERATORS = set("|*+?()")


@dataclass(frozen=True)
class Nfa:
    """States are integers; a transition on ``None`` is an epsilon move."""

    states: frozenset[int]
    alphabet: frozenset[str]
    transitions: frozenset[tuple[int, str | None, int]]
    start: int
    finals: frozenset[int]

    def __post_init__(self):
        if self.start not in self.states:
            raise ValueError("start state missing from state set")
        if not self.finals <= self.states:
            raise ValueError("final states missing from state set")
        for src, _, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError("transition endpoint missing from state set")

    def moves(self, state: int, symbol: str | None) -> set[int]:
        return {dst for src, sym, dst in self.transitions if src == state and sym == symbol}


class Dfa(Nfa):
    """An Nfa with no epsilon moves and at most one move per (state, symbol)."""

    def __post_init__(self):
        super().__post_init__()
        seen = set()
        for src, sym, _ in self.transitions:
            if sym is EPSILON:
                raise ValueError("a DFA cannot hold epsilon transitions")
            if (src, sym) in seen:
                raise ValueError(f"duplicate transition from state {src} on {sym!r}")
            seen.add((src, sym))


# ---------------------------------------------------------------------------
# Regex parsing: alternation -> concatenation -> repetition -> atom


@dataclass
class _RegexParser:
    text: str
    pos: int = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self):
        if not self.text:
            raise RegexSyntax(0, "empty pattern")
        node = self.alternation()
        if self.pos != len(self.text):
            raise RegexSyntax(self.pos, f"unexpected {self.text[self.pos]!r}")
        return node

    def alternation(self):
        branches = [self.concatenation()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.concatenation())
        return ("alt", branches) if len(branches) > 1 else branches[0]

    def concatenation(self):
        parts = []
        while True:
            c = self.peek()
            if c is None or c in "|)":
                break
            parts.append(self.repetition())
        if not parts:
            raise RegexSyntax(self.pos, "expected a symbol or group")
        return ("seq", parts) if len(parts) > 1 else parts[0]

    def repetition(self):
        node = self.atom()
        while self.peek() in ("*", "+", "?"):
            node = ({"*": "star", "+": "plus", "?": "opt"}[self.peek()], node)
            self.pos += 1
        return node

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.alternation()
            if self.peek() != ")":
                raise RegexSyntax(self.pos, "missing ')'")
            self.pos += 1
            return node
        if c is None or c in _OPERATORS:
            raise RegexSyntax(self.pos, "expected a symbol or group")
        self.pos += 1
        return ("sym", c)


def parse_regex(pattern: str):
    """The regex as a small AST; shared by the NFA builder and by any
    caller that wants to reason about the pattern directly."""
    return _RegexParser(pattern).parse()


class _Builder:
    def __init__(self):
        self.next_state = 0
        self.transitions = []
        self.alphabet = set()

    def fresh(self) -> int:
        self.next_state += 1
        return self.next_state - 1

    def edge(self, src, symbol, dst):
        self.transitions.append((src, symbol, dst))

    def build(self, node) -> tuple[int, int]:
        """Returns (entry, exit) of a fragment with one entry, one exit."""
        kind = node[0]
        if kind == "sym":
            s, f = self.fresh(), self.fresh()
            self.edge(s, node[1], f)
            self.alphabet.add(node[1])
            return s, f
        if kind == "seq":
            first = self.build(node[1][0])
            entry, exit_ = first
            for part in node[1][1:]:
                nxt = self.build(part)
                self.edge(exit_, EPSILON, nxt[0])
                exit_ = nxt[1]
            return entry, exit_
        if kind == "alt":
            s, f = self.fresh(), self.fresh()
            for branch in node[1]:
                b = self.build(branch)
                self.edge(s, EPSILON, b[0])
                self.edge(b[1], EPSILON, f)
            return s, f
        if kind == "star":
            s, f = self.fresh(), self.fresh()
            inner = self.build(node[1])
            self.edge(s, EPSILON, inner[0])
            self.edge(s, EPSILON, f)
            self.edge(inner[1], EPSILON, inner[0])
            self.edge(inner[1], EPSILON, f)
            return s, f
        if kind == "plus":
            s, f = self.fresh(), self.fresh()
            inner = self.build(node[1])
            self.edge(s, EPSILON, inner[0])
            self.edge(inner[1], EPSILON, inner[0])
            self.edge(inner[1], EPSILON, f)
            return s, f
        if kind == "opt":
            s, f = self.fresh(), self.fresh()
            inner = self.build(node[1])
            self.edge(s, EPSILON, inner[0])
            self.edge(s, EPSILON, f)
            self.edge(inner[1], EPSILON, f)
            return s, f
        raise ValueError(f"unknown regex node {kind!r}")  # pragma: no cover


def regex_to_nfa(pattern: str) -> Nfa:
    """Compile a pattern to an NFA accepting exactly its language."""
    ast = parse_regex(pattern)
    builder = _Builder()
    start, final = builder.build(ast)
    return Nfa(
        states=frozenset(range(builder.next_state)),
        alphabet=frozenset(builder.alphabet),
        transitions=frozenset(builder.transitions),
        start=start,
        finals=frozenset({final}),
    )


def epsilon_closure(machine: Nfa, states: set[int]) -> frozenset[int]:
    closure = set(states)
    frontier = list(states)
    while frontier:
        state = frontier.pop()
        for nxt in machine.moves(state, EPSILON):
            if nxt not in closure:
                closure.add(nxt)
                frontier.append(nxt)
    return frozenset(closure)


def nfa_to_dfa(nfa: Nfa) -> Dfa:
    """Subset construction over epsilon closures, reachable states only.

    Subset states are numbered in discovery order (breadth first, with
    symbols tried in sorted order), so the result is reproducible.
    """
    symbols = sorted(nfa.alphabet)
    start_set = epsilon_closure(nfa, {nfa.start})
    numbering: dict[frozenset[int], int] = {start_set: 0}
    queue = [start_set]
    transitions = []
    while queue:
        current = queue.pop(0)
        src = numbering[current]
        for symbol in symbols:
            moved = set()
            for state in current:
                moved |= nfa.moves(state, symbol)
            if not moved:
                continue
            target = epsilon_closure(nfa, moved)
            if target not in numbering:
                numbering[target] = len(numbering)
                queue.append(target)
            transitions.append((src, symbol, numbering[target]))
    finals = {
        number for subset, number in numbering.items() if subset & nfa.finals
    }
    return Dfa(
        states=frozenset(numbering.values()),
        alphabet=nfa.alphabet,
        transitions=frozenset(transitions),
        start=0,
        finals=frozenset(finals),
    )


@dataclass(frozen=True)
class SimTrace:
    """(input position, active state set) pairs, from position 0 until
    end of input or until every run has died."""

    steps: tuple[tuple[int, frozenset[int]], ...]

    def __len__(self):
        return len(self.steps)


def simulate(machine: Nfa, text: str) -> tuple[bool, SimTrace]:
    """Run the machine over the input, recording every state set.

    Acceptance means some active state at end of input is final.
    Symbols outside the alphabet simply kill every run; the trace then
    ends with an empty set at the position where that happened.
    """
    active = epsilon_closure(machine, {machine.start})
    steps = [(0, active)]
    for pos, symbol in enumerate(text, start=1):
        moved = set()
        for state in active:
            moved |= machine.moves(state, symbol)
        active = epsilon_closure(machine, moved)
        steps.append((pos, active))
        if not active:
            return False, SimTrace(tuple(steps))
    return bool(active & machine.finals), SimTrace(tuple(steps))


# ---------------------------------------------------------------------------
# JSON export / import


def automaton_to_json(machine: Nfa) -> str:
    data = {
        "states": sorted(machine.states),
        "alphabet": sorted(machine.alphabet),
        "transitions": [
            {"from": src, "symbol": sym, "to": dst}
            for src, sym, dst in sorted(
                machine.transitions, key=lambda t: (t[0], t[1] or "", t[2])
            )
        ],
        "start": machine.start,
        "finals": sorted(machine.finals),
        "deterministic": isinstance(machine, Dfa),
    }
    return json.dumps(data, indent=2)


def automaton_from_json(text: str) -> Nfa:
    data = json.loads(text)
    cls = Dfa if data.get("deterministic") else Nfa
    return cls(
        states=frozenset(data["states"]),
        alphabet=frozenset(data["alphabet"]),
        transitions=frozenset(
            (t["from"], t["symbol"], t["to"]) for t in data["transitions"]
        ),
        start=data["start"],
        finals=frozenset(data["finals"]),
    )
