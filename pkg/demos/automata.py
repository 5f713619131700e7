#!/usr/bin/env python3
"""From a regular expression to an automaton you can watch run.

The construction is the classic one with epsilon moves, so the NFA is
bigger than it has to be; determinizing it collects reachable state
sets.  The simulation trace below prints the active set at every input
position, which is the whole point for a classroom.
"""

from lingkit.fsa import nfa_to_dfa, regex_to_nfa, simulate

pattern = "(a|b)*abb"
nfa = regex_to_nfa(pattern)
dfa = nfa_to_dfa(nfa)
print(f"pattern {pattern!r}")
print(f"  nfa: {len(nfa.states)} states, {len(nfa.transitions)} transitions")
print(f"  dfa: {len(dfa.states)} states, {len(dfa.transitions)} transitions")


def show_run(machine, name, text):
    accepted, trace = simulate(machine, text)
    print(f"\n{name} on {text!r}: {'accepted' if accepted else 'rejected'}")
    for pos, states in trace.steps:
        window = text[:pos] + "^" + text[pos:]
        print(f"   {window:12s} active: {sorted(states)}")


show_run(nfa, "nfa", "abb")
show_run(dfa, "dfa", "abb")
show_run(dfa, "dfa", "aba")

# Symbols outside the alphabet kill every run on the spot.
show_run(dfa, "dfa", "azb")

for text in ["abb", "aabb", "babb", "ab", "bba", ""]:
    n, _ = simulate(nfa, text)
    d, _ = simulate(dfa, text)
    assert n == d
    print(f"{text!r:8} -> {'accept' if n else 'reject'}")
