import pytest

from lingkit.errors import RegexSyntax
from lingkit.fsa import (
    Dfa,
    automaton_from_json,
    automaton_to_json,
    epsilon_closure,
    nfa_to_dfa,
    regex_to_nfa,
    simulate,
)

from .oracles import all_strings, regex_accepts

# The regex corpus for language-equivalence checks; alphabets stay tiny
# so exhaustive enumeration up to length 6 is cheap.
REGEXES = [
    "a",
    "ab",
    "ab*",
    "a|b",
    "(a|b)*a",
    "a+b?",
    "(ab)*",
    "a(b|c)d",
    "(a|b)(a|b)",
    "a*b*",
    "(a+)(b+)",
    "((a))",
    "a|b|c",
    "(a|ab)b",
    "a?a?aa",
    "(a|b)*abb",
    "c(a|b)*c",
]


def test_single_symbol_nfa():
    nfa = regex_to_nfa("a")
    assert len(nfa.states) == 2
    assert simulate(nfa, "a")[0]
    assert not simulate(nfa, "")[0]
    assert not simulate(nfa, "aa")[0]


def test_ab_star_language():
    nfa = regex_to_nfa("ab*")
    for text, want in [("a", True), ("ab", True), ("abb", True), ("", False), ("b", False), ("ba", False)]:
        assert simulate(nfa, text)[0] == want
        assert regex_accepts("ab*", text) == want


def test_regex_syntax_errors():
    with pytest.raises(RegexSyntax) as info:
        regex_to_nfa("a(")
    assert info.value.position == 2
    with pytest.raises(RegexSyntax):
        regex_to_nfa("")
    with pytest.raises(RegexSyntax):
        regex_to_nfa("*a")
    with pytest.raises(RegexSyntax):
        regex_to_nfa("a|")
    with pytest.raises(RegexSyntax):
        regex_to_nfa("a)b")


def test_dfa_for_single_symbol():
    dfa = nfa_to_dfa(regex_to_nfa("a"))
    # hand subset construction: closure of start, then the final set
    assert len(dfa.states) == 2
    assert simulate(dfa, "a")[0]
    assert not simulate(dfa, "aa")[0]


def test_dfa_reachable_subsets_for_alternation_star():
    # With the epsilon-rich textbook construction, the subsets reached
    # from the start on 'a' and on 'b' differ, so three subset states
    # are reachable (computed with the closure oracle below).
    dfa = nfa_to_dfa(regex_to_nfa("(a|b)*a"))
    assert len(dfa.states) == 3
    for text in all_strings(["a", "b"], 5):
        assert simulate(dfa, text)[0] == regex_accepts("(a|b)*a", text)


def test_determinizing_a_dfa_preserves_language():
    dfa = nfa_to_dfa(regex_to_nfa("ab|ac"))
    again = nfa_to_dfa(dfa)
    for text in all_strings(["a", "b", "c"], 4):
        assert simulate(dfa, text)[0] == simulate(again, text)[0]


def test_dfa_structural_determinism():
    for pattern in REGEXES:
        dfa = nfa_to_dfa(regex_to_nfa(pattern))
        seen = set()
        for src, sym, _ in dfa.transitions:
            assert sym is not None
            assert (src, sym) not in seen
            seen.add((src, sym))


def test_dfa_class_rejects_nondeterminism():
    with pytest.raises(ValueError):
        Dfa(
            states=frozenset({0, 1}),
            alphabet=frozenset("a"),
            transitions=frozenset({(0, "a", 0), (0, "a", 1)}),
            start=0,
            finals=frozenset({1}),
        )
    with pytest.raises(ValueError):
        Dfa(
            states=frozenset({0, 1}),
            alphabet=frozenset("a"),
            transitions=frozenset({(0, None, 1)}),
            start=0,
            finals=frozenset({1}),
        )


def test_simulate_trace_shape():
    dfa = nfa_to_dfa(regex_to_nfa("ab*"))
    accepted, trace = simulate(dfa, "abb")
    assert accepted
    assert len(trace) == 4  # |input| + 1 for accepted runs
    assert [pos for pos, _ in trace.steps] == [0, 1, 2, 3]


def test_simulate_empty_string():
    for pattern, want in [("a*", True), ("a", False), ("a?", True)]:
        machine = regex_to_nfa(pattern)
        accepted, trace = simulate(machine, "")
        assert accepted == want
        assert len(trace) == 1
        start_set = epsilon_closure(machine, {machine.start})
        assert accepted == bool(start_set & machine.finals)


def test_unknown_symbol_kills_runs():
    dfa = nfa_to_dfa(regex_to_nfa("a"))
    accepted, trace = simulate(dfa, "z")
    assert not accepted
    assert len(trace) == 2
    assert trace.steps[1] == (1, frozenset())


def test_language_equivalence_sample():
    # the full exhaustive run over every regex lives in the acceptance suite
    for pattern in ["(a|ab)b", "a?a?aa", "(ab)*"]:
        nfa = regex_to_nfa(pattern)
        dfa = nfa_to_dfa(nfa)
        alphabet = sorted(nfa.alphabet)
        for text in all_strings(alphabet, 5):
            want = regex_accepts(pattern, text)
            assert simulate(nfa, text)[0] == want
            assert simulate(dfa, text)[0] == want


def test_json_round_trip():
    for machine in (regex_to_nfa("a(b|c)*"), nfa_to_dfa(regex_to_nfa("a(b|c)*"))):
        again = automaton_from_json(automaton_to_json(machine))
        assert again.states == machine.states
        assert again.transitions == machine.transitions
        assert again.start == machine.start
        assert again.finals == machine.finals
        assert isinstance(again, Dfa) == isinstance(machine, Dfa)
