"""Exception types raised by lingkit modules.

Every error carries enough context (a position, a symbol, a set of
offending items) for a caller to report the problem without re-deriving
it.  All exceptions inherit from :class:`LingkitError` so command-line
front ends can distinguish data errors from bugs.
"""


class LingkitError(Exception):
    """Base class for all toolkit errors."""


class MalformedTaggedItem(LingkitError):
    """A word/TAG item had no slash. ``position`` is the token index."""

    def __init__(self, position, item=None):
        self.position = position
        self.item = item
        detail = f" {item!r}" if item is not None else ""
        super().__init__(f"item at position {position} has no tag separator{detail}")


class EmptyDistribution(LingkitError):
    """An operation required at least one observed outcome."""


class InvalidBins(LingkitError):
    """A smoothed distribution was given an unusable bin count."""


class EmptyCorpus(LingkitError):
    """A training or evaluation corpus contained no data."""


class GrammarSyntax(LingkitError):
    """A grammar file line could not be parsed. ``line`` is 1-based."""

    def __init__(self, line, message="syntax error"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvalidProduction(LingkitError):
    """A production violated a grammar invariant. ``line`` is 1-based."""

    def __init__(self, line, message="invalid production"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NotNormalized(LingkitError):
    """Probabilities for one left-hand side do not sum to 1."""

    def __init__(self, lhs, total):
        self.lhs = lhs
        self.total = total
        super().__init__(f"productions for {lhs} sum to {total:.6f}, expected 1")


class InvalidProbability(LingkitError):
    """A production probability fell outside (0, 1]. ``line`` is 1-based."""

    def __init__(self, line, value):
        self.line = line
        self.value = value
        super().__init__(f"line {line}: probability {value} not in (0, 1]")


class UncoveredTokens(LingkitError):
    """Sentence tokens with no matching terminal in the grammar."""

    def __init__(self, tokens):
        self.tokens = frozenset(tokens)
        listing = ", ".join(sorted(self.tokens))
        super().__init__(f"tokens not covered by the grammar: {listing}")


class CyclicGrammar(LingkitError):
    """The grammar contains a cycle of unary productions.

    Such cycles make the set of distinct derivations infinite, so the
    chart engine refuses them up front (as it refuses epsilon rules).
    """


class EpsilonProduction(LingkitError):
    """The chart engine was given a grammar with an empty right-hand side."""


class UnknownEdgeId(LingkitError):
    """An edge identifier does not exist in the chart."""

    def __init__(self, edge_id):
        self.edge_id = edge_id
        super().__init__(f"no edge with id {edge_id}")


class PatternSyntax(LingkitError):
    """A tag pattern was malformed (unbalanced brackets, bad regex)."""


class TokenMismatch(LingkitError):
    """Two chunk structures being compared cover different tokens."""


class MissingClass(LingkitError):
    """A declared class had no training examples."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"no training examples for class {label!r}")


class UnknownProduction(LingkitError):
    """A tree used a production absent from the grammar."""

    def __init__(self, node):
        self.node = node
        super().__init__(f"no production matches the local tree under {node!r}")


class RegexSyntax(LingkitError):
    """A regular expression could not be parsed. ``position`` is 0-based."""

    def __init__(self, position, message="unexpected input"):
        self.position = position
        super().__init__(f"position {position}: {message}")
