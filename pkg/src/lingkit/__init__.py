"""lingkit: a small, readable natural language processing toolkit.

The pieces are deliberately independent: tokens and trees, frequency
and probability distributions, grammars, a steppable chart parser, a
shift-reduce parser, a highest-probability parser for probabilistic
grammars, transformational chunking, taggers, finite state automata,
and two text classifiers.  Each module can be used on its own; the
command line (:mod:`lingkit.cli`) and the chart session service
(:mod:`lingkit.service`) sit on top.
"""

from .tokens import Location, TaggedToken, read_tagged, whitespace_tokenize
from .tree import Tree, height, leaves, parse_tree
from .probability import CondFreqDist, FreqDist, LidstoneProbDist, MleProbDist
from .grammar import Grammar, Nonterminal, PcfgGrammar, Production, check_coverage, parse_cfg, parse_pcfg

__version__ = "0.1.0"

__all__ = [
    "Location",
    "TaggedToken",
    "read_tagged",
    "whitespace_tokenize",
    "Tree",
    "height",
    "leaves",
    "parse_tree",
    "FreqDist",
    "CondFreqDist",
    "MleProbDist",
    "LidstoneProbDist",
    "Grammar",
    "PcfgGrammar",
    "Nonterminal",
    "Production",
    "parse_cfg",
    "parse_pcfg",
    "check_coverage",
    "__version__",
]
