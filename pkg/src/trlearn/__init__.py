"""
trlearn Package
Learns bidirectional translation rules from pairs of aligned example
translations and translates new sentences with them
"""

__version__ = "0.1.0"
__author__ = "Brandon Squizzato"
__email__ = "bsquizzato@gmail.com"

from .config import Config
from .corpus import Corpus, load_corpus
from .learner import learn_corpus, learn_pair
from .lexrep import ExamplePair, Sentence, Side, Token, parse_lexical, render_lexical
from .matcher import MatchSequence, match
from .rulebase import Fact, RuleBase, Template
from .translator import Direction, Mode, translate

__all__ = [
    "Config",
    "Corpus",
    "Direction",
    "ExamplePair",
    "Fact",
    "MatchSequence",
    "Mode",
    "RuleBase",
    "Sentence",
    "Side",
    "Template",
    "Token",
    "learn_corpus",
    "learn_pair",
    "load_corpus",
    "match",
    "parse_lexical",
    "render_lexical",
    "translate",
]
