"""
Learner module for trlearn
Learns facts and templates from pairs of translation examples and drives the
pairwise learner over a whole corpus until nothing new is learned
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .corpus import Corpus
from .lexrep import ExamplePair
from .matcher import Difference, MatchSequence, match
from .rulebase import AddResult, Fact, Pattern, PatternItem, Rule, RuleBase, Template, Var

logger = logging.getLogger(__name__)

DEFAULT_MAX_PASSES = 10


class SkipReason(Enum):
    """Why a pair of examples produced no rules"""

    NO_MATCH = "no-match"
    NO_SIMILARITY = "no-similarity"
    NO_DIFFERENCES = "no-differences"
    COUNT_MISMATCH = "count-mismatch"
    UNRESOLVABLE = "unresolvable"


@dataclass
class PairOutcome:
    """New rules learned from one example pair, or the reason there are none"""

    rules: List[Rule] = field(default_factory=list)
    reason: Optional[SkipReason] = None


@dataclass
class PassReport:
    number: int
    new_rules: int = 0
    skipped: Counter = field(default_factory=Counter)


@dataclass
class LearningReport:
    example_facts: int = 0
    passes: List[PassReport] = field(default_factory=list)
    fixpoint: bool = False

    @property
    def learned_rules(self) -> int:
        return sum(p.new_rules for p in self.passes)

    @property
    def unresolved_pairs(self) -> int:
        if not self.passes:
            return 0
        return self.passes[-1].skipped[SkipReason.UNRESOLVABLE]


def resolve_known(d_l1: Difference, d_l2: Difference, base: RuleBase) -> bool:
    """True when both component correspondences are already facts in the base"""
    return (
        Fact(d_l1.first, d_l2.first) in base
        and Fact(d_l1.second, d_l2.second) in base
    )


def _find_resolvable(
    m_l1: MatchSequence,
    m_l2: MatchSequence,
    open_l1: List[int],
    open_l2: List[int],
    base: RuleBase,
) -> Optional[Tuple[int, int]]:
    for i in open_l1:
        for j in open_l2:
            if resolve_known(m_l1.differences[i], m_l2.differences[j], base):
                return i, j
    return None


def _generalize(m: MatchSequence, variables: Dict[int, int]) -> Pattern:
    """Replace every difference slot of a match sequence by its variable"""
    items: List[PatternItem] = list(m.similarities[0])
    for slot, sim in enumerate(m.similarities[1:]):
        items.append(Var(variables[slot]))
        items.extend(sim)
    return tuple(items)


def _check_pair(m_l1: Optional[MatchSequence], m_l2: Optional[MatchSequence]) -> Optional[SkipReason]:
    if m_l1 is None or m_l2 is None:
        return SkipReason.NO_MATCH
    if m_l1.similarity_count == 0 or m_l2.similarity_count == 0:
        return SkipReason.NO_SIMILARITY
    if m_l1.difference_count == 0 or m_l2.difference_count == 0:
        return SkipReason.NO_DIFFERENCES
    if m_l1.difference_count != m_l2.difference_count:
        return SkipReason.COUNT_MISMATCH
    return None


def learn_pair(e1: ExamplePair, e2: ExamplePair, base: RuleBase) -> PairOutcome:
    """
    Learn from two translation examples.

    Differences are resolved one at a time against facts already in the base
    and turned into paired variables. Once a single difference is left on
    each side, its two component correspondences become facts and the
    generalized sentences become a template.
    """
    m_l1 = match(e1.l1, e2.l1)
    m_l2 = match(e1.l2, e2.l2)
    reason = _check_pair(m_l1, m_l2)
    if reason:
        return PairOutcome(reason=reason)

    open_l1 = list(range(m_l1.difference_count))
    open_l2 = list(range(m_l2.difference_count))
    vars_l1: Dict[int, int] = {}
    vars_l2: Dict[int, int] = {}
    next_var = 1

    while len(open_l1) > 1:
        found = _find_resolvable(m_l1, m_l2, open_l1, open_l2, base)
        if found is None:
            return PairOutcome(reason=SkipReason.UNRESOLVABLE)
        i, j = found
        vars_l1[i] = vars_l2[j] = next_var
        next_var += 1
        open_l1.remove(i)
        open_l2.remove(j)

    (i,), (j,) = open_l1, open_l2
    vars_l1[i] = vars_l2[j] = next_var
    d_l1, d_l2 = m_l1.differences[i], m_l2.differences[j]

    candidates: List[Rule] = [
        Fact(d_l1.first, d_l2.first),
        Fact(d_l1.second, d_l2.second),
        Template(_generalize(m_l1, vars_l1), _generalize(m_l2, vars_l2)),
    ]
    new_rules: List[Rule] = []
    for rule in candidates:
        if rule not in base and rule not in new_rules:
            new_rules.append(rule)
    return PairOutcome(rules=new_rules)


def learn_corpus(
    corpus: Corpus,
    max_passes: int = DEFAULT_MAX_PASSES,
    base: Optional[RuleBase] = None,
) -> Tuple[RuleBase, LearningReport]:
    """
    Learn a rule base from a corpus.

    Every example is first added as a fact. Passes over all example pairs
    (i < j, corpus order) then add new rules as soon as they are learned,
    until a pass learns nothing or ``max_passes`` is reached.
    """
    if not corpus.examples:
        raise ValueError("corpus is empty")
    if max_passes < 1:
        raise ValueError("max_passes must be positive")

    base = base if base is not None else RuleBase()
    report = LearningReport()
    for example in corpus:
        if base.add_rule(Fact(example.l1.tokens, example.l2.tokens)) is AddResult.ADDED:
            report.example_facts += 1

    for number in range(1, max_passes + 1):
        current = PassReport(number)
        for e1, e2 in itertools.combinations(corpus.examples, 2):
            outcome = learn_pair(e1, e2, base)
            if outcome.reason:
                current.skipped[outcome.reason] += 1
                logger.debug(f"Skipped pair '{e1.l1}' / '{e2.l1}': {outcome.reason.value}")
                continue
            for rule in outcome.rules:
                if base.add_rule(rule) is AddResult.ADDED:
                    current.new_rules += 1
                    logger.debug(f"Learned {rule}")

        report.passes.append(current)
        logger.info(f"Pass {number}: {current.new_rules} new rules")
        if current.new_rules == 0:
            report.fixpoint = True
            break

    return base, report
