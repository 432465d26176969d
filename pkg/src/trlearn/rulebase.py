"""
Rule base module for trlearn
Holds facts and templates, keeps them ordered from most to least specific and
stores them in a line-based text file
"""

import bisect
import logging
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .lexrep import (
    LexicalError,
    Side,
    Token,
    TokenRun,
    parse_tokens,
    render_tokens,
    split_word,
)

logger = logging.getLogger(__name__)

FACT_PREFIX = "fact:"
TEMPLATE_PREFIX = "tmpl:"
SIDE_SEPARATOR = "|||"

_VAR_WORD = re.compile(r"^\$(\d+)((?:\+[^+\s]+)*)$")


class RuleError(ValueError):
    """Raised for a rule that violates a fact or template invariant"""


class RuleFileError(ValueError):
    """Raised when a rule file line cannot be parsed"""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class AddResult(Enum):
    ADDED = "added"
    DUPLICATE = "duplicate"


@dataclass(frozen=True)
class Var:
    """A pattern variable, paired with the same index on the other side"""

    index: int

    def __str__(self) -> str:
        return f"${self.index}"


PatternItem = Union[Token, Var]
Pattern = Tuple[PatternItem, ...]


def terminal_count(pattern: Pattern) -> int:
    return sum(1 for item in pattern if isinstance(item, Token))


def var_indices(pattern: Pattern) -> List[int]:
    return [item.index for item in pattern if isinstance(item, Var)]


def _check_writable(items: Pattern, in_template: bool):
    """Terminals that the rule file format would read back differently"""
    for item in items:
        if not isinstance(item, Token):
            continue
        if SIDE_SEPARATOR in item.text:
            raise RuleError(f"terminal '{item.text}' contains '{SIDE_SEPARATOR}' and cannot be written")
        if in_template and _VAR_WORD.match(item.text):
            raise RuleError(f"template terminal '{item.text}' would be read back as a variable")


def render_pattern(pattern: Pattern) -> str:
    """Render a pattern; morphemes glue onto a preceding terminal, never onto a Var"""
    words: List[str] = []
    previous = None
    for item in pattern:
        if isinstance(item, Token) and item.is_morpheme and isinstance(previous, Token):
            words[-1] += item.text
        else:
            words.append(str(item))
        previous = item
    return " ".join(words)


def parse_pattern(text: str) -> Pattern:
    """Parse a template side such as ``eğer $1 +cond $2`` or ``i $1+past``"""
    items: List[PatternItem] = []
    for word in text.split():
        var_match = _VAR_WORD.match(word)
        if var_match:
            index = int(var_match.group(1))
            if index < 1:
                raise RuleError(f"variable index must be positive: {word}")
            items.append(Var(index))
            if var_match.group(2):
                items.extend(split_word(var_match.group(2)))
        else:
            items.extend(split_word(word))
    return tuple(items)


@dataclass(frozen=True)
class Fact:
    """A variable-free rule: an L1 token run and its L2 translation"""

    lhs: TokenRun
    rhs: TokenRun

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        self.validate()

    def validate(self):
        if not self.lhs or not self.rhs:
            raise RuleError("fact sides must be non-empty")
        if not all(isinstance(t, Token) for t in self.lhs + self.rhs):
            raise RuleError("fact sides must contain terminals only")

    def side(self, side: Side) -> TokenRun:
        return self.lhs if side is Side.L1 else self.rhs

    def terminal_count(self, side: Side = Side.L1) -> int:
        return len(self.side(side))

    def var_count(self) -> int:
        return 0

    def to_line(self) -> str:
        """Rule file line; raises RuleError if the line would not read back as this fact"""
        _check_writable(self.lhs + self.rhs, in_template=False)
        return str(self)

    def __str__(self) -> str:
        return f"{FACT_PREFIX} {render_tokens(self.lhs)} {SIDE_SEPARATOR} {render_tokens(self.rhs)}"


@dataclass(frozen=True)
class Template:
    """
    Two patterns whose variables are paired by index.

    Variables are renumbered left to right along the L1 pattern on
    construction, so two templates that differ only in variable names compare
    equal.
    """

    lhs: Pattern
    rhs: Pattern

    def __post_init__(self):
        lhs, rhs = tuple(self.lhs), tuple(self.rhs)
        self._validate_patterns(lhs, rhs)
        order = {index: n for n, index in enumerate(var_indices(lhs), start=1)}
        object.__setattr__(self, "lhs", _renumber(lhs, order))
        object.__setattr__(self, "rhs", _renumber(rhs, order))

    @classmethod
    def with_pairing(
        cls, lhs: Pattern, rhs: Pattern, pairing: Mapping[int, int]
    ) -> "Template":
        """Build a template from an explicit lhs-index to rhs-index pairing"""
        if len(set(pairing.values())) != len(pairing):
            raise RuleError("variable pairing is not a bijection")
        rhs_to_lhs = {right: left for left, right in pairing.items()}
        missing = set(var_indices(rhs)) - set(rhs_to_lhs)
        if missing:
            raise RuleError(f"unpaired variable ${min(missing)} on the L2 side")
        return cls(lhs, _renumber(tuple(rhs), rhs_to_lhs))

    @staticmethod
    def _validate_patterns(lhs: Pattern, rhs: Pattern):
        for name, pattern in (("L1", lhs), ("L2", rhs)):
            if not pattern:
                raise RuleError(f"empty {name} pattern")
            if not all(isinstance(item, (Token, Var)) for item in pattern):
                raise RuleError(f"{name} pattern holds a non-pattern item")
            if terminal_count(pattern) == 0:
                raise RuleError(f"{name} pattern has no terminal")
            indices = var_indices(pattern)
            if len(set(indices)) != len(indices):
                raise RuleError(f"repeated variable in {name} pattern")
            for left, right in zip(pattern, pattern[1:]):
                if isinstance(left, Var) and isinstance(right, Var):
                    raise RuleError(f"adjacent variables in {name} pattern")
        if not var_indices(lhs):
            raise RuleError("template has no variable")
        if set(var_indices(lhs)) != set(var_indices(rhs)):
            raise RuleError("variable pairing is not a bijection")

    def validate(self):
        self._validate_patterns(self.lhs, self.rhs)

    @property
    def pairing(self) -> Dict[int, int]:
        return {index: index for index in var_indices(self.lhs)}

    def side(self, side: Side) -> Pattern:
        return self.lhs if side is Side.L1 else self.rhs

    def terminal_count(self, side: Side = Side.L1) -> int:
        return terminal_count(self.side(side))

    def var_count(self) -> int:
        return len(var_indices(self.lhs))

    def to_line(self) -> str:
        _check_writable(self.lhs + self.rhs, in_template=True)
        return str(self)

    def __str__(self) -> str:
        return f"{TEMPLATE_PREFIX} {render_pattern(self.lhs)} {SIDE_SEPARATOR} {render_pattern(self.rhs)}"


Rule = Union[Fact, Template]


def _renumber(pattern: Pattern, mapping: Mapping[int, int]) -> Pattern:
    return tuple(
        Var(mapping[item.index]) if isinstance(item, Var) else item
        for item in pattern
    )


def specificity_key(rule: Rule, insertion: int, side: Side = Side.L1) -> Tuple[int, int, int]:
    """More source-side terminals first, then fewer variables, then earlier insertion"""
    return (-rule.terminal_count(side), rule.var_count(), insertion)


class RuleBase:
    """Deduplicated rule collection ordered from most to least specific"""

    def __init__(self, rules: Iterable[Rule] = ()):
        self._insertion: Dict[Rule, int] = {}
        self._records: List[Rule] = []
        self._ordered: Dict[Side, List[Tuple[Tuple[int, int, int], Rule]]] = {
            Side.L1: [],
            Side.L2: [],
        }
        for rule in rules:
            self.add_rule(rule)

    def add_rule(self, rule: Rule) -> AddResult:
        """Insert a rule unless an equal one is already present"""
        if not isinstance(rule, (Fact, Template)):
            raise RuleError(f"not a rule: {rule!r}")
        rule.validate()
        if rule in self._insertion:
            return AddResult.DUPLICATE

        insertion = len(self._records)
        self._insertion[rule] = insertion
        self._records.append(rule)
        for side, ordered in self._ordered.items():
            bisect.insort(ordered, (specificity_key(rule, insertion, side), rule))
        logger.debug(f"Added rule #{insertion + 1}: {rule}")
        return AddResult.ADDED

    def specificity_key(self, rule: Rule, side: Side = Side.L1) -> Tuple[int, int, int]:
        return specificity_key(rule, self._insertion[rule], side)

    def ordered(self, side: Side = Side.L1) -> List[Rule]:
        """Rules in specificity order for translating from ``side``"""
        return [rule for _, rule in self._ordered[side]]

    def insertion_order(self) -> List[Rule]:
        return list(self._records)

    def rule_id(self, rule: Rule) -> int:
        """1-based position of the rule in insertion order"""
        return self._insertion[rule] + 1

    def templates(self) -> List[Template]:
        return [rule for rule in self._records if isinstance(rule, Template)]

    def __contains__(self, rule) -> bool:
        return rule in self._insertion

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.ordered(Side.L1))

    def __len__(self) -> int:
        return len(self._records)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RuleBase):
            return NotImplemented
        return self._records == other._records

    def __repr__(self) -> str:
        return f"RuleBase({len(self)} rules)"


def parse_rule_line(line: str) -> Rule:
    """Parse one ``fact:`` or ``tmpl:`` line"""
    stripped = line.strip()
    if stripped.startswith(FACT_PREFIX):
        kind, body = "fact", stripped[len(FACT_PREFIX) :]
    elif stripped.startswith(TEMPLATE_PREFIX):
        kind, body = "tmpl", stripped[len(TEMPLATE_PREFIX) :]
    else:
        raise RuleError(f"expected '{FACT_PREFIX}' or '{TEMPLATE_PREFIX}'")

    parts = body.split(SIDE_SEPARATOR)
    if len(parts) != 2:
        raise RuleError(f"expected exactly one '{SIDE_SEPARATOR}' separator")
    left, right = parts

    if kind == "fact":
        return Fact(parse_tokens(left), parse_tokens(right))
    return Template(parse_pattern(left), parse_pattern(right))


def dumps(base: RuleBase) -> str:
    """Serialize a rule base, one rule per line, in insertion order"""
    return "".join(f"{rule.to_line()}\n" for rule in base.insertion_order())


def loads(text: str) -> RuleBase:
    base = RuleBase()
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rule = parse_rule_line(stripped)
        except (RuleError, LexicalError) as e:
            raise RuleFileError(line_number, str(e)) from e
        if base.add_rule(rule) is AddResult.DUPLICATE:
            logger.warning(f"Duplicate rule on line {line_number} ignored: {stripped}")
    return base


def save(base: RuleBase, destination: Union[str, Path]):
    """Write a rule base to a UTF-8 rule file"""
    try:
        Path(destination).write_text(dumps(base), encoding="utf-8")
        logger.info(f"Wrote {len(base)} rules to {destination}")
    except OSError as e:
        logger.error(f"Error writing rule file {destination}: {e}")
        raise


def load(source: Union[str, Path]) -> RuleBase:
    """Read a rule base from a UTF-8 rule file"""
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error reading rule file {source}: {e}")
        raise
    base = loads(text)
    logger.info(f"Loaded {len(base)} rules from {source}")
    return base
