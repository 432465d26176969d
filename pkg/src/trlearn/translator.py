"""
Translator module for trlearn
Applies learned rules most-specific-first, translating template variable
bindings recursively, in either direction
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .lexrep import Sentence, Side, Token, TokenRun, render_tokens
from .rulebase import Fact, Pattern, Rule, RuleBase, Template, Var

logger = logging.getLogger(__name__)

Binding = Dict[int, TokenRun]


class Direction(Enum):
    L1_TO_L2 = "l1l2"
    L2_TO_L1 = "l2l1"

    @property
    def source(self) -> Side:
        return Side.L1 if self is Direction.L1_TO_L2 else Side.L2

    @property
    def target(self) -> Side:
        return self.source.other


class Mode(Enum):
    FIRST = "first"
    ALL = "all"


class UntranslatableError(ValueError):
    """Raised when no rule applies to a token run"""

    def __init__(self, run: TokenRun):
        self.run = tuple(run)
        super().__init__(f"untranslatable: {render_tokens(self.run)}")


@dataclass(frozen=True)
class Application:
    """One rule application; children translate the bound variables in order"""

    rule: Rule
    binding: Binding = field(default_factory=dict, hash=False)
    children: Tuple["Application", ...] = ()
    output: TokenRun = ()


@dataclass(frozen=True)
class TranslationResult:
    output: Sentence
    trace: Application

    def steps(self) -> List[Tuple[Rule, Binding]]:
        """The applications of the trace tree, depth first"""
        pending, flat = [self.trace], []
        while pending:
            node = pending.pop()
            flat.append((node.rule, node.binding))
            pending.extend(reversed(node.children))
        return flat


def pattern_match(pattern: Pattern, run: Sequence[Token]) -> List[Binding]:
    """
    Every way of binding the pattern's variables to non-empty runs so that the
    pattern reproduces ``run`` exactly, leftmost variable shortest first.
    """
    run = tuple(run)
    bindings: List[Binding] = []

    def walk(k: int, pos: int, bound: Binding):
        if k == len(pattern):
            if pos == len(run):
                bindings.append(dict(bound))
            return
        remaining = len(pattern) - k - 1
        item = pattern[k]
        if isinstance(item, Var):
            for end in range(pos + 1, len(run) - remaining + 1):
                bound[item.index] = run[pos:end]
                walk(k + 1, end, bound)
                del bound[item.index]
        elif pos < len(run) and run[pos] == item:
            walk(k + 1, pos + 1, bound)

    walk(0, 0, {})
    return bindings


def _substitute(pattern: Pattern, values: Dict[int, TokenRun]) -> TokenRun:
    out: List[Token] = []
    for item in pattern:
        if isinstance(item, Var):
            out.extend(values[item.index])
        else:
            out.append(item)
    return tuple(out)


def replay(trace: Application, direction: Direction) -> TokenRun:
    """Rebuild a translation from its application tree"""
    rule = trace.rule
    if isinstance(rule, Fact):
        return rule.side(direction.target)
    source_vars = [item.index for item in rule.side(direction.source) if isinstance(item, Var)]
    values = {
        index: replay(child, direction)
        for index, child in zip(source_vars, trace.children)
    }
    return _substitute(rule.side(direction.target), values)


class Translator:
    """Translates token runs with one rule base in one direction"""

    def __init__(self, base: RuleBase, direction: Direction):
        self.base = base
        self.direction = direction
        self._rules = base.ordered(direction.source)
        self._memo: Dict[TokenRun, Application] = {}
        self._failed: Dict[TokenRun, UntranslatableError] = {}

    def _applications(self, run: TokenRun, mode: Mode) -> List[Application]:
        """Applications for ``run`` in rule order; stops after one in FIRST mode"""
        found: List[Application] = []
        failure: Optional[UntranslatableError] = None
        source, target = self.direction.source, self.direction.target

        for rule in self._rules:
            if isinstance(rule, Fact):
                if rule.side(source) == run:
                    found.append(Application(rule, {}, (), rule.side(target)))
            else:
                for binding in pattern_match(rule.side(source), run):
                    try:
                        found.append(self._apply_template(rule, binding))
                    except UntranslatableError as e:
                        failure = failure or e
                        continue
                    if mode is Mode.FIRST:
                        break
            if found and mode is Mode.FIRST:
                return found[:1]

        if not found:
            raise failure or UntranslatableError(run)
        return found

    def _apply_template(self, rule: Template, binding: Binding) -> Application:
        source_pattern = rule.side(self.direction.source)
        indices = [item.index for item in source_pattern if isinstance(item, Var)]
        children = tuple(self.first(binding[index]) for index in indices)
        values = {index: child.output for index, child in zip(indices, children)}
        output = _substitute(rule.side(self.direction.target), values)
        logger.debug(f"Applied rule #{self.base.rule_id(rule)} with {len(indices)} binding(s)")
        return Application(rule, dict(binding), children, output)

    def first(self, run: TokenRun) -> Application:
        """Most specific translation of a run, memoized"""
        run = tuple(run)
        if run in self._failed:
            raise self._failed[run]
        if run not in self._memo:
            try:
                self._memo[run] = self._applications(run, Mode.FIRST)[0]
            except UntranslatableError as e:
                self._failed[run] = e
                raise
        return self._memo[run]

    def translate(self, sentence: Sentence, mode: Mode = Mode.FIRST) -> List[TranslationResult]:
        if sentence.side is not self.direction.source:
            raise ValueError(
                f"sentence is {sentence.side.value}, direction {self.direction.value} expects {self.direction.source.value}"
            )
        applications = (
            [self.first(sentence.tokens)]
            if mode is Mode.FIRST
            else self._applications(sentence.tokens, Mode.ALL)
        )
        return [
            TranslationResult(Sentence(self.direction.target, app.output), app)
            for app in applications
        ]


def translate(
    sentence: Sentence,
    direction: Direction,
    base: RuleBase,
    mode: Mode = Mode.FIRST,
) -> List[TranslationResult]:
    """Translate a sentence; raises UntranslatableError if no rule applies"""
    return Translator(base, direction).translate(sentence, mode)


def render_trace(result: TranslationResult, base: RuleBase) -> List[str]:
    """Indented ``#id rule {binding}`` lines, one per application"""
    lines: List[str] = []

    def visit(node: Application, depth: int):
        binding = ", ".join(
            f"${index}={render_tokens(run)}" for index, run in sorted(node.binding.items())
        )
        suffix = f"  {{{binding}}}" if binding else ""
        lines.append(f"{'  ' * depth}#{base.rule_id(node.rule)} {node.rule}{suffix}")
        for child in node.children:
            visit(child, depth + 1)

    visit(result.trace, 0)
    return lines
