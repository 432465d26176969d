"""
Command handlers for trlearn
Wires corpus loading, learning, rule files, matching and translation together
"""

import logging
import sys
from typing import List, Optional, TextIO

from .corpus import load_corpus
from .learner import LearningReport, SkipReason, learn_corpus
from .lexrep import Side, parse_lexical, render_lexical
from .matcher import match, render_match
from .message_loader import message_loader
from .rulebase import RuleBase, load, save
from .translator import (
    Direction,
    Mode,
    Translator,
    UntranslatableError,
    render_trace,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNTRANSLATABLE = 2


def format_report(report: LearningReport, base: RuleBase) -> List[str]:
    """Line-oriented learning report"""
    lines = []
    for current in report.passes:
        skipped = ", ".join(
            f"{reason.value}={current.skipped[reason]}" for reason in SkipReason
        )
        lines.append(f"pass {current.number}: {current.new_rules} new rules; skipped {skipped}")
    status = "fixpoint reached" if report.fixpoint else "pass limit reached"
    lines.append(f"{status} after {len(report.passes)} passes")
    lines.append(
        f"rules: {len(base)} total, {report.example_facts} from examples, {report.learned_rules} learned"
    )
    lines.append(f"unresolved pairs: {report.unresolved_pairs}")
    return lines


def cmd_learn(
    corpus_path: str,
    rules_out: str,
    max_passes: int,
    seed_rules: Optional[str] = None,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Handle ``learn``: corpus file in, rule file out"""
    try:
        corpus = load_corpus(corpus_path)
        seed = load(seed_rules) if seed_rules else None
        base, report = learn_corpus(corpus, max_passes, seed)
        save(base, rules_out)
    except (OSError, ValueError) as e:
        logger.error(f"Learning failed: {e}")
        print(f"error: {e}", file=err)
        return EXIT_ERROR

    for line in format_report(report, base):
        print(line, file=out)
    print(f"wrote {len(base)} rules to {rules_out}", file=out)
    return EXIT_OK


def _print_results(results, translator: Translator, trace: bool, out: TextIO):
    for result in results:
        print(render_lexical(result.output), file=out)
        if trace:
            for line in render_trace(result, translator.base):
                print(f"  {line}", file=out)


def cmd_translate(
    rules_path: str,
    direction: str,
    mode: str,
    sentence_text: str,
    trace: bool = False,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Handle ``translate``: one rendered translation per line"""
    try:
        base = load(rules_path)
        translator = Translator(base, Direction(direction))
        sentence = parse_lexical(sentence_text, translator.direction.source)
        results = translator.translate(sentence, Mode(mode))
    except UntranslatableError as e:
        print(str(e), file=err)
        return EXIT_UNTRANSLATABLE
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_ERROR

    _print_results(results, translator, trace, out)
    return EXIT_OK


def cmd_match(
    sentence_a: str,
    sentence_b: str,
    side: str,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Handle ``match``: show the similarity/difference decomposition"""
    try:
        language = Side(side)
        m = match(parse_lexical(sentence_a, language), parse_lexical(sentence_b, language))
    except ValueError as e:
        print(f"error: {e}", file=err)
        return EXIT_ERROR

    print(render_match(m), file=out)
    return EXIT_OK


def cmd_inspect(
    rules_path: str,
    direction: str = "l1l2",
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Handle ``inspect``: rules in specificity order for a direction"""
    try:
        base = load(rules_path)
        source = Direction(direction).source
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_ERROR

    for rule in base.ordered(source):
        print(
            f"#{base.rule_id(rule):<4} terminals={rule.terminal_count(source):<3} "
            f"vars={rule.var_count()}  {rule}",
            file=out,
        )
    return EXIT_OK


class ReplSession:
    """Interactive translation session state"""

    def __init__(self, base: RuleBase, direction: Direction, mode: Mode, trace: bool):
        self.base = base
        self.direction = direction
        self.mode = mode
        self.trace = trace
        self.translators = {d: Translator(base, d) for d in Direction}
        self.finished = False

    def handle_line(self, line: str, out: TextIO):
        """Process one input line; errors are reported and the session goes on"""
        line = line.strip()
        if not line:
            return
        if line.startswith(":"):
            self._handle_command(line, out)
            return

        translator = self.translators[self.direction]
        try:
            sentence = parse_lexical(line, self.direction.source)
            results = translator.translate(sentence, self.mode)
        except ValueError as e:
            print(str(e) if isinstance(e, UntranslatableError) else f"error: {e}", file=out)
            return
        _print_results(results, translator, self.trace, out)

    def _handle_command(self, line: str, out: TextIO):
        command, *args = line.split()
        if command == ":quit":
            self.finished = True
        elif command == ":dir":
            if args:
                try:
                    self.direction = Direction(args[0])
                except ValueError:
                    print(f"error: unknown direction '{args[0]}'", file=out)
                    return
            else:
                self.direction = (
                    Direction.L2_TO_L1
                    if self.direction is Direction.L1_TO_L2
                    else Direction.L1_TO_L2
                )
            print(f"direction: {self.direction.value}", file=out)
        elif command == ":all":
            self.mode = Mode.FIRST if self.mode is Mode.ALL else Mode.ALL
            print(f"mode: {self.mode.value}", file=out)
        elif command == ":trace":
            self.trace = not self.trace
            print(f"trace: {'on' if self.trace else 'off'}", file=out)
        elif command == ":help":
            print(message_loader.get_repl_help(), file=out)
        else:
            print(f"error: unknown command '{command}' (try :help)", file=out)


def cmd_repl(
    rules_path: str,
    direction: str = "l1l2",
    mode: str = "first",
    trace: bool = False,
    stdin: TextIO = sys.stdin,
    out: TextIO = sys.stdout,
    err: TextIO = sys.stderr,
) -> int:
    """Handle ``repl``: read sentences until :quit or end of input"""
    try:
        base = load(rules_path)
        session = ReplSession(base, Direction(direction), Mode(mode), trace)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_ERROR

    interactive = stdin.isatty()
    if interactive:
        print(
            message_loader.get_repl_welcome(len(base), rules_path, direction, mode, trace),
            file=out,
        )
    try:
        while not session.finished:
            if interactive:
                print(f"{session.direction.value}> ", end="", file=out, flush=True)
            line = stdin.readline()
            if not line:
                break
            session.handle_line(line, out)
    except KeyboardInterrupt:
        print(file=out)
        logger.info("REPL interrupted by user")
    return EXIT_OK
