"""
Main entry point for trlearn
Parses the command line and dispatches to the command handlers
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import cli
from .config import DIRECTIONS, Config
from .message_loader import message_loader

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with status 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(cli.EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="trlearn",
        description="Learn translation rules from example pairs and translate with them",
        epilog=message_loader.get_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log more (-v info, -vv debug)"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    learn = commands.add_parser("learn", help="Learn a rule file from a corpus")
    learn.add_argument("--corpus", help="Tab-separated corpus file")
    learn.add_argument("--out", help="Rule file to write")
    learn.add_argument("--max-passes", type=int, help="Upper bound on learning passes")
    learn.add_argument("--seed-rules", help="Rule file whose rules are known before learning")

    translate = commands.add_parser("translate", help="Translate one sentence")
    translate.add_argument("--rules", help="Rule file to translate with")
    translate.add_argument("--dir", choices=DIRECTIONS, help="Translation direction")
    translate.add_argument("--all", action="store_true", help="Print every translation")
    translate.add_argument("--trace", action="store_true", default=None, help="Print rule applications")
    translate.add_argument("sentence", help="Sentence in lexical form")

    match = commands.add_parser("match", help="Show the match sequence of two sentences")
    match.add_argument("--side", choices=("l1", "l2"), default="l1", help="Language side")
    match.add_argument("sentence_a")
    match.add_argument("sentence_b")

    inspect = commands.add_parser("inspect", help="List rules from most to least specific")
    inspect.add_argument("--rules", help="Rule file to list")
    inspect.add_argument("--dir", choices=DIRECTIONS, help="Order by this direction's source side")

    repl = commands.add_parser("repl", help="Translate interactively")
    repl.add_argument("--rules", help="Rule file to translate with")
    repl.add_argument("--dir", choices=DIRECTIONS, help="Initial translation direction")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main function"""
    args = build_parser().parse_args(argv)

    level = {0: None, 1: "INFO"}.get(args.verbose, "DEBUG")
    Config.setup_logging(level)

    config = Config(
        corpus_path=getattr(args, "corpus", None),
        rules_path=getattr(args, "out", None) or getattr(args, "rules", None),
        direction=getattr(args, "dir", None),
        mode="all" if getattr(args, "all", False) else None,
        max_passes=getattr(args, "max_passes", None),
        trace=getattr(args, "trace", None),
    )

    try:
        config.validate_config(
            require_corpus=args.command == "learn",
            require_rules=args.command in ("translate", "inspect", "repl"),
        )
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return cli.EXIT_ERROR

    streams = {"out": sys.stdout, "err": sys.stderr}
    if args.command == "learn":
        return cli.cmd_learn(
            config.corpus_path, config.rules_path, config.max_passes, args.seed_rules, **streams
        )
    if args.command == "translate":
        return cli.cmd_translate(
            config.rules_path, config.direction, config.mode, args.sentence, config.trace, **streams
        )
    if args.command == "match":
        return cli.cmd_match(args.sentence_a, args.sentence_b, args.side, **streams)
    if args.command == "inspect":
        return cli.cmd_inspect(config.rules_path, config.direction, **streams)
    return cli.cmd_repl(
        config.rules_path, config.direction, config.mode, config.trace, stdin=sys.stdin, **streams
    )


if __name__ == "__main__":
    sys.exit(main())
