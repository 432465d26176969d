"""
Corpus module for trlearn
Loads tab-separated bilingual example files into ExamplePair lists
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Union

from .lexrep import ExamplePair, LexicalError, Side, parse_lexical

logger = logging.getLogger(__name__)


class CorpusError(ValueError):
    """Raised when a corpus file cannot be parsed"""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        if line_number:
            super().__init__(f"line {line_number}: {reason}")
        else:
            super().__init__(reason)


@dataclass
class Corpus:
    """Ordered list of translation examples"""

    examples: List[ExamplePair] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[ExamplePair]:
        return iter(self.examples)


def parse_example(text: str) -> ExamplePair:
    """Parse one ``L1 text<TAB>L2 text`` line"""
    columns = text.split("\t")
    if len(columns) != 2:
        raise LexicalError(f"expected 2 tab-separated columns, found {len(columns)}")
    return ExamplePair(parse_lexical(columns[0], Side.L1), parse_lexical(columns[1], Side.L2))


def parse_corpus(lines: Iterable[str]) -> Corpus:
    """Parse corpus lines, skipping blank lines and '#' comments"""
    corpus = Corpus()
    for line_number, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            corpus.examples.append(parse_example(line))
        except LexicalError as e:
            raise CorpusError(line_number, str(e)) from e

    if not corpus.examples:
        raise CorpusError(0, "corpus is empty")
    return corpus


def load_corpus(path: Union[str, Path]) -> Corpus:
    """Read a UTF-8 corpus file"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error reading corpus {path}: {e}")
        raise

    corpus = parse_corpus(text.splitlines())
    logger.info(f"Loaded {len(corpus)} examples from {path}")
    return corpus
