"""
Lexical level representation for trlearn
Parses "stem+MORPHEME" text into token sequences and renders them back
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

logger = logging.getLogger(__name__)

MORPHEME_MARK = "+"


class LexicalError(ValueError):
    """Raised when lexical level text cannot be parsed"""


class TokenKind(Enum):
    STEM = "stem"
    MORPHEME = "morpheme"


class Side(Enum):
    """Language side of a sentence"""

    L1 = "l1"
    L2 = "l2"

    @property
    def other(self) -> "Side":
        return Side.L2 if self is Side.L1 else Side.L1


@dataclass(frozen=True)
class Token:
    """A word stem (``book``) or a morpheme marker (``+past``)"""

    kind: TokenKind
    text: str

    def __post_init__(self):
        if not self.text or any(ch.isspace() for ch in self.text):
            raise LexicalError(f"invalid token text: {self.text!r}")
        if self.kind is TokenKind.STEM and MORPHEME_MARK in self.text:
            raise LexicalError(f"stem contains '{MORPHEME_MARK}': {self.text!r}")
        if self.kind is TokenKind.MORPHEME and (
            not self.text.startswith(MORPHEME_MARK)
            or len(self.text) < 2
            or MORPHEME_MARK in self.text[1:]
        ):
            raise LexicalError(f"malformed morpheme: {self.text!r}")

    @property
    def is_morpheme(self) -> bool:
        return self.kind is TokenKind.MORPHEME

    @classmethod
    def of(cls, text: str) -> "Token":
        """Build a token from its text, inferring the kind from a leading '+'"""
        if text.startswith(MORPHEME_MARK):
            return cls(TokenKind.MORPHEME, text)
        return cls(TokenKind.STEM, text)

    def __str__(self) -> str:
        return self.text


TokenRun = Tuple[Token, ...]


@dataclass(frozen=True)
class Sentence:
    """An ordered, non-empty token sequence tagged with its language side"""

    side: Side
    tokens: TokenRun

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise LexicalError("empty sentence")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self) -> str:
        return render_lexical(self)


@dataclass(frozen=True)
class ExamplePair:
    """A translation example: an L1 sentence and its L2 equivalent"""

    l1: Sentence
    l2: Sentence

    def __post_init__(self):
        if self.l1.side is not Side.L1 or self.l2.side is not Side.L2:
            raise LexicalError("example pair sides must be L1 and L2")

    def side(self, side: Side) -> Sentence:
        return self.l1 if side is Side.L1 else self.l2


def split_word(word: str) -> List[Token]:
    """Split one whitespace-free word at every '+' into stem and morpheme tokens"""
    if word.endswith(MORPHEME_MARK) or MORPHEME_MARK * 2 in word:
        raise LexicalError(f"malformed morpheme: {word}")

    stem, *morphemes = word.lower().split(MORPHEME_MARK)
    tokens = [Token(TokenKind.STEM, stem)] if stem else []
    tokens.extend(Token(TokenKind.MORPHEME, MORPHEME_MARK + m) for m in morphemes)
    return tokens


def parse_tokens(text: str) -> TokenRun:
    """Parse lexical level text into a token run (may be empty)"""
    tokens: List[Token] = []
    for word in text.split():
        tokens.extend(split_word(word))
    return tuple(tokens)


def parse_lexical(text: str, side: Side) -> Sentence:
    """
    Parse lexical level text such as ``Kitap+ACC ver+PAST+1SG``

    Words are separated by whitespace, '+' starts a morpheme inside a word and
    everything is folded to lowercase.
    """
    if not text or not text.strip():
        raise LexicalError("empty sentence")
    return Sentence(side, parse_tokens(text))


def render_tokens(tokens: Iterable[Token]) -> str:
    """Render a token run, gluing each morpheme onto the token before it"""
    words: List[str] = []
    for token in tokens:
        if token.is_morpheme and words:
            words[-1] += token.text
        else:
            words.append(token.text)
    return " ".join(words)


def render_lexical(sentence: Sentence) -> str:
    return render_tokens(sentence.tokens)
