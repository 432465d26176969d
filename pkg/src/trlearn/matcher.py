"""
Match sequence module for trlearn
Finds the unique similarity/difference decomposition of two sentences of the
same language, or reports that there is none
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .lexrep import Sentence, Token, TokenRun, render_tokens

logger = logging.getLogger(__name__)

ORACLE_MAX_TOKENS = 16


class CrossLanguageError(ValueError):
    """Raised when sentences of different language sides are matched"""

    def __init__(self):
        super().__init__("cross-language match")


class OracleInputTooLarge(ValueError):
    """Raised when the brute-force oracle is asked to enumerate too much"""

    def __init__(self):
        super().__init__("oracle input too large")


@dataclass(frozen=True)
class Difference:
    """Two non-empty token runs, one per sentence, sharing no token"""

    first: TokenRun
    second: TokenRun

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        if not self.first or not self.second:
            raise ValueError("difference runs must be non-empty")
        if not set(self.first).isdisjoint(self.second):
            raise ValueError("difference runs share a token")

    def swapped(self) -> "Difference":
        return Difference(self.second, self.first)

    def tokens(self) -> Set[Token]:
        return set(self.first) | set(self.second)

    def __str__(self) -> str:
        return f"{render_tokens(self.first)} : {render_tokens(self.second)}"


@dataclass(frozen=True)
class MatchSequence:
    """
    S1 D1 S2 ... Dn Sn+1: similarities interleaved with differences.

    ``similarities`` always holds one more run than ``differences``; the
    outer runs may be empty, interior ones never are.
    """

    similarities: Tuple[TokenRun, ...]
    differences: Tuple[Difference, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "similarities", tuple(tuple(s) for s in self.similarities)
        )
        object.__setattr__(self, "differences", tuple(self.differences))
        if len(self.similarities) != len(self.differences) + 1:
            raise ValueError("a match sequence needs n differences and n+1 similarities")

    @property
    def difference_count(self) -> int:
        return len(self.differences)

    @property
    def similarity_count(self) -> int:
        """Number of non-empty similarities"""
        return sum(1 for s in self.similarities if s)

    def reconstruct(self, which: int) -> TokenRun:
        """Rebuild sentence 1 (``which=1``) or sentence 2 (``which=2``)"""
        out: List[Token] = list(self.similarities[0])
        for diff, sim in zip(self.differences, self.similarities[1:]):
            out.extend(diff.first if which == 1 else diff.second)
            out.extend(sim)
        return tuple(out)

    def swapped(self) -> "MatchSequence":
        return MatchSequence(
            self.similarities, tuple(d.swapped() for d in self.differences)
        )


def render_match(match_sequence: Optional[MatchSequence]) -> str:
    """Debug rendering: ``[it is a] · book : pencil``"""
    if match_sequence is None:
        return "no match"
    parts = []
    for i, sim in enumerate(match_sequence.similarities):
        if sim:
            parts.append(f"[{render_tokens(sim)}]")
        if i < match_sequence.difference_count:
            parts.append(str(match_sequence.differences[i]))
    return " · ".join(parts)


def _check_sides(a: Sentence, b: Sentence):
    if a.side is not b.side:
        raise CrossLanguageError()


def _common_run_length(a: TokenRun, i: int, b: TokenRun, j: int) -> int:
    n = 0
    while i + n < len(a) and j + n < len(b) and a[i + n] == b[j + n]:
        n += 1
    return n


def _decompositions(a: TokenRun, b: TokenRun) -> Iterator[MatchSequence]:
    """
    Backtracking search over constrained decompositions.

    A similarity always extends as far as the two sentences agree: stopping
    earlier would start the next difference with the same token on both
    sides. That leaves the end points of each difference as the only choice.
    """
    head = _common_run_length(a, 0, b, 0)
    similarities = [a[:head]]
    differences: List[Difference] = []
    seen: Set[Token] = set()

    def extend(i: int, j: int) -> Iterator[MatchSequence]:
        if i == len(a) and j == len(b):
            yield MatchSequence(tuple(similarities), tuple(differences))
            return
        if i == len(a) or j == len(b):
            return

        for i2 in range(i + 1, len(a) + 1):
            first = a[i:i2]
            first_set = set(first)
            for j2 in range(j + 1, len(b) + 1):
                if b[j2 - 1] in first_set:
                    break
                second = b[j:j2]
                at_end = i2 == len(a) and j2 == len(b)
                if not at_end and (i2 == len(a) or j2 == len(b) or a[i2] != b[j2]):
                    continue

                diff = Difference(first, second)
                run = _common_run_length(a, i2, b, j2)
                sim = a[i2 : i2 + run]
                added = diff.tokens() - seen
                if not seen.union(added).isdisjoint(sim):
                    continue

                seen.update(added)
                differences.append(diff)
                similarities.append(sim)
                yield from extend(i2 + run, j2 + run)
                similarities.pop()
                differences.pop()
                seen.difference_update(added)

    yield from extend(head, head)


def match(a: Sentence, b: Sentence) -> Optional[MatchSequence]:
    """
    Return the unique match sequence of two same-side sentences, or None.

    Identical sentences give the zero-difference sequence. Zero or several
    valid decompositions both count as no match.
    """
    _check_sides(a, b)
    found = list(itertools.islice(_decompositions(a.tokens, b.tokens), 2))
    if len(found) != 1:
        logger.debug(
            f"No match between '{a}' and '{b}' ({len(found)} decomposition(s) seen)"
        )
        return None
    return found[0]


def _satisfies_constraints(
    similarities: Sequence[TokenRun], differences: Sequence[Tuple[TokenRun, TokenRun]]
) -> bool:
    n = len(differences)
    for first, second in differences:
        if not first or not second or not set(first).isdisjoint(second):
            return False
    for i in range(1, n):
        if not similarities[i]:
            return False
    earlier: Set[Token] = set()
    for k, sim in enumerate(similarities):
        if not earlier.isdisjoint(sim):
            return False
        if k < n:
            earlier.update(differences[k][0])
            earlier.update(differences[k][1])
    return True


def _segmentations(a: TokenRun, b: TokenRun):
    """Every alternating segmentation whose similarity slots agree on both sides"""

    def after_similarity(i, j, sims, diffs):
        if i == len(a) and j == len(b):
            yield sims, diffs
        for i2 in range(i + 1, len(a) + 1):
            for j2 in range(j + 1, len(b) + 1):
                diff = (a[i:i2], b[j:j2])
                for run in range(0, min(len(a) - i2, len(b) - j2) + 1):
                    if a[i2 : i2 + run] != b[j2 : j2 + run]:
                        break
                    yield from after_similarity(
                        i2 + run, j2 + run, sims + [a[i2 : i2 + run]], diffs + [diff]
                    )

    for head in range(0, min(len(a), len(b)) + 1):
        if a[:head] != b[:head]:
            break
        yield from after_similarity(head, head, [a[:head]], [])


def match_oracle(a: Sentence, b: Sentence) -> Set[MatchSequence]:
    """Brute-force every decomposition satisfying the match constraints"""
    _check_sides(a, b)
    if len(a) + len(b) > ORACLE_MAX_TOKENS:
        raise OracleInputTooLarge()

    results = set()
    for sims, diffs in _segmentations(a.tokens, b.tokens):
        if not diffs and a.tokens != b.tokens:
            continue
        if _satisfies_constraints(sims, diffs):
            results.add(
                MatchSequence(tuple(sims), tuple(Difference(x, y) for x, y in diffs))
            )
    return results
