#!/usr/bin/env python3
"""
Randomized property checks for matching, learning, translation and rule files
"""

import itertools
import random
import sys
import tempfile
from pathlib import Path

from test_setup import CORPORA, run_tests
from trlearn.corpus import Corpus, load_corpus
from trlearn.learner import DEFAULT_MAX_PASSES, learn_corpus, learn_pair
from trlearn.lexrep import ExamplePair, Sentence, Side, Token, parse_lexical, render_lexical
from trlearn.matcher import match, match_oracle
from trlearn.rulebase import AddResult, Fact, RuleBase, Template, load, save
from trlearn.translator import Direction, Mode, UntranslatableError, _substitute, pattern_match, translate

L1_ALPHABET = ["a", "b", "c", "+d"]
L2_ALPHABET = ["x", "y", "z", "+w"]

FIXTURES = {
    "example1.tsv": None,
    "example2.tsv": None,
    "example3.tsv": None,
    "it_is_a.tsv": None,
    "to_mary.tsv": None,
    "give_past.tsv": "give_past_seed.trl",
}


def gen_sentence(rng, side, alphabet, max_length=6):
    length = rng.randint(1, max_length)
    return Sentence(side, [Token.of(rng.choice(alphabet)) for _ in range(length)])


def gen_example(rng, max_length=5):
    return ExamplePair(
        gen_sentence(rng, Side.L1, L1_ALPHABET, max_length),
        gen_sentence(rng, Side.L2, L2_ALPHABET, max_length),
    )


def gen_corpus(rng):
    return Corpus([gen_example(rng) for _ in range(rng.randint(2, 4))])


def gen_facts(rng, count):
    return RuleBase(
        Fact((Token.of(rng.choice(L1_ALPHABET)),), (Token.of(rng.choice(L2_ALPHABET)),))
        for _ in range(count)
    )


def test_match_agrees_with_oracle():
    rng = random.Random(1)
    for _ in range(10_000):
        a = gen_sentence(rng, Side.L1, L1_ALPHABET)
        b = gen_sentence(rng, Side.L1, L1_ALPHABET)
        found = match_oracle(a, b)
        m = match(a, b)
        if len(found) == 1:
            assert m == next(iter(found)), (a, b)
        else:
            assert m is None, (a, b, found)


def test_match_symmetry_and_reconstruction():
    rng = random.Random(2)
    for _ in range(2_000):
        a = gen_sentence(rng, Side.L2, L2_ALPHABET, 8)
        b = gen_sentence(rng, Side.L2, L2_ALPHABET, 8)
        m = match(a, b)
        reverse = match(b, a)
        if m is None:
            assert reverse is None
            continue
        assert reverse == m.swapped()
        if m.similarity_count == 0:
            assert m.difference_count == 1
            assert not set(a.tokens) & set(b.tokens)
        assert m.reconstruct(1) == a.tokens
        assert m.reconstruct(2) == b.tokens


def test_fixture_corpora_translate_faithfully():
    for name, seed in FIXTURES.items():
        corpus = load_corpus(CORPORA / name)
        base = load(CORPORA / seed) if seed else None
        base, _ = learn_corpus(corpus, base=base)
        for example in corpus:
            forward = translate(example.l1, Direction.L1_TO_L2, base)
            assert forward[0].output == example.l2, (name, example)
            backward = translate(example.l2, Direction.L2_TO_L1, base)
            assert backward[0].output == example.l1, (name, example)


def test_first_mode_heads_all_mode():
    for name in ("example2.tsv", "example3.tsv"):
        corpus = load_corpus(CORPORA / name)
        base, _ = learn_corpus(corpus)
        for example in corpus:
            for sentence, direction in (
                (example.l1, Direction.L1_TO_L2),
                (example.l2, Direction.L2_TO_L1),
            ):
                first = translate(sentence, direction, base, Mode.FIRST)
                every = translate(sentence, direction, base, Mode.ALL)
                assert first[0].output == every[0].output
                for result in every:
                    rendered = render_lexical(result.output)
                    assert parse_lexical(rendered, direction.target) == result.output


def test_learning_and_translation_terminate():
    rng = random.Random(3)
    for _ in range(1_000):
        corpus = gen_corpus(rng)
        seed = gen_facts(rng, 3)
        seed_rules = seed.insertion_order()
        base, report = learn_corpus(corpus, max_passes=10, base=seed)
        assert 1 <= len(report.passes) <= 10
        assert base.insertion_order()[: len(seed_rules)] == seed_rules
        assert len(base) == len(seed_rules) + report.example_facts + report.learned_rules
        if report.fixpoint:
            _, again = learn_corpus(corpus, base=base)
            assert again.learned_rules == 0
        for example in corpus:
            try:
                translate(example.l1, Direction.L1_TO_L2, base)
            except UntranslatableError:
                pass


def _rebuilds(pattern, other, source, target, pairs):
    for binding in pattern_match(pattern, source.tokens):
        indices = sorted(binding)
        choices = [[out for run, out in pairs if run == binding[k]] for k in indices]
        for picked in itertools.product(*choices):
            if _substitute(other, dict(zip(indices, picked))) == target.tokens:
                return True
    return False


def rebuilds(template, example, facts):
    """Some binding of the template, with every run swapped through a fact, gives the other side"""
    pairs = [(f.lhs, f.rhs) for f in facts]
    return _rebuilds(template.lhs, template.rhs, example.l1, example.l2, pairs) and _rebuilds(
        template.rhs, template.lhs, example.l2, example.l1, [(b, a) for a, b in pairs]
    )


def learn_checking_sources(corpus, base):
    """Run the learning passes pair by pair, checking every new template against its two examples"""
    for example in corpus:
        base.add_rule(Fact(example.l1.tokens, example.l2.tokens))
    checked = 0
    for _ in range(DEFAULT_MAX_PASSES):
        new_rules = 0
        for e1, e2 in itertools.combinations(corpus.examples, 2):
            outcome = learn_pair(e1, e2, base)
            facts = [r for r in base.insertion_order() if isinstance(r, Fact)]
            facts += [r for r in outcome.rules if isinstance(r, Fact)]
            for template in (r for r in outcome.rules if isinstance(r, Template)):
                assert rebuilds(template, e1, facts), (template, e1)
                assert rebuilds(template, e2, facts), (template, e2)
                checked += 1
            for rule in outcome.rules:
                if base.add_rule(rule) is AddResult.ADDED:
                    new_rules += 1
        if new_rules == 0:
            break
    return base, checked


def test_learned_templates_rebuild_their_examples():
    checked = 0
    for name, seed in FIXTURES.items():
        corpus = load_corpus(CORPORA / name)
        base = load(CORPORA / seed) if seed else RuleBase()
        base, count = learn_checking_sources(corpus, base)
        expected, _ = learn_corpus(corpus, base=load(CORPORA / seed) if seed else None)
        assert base.insertion_order() == expected.insertion_order(), name
        checked += count
    rng = random.Random(7)
    for _ in range(500):
        _, count = learn_checking_sources(gen_corpus(rng), gen_facts(rng, 3))
        checked += count
    assert checked > 0


def test_new_rules_per_pass_never_increase():
    rng = random.Random(8)
    for name, seed in FIXTURES.items():
        corpus = load_corpus(CORPORA / name)
        orders = [list(corpus.examples)]
        for _ in range(3):
            shuffled = list(corpus.examples)
            rng.shuffle(shuffled)
            orders.append(shuffled)
        for examples in orders:
            base = load(CORPORA / seed) if seed else None
            _, report = learn_corpus(Corpus(examples), base=base)
            counts = [p.new_rules for p in report.passes]
            assert counts == sorted(counts, reverse=True), (name, counts)
            assert report.fixpoint and counts[-1] == 0, name


def test_rule_files_round_trip():
    rng = random.Random(4)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "rules.trl"
        for _ in range(100):
            base, _ = learn_corpus(gen_corpus(rng), base=gen_facts(rng, 4))
            save(base, path)
            loaded = load(path)
            assert loaded == base
            for side in Side:
                assert loaded.ordered(side) == base.ordered(side)


def test_corpus_order_does_not_change_rules():
    rng = random.Random(5)
    for name in ("example1.tsv", "example2.tsv", "example3.tsv", "to_mary.tsv"):
        corpus = load_corpus(CORPORA / name)
        expected, _ = learn_corpus(corpus)
        for _ in range(5):
            shuffled = list(corpus.examples)
            rng.shuffle(shuffled)
            base, _ = learn_corpus(Corpus(shuffled))
            assert set(base.insertion_order()) == set(expected.insertion_order()), name


def test_learn_pair_symmetry():
    rng = random.Random(6)
    for _ in range(2_000):
        e1, e2 = gen_example(rng), gen_example(rng)
        base = gen_facts(rng, 4)
        forward = learn_pair(e1, e2, base)
        backward = learn_pair(e2, e1, base)
        assert forward.reason is backward.reason
        assert set(forward.rules) == set(backward.rules)


if __name__ == "__main__":
    sys.exit(run_tests("trlearn - Property Tests", dict(globals())))
