"""Tests for unique decipherability and Bernoulli measures."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pytest

from codedit.codes import (
    BernoulliDist,
    CodeReport,
    bernoulli_measure,
    is_code,
    is_code_regular,
    is_complete_by_measure,
    is_maximal_code,
    word_measure,
)
from codedit.errors import EmptyWordError, NotACodeError
from codedit.langs import FiniteLang, from_finite, is_complete
from test.conftest import (
    create_language, full_cube, random_sets, short_subsets,
)


@dataclass
class CodeTestCase:
    name: str
    words: Tuple[str, ...]
    is_code: bool
    word: str = None


@pytest.fixture(
    params=[
        CodeTestCase(name='bifix', words=('abb', 'baa'), is_code=True),
        CodeTestCase(name='prefix', words=('a', 'ba', 'bb'), is_code=True),
        CodeTestCase(
            name='suffix', words=('a', 'ab', 'bb'), is_code=True,
        ),
        CodeTestCase(
            name='delta3_closed',
            words=('aa', 'ab', 'bb', 'aaaab', 'abbbb'),
            is_code=True,
        ),
        CodeTestCase(
            name='ambiguous', words=('a', 'ab', 'ba'), is_code=False,
            word='aba',
        ),
        CodeTestCase(
            name='power', words=('a', 'aa'), is_code=False, word='aa',
        ),
    ],
    ids=lambda v: v.name,
)
def code_case(request):
    case = request.param
    return create_language('ab', *case.words), case


class TestIsCode:
    """Tests for the finite Sardinas-Patterson test."""

    def test_verdict_and_word(self, code_case):
        X, case = code_case

        report = is_code(X)

        assert report.is_code is case.is_code
        assert bool(report) is case.is_code
        assert report.word == case.word

    def test_regular_test_agrees(self, code_case):
        X, case = code_case
        assert is_code_regular(X) is case.is_code
        assert is_code_regular(from_finite(X)) is case.is_code

    def test_factorizations_of_aba(self, ambiguous):
        """aba = a·ba = ab·a is the shortest ambiguous word."""
        # GIVEN {a, ab, ba}
        # WHEN it is tested
        report = is_code(ambiguous)

        # THEN the two factorizations are returned, longer side first
        assert report.counterexample == (('a', 'ba'), ('ab', 'a'))

    def test_counterexample_factorizations_are_distinct(self):
        left, right = is_code(create_language('ab', 'a', 'aa')).counterexample
        assert left != right
        assert ''.join(left) == ''.join(right) == 'aa'

    def test_empty_word_is_rejected(self):
        with pytest.raises(EmptyWordError):
            is_code(create_language('ab', '', 'a'))

    def test_report_needs_consistent_fields(self):
        with pytest.raises(ValueError):
            CodeReport(True, (('a',), ('a',)))
        with pytest.raises(ValueError):
            CodeReport(False)


class TestIsCodeRegular:

    def test_prefix_codes(self, a_star_b, even_a_prefix_code):
        assert is_code_regular(a_star_b)
        assert is_code_regular(even_a_prefix_code)

    def test_two_lengths_is_not_a_code(self, lengths_two_and_three):
        """aaaaaa is both (aa)³ and (aaa)²."""
        assert not is_code_regular(lengths_two_and_three)

    def test_empty_word_is_rejected(self, ab):
        with pytest.raises(EmptyWordError):
            is_code_regular(create_language('ab', '', 'b'))


class TestBernoulliDist:

    def test_uniform(self, abc):
        dist = BernoulliDist.uniform(abc)
        assert set(dist.weights.values()) == {Fraction(1, 3)}

    def test_from_weight_strings(self, ab):
        dist = BernoulliDist.from_weights(ab, ['1/3', '2/3'])
        assert dist.weights == {'a': Fraction(1, 3), 'b': Fraction(2, 3)}

    @pytest.mark.parametrize(
        'weights',
        [
            {'a': Fraction(1, 2)},
            {'a': Fraction(1, 2), 'b': Fraction(1, 3)},
            {'a': Fraction(0), 'b': Fraction(1)},
            {'a': Fraction(1, 2), 'b': Fraction(1, 4), 'c': Fraction(1, 4)},
        ],
    )
    def test_rejects_bad_weights(self, ab, weights):
        with pytest.raises(ValueError):
            BernoulliDist(ab, weights)

    def test_is_hashable(self, ab):
        assert hash(BernoulliDist.uniform(ab)) == hash(
            BernoulliDist.from_weights(ab, {'a': '1/2', 'b': '1/2'}))


class TestMeasure:
    """Tests for exact measures and the completeness they decide."""

    @pytest.mark.parametrize(
        'words, expected',
        [
            (('aa', 'ab', 'bb', 'aaaab', 'abbbb'), Fraction(13, 16)),
            (('abb', 'baa'), Fraction(1, 4)),
            (('aa', 'ab', 'ba', 'bb'), Fraction(1)),
            ((), Fraction(0)),
        ],
    )
    def test_uniform_measure(self, words, expected):
        assert bernoulli_measure(create_language('ab', *words)) == expected

    def test_skewed_measure(self, ab):
        dist = BernoulliDist.from_weights(ab, ['1/3', '2/3'])

        assert word_measure('ab', dist) == Fraction(2, 9)
        assert bernoulli_measure(full_cube(ab, 1), dist) == 1

    def test_distribution_alphabet_must_match(self, ab, abc):
        with pytest.raises(ValueError):
            bernoulli_measure(full_cube(ab, 1), BernoulliDist.uniform(abc))

    def test_complete_by_measure(self, ab, bifix_z):
        assert is_complete_by_measure(full_cube(ab, 2))
        assert not is_complete_by_measure(bifix_z)

    def test_measure_needs_a_code(self, ambiguous):
        with pytest.raises(NotACodeError):
            is_complete_by_measure(ambiguous)


class TestMaximalCode:

    def test_a_star_b_is_maximal(self, a_star_b):
        assert is_maximal_code(a_star_b)

    def test_z_is_not_maximal(self, bifix_z):
        assert not is_maximal_code(bifix_z)

    def test_needs_a_code(self, lengths_two_and_three):
        with pytest.raises(NotACodeError):
            is_maximal_code(lengths_two_and_three)


@pytest.fixture
def small_sets(ab):
    return list(short_subsets(ab, 3, 4)) + random_sets(ab, 4, 6, 300, seed=1)


def test_code_measures_decide_completeness(ab, small_sets):
    """A finite code has measure at most 1, with equality when complete."""
    skewed = BernoulliDist.from_weights(ab, ['1/3', '2/3'])
    for X in small_sets:
        if not is_code(X):
            continue

        complete = is_complete(X)
        for dist in (None, skewed):
            measure = bernoulli_measure(X, dist)
            assert measure <= 1, X
            assert (measure == 1) is complete, X
        assert is_maximal_code(X) is complete, X


def test_counterexamples_are_two_factorizations(small_sets):
    for X in small_sets:
        report = is_code(X)
        if report:
            continue

        left, right = report.counterexample
        assert ''.join(left) == ''.join(right) == report.word, X
        assert left != right, X
        assert all(part in X for part in left + right), X


def test_measure_is_additive(ab):
    skewed = BernoulliDist.from_weights(ab, ['1/3', '2/3'])
    firsts = random_sets(ab, 5, 6, 50, seed=2)
    seconds = random_sets(ab, 5, 6, 50, seed=3)
    for X, Y in zip(firsts, seconds):
        Y = FiniteLang(ab, Y.words - X.words)
        for dist in (None, skewed):
            assert bernoulli_measure(X | Y, dist) == (
                bernoulli_measure(X, dist) + bernoulli_measure(Y, dist))
