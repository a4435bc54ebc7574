"""Tests for the finite and regular language values."""
from functools import lru_cache

import pytest

from codedit.errors import AlphabetError, CompleteLanguageError
from codedit.langs import (
    FiniteLang,
    RegularLang,
    as_regular,
    complement,
    concat,
    difference,
    empty_language,
    epsilon_language,
    factor_language,
    from_finite,
    intersection,
    is_complete,
    plus,
    shortest_external_witness,
    star,
    union,
    universal_language,
    word_language,
    words_containing,
)
from test.conftest import create_language, full_cube, random_sets


class TestFiniteLang:

    def test_iterates_in_length_lex_order(self):
        X = create_language('ab', 'ba', 'b', 'aab', 'a')
        assert list(X) == ['a', 'b', 'ba', 'aab']

    def test_str_shows_empty_word(self):
        assert str(create_language('ab', '', 'a')) == '{ε, a}'

    def test_words_must_not_be_a_string(self, ab):
        with pytest.raises(TypeError):
            FiniteLang(ab, 'ab')

    def test_foreign_words_are_rejected(self):
        with pytest.raises(AlphabetError):
            create_language('ab', 'abc')

    def test_set_operations(self):
        X = create_language('ab', 'a', 'ab')
        Y = create_language('ab', 'ab', 'b')

        assert (X | Y).sorted() == ['a', 'b', 'ab']
        assert (X & Y).sorted() == ['ab']
        assert (X - Y).sorted() == ['a']
        assert X & Y <= X

    def test_mixing_alphabets_raises(self):
        with pytest.raises(AlphabetError):
            create_language('ab', 'a') | create_language('abc', 'a')

    def test_lengths_and_add(self, bifix_z):
        extended = bifix_z.add('a')
        assert extended.lengths == [1, 3]
        assert extended.max_length == 3
        assert 'a' not in bifix_z


class TestRegularLang:
    """Tests for the automaton value and its constructions."""

    def test_rejects_bad_initial_state(self, ab):
        with pytest.raises(ValueError):
            RegularLang(ab, ((0, 0),), 1, frozenset())

    def test_rejects_partial_rows(self, ab):
        with pytest.raises(ValueError):
            RegularLang(ab, ((0,),), 0, frozenset())

    def test_from_finite_accepts_exactly_the_words(self, bifix_z):
        L = from_finite(bifix_z)
        assert list(L.words(6)) == ['abb', 'baa']

    def test_words_follow_length_lex_order(self, even_a_prefix_code):
        assert list(even_a_prefix_code.words(5)) == [
            'aab', 'aaaab', 'aaaba', 'aaabb',
        ]

    @pytest.mark.parametrize(
        'make, expected',
        [
            (empty_language, None),
            (epsilon_language, ''),
            (universal_language, ''),
        ],
    )
    def test_shortest_word_of_basic_languages(self, ab, make, expected):
        assert make(ab).shortest_word() == expected

    def test_shortest_word(self, a_star_b):
        assert a_star_b.shortest_word() == 'b'

    def test_minimized_word_language_has_a_sink(self, ab):
        assert word_language(ab, 'ab').n_states == 4
        assert universal_language(ab).minimize().n_states == 1

    def test_equal_languages_have_equal_tables(self, lengths_two_and_three, ab):
        """A² ∪ A³ built two ways ends in the same minimal automaton."""
        # GIVEN A²(ε ∪ A)
        other = concat(
            full_cube(ab, 2), union(epsilon_language(ab), full_cube(ab, 1)),
        )

        # THEN both constructions are the same table after minimizing
        assert other.delta == lengths_two_and_three.delta
        assert other.equivalent(lengths_two_and_three)

    def test_star_of_a_non_prefix_code(self, ab):
        """(b*ab)* must not loop final states back to the start."""
        L = star(concat(star(word_language(ab, 'b')), word_language(ab, 'ab')))

        assert all(L.accepts(w) for w in ['', 'ab', 'bab', 'abbab'])
        assert not any(L.accepts(w) for w in ['b', 'abb', 'ba'])

    def test_plus_drops_the_empty_word(self, ab):
        L = plus(word_language(ab, 'a'))
        assert not L.accepts('')
        assert L.accepts('aaa')

    def test_boolean_operations(self, ab, a_star_b):
        A2 = as_regular(full_cube(ab, 2))

        assert list(intersection(a_star_b, A2).words(4)) == ['ab']
        assert list(difference(A2, a_star_b).words(4)) == ['aa', 'ba', 'bb']
        assert complement(universal_language(ab)).is_empty()

    def test_words_containing(self, ab):
        L = words_containing(ab, 'aba')
        assert L.accepts('babab')
        assert not L.accepts('abba')

    def test_mixing_alphabets_raises(self, ab, abc):
        with pytest.raises(AlphabetError):
            union(word_language(ab, 'a'), word_language(abc, 'a'))

    def test_as_regular_rejects_other_values(self):
        with pytest.raises(TypeError):
            as_regular(['a', 'b'])

    def test_to_dot(self, a_star_b):
        dot = a_star_b.to_dot()
        assert dot.startswith('digraph "L" {')
        assert '__start -> 0;' in dot
        assert 'doublecircle' in dot


class TestCompleteness:
    """Tests for factor languages and completeness."""

    def test_factors_of_z_star(self, bifix_z):
        """baa·abb contains a³ but no word of Z* contains a⁴."""
        F = factor_language(star(bifix_z))
        assert F.accepts('aaa')
        assert not F.accepts('aaaa')

    @pytest.mark.parametrize(
        'words, expected',
        [(('abb', 'baa'), 'aaaa'), (('aa',), 'b')],
    )
    def test_shortest_external_witness(self, words, expected):
        X = create_language('ab', *words)
        assert shortest_external_witness(X) == expected

    def test_full_cube_is_complete(self, ab):
        assert is_complete(full_cube(ab, 2))
        with pytest.raises(CompleteLanguageError):
            shortest_external_witness(full_cube(ab, 2))

    def test_z_is_not_complete(self, bifix_z):
        assert not is_complete(bifix_z)

    def test_regular_sets_can_be_complete(self, lengths_two_and_three):
        assert is_complete(lengths_two_and_three)


def _factor_oracle(X):
    """Decides membership in F(X*) by splitting the word along X."""
    words = sorted(X.words)

    @lru_cache(maxsize=None)
    def continues(rest):
        # rest is a prefix of some word of X*
        if rest == '' or any(x.startswith(rest) for x in words):
            return True
        return any(
            rest.startswith(x) and continues(rest[len(x):]) for x in words)

    def is_factor(f):
        if f == '' or any(f in x for x in words):
            return True
        return any(
            f.startswith(x[j:]) and continues(f[len(x) - j:])
            for x in words
            for j in range(len(x))
        )

    return is_factor


def _doubled(L):
    """A non-minimal copy of L where every state is split in two."""
    delta = [
        [2 * t + (1 - b) for t in row]
        for row in L.delta
        for b in (0, 1)
    ]
    finals = {2 * f + b for f in L.finals for b in (0, 1)}
    return RegularLang(L.alphabet, delta, 2 * L.initial, finals)


class TestFactorLanguageLaws:
    """Closure laws of F(·) on random finite sets and their stars."""

    @pytest.fixture
    def languages(self, ab):
        sets = random_sets(ab, 3, 4, 40, seed=7)
        return [from_finite(X) for X in sets] + [star(X) for X in sets]

    def test_extensive(self, languages):
        for L in languages:
            assert difference(L, factor_language(L)).is_empty()

    def test_idempotent(self, languages):
        for L in languages:
            F = factor_language(L)
            assert factor_language(F).equivalent(F)

    def test_monotone(self, ab, languages):
        extras = random_sets(ab, 3, 2, len(languages), seed=11)
        for L, extra in zip(languages, extras):
            F, G = factor_language(L), factor_language(union(L, extra))
            assert difference(F, G).is_empty()


class TestMinimize:

    def test_doubled_automata_minimize_back(self, ab):
        for X in random_sets(ab, 3, 4, 40, seed=3):
            # GIVEN an automaton with twice as many states as needed
            L = star(X)
            D = _doubled(L)

            # WHEN it is minimized
            M = D.minimize()

            # THEN the language is unchanged and the result is a fixed point
            assert D.n_states > M.n_states
            assert D.equivalent(L)
            assert M.minimize().delta == M.delta
            assert M.minimize().finals == M.finals
            for w in ab.words_up_to(6):
                assert M.accepts(w) is D.accepts(w) is L.accepts(w), (X, w)


class TestCompletenessAgainstBruteForce:
    """F(X*), completeness and the witness checked by splitting words."""

    @pytest.fixture
    def sets(self, ab):
        return random_sets(ab, 4, 6, 100, seed=5)

    def test_factor_language_of_star(self, ab, sets):
        for X in sets:
            F = factor_language(star(X))
            is_factor = _factor_oracle(X)
            for w in ab.words_up_to(7):
                assert F.accepts(w) is is_factor(w), (X, w)

    def test_witness_is_the_first_non_factor(self, ab, sets):
        for X in sets:
            is_factor = _factor_oracle(X)
            if is_complete(X):
                bound = 2 * X.max_length + 2
                assert all(is_factor(w) for w in ab.words_up_to(bound)), X
                continue

            w = shortest_external_witness(X)
            assert not is_factor(w), (X, w)
            if len(w) > 12:
                continue
            for smaller in ab.words_up_to(len(w)):
                if smaller == w:
                    break
                assert is_factor(smaller), (X, w, smaller)
