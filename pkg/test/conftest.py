# -*- coding: utf-8 -*-
import random
from itertools import combinations

import pytest

from codedit.langs import (
    FiniteLang, concat, from_finite, plus, star, union, word_language,
)
from codedit.words import Alphabet


def create_language(alphabet, *words):
    """Create a FiniteLang from an alphabet string and some words."""
    return FiniteLang.from_words(alphabet, words)


def full_cube(alphabet, n):
    """A^n as a FiniteLang."""
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    return FiniteLang(alphabet, frozenset(alphabet.words_of_length(n)))


def parity_class(n, parity=0):
    """The binary words of length n over 0 1 with |w|_1 of given parity."""
    return FiniteLang(
        Alphabet('01'),
        frozenset(
            w for w in Alphabet('01').words_of_length(n)
            if w.count('1') % 2 == parity
        ),
    )


def short_subsets(alphabet, max_length, max_size, min_size=1):
    """Every set of nonempty words of length <= max_length, smallest first."""
    words = [w for w in alphabet.words_up_to(max_length) if w]
    for size in range(min_size, max_size + 1):
        for chosen in combinations(words, size):
            yield FiniteLang(alphabet, frozenset(chosen))


def random_sets(alphabet, max_length, max_size, count, seed=0):
    """count seeded random sets of 1..max_size nonempty short words."""
    rng = random.Random(seed)
    words = [w for w in alphabet.words_up_to(max_length) if w]
    return [
        FiniteLang(
            alphabet, frozenset(rng.sample(words, rng.randint(1, max_size))))
        for _ in range(count)
    ]


### REUSABLE FIXTURES --------------------------------------------------------

@pytest.fixture()
def ab():
    return Alphabet('ab')


@pytest.fixture()
def abc():
    return Alphabet('abc')


@pytest.fixture()
def bits():
    return Alphabet('01')


@pytest.fixture()
def bifix_z():
    """The non-complete finite bifix code {ab², ba²}."""
    return create_language('ab', 'abb', 'baa')


@pytest.fixture()
def delta3_closed():
    """The non-complete δ₃-closed code {a², ab, b², a⁴b, ab⁴}."""
    return create_language('ab', 'aa', 'ab', 'bb', 'aaaab', 'abbbb')


@pytest.fixture()
def ambiguous():
    """{a, ab, ba}, where aba = a·ba = ab·a."""
    return create_language('ab', 'a', 'ab', 'ba')


@pytest.fixture()
def a_star_b(ab):
    """The prefix code a*b."""
    return concat(star(word_language(ab, 'a')), word_language(ab, 'b'))


@pytest.fixture()
def even_a_prefix_code(ab):
    """The regular prefix code (a²)⁺{b, aba, abb}."""
    return concat(
        plus(word_language(ab, 'aa')),
        from_finite(create_language('ab', 'b', 'aba', 'abb')),
    )


@pytest.fixture()
def lengths_two_and_three(ab):
    """A² ∪ A³, which is complete but not a code."""
    return union(full_cube(ab, 2), full_cube(ab, 3))
