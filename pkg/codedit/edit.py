"""
Edit relations on words as set-valued maps, the Levenshtein distance,
and the orbits of the k-substitution relation.

The relations are

========================  ======  =====================================
kind                      symbol  image of x
========================  ======  =====================================
``delete``                δ_k     delete exactly k letters
``insert``                ι_k     insert exactly k letters
``substitute``            σ_k     change exactly k positions
``delete_upto``           Δ_k     δ_1 ∪ ... ∪ δ_k
``insert_upto``           I_k     ι_1 ∪ ... ∪ ι_k
``substitute_upto``       Σ_k     σ_1 ∪ ... ∪ σ_k
``levenshtein``           Λ_k     j single edits in a row, 1 <= j <= k
``levenshtein_strict``    Λ̲_k     Λ_k without the pairs (x, x)
========================  ======  =====================================
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from logging import getLogger
from math import comb
from typing import FrozenSet, List, Optional, Tuple

import numpy as np
import pandas as pd

from codedit._validation import _handle_budget
from codedit.config import ORBIT_EXPAND_LIMIT
from codedit.enums import EditKind, OrbitShape, Parity
from codedit.errors import SearchGuardError
from codedit.langs import FiniteLang
from codedit.words import (
    Alphabet, Word, complement_word, is_subword, ones_count,
)

log = getLogger(__name__)

_SYMBOLS = {
    EditKind.delete: 'δ',
    EditKind.insert: 'ι',
    EditKind.substitute: 'σ',
    EditKind.delete_upto: 'Δ',
    EditKind.insert_upto: 'I',
    EditKind.substitute_upto: 'Σ',
    EditKind.levenshtein: 'Λ',
    EditKind.levenshtein_strict: 'Λ̲',
}

_NAMES = {
    'delta': EditKind.delete,
    'iota': EditKind.insert,
    'sigma': EditKind.substitute,
    'delta-upto': EditKind.delete_upto,
    'iota-upto': EditKind.insert_upto,
    'sigma-upto': EditKind.substitute_upto,
    'lambda': EditKind.levenshtein,
    'lambda-strict': EditKind.levenshtein_strict,
}

_INVERSES = {
    EditKind.delete: EditKind.insert,
    EditKind.insert: EditKind.delete,
    EditKind.delete_upto: EditKind.insert_upto,
    EditKind.insert_upto: EditKind.delete_upto,
}

_UPTO = {
    EditKind.delete_upto: EditKind.delete,
    EditKind.insert_upto: EditKind.insert,
    EditKind.substitute_upto: EditKind.substitute,
}

_SUBSCRIPTS = str.maketrans('0123456789', '₀₁₂₃₄₅₆₇₈₉')


@dataclass(frozen=True)
class EditRelation:
    """One of the eight edit relations with its budget k >= 1."""

    kind: EditKind
    budget: int

    def __post_init__(self):
        if not isinstance(self.kind, EditKind):
            raise ValueError(f"kind must be an EditKind, got {self.kind!r}")
        _handle_budget(self.budget)

    @classmethod
    def parse(cls, text: str) -> 'EditRelation':
        """Reads a relation written as ``KIND:K``, e.g. ``delta:1``.

        KIND is one of delta, iota, sigma, delta-upto, iota-upto,
        sigma-upto, lambda and lambda-strict, or an EditKind name.
        """
        name, sep, budget = text.strip().partition(':')
        name = name.strip().lower()
        kind = _NAMES.get(name) or _NAMES.get(name.replace('_', '-'))
        if kind is None:
            try:
                kind = EditKind[name.replace('-', '_')]
            except KeyError:
                raise ValueError(
                    f"unknown relation {name!r}, expected one of "
                    f"{', '.join(_NAMES)}"
                ) from None

        if not sep:
            raise ValueError(f"relation must be written KIND:K, got {text!r}")
        try:
            k = int(budget)
        except ValueError:
            raise ValueError(
                f"relation budget must be an integer, got {budget!r}") from None

        return cls(kind, k)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self.kind] + str(self.budget).translate(_SUBSCRIPTS)

    def __str__(self) -> str:
        return self.symbol

    def components(self) -> List['EditRelation']:
        """The relations δ_i, ι_i, σ_i (i <= k) whose union covers self."""
        k = self.budget
        if self.kind in _UPTO:
            return [EditRelation(_UPTO[self.kind], i) for i in range(1, k + 1)]
        if self.kind in (EditKind.levenshtein, EditKind.levenshtein_strict):
            return [
                EditRelation(kind, i)
                for i in range(1, k + 1)
                for kind in (
                    EditKind.delete, EditKind.insert, EditKind.substitute)
            ]
        return [self]

    def inverse(self) -> 'EditRelation':
        """The converse relation: δ and ι swap, the others are symmetric."""
        return EditRelation(_INVERSES.get(self.kind, self.kind), self.budget)

    @property
    def is_length_preserving(self) -> bool:
        return self.kind in (EditKind.substitute, EditKind.substitute_upto)

    @property
    def increases_length(self) -> bool:
        return self.kind in (EditKind.insert, EditKind.insert_upto)

    @property
    def decreases_length(self) -> bool:
        return self.kind in (EditKind.delete, EditKind.delete_upto)


def _deletions(w: Word, k: int) -> FrozenSet[Word]:
    n = len(w)
    if n < k:
        return frozenset()
    return frozenset(
        ''.join(w[i] for i in kept)
        for kept in combinations(range(n), n - k)
    )


def _insertions(w: Word, k: int, symbols: Tuple[str, ...]) -> FrozenSet[Word]:
    n = len(w) + k
    images = set()
    for kept in combinations(range(n), len(w)):
        slots = [i for i in range(n) if i not in kept]
        for fillers in product(symbols, repeat=k):
            letters = [''] * n
            for i, symbol in zip(kept, w):
                letters[i] = symbol
            for i, symbol in zip(slots, fillers):
                letters[i] = symbol
            images.add(''.join(letters))
    return frozenset(images)


def _substitutions(
        w: Word, k: int, symbols: Tuple[str, ...]) -> FrozenSet[Word]:
    images = set()
    for positions in combinations(range(len(w)), k):
        choices = [[s for s in symbols if s != w[i]] for i in positions]
        for replacement in product(*choices):
            letters = list(w)
            for i, symbol in zip(positions, replacement):
                letters[i] = symbol
            images.add(''.join(letters))

    expected = comb(len(w), k) * (len(symbols) - 1) ** k
    assert len(images) == expected, (w, k, len(images), expected)
    return frozenset(images)


def _single_edits(w: Word, symbols: Tuple[str, ...]) -> FrozenSet[Word]:
    return (
        _deletions(w, 1)
        | _insertions(w, 1, symbols)
        | _substitutions(w, 1, symbols)
    )


@lru_cache(maxsize=2 ** 12)
def _image(
        kind: EditKind, k: int, w: Word, symbols: Tuple[str, ...],
        ) -> FrozenSet[Word]:
    if kind is EditKind.delete:
        return _deletions(w, k)
    if kind is EditKind.insert:
        return _insertions(w, k, symbols)
    if kind is EditKind.substitute:
        return _substitutions(w, k, symbols)
    if kind in _UPTO:
        return frozenset().union(
            *(_image(_UPTO[kind], i, w, symbols) for i in range(1, k + 1)))

    # Lambda: words reached by j single edits in a row, 1 <= j <= k.
    reached = set()
    layer = {w}
    for _ in range(k):
        layer = set().union(*(_single_edits(v, symbols) for v in layer))
        reached |= layer
    if kind is EditKind.levenshtein_strict:
        reached.discard(w)
    return frozenset(reached)


def image_words(
        rel: EditRelation, w: Word, alphabet: Alphabet) -> FrozenSet[Word]:
    """rel(w) as a bare frozenset; w is not validated."""
    return _image(rel.kind, rel.budget, w, alphabet.symbols)


def apply(rel: EditRelation, w: Word, alphabet: Alphabet) -> FiniteLang:
    """The exact image rel(w).

    Parameters
    ----------
    rel : EditRelation
    w : str
    alphabet : Alphabet
        The letters available to insertions and substitutions.

    Returns
    -------
    FiniteLang
    """
    alphabet.validate_word(w)
    return FiniteLang(alphabet, image_words(rel, w, alphabet))


def apply_set(rel: EditRelation, X: FiniteLang) -> FiniteLang:
    """The image rel(X), the union of the images of the words of X."""
    symbols = X.alphabet.symbols
    return FiniteLang(
        X.alphabet,
        frozenset().union(
            *(_image(rel.kind, rel.budget, x, symbols) for x in X.words)),
    )


def hamming(x: Word, y: Word) -> int:
    """Number of positions where two words of equal length differ."""
    if len(x) != len(y):
        raise ValueError(
            f"hamming distance needs equal lengths, got {x!r} and {y!r}")
    return sum(a != b for a, b in zip(x, y))


@lru_cache(maxsize=2 ** 14)
def levenshtein(x: Word, y: Word) -> int:
    """The unit-cost edit distance between x and y."""
    table = np.zeros((len(x) + 1, len(y) + 1), dtype=np.int64)
    table[:, 0] = np.arange(len(x) + 1)
    table[0, :] = np.arange(len(y) + 1)

    for i in range(1, len(x) + 1):
        for j in range(1, len(y) + 1):
            table[i, j] = min(
                table[i - 1, j] + 1,
                table[i, j - 1] + 1,
                table[i - 1, j - 1] + (x[i - 1] != y[j - 1]),
            )

    return int(table[-1, -1])


def lambda_membership(x: Word, y: Word, p: int) -> bool:
    """Whether y is in Λ_p(x), decided from the edit distance.

    Λ_1 never relates a word to itself, while for p >= 2 two opposite
    substitutions bring any word back to itself.
    """
    _handle_budget(p, 'p')
    distance = levenshtein(x, y)
    if p == 1:
        return distance == 1
    return distance <= p


def related(rel: EditRelation, x: Word, y: Word) -> bool:
    """Whether y is in rel(x), without enumerating the image."""
    k = rel.budget
    kind = rel.kind

    if kind is EditKind.delete:
        return len(x) - len(y) == k and is_subword(y, x)
    if kind is EditKind.insert:
        return len(y) - len(x) == k and is_subword(x, y)
    if kind is EditKind.substitute:
        return len(x) == len(y) and hamming(x, y) == k
    if kind is EditKind.delete_upto:
        return 1 <= len(x) - len(y) <= k and is_subword(y, x)
    if kind is EditKind.insert_upto:
        return 1 <= len(y) - len(x) <= k and is_subword(x, y)
    if kind is EditKind.substitute_upto:
        return len(x) == len(y) and 1 <= hamming(x, y) <= k
    if kind is EditKind.levenshtein:
        return lambda_membership(x, y, k)
    return x != y and lambda_membership(x, y, k)


def levenshtein_matrix(X: FiniteLang) -> pd.DataFrame:
    """Pairwise edit distances, indexed by the words of X in order."""
    words = X.sorted()
    distances = np.array(
        [[levenshtein(x, y) for y in words] for x in words],
        dtype=np.int64,
    ).reshape(len(words), len(words))
    return pd.DataFrame(distances, index=words, columns=words)


@dataclass(frozen=True)
class OrbitDescriptor:
    """A symbolic description of an orbit of σ_k.

    Attributes
    ----------
    shape : OrbitShape
        ``full_cube`` is A^n, ``parity_class`` the binary words of length
        n whose number of ones has the given parity, ``self_pair`` the
        pair {w, w̄}, and ``explicit`` a listed set.
    length : int
    alphabet : Alphabet
    parity : Parity, optional
    word : str, optional
        The generating word of a ``self_pair``.
    words : FiniteLang, optional
        The members of an ``explicit`` orbit.
    """

    shape: OrbitShape
    length: int
    alphabet: Alphabet
    parity: Optional[Parity] = None
    word: Optional[Word] = None
    words: Optional[FiniteLang] = None

    @property
    def cardinality(self) -> int:
        if self.shape is OrbitShape.full_cube:
            return len(self.alphabet) ** self.length
        if self.shape is OrbitShape.parity_class:
            return 2 ** (self.length - 1)
        if self.shape is OrbitShape.self_pair:
            return 2
        return len(self.words)

    def __contains__(self, w) -> bool:
        if not isinstance(w, str) or len(w) != self.length:
            return False
        if any(s not in self.alphabet for s in w):
            return False
        if self.shape is OrbitShape.full_cube:
            return True
        if self.shape is OrbitShape.parity_class:
            return _parity(w, self.alphabet) is self.parity
        if self.shape is OrbitShape.self_pair:
            return w in (self.word, complement_word(self.word, self.alphabet))
        return w in self.words

    def expand(self, limit: Optional[int] = ORBIT_EXPAND_LIMIT) -> FiniteLang:
        """Lists the orbit.

        Raises
        ------
        SearchGuardError
            If the orbit has more than ``limit`` words.
        """
        if limit is not None and self.cardinality > limit:
            raise SearchGuardError(
                'orbit size', limit,
                f"orbit {self.describe()} has {self.cardinality} words",
            )
        if self.shape is OrbitShape.explicit:
            return self.words

        members = (
            w for w in self.alphabet.words_of_length(self.length)
            if w in self
        )
        return FiniteLang(self.alphabet, frozenset(members))

    def describe(self) -> str:
        if self.shape is OrbitShape.full_cube:
            return f"FullCube({self.length})"
        if self.shape is OrbitShape.parity_class:
            return f"ParityClass({self.length}, {self.parity.name})"
        if self.shape is OrbitShape.self_pair:
            return f"SelfPair({self.word})"
        return f"Explicit({self.words})"


def _parity(w: Word, alphabet: Alphabet) -> Parity:
    return Parity.odd if ones_count(w, alphabet) % 2 else Parity.even


def sigma_star(w: Word, k: int, alphabet: Alphabet) -> OrbitDescriptor:
    """The orbit σ_k*(w), described symbolically.

    Parameters
    ----------
    w : str
    k : int
        The substitution budget, at least 1.
    alphabet : Alphabet

    Returns
    -------
    OrbitDescriptor
        A^n when |A| >= 3, or on two letters when k is odd and
        |w| > k. On two letters with k even and |w| > k it is the parity
        class of w, and with |w| = k it is {w, w̄}. Words shorter than k
        form their own orbit.
    """
    k = _handle_budget(k)
    alphabet.validate_word(w)
    n = len(w)

    if n < k:
        return OrbitDescriptor(
            OrbitShape.explicit, n, alphabet,
            words=FiniteLang(alphabet, frozenset({w})),
        )
    if not alphabet.is_binary:
        return OrbitDescriptor(OrbitShape.full_cube, n, alphabet)
    if n == k:
        return OrbitDescriptor(OrbitShape.self_pair, n, alphabet, word=w)
    if k % 2:
        return OrbitDescriptor(OrbitShape.full_cube, n, alphabet)
    return OrbitDescriptor(
        OrbitShape.parity_class, n, alphabet, parity=_parity(w, alphabet))


@dataclass(frozen=True)
class BruteClosure:
    """The result of closure_brute.

    ``truncated`` is set when some image word was longer than the cap
    and was left out, so ``language`` is only part of the closure.
    """

    language: FiniteLang
    truncated: bool


def closure_brute(
        rel: EditRelation,
        X: FiniteLang,
        length_cap: Optional[int] = None,
        ) -> BruteClosure:
    """Computes rel*(X) by iterating images up to a length cap.

    Parameters
    ----------
    rel : EditRelation
    X : FiniteLang
    length_cap : int, defaults to the longest word of X
        Words longer than this are dropped, and the result is marked
        truncated.

    Returns
    -------
    BruteClosure
        The words reachable from X, X included.
    """
    if length_cap is None:
        length_cap = X.max_length
    if length_cap < X.max_length:
        raise ValueError(
            f"length_cap {length_cap} is below the longest word of X "
            f"({X.max_length})"
        )

    symbols = X.alphabet.symbols
    reached = set(X.words)
    frontier = list(X.words)
    truncated = False

    while frontier:
        following = []
        for w in frontier:
            for v in _image(rel.kind, rel.budget, w, symbols):
                if len(v) > length_cap:
                    truncated = True
                elif v not in reached:
                    reached.add(v)
                    following.append(v)
        frontier = following

    log.debug("%s closure of %d words: %d words, truncated=%s",
              rel.symbol, len(X), len(reached), truncated)
    return BruteClosure(FiniteLang(X.alphabet, frozenset(reached)), truncated)


def orbit_partition(
        n: int, k: int, alphabet: Alphabet) -> List[FiniteLang]:
    """Splits A^n into the orbits of σ_k, each computed by closure_brute."""
    remaining = set(alphabet.words_of_length(n))
    orbits = []
    for w in alphabet.words_of_length(n):
        if w not in remaining:
            continue
        orbit = closure_brute(
            EditRelation(EditKind.substitute, k),
            FiniteLang(alphabet, frozenset({w})),
            n,
        ).language
        remaining -= orbit.words
        orbits.append(orbit)
    return orbits

