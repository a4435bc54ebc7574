"""
Core word combinatorics: alphabets, factors, subwords, borders and the
binary complement/XOR operations.

Words are plain ``str`` values, one symbol per character. The empty
string is the empty word.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from logging import getLogger
from typing import Dict, FrozenSet, Iterator, List, Tuple

import numpy as np

from codedit.errors import AlphabetError

log = getLogger(__name__)

Word = str


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of at least two distinct one-character symbols.

    The order of ``symbols`` is the lexicographic order used everywhere
    words are enumerated or sorted. On a binary alphabet the first symbol
    plays the role of 0 and the second the role of 1.
    """

    symbols: Tuple[str, ...]
    _positions: Dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False,
    )

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, 'symbols', symbols)

        if not all(isinstance(s, str) and len(s) == 1 for s in symbols):
            raise AlphabetError(
                f"alphabet symbols must be single characters, got {symbols}")

        if len(symbols) != len(set(symbols)):
            raise AlphabetError(
                f"alphabet symbols must be distinct, got {symbols}")

        if len(symbols) < 2:
            raise AlphabetError(
                f"an alphabet needs at least two symbols, got {symbols}")

        object.__setattr__(
            self, '_positions', {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._positions

    def __str__(self) -> str:
        return ' '.join(self.symbols)

    @property
    def is_binary(self) -> bool:
        return len(self.symbols) == 2

    def index(self, symbol: str) -> int:
        """Position of the symbol in the alphabet order."""
        try:
            return self._positions[symbol]
        except KeyError:
            raise AlphabetError(
                f"symbol {symbol!r} is not in the alphabet {self.symbols}"
            ) from None

    def validate_word(self, w: Word) -> Word:
        """Returns w unchanged, raising if it uses a foreign symbol."""
        for s in w:
            if s not in self._positions:
                raise AlphabetError(
                    f"word {w!r} uses {s!r}, which is not in the alphabet "
                    f"{self.symbols}"
                )
        return w

    def sort_key(self, w: Word) -> Tuple[int, Tuple[int, ...]]:
        """Key for the length-then-lexicographic order on words."""
        return len(w), tuple(self._positions[s] for s in w)

    def sorted(self, words) -> List[Word]:
        """Sorts words in length-then-lexicographic order."""
        return sorted(words, key=self.sort_key)

    def words_of_length(self, n: int) -> Iterator[Word]:
        """Yields every word of length n in lexicographic order."""
        for letters in product(self.symbols, repeat=n):
            yield ''.join(letters)

    def words_up_to(self, n: int) -> Iterator[Word]:
        """Yields every word of length at most n, shortest first."""
        for length in range(n + 1):
            yield from self.words_of_length(length)


def subwords(w: Word) -> FrozenSet[Word]:
    """Returns the set of subsequences of w, including the empty word."""
    return frozenset(
        ''.join(letters)
        for r in range(len(w) + 1)
        for letters in combinations(w, r)
    )


def is_subword(x: Word, w: Word) -> bool:
    """True if x is a (scattered) subsequence of w."""
    letters = iter(w)
    return all(symbol in letters for symbol in x)


def is_factor(x: Word, w: Word) -> bool:
    """True if words u, v exist with w = uxv."""
    return x in w


def longest_border(w: Word) -> int:
    """Length of the longest proper border of w.

    Computed with the Knuth-Morris-Pratt failure function.
    """
    failure = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = failure[k - 1]
        if w[i] == w[k]:
            k += 1
        failure[i] = k
    return failure[-1] if w else 0


def is_overlapping_free(w: Word) -> bool:
    """True if w has no border of length between 1 and |w| - 1.

    Raises
    ------
    ValueError
        If w is the empty word.
    """
    if not w:
        raise ValueError("overlapping-freeness is defined for nonempty words")
    return longest_border(w) == 0


def make_overlapping_free(v: Word, alphabet: Alphabet) -> Word:
    """Returns the first u such that v·u is overlapping-free.

    Candidates are tried in length-then-lexicographic order, so the
    result is reproducible. The search first covers |u| <= |v| + 2 and
    widens the cap by 2 whenever it is exhausted.

    Parameters
    ----------
    v : str
        A nonempty word over the alphabet.
    alphabet : Alphabet
        The alphabet the extension is drawn from.

    Returns
    -------
    str
        The extension u, empty when v is already overlapping-free.
    """
    if not v:
        raise ValueError("cannot extend the empty word")
    alphabet.validate_word(v)

    if is_overlapping_free(v):
        return ''

    cap = len(v) + 2
    length = 1
    while True:
        while length <= cap:
            for u in alphabet.words_of_length(length):
                if longest_border(v + u) == 0:
                    return u
            length += 1
        cap += 2
        log.debug("widening overlapping-free search for %r to %d", v, cap)


def _require_binary(alphabet: Alphabet) -> None:
    if not alphabet.is_binary:
        raise AlphabetError(
            f"operation needs a binary alphabet, got {alphabet.symbols}")


def to_bits(w: Word, alphabet: Alphabet) -> np.ndarray:
    """The binary word as a uint8 vector (first symbol is 0)."""
    _require_binary(alphabet)
    return np.array([alphabet.index(s) for s in w], dtype=np.uint8)


def from_bits(bits: np.ndarray, alphabet: Alphabet) -> Word:
    """Inverse of to_bits."""
    return ''.join(alphabet.symbols[int(b)] for b in bits)


def ones_count(w: Word, alphabet: Alphabet) -> int:
    """|w|_1, the number of occurrences of the second symbol."""
    return int(to_bits(w, alphabet).sum())


def complement_word(w: Word, alphabet: Alphabet) -> Word:
    """Flips every letter of a binary word."""
    return from_bits(to_bits(w, alphabet) ^ 1, alphabet)


def xor_words(w: Word, other: Word, alphabet: Alphabet) -> Word:
    """Letterwise addition modulo 2 of two binary words of equal length."""
    if len(w) != len(other):
        raise ValueError(
            f"xor needs words of equal length, got {w!r} and {other!r}")
    return from_bits(
        np.bitwise_xor(to_bits(w, alphabet), to_bits(other, alphabet)),
        alphabet,
    )
