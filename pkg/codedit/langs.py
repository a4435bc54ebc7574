"""
Finite and regular language values, and the automaton algebra needed
for completeness testing.

A ``RegularLang`` is an immutable, total, deterministic automaton whose
states are numbered 0..n-1 in breadth-first discovery order from the
initial state (symbols taken in alphabet order). Every construction
below builds its result by crawling the reachable part of a product or
subset automaton and then minimizing it, so two minimized values denote
the same language exactly when their transition tables are equal.
"""
from collections import deque
from dataclasses import dataclass
from logging import getLogger
from typing import (
    Callable, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple,
    Union,
)

from codedit.errors import AlphabetError, CompleteLanguageError
from codedit.words import Alphabet, Word

log = getLogger(__name__)

# Marker state of the star construction: "between two factors".
_OMEGA = -1


@dataclass(frozen=True)
class FiniteLang:
    """An explicit finite set of words over an alphabet.

    Iteration follows the length-then-lexicographic order of the
    alphabet, so every listing of a FiniteLang is canonical.
    """

    alphabet: Alphabet
    words: FrozenSet[Word]

    def __post_init__(self):
        if isinstance(self.words, str):
            raise TypeError("words must be an iterable of words, not a str")
        words = frozenset(self.words)
        for w in words:
            self.alphabet.validate_word(w)
        object.__setattr__(self, 'words', words)

    @classmethod
    def from_words(cls, alphabet, words: Iterable[Word]) -> 'FiniteLang':
        """Builds a FiniteLang, accepting a plain string as alphabet."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        return cls(alphabet, frozenset(words))

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return w in self.words

    def __str__(self) -> str:
        return '{' + ', '.join(w or 'ε' for w in self) + '}'

    def sorted(self) -> List[Word]:
        return self.alphabet.sorted(self.words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    @property
    def lengths(self) -> List[int]:
        return sorted({len(w) for w in self.words})

    def _check(self, other: 'FiniteLang') -> None:
        if other.alphabet != self.alphabet:
            raise AlphabetError(
                f"alphabet {other.alphabet.symbols} must be "
                f"{self.alphabet.symbols}"
            )

    def __or__(self, other: 'FiniteLang') -> 'FiniteLang':
        self._check(other)
        return FiniteLang(self.alphabet, self.words | other.words)

    def __and__(self, other: 'FiniteLang') -> 'FiniteLang':
        self._check(other)
        return FiniteLang(self.alphabet, self.words & other.words)

    def __sub__(self, other: 'FiniteLang') -> 'FiniteLang':
        self._check(other)
        return FiniteLang(self.alphabet, self.words - other.words)

    def __le__(self, other: 'FiniteLang') -> bool:
        self._check(other)
        return self.words <= other.words

    def add(self, *words: Word) -> 'FiniteLang':
        """Returns a new FiniteLang with the given words added."""
        return FiniteLang(self.alphabet, self.words | frozenset(words))


@dataclass(frozen=True)
class RegularLang:
    """A total deterministic finite automaton.

    Attributes
    ----------
    alphabet : Alphabet
    delta : tuple of tuple of int
        ``delta[state][i]`` is the target of ``state`` on the i-th symbol.
    initial : int
    finals : frozenset of int
    """

    alphabet: Alphabet
    delta: Tuple[Tuple[int, ...], ...]
    initial: int
    finals: FrozenSet[int]

    def __post_init__(self):
        delta = tuple(tuple(row) for row in self.delta)
        object.__setattr__(self, 'delta', delta)
        object.__setattr__(self, 'finals', frozenset(self.finals))

        n = len(delta)
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} not in 0..{n - 1}")
        if not all(0 <= f < n for f in self.finals):
            raise ValueError(f"final states {set(self.finals)} not in 0..{n - 1}")
        for state, row in enumerate(delta):
            if len(row) != len(self.alphabet):
                raise ValueError(
                    f"state {state} has {len(row)} transitions, "
                    f"expected {len(self.alphabet)}"
                )
            if not all(0 <= t < n for t in row):
                raise ValueError(f"state {state} jumps outside 0..{n - 1}")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def run(self, w: Word, state: Optional[int] = None) -> int:
        """The state reached by reading w."""
        state = self.initial if state is None else state
        for symbol in w:
            state = self.delta[state][self.alphabet.index(symbol)]
        return state

    def accepts(self, w: Word) -> bool:
        return self.run(w) in self.finals

    def reachable_states(self) -> FrozenSet[int]:
        seen = {self.initial}
        stack = [self.initial]
        while stack:
            for t in self.delta[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def coaccessible_states(self) -> FrozenSet[int]:
        """States from which some final state can be reached."""
        predecessors = [set() for _ in self.delta]
        for state, row in enumerate(self.delta):
            for t in row:
                predecessors[t].add(state)

        seen = set(self.finals)
        stack = list(self.finals)
        while stack:
            for p in predecessors[stack.pop()]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return frozenset(seen)

    def is_empty(self) -> bool:
        return self.initial not in self.coaccessible_states()

    def shortest_word(self) -> Optional[Word]:
        """The length-then-lex smallest accepted word, or None.

        Breadth-first search taking symbols in alphabet order discovers
        states in the order of their smallest access words, so the first
        final state found carries the answer.
        """
        if self.initial in self.finals:
            return ''

        parent = {self.initial: None}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for i, symbol in enumerate(self.alphabet.symbols):
                target = self.delta[state][i]
                if target in parent:
                    continue
                parent[target] = (state, symbol)
                if target in self.finals:
                    return _spell(parent, target)
                queue.append(target)

        return None

    def words(self, max_length: int) -> Iterator[Word]:
        """Yields the accepted words of length <= max_length in order."""
        useful = self.coaccessible_states()
        level = [('', self.initial)] if self.initial in useful else []
        for length in range(max_length + 1):
            for w, state in level:
                if state in self.finals:
                    yield w
            if length == max_length:
                break
            level = [
                (w + symbol, self.delta[state][i])
                for w, state in level
                for i, symbol in enumerate(self.alphabet.symbols)
                if self.delta[state][i] in useful
            ]

    def minimize(self) -> 'RegularLang':
        """The minimal automaton, renumbered in discovery order.

        Uses Moore's partition refinement: states start split by
        finality and are split by their transition signatures until the
        number of blocks stops growing.
        """
        n = self.n_states
        block = [1 if s in self.finals else 0 for s in range(n)]
        n_blocks = len(set(block))

        while True:
            ids = {}
            refined = [
                ids.setdefault(
                    (block[s],) + tuple(block[t] for t in self.delta[s]),
                    len(ids),
                )
                for s in range(n)
            ]
            if len(ids) == n_blocks:
                break
            block, n_blocks = refined, len(ids)

        representative = {}
        for s in range(n):
            representative.setdefault(block[s], s)

        return _crawl(
            self.alphabet,
            block[self.initial],
            lambda b: representative[b] in self.finals,
            lambda b, i: block[self.delta[representative[b]][i]],
        )

    def equivalent(self, other: 'RegularLang') -> bool:
        """True if both automata accept the same language."""
        if other.alphabet != self.alphabet:
            return False
        a, b = self.minimize(), other.minimize()
        return a.delta == b.delta and a.finals == b.finals

    def to_dot(self, name: str = 'L') -> str:
        """Renders the automaton in Graphviz DOT format."""
        lines = [
            f'digraph "{name}" {{',
            '  rankdir=LR;',
            '  __start [shape=point];',
        ]
        for state in range(self.n_states):
            shape = 'doublecircle' if state in self.finals else 'circle'
            lines.append(f'  {state} [shape={shape}];')
        lines.append(f'  __start -> {self.initial};')

        for state, row in enumerate(self.delta):
            labels = {}
            for symbol, target in zip(self.alphabet.symbols, row):
                labels.setdefault(target, []).append(symbol)
            for target, symbols in labels.items():
                lines.append(
                    f'  {state} -> {target} [label="{",".join(symbols)}"];')

        lines.append('}')
        return '\n'.join(lines)


def _spell(parent, state) -> Word:
    """Reads back the word leading to state from BFS parent pointers."""
    letters = []
    while parent[state] is not None:
        state, symbol = parent[state]
        letters.append(symbol)
    return ''.join(reversed(letters))


def _crawl(
        alphabet: Alphabet,
        initial: Hashable,
        final: Callable[[Hashable], bool],
        follow: Callable[[Hashable, int], Hashable],
        ) -> RegularLang:
    """Maps out the reachable part of an implicitly given automaton.

    States are any hashable values; ``follow(state, i)`` gives the
    successor on the i-th symbol. The result is numbered in discovery
    order but is not minimized.
    """
    states = [initial]
    index = {initial: 0}
    finals = set()
    delta = []

    i = 0
    while i < len(states):
        state = states[i]
        if final(state):
            finals.add(i)

        row = []
        for symbol_index in range(len(alphabet)):
            target = follow(state, symbol_index)
            if target not in index:
                index[target] = len(states)
                states.append(target)
            row.append(index[target])
        delta.append(tuple(row))
        i += 1

    return RegularLang(alphabet, tuple(delta), 0, frozenset(finals))


def empty_language(alphabet: Alphabet) -> RegularLang:
    """Accepts nothing, not even the empty word."""
    return RegularLang(alphabet, ((0,) * len(alphabet),), 0, frozenset())


def epsilon_language(alphabet: Alphabet) -> RegularLang:
    """Accepts the empty word only."""
    return RegularLang(
        alphabet,
        ((1,) * len(alphabet), (1,) * len(alphabet)),
        0,
        frozenset({0}),
    )


def universal_language(alphabet: Alphabet) -> RegularLang:
    """Accepts A*."""
    return RegularLang(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}))


def from_finite(X: FiniteLang) -> RegularLang:
    """The minimal automaton accepting exactly the words of X.

    States of the crawl are the sets of suffixes still to be read, so
    the crawl already builds the residual automaton of X.
    """
    symbols = X.alphabet.symbols

    def follow(suffixes, i):
        return frozenset(
            w[1:] for w in suffixes if w and w[0] == symbols[i])

    return _crawl(
        X.alphabet, frozenset(X.words), lambda s: '' in s, follow,
    ).minimize()


def word_language(alphabet: Alphabet, y: Word) -> RegularLang:
    """Accepts the single word y."""
    return from_finite(FiniteLang(alphabet, frozenset({y})))


def words_containing(alphabet: Alphabet, y: Word) -> RegularLang:
    """Accepts A*yA*, the words having y as a factor.

    States count the longest prefix of y matched so far; a complete
    match is absorbing.
    """
    alphabet.validate_word(y)
    symbols = alphabet.symbols

    def follow(matched, i):
        if matched == len(y):
            return matched
        text = y[:matched] + symbols[i]
        while text and not y.startswith(text):
            text = text[1:]
        return len(text)

    return _crawl(
        alphabet, 0, lambda matched: matched == len(y), follow,
    ).minimize()


def as_regular(X: Union[FiniteLang, RegularLang]) -> RegularLang:
    """Accepts either language value and returns an automaton."""
    if isinstance(X, RegularLang):
        return X
    if isinstance(X, FiniteLang):
        return from_finite(X)
    raise TypeError(f"expected FiniteLang or RegularLang, got {type(X)}")


def _check_alphabets(L: RegularLang, M: RegularLang) -> None:
    if L.alphabet != M.alphabet:
        raise AlphabetError(
            f"alphabet {M.alphabet.symbols} must be {L.alphabet.symbols}")


def _product(L, M, accept: Callable[[bool, bool], bool]) -> RegularLang:
    L, M = as_regular(L), as_regular(M)
    _check_alphabets(L, M)
    return _crawl(
        L.alphabet,
        (L.initial, M.initial),
        lambda s: accept(s[0] in L.finals, s[1] in M.finals),
        lambda s, i: (L.delta[s[0]][i], M.delta[s[1]][i]),
    ).minimize()


def union(L, M) -> RegularLang:
    return _product(L, M, lambda x, y: x or y)


def intersection(L, M) -> RegularLang:
    return _product(L, M, lambda x, y: x and y)


def difference(L, M) -> RegularLang:
    return _product(L, M, lambda x, y: x and not y)


def complement(L) -> RegularLang:
    """A* minus L; exact because the automaton is total."""
    L = as_regular(L)
    finals = frozenset(range(L.n_states)) - L.finals
    return RegularLang(L.alphabet, L.delta, L.initial, finals).minimize()


def concat(L, M) -> RegularLang:
    """The concatenation L·M, by subset construction.

    A subset state holds tagged states: ``(0, p)`` while reading the L
    part and ``(1, q)`` once the M part has started.
    """
    L, M = as_regular(L), as_regular(M)
    _check_alphabets(L, M)

    initial = {(0, L.initial)}
    if L.initial in L.finals:
        initial.add((1, M.initial))

    def follow(current, i):
        following = set()
        for side, state in current:
            if side == 0:
                target = L.delta[state][i]
                following.add((0, target))
                if target in L.finals:
                    following.add((1, M.initial))
            else:
                following.add((1, M.delta[state][i]))
        return frozenset(following)

    def final(current):
        return any(side == 1 and state in M.finals for side, state in current)

    return _crawl(L.alphabet, frozenset(initial), final, follow).minimize()


def star(L) -> RegularLang:
    """The submonoid L*, which always contains the empty word.

    Uses a marker state that is the only accepting one and behaves like
    the initial state of L. Looping the final states straight back to
    the initial state would be wrong for languages like (b*ab)*.
    """
    L = as_regular(L)

    def follow(current, i):
        following = set()
        for state in current:
            if state == _OMEGA:
                state = L.initial
            target = L.delta[state][i]
            following.add(target)
            if target in L.finals:
                following.add(_OMEGA)
        return frozenset(following)

    return _crawl(
        L.alphabet, frozenset({_OMEGA}), lambda s: _OMEGA in s, follow,
    ).minimize()


def plus(L) -> RegularLang:
    """L+ = L·L*."""
    return concat(L, star(L))


def factor_language(L) -> RegularLang:
    """F(L), the words occurring as a factor of some word of L.

    A word is a factor exactly when it labels a path between two useful
    states (reachable and co-reachable). The subset crawl starts from all
    useful states at once and drops every state that can no longer
    reach acceptance.
    """
    L = as_regular(L)
    useful = L.reachable_states() & L.coaccessible_states()

    def follow(current, i):
        return frozenset(
            target for target in (L.delta[s][i] for s in current)
            if target in useful
        )

    return _crawl(
        L.alphabet, frozenset(useful), lambda s: bool(s), follow,
    ).minimize()


def is_complete(X) -> bool:
    """True if every word of A* is a factor of some word of X*."""
    return complement(factor_language(star(X))).is_empty()


def shortest_external_witness(X) -> Word:
    """The length-then-lex smallest word that is not a factor of X*.

    Raises
    ------
    CompleteLanguageError
        If X is complete, so no such word exists.
    """
    external = complement(factor_language(star(X)))
    w = external.shortest_word()
    if w is None:
        raise CompleteLanguageError("language complete")
    log.debug("shortest word outside F(X*): %r", w)
    return w
