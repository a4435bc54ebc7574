"""
Unique decipherability, Bernoulli measures and maximality of codes.

Finite sets are tested with a shortest-path form of the
Sardinas-Patterson test that also returns a shortest ambiguous word.
Regular sets are tested on the automaton, where every residual set of
the test is a union of right languages of states.
"""
import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from typing import Dict, FrozenSet, Mapping, Optional, Tuple, Union

from codedit.errors import EmptyWordError, NotACodeError
from codedit.langs import FiniteLang, RegularLang, as_regular, is_complete
from codedit.words import Alphabet, Word

log = getLogger(__name__)

Factorization = Tuple[Word, ...]


@dataclass(frozen=True)
class CodeReport:
    """Outcome of a unique decipherability test.

    ``counterexample`` holds two distinct factorizations over X of one
    word when X is not a code, and is None otherwise.
    """

    is_code: bool
    counterexample: Optional[Tuple[Factorization, Factorization]] = None

    def __post_init__(self):
        if self.is_code != (self.counterexample is None):
            raise ValueError(
                "a counterexample is given exactly when the set is not a code")

    def __bool__(self) -> bool:
        return self.is_code

    @property
    def word(self) -> Optional[Word]:
        """The ambiguous word, when there is one."""
        if self.counterexample is None:
            return None
        return ''.join(self.counterexample[0])


def _reject_empty_word(X: FiniteLang) -> None:
    if '' in X:
        raise EmptyWordError("the empty word cannot belong to a code")


def is_code(X: FiniteLang) -> CodeReport:
    """Tests whether the finite set X is a code.

    Runs the Sardinas-Patterson test as a shortest-path search. A node
    is the dangling suffix by which one partial factorization overhangs
    the other, and its cost is the length of the longer side. Dijkstra's
    order therefore reaches the empty suffix through a shortest
    ambiguous word.

    Parameters
    ----------
    X : FiniteLang
        The candidate code.

    Returns
    -------
    CodeReport
        With two factorizations of a shortest ambiguous word when X is
        not a code.

    Raises
    ------
    EmptyWordError
        If the empty word belongs to X.
    """
    _reject_empty_word(X)
    words = X.sorted()

    cost: Dict[Word, int] = {}
    parent: Dict[Word, tuple] = {}
    heap = []
    for x in words:
        for y in words:
            if x != y and y.startswith(x):
                d = y[len(x):]
                if d not in cost or len(y) < cost[d]:
                    cost[d] = len(y)
                    parent[d] = ('start', x, y)
                    heapq.heappush(heap, (len(y), d))

    settled = set()
    while heap:
        c, d = heapq.heappop(heap)
        if d in settled or c > cost[d]:
            continue
        settled.add(d)
        if d == '':
            break

        for z in words:
            if z.startswith(d):
                e, new_cost = z[len(d):], c + len(z) - len(d)
            elif d.startswith(z):
                e, new_cost = d[len(z):], c
            else:
                continue
            if e not in cost or new_cost < cost[e]:
                cost[e] = new_cost
                parent[e] = ('step', d, z)
                heapq.heappush(heap, (new_cost, e))

    log.debug("dangling suffixes settled for %d words: %d",
              len(words), len(settled))

    if '' not in settled:
        return CodeReport(True)

    return CodeReport(False, _factorizations(parent))


def _factorizations(parent) -> Tuple[Factorization, Factorization]:
    """Replays the parent chain ending at the empty suffix."""
    steps = []
    node = ''
    while parent[node][0] == 'step':
        _, node, z = parent[node]
        steps.append(z)
    _, x, y = parent[node]

    longer, shorter = [y], [x]
    for z in reversed(steps):
        shorter.append(z)
        if sum(map(len, shorter)) > sum(map(len, longer)):
            longer, shorter = shorter, longer

    return tuple(longer), tuple(shorter)


def _pair_targets(
        L: RegularLang,
        start: Tuple[int, int],
        include_start: bool,
        ) -> FrozenSet[int]:
    """Second components of pairs reachable from start whose first is final."""
    seen = set()
    queue = deque()
    if include_start:
        seen.add(start)
        queue.append(start)
    else:
        for i in range(len(L.alphabet)):
            pair = (L.delta[start[0]][i], L.delta[start[1]][i])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)

    while queue:
        p, q = queue.popleft()
        for i in range(len(L.alphabet)):
            pair = (L.delta[p][i], L.delta[q][i])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)

    return frozenset(q for p, q in seen if p in L.finals)


def is_code_regular(X: Union[FiniteLang, RegularLang]) -> bool:
    """Tests whether the regular set X is a code.

    Each residual set U_n of the Sardinas-Patterson sequence is kept as
    a set S of automaton states standing for the union of their right
    languages, plus a flag removing the empty word from U_1 = X⁻¹X.
    The sequence of sets is eventually periodic, so it is followed
    until it repeats, empties, or contains the empty word.

    Raises
    ------
    EmptyWordError
        If the empty word belongs to X.
    """
    L = as_regular(X).minimize()
    if L.initial in L.finals:
        raise EmptyWordError("the empty word cannot belong to a code")

    useful = L.coaccessible_states()
    current = (L.finals & useful, True)
    seen = set()
    rounds = 0

    while current[0] and current not in seen:
        states, drop_empty = current
        if not drop_empty and states & L.finals:
            log.debug("empty word reached after %d residual rounds", rounds)
            return False

        seen.add(current)
        following = set()
        for s in states:
            # X⁻¹ L_s: what is left of L_s after reading a word of X.
            following |= _pair_targets(L, (L.initial, s), True)
            # L_s⁻¹ X: what is left of X after reading a nonempty word of L_s.
            following |= _pair_targets(L, (s, L.initial), False)

        current = (frozenset(following) & useful, False)
        rounds += 1

    log.debug("no empty word after %d residual rounds", rounds)
    return True


@dataclass(frozen=True)
class BernoulliDist:
    """A positive Bernoulli distribution on the letters of an alphabet."""

    alphabet: Alphabet
    weights: Mapping[str, Fraction]

    def __post_init__(self):
        weights = {s: Fraction(w) for s, w in self.weights.items()}
        if set(weights) != set(self.alphabet.symbols):
            raise ValueError(
                f"weights must cover exactly {self.alphabet.symbols}, "
                f"got {sorted(weights)}"
            )
        if any(w <= 0 for w in weights.values()):
            raise ValueError(f"weights must be positive, got {weights}")
        if sum(weights.values()) != 1:
            raise ValueError(
                f"weights must sum to 1, got {sum(weights.values())}")
        object.__setattr__(self, 'weights', weights)

    def __hash__(self):
        return hash((self.alphabet, tuple(sorted(self.weights.items()))))

    @classmethod
    def uniform(cls, alphabet: Alphabet) -> 'BernoulliDist':
        """Every letter gets weight 1/|A|."""
        w = Fraction(1, len(alphabet))
        return cls(alphabet, {s: w for s in alphabet})

    @classmethod
    def from_weights(cls, alphabet: Alphabet, weights) -> 'BernoulliDist':
        """Accepts weights as a mapping or as a sequence in alphabet order.

        Strings such as ``'1/3'`` are parsed as fractions.
        """
        if not isinstance(weights, Mapping):
            weights = dict(zip(alphabet.symbols, weights))
        return cls(alphabet, {s: Fraction(w) for s, w in weights.items()})


def word_measure(w: Word, dist: BernoulliDist) -> Fraction:
    """The product of the letter weights of w."""
    measure = Fraction(1)
    for symbol in w:
        measure *= dist.weights[symbol]
    return measure


def bernoulli_measure(
        X: FiniteLang,
        dist: Optional[BernoulliDist] = None,
        ) -> Fraction:
    """The exact measure of a finite set of words.

    Parameters
    ----------
    X : FiniteLang
    dist : BernoulliDist, defaults to uniform
        The letter distribution.

    Returns
    -------
    Fraction
    """
    if dist is None:
        dist = BernoulliDist.uniform(X.alphabet)
    elif dist.alphabet != X.alphabet:
        raise ValueError(
            f"distribution alphabet {dist.alphabet.symbols} does not match "
            f"{X.alphabet.symbols}"
        )
    return sum((word_measure(w, dist) for w in X.words), Fraction(0))


def is_complete_by_measure(
        X: FiniteLang,
        dist: Optional[BernoulliDist] = None,
        ) -> bool:
    """Decides completeness of a finite code by its measure being 1.

    Raises
    ------
    NotACodeError
        If X is not a code.
    """
    if not is_code(X):
        raise NotACodeError(f"{X} is not a code")
    return bernoulli_measure(X, dist) == 1


def is_maximal_code(X: Union[FiniteLang, RegularLang]) -> bool:
    """Decides maximality of a regular code, which is its completeness.

    Raises
    ------
    NotACodeError
        If X is not a code.
    """
    if not is_code_regular(X):
        raise NotACodeError("input is not a code")
    return is_complete(X)
