"""
Independence and closedness of sets of words under edit relations, and
the one-word extension of non-complete independent codes.

A set X is independent under a relation τ when τ(X) ∩ X = ∅, and closed
under τ when τ(X) ⊆ X.
"""
from collections import deque
from dataclasses import dataclass
from logging import getLogger
from typing import List, Optional, Tuple, Union

import numpy as np

from codedit._validation import _handle_limit, _require_kind
from codedit.codes import is_code, is_code_regular
from codedit.edit import (
    EditRelation, image_words, levenshtein_matrix, related,
)
from codedit.enums import EditKind
from codedit.errors import (
    CompleteLanguageError, NotACodeError, PreconditionError,
    VerificationError,
)
from codedit.langs import (
    FiniteLang, RegularLang, as_regular, factor_language, is_complete,
    shortest_external_witness, star,
)
from codedit.words import Word, is_overlapping_free, make_overlapping_free

log = getLogger(__name__)

Pair = Tuple[Word, Word]

# Relations for which a non-complete independent code can always be
# extended by one word.
EXTENDABLE_KINDS = frozenset({
    EditKind.delete,
    EditKind.insert,
    EditKind.substitute,
    EditKind.delete_upto,
    EditKind.insert_upto,
    EditKind.substitute_upto,
    EditKind.levenshtein_strict,
})

# Alignment moves allowed for each kind.
_MATCH, _SUBSTITUTE, _DELETE, _INSERT = 'match', 'sub', 'del', 'ins'

_MOVES = {
    EditKind.delete: (_MATCH, _DELETE),
    EditKind.delete_upto: (_MATCH, _DELETE),
    EditKind.insert: (_MATCH, _INSERT),
    EditKind.insert_upto: (_MATCH, _INSERT),
    EditKind.substitute: (_MATCH, _SUBSTITUTE),
    EditKind.substitute_upto: (_MATCH, _SUBSTITUTE),
    EditKind.levenshtein: (_MATCH, _SUBSTITUTE, _DELETE, _INSERT),
    EditKind.levenshtein_strict: (_MATCH, _SUBSTITUTE, _DELETE, _INSERT),
}


@dataclass(frozen=True)
class IndependenceReport:
    """Outcome of an independence test.

    ``violation`` is a pair (x, y) of words of X with y ∈ τ(x), given
    exactly when X is not independent.
    """

    independent: bool
    violation: Optional[Pair] = None

    def __post_init__(self):
        if self.independent != (self.violation is None):
            raise ValueError(
                "a violation is given exactly when the set is dependent")

    def __bool__(self) -> bool:
        return self.independent


def is_independent(X: FiniteLang, rel: EditRelation) -> IndependenceReport:
    """Tests τ(X) ∩ X = ∅ for a finite X.

    For Λ_k with k >= 2 every word is related to itself, so a nonempty X
    is dependent through the pair (x, x).

    Parameters
    ----------
    X : FiniteLang
    rel : EditRelation

    Returns
    -------
    IndependenceReport
        With the first violating pair in length-lex order of x, then y.
    """
    if not X.words:
        return IndependenceReport(True)

    if rel.kind is EditKind.levenshtein and rel.budget >= 2:
        x = X.sorted()[0]
        return IndependenceReport(False, (x, x))

    for x in X:
        hits = image_words(rel, x, X.alphabet) & X.words
        if hits:
            y = X.alphabet.sorted(hits)[0]
            return IndependenceReport(False, (x, y))

    return IndependenceReport(True)


def _counts_accepted(rel: EditRelation, count: int) -> bool:
    """Whether an alignment with count edits witnesses the relation."""
    k = rel.budget
    if rel.kind in (
            EditKind.delete, EditKind.insert, EditKind.substitute):
        return count == k
    if rel.kind is EditKind.levenshtein and k >= 2:
        return count <= k
    return 1 <= count <= k


def _feed(buffer, diff, side, letter):
    """Compares letters of x and y position by position.

    The buffer holds the letters of whichever word is ahead, tagged with
    its side.
    """
    if not letter:
        return buffer, diff
    if not buffer or buffer[0] == side:
        return (side,) + (buffer[1:] if buffer else ()) + (letter,), diff
    head = buffer[1]
    rest = buffer[2:]
    return ((buffer[0],) + rest if rest else ()), diff or head != letter


def _letter_pairs(move: str, symbols):
    """The (letter of x, letter of y) pairs read by a move."""
    if move == _MATCH:
        return [(a, a) for a in symbols]
    if move == _SUBSTITUTE:
        return [(a, b) for a in symbols for b in symbols if a != b]
    if move == _DELETE:
        return [(a, '') for a in symbols]
    return [('', b) for b in symbols]


def independence_witness_regular(
        X: Union[FiniteLang, RegularLang],
        rel: EditRelation,
        ) -> Optional[Pair]:
    """Finds x, y ∈ X with y ∈ rel(x), or returns None.

    Explores the pairing automaton whose states are (state after the
    x-prefix, state after the y-prefix, edits used). Each move reads a
    letter from x, from y, or from both, and every edit counts against
    the budget, so the search space is finite. For Λ̲_k the two words
    are also compared position by position so that x = y is excluded.

    Raises
    ------
    PreconditionError
        For a relation kind the pairing automaton does not support.
    """
    _require_kind(rel, frozenset(_MOVES), 'regular independence')
    L = as_regular(X).minimize()
    useful = L.coaccessible_states()
    if L.initial not in useful:
        return None

    symbols = L.alphabet.symbols
    strict = rel.kind is EditKind.levenshtein_strict
    moves = _MOVES[rel.kind]

    start = (L.initial, L.initial, 0, (), False)
    parent = {start: None}
    queue = deque([start])

    while queue:
        state = queue.popleft()
        p, q, count, buffer, diff = state
        if p in L.finals and q in L.finals and _counts_accepted(rel, count):
            if not strict or diff or buffer:
                return _rebuild(parent, state)

        for move in moves:
            if move != _MATCH and count == rel.budget:
                continue
            for xa, yb in _letter_pairs(move, symbols):
                p2 = L.delta[p][L.alphabet.index(xa)] if xa else p
                q2 = L.delta[q][L.alphabet.index(yb)] if yb else q
                if p2 not in useful or q2 not in useful:
                    continue

                buffer2, diff2 = buffer, diff
                if strict:
                    buffer2, diff2 = _feed(buffer2, diff2, 'x', xa)
                    buffer2, diff2 = _feed(buffer2, diff2, 'y', yb)
                target = (p2, q2, count + (move != _MATCH), buffer2, diff2)
                if target not in parent:
                    parent[target] = (state, xa, yb)
                    queue.append(target)

    log.debug("pairing automaton for %s explored %d states",
              rel.symbol, len(parent))
    return None


def _rebuild(parent, state) -> Pair:
    xs, ys = [], []
    while parent[state] is not None:
        state, xa, yb = parent[state]
        xs.append(xa)
        ys.append(yb)
    return ''.join(reversed(xs)), ''.join(reversed(ys))


def is_independent_regular(
        X: Union[FiniteLang, RegularLang], rel: EditRelation) -> bool:
    """Decides τ(X) ∩ X = ∅ for a regular X."""
    return independence_witness_regular(X, rel) is None


def closed_violation(X: FiniteLang, rel: EditRelation) -> Optional[Pair]:
    """A pair x ∈ X, y ∈ rel(x) with y ∉ X, or None if X is closed."""
    for x in X:
        escaped = image_words(rel, x, X.alphabet) - X.words
        if escaped:
            return x, X.alphabet.sorted(escaped)[0]
    return None


def is_closed(X: FiniteLang, rel: EditRelation) -> bool:
    """Tests τ(X) ⊆ X for a finite X.

    A nonempty finite set is never closed under a relation that can
    insert letters, as the longest word escapes.
    """
    if X.words and (rel.increases_length or rel.kind in (
            EditKind.levenshtein, EditKind.levenshtein_strict)):
        return False
    return closed_violation(X, rel) is None


def _require_independent_code(X: FiniteLang, rel: EditRelation) -> None:
    if not is_code(X):
        raise NotACodeError(f"{X} is not a code")
    report = is_independent(X, rel)
    if not report:
        x, y = report.violation
        raise PreconditionError(
            f"{X} is not {rel.symbol}-independent: {y!r} is in "
            f"{rel.symbol}({x!r})"
        )


def independent_extension_witness(X: FiniteLang, rel: EditRelation) -> Word:
    """A word y such that X ∪ {y} is still an independent code.

    y is built as w^(k+1)·u, where w is the shortest word outside
    F(X*) and u makes the word overlapping-free. Each of the k edits
    allowed by the relation can break at most one copy of w, so every
    word related to y keeps w as a factor and lies outside X.

    Parameters
    ----------
    X : FiniteLang
        A non-complete code that is independent under rel.
    rel : EditRelation
        Any kind but Λ_k.

    Returns
    -------
    str

    Raises
    ------
    CompleteLanguageError
        If X is complete.
    NotACodeError, PreconditionError
        If X is not an independent code or the relation is Λ_k.
    VerificationError
        If a guaranteed property of y does not hold.
    """
    _require_kind(rel, EXTENDABLE_KINDS, 'independent extension')
    _require_independent_code(X, rel)
    if is_complete(X):
        raise CompleteLanguageError("complete input")

    w = shortest_external_witness(X)
    v = w * (rel.budget + 1)
    y = v + make_overlapping_free(v, X.alphabet)
    log.debug("extension of %s under %s: w=%r, y=%r", X, rel.symbol, w, y)

    _verify_extension(X, rel, y)
    return y


def _verify_extension(X: FiniteLang, rel: EditRelation, y: Word) -> None:
    def fail(message):
        raise VerificationError(f"extension {y!r} of {X}: {message}")

    if factor_language(star(X)).accepts(y):
        fail("word is a factor of X*")
    if not is_overlapping_free(y):
        fail("word is not overlapping-free")

    extended = X.add(y)
    if not is_code(extended):
        fail("extended set is not a code")

    for tau in [rel] + rel.components():
        for x in X:
            if related(tau, y, x):
                fail(f"{x!r} is in {tau.symbol}(y)")
            if related(tau, x, y):
                fail(f"y is in {tau.symbol}({x!r})")

    if not is_independent(extended, rel):
        fail(f"extended set is not {rel.symbol}-independent")


def extend_independent(
        X: FiniteLang, rel: EditRelation, rounds: int = 1) -> List[Word]:
    """Adds extension words one at a time, up to ``rounds`` of them.

    Stops early once the set becomes complete. Whether the iteration
    reaches a maximal independent code is not known, so no number of
    rounds is implied to be enough.

    Returns
    -------
    list of str
        The added words, in order.
    """
    _handle_limit(rounds, 'rounds')
    added = []
    for _ in range(rounds):
        try:
            y = independent_extension_witness(X, rel)
        except CompleteLanguageError:
            break
        added.append(y)
        X = X.add(y)
    return added


def is_maximal_independent(
        X: Union[FiniteLang, RegularLang], rel: EditRelation) -> bool:
    """Decides maximality of an independent code by its completeness.

    Raises
    ------
    NotACodeError
        If X is not a code.
    PreconditionError
        If X is not independent under rel, or rel is Λ_k.
    """
    _require_kind(rel, EXTENDABLE_KINDS, 'maximal independence')
    if isinstance(X, FiniteLang):
        _require_independent_code(X, rel)
    else:
        if not is_code_regular(X):
            raise NotACodeError("input is not a code")
        pair = independence_witness_regular(X, rel)
        if pair is not None:
            raise PreconditionError(
                f"input is not {rel.symbol}-independent: {pair[1]!r} is in "
                f"{rel.symbol}({pair[0]!r})"
            )
    return is_complete(X)


def error_detection_margin(X: FiniteLang) -> int:
    """The largest k for which X is Λ̲_k-independent.

    This is the least edit distance between two distinct words of X,
    minus one.

    Raises
    ------
    PreconditionError
        If X has fewer than two words.
    """
    if len(X) < 2:
        raise PreconditionError(
            f"the margin needs at least two words, got {len(X)}")

    distances = levenshtein_matrix(X).to_numpy().astype(float)
    np.fill_diagonal(distances, np.inf)
    return int(distances.min()) - 1
