"""
Closed codes: completion of regular codes, and the structure of codes
closed under deletion and substitution relations.

A set X is closed under a relation τ when τ(X) ⊆ X. This module finds
and classifies the codes that are closed under δ_k, σ_k, Σ_k or Λ_k,
and shows why no code is closed under ι_k, I_k or Δ_k.
"""
from dataclasses import dataclass, field
from logging import getLogger
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

from codedit._validation import _handle_budget, _require_kind
from codedit.codes import bernoulli_measure, is_code, is_code_regular
from codedit.config import MAX_ADMISSIBLE_WORDS, MAX_SEARCH_NODES
from codedit.edit import EditRelation, closure_brute, related
from codedit.enums import ClosedShape, EditKind, Parity
from codedit.errors import (
    CompleteLanguageError, NotACodeError, PreconditionError,
    SearchGuardError, VerificationError,
)
from codedit.indep import closed_violation, is_closed
from codedit.langs import (
    FiniteLang, RegularLang, as_regular, complement, concat, difference,
    is_complete, shortest_external_witness, star, union, word_language,
    words_containing,
)
from codedit.words import Alphabet, Word, make_overlapping_free, ones_count

log = getLogger(__name__)

Pair = Tuple[Word, Word]
Factorization = Tuple[Word, ...]


@dataclass(frozen=True)
class ConditionD:
    """The three conditions under which σ_k-closed parity classes exist.

    Attributes
    ----------
    k_even : bool
    binary_alphabet : bool
    exceeds_k : bool
        Some word of X is longer than k.
    """

    k_even: bool
    binary_alphabet: bool
    exceeds_k: bool

    @property
    def holds(self) -> bool:
        return self.k_even and self.binary_alphabet and self.exceeds_k


def condition_d(X: FiniteLang, k: int) -> ConditionD:
    k = _handle_budget(k)
    return ConditionD(
        k_even=k % 2 == 0,
        binary_alphabet=X.alphabet.is_binary,
        exceeds_k=X.max_length > k,
    )


@dataclass(frozen=True)
class ClosedCodeClassification:
    """Structural shape of a closed code.

    ``short_words`` means every word has length at most k,
    ``uniform_full`` is A^n, ``parity_half`` is one of the two parity
    classes of A^n, and ``not_closed_code`` carries the reason and, when
    there is one, the escaping pair (x, y).
    """

    shape: ClosedShape
    length: Optional[int] = None
    parity: Optional[Parity] = None
    reason: Optional[str] = None
    violation: Optional[Pair] = None

    def describe(self) -> str:
        if self.shape is ClosedShape.uniform_full:
            return f"UniformFull({self.length})"
        if self.shape is ClosedShape.parity_half:
            return f"ParityHalf({self.length}, {self.parity.name})"
        if self.shape is ClosedShape.short_words:
            return "ShortWords"
        return f"NotClosedCode({self.reason})"


def _not_closed(reason: str, violation: Optional[Pair] = None):
    return ClosedCodeClassification(
        ClosedShape.not_closed_code, reason=reason, violation=violation)


def _is_full_cube(X: FiniteLang) -> Optional[int]:
    """n if X = A^n, else None."""
    lengths = X.lengths
    if len(lengths) != 1:
        return None
    n = lengths[0]
    return n if len(X) == len(X.alphabet) ** n else None


# Completion of regular codes

def completion_word(X: Union[FiniteLang, RegularLang]) -> Word:
    """An overlapping-free word y outside F(X*).

    y = w·w·u where w is the shortest word outside F(X*) and u the
    first extension making ww overlapping-free.

    Raises
    ------
    CompleteLanguageError
        If X is complete.
    """
    L = as_regular(X)
    w = shortest_external_witness(L)
    v = w * 2
    return v + make_overlapping_free(v, L.alphabet)


def er_completion(X: Union[FiniteLang, RegularLang]) -> RegularLang:
    """Embeds a non-complete regular code into a complete one.

    Returns Y = X ∪ y(Uy)* where y = completion_word(X) and
    U = A* ∖ (X* ∪ A*yA*). The result is checked to contain X, to be a
    code and to be complete before it is returned.

    Parameters
    ----------
    X : FiniteLang or RegularLang
        A code that is not complete.

    Returns
    -------
    RegularLang
        The minimal automaton of Y.

    Raises
    ------
    NotACodeError
        If X is not a code.
    CompleteLanguageError
        If X is already complete.
    VerificationError
        If Y fails one of its checks.
    """
    L = as_regular(X)
    if not is_code_regular(L):
        raise NotACodeError("not a code")
    if is_complete(L):
        raise CompleteLanguageError("already complete")

    y = completion_word(L)
    y_lang = word_language(L.alphabet, y)
    U = complement(union(star(L), words_containing(L.alphabet, y)))
    Y = union(L, concat(y_lang, star(concat(U, y_lang))))
    log.debug("completion word %r, Y has %d states", y, Y.n_states)

    if not difference(L, Y).is_empty():
        raise VerificationError("completion does not contain the input")
    if not is_code_regular(Y):
        raise VerificationError(f"completion with y={y!r} is not a code")
    if not is_complete(Y):
        raise VerificationError(f"completion with y={y!r} is not complete")

    return Y


def render_completion(X: Union[FiniteLang, RegularLang], y: Word) -> str:
    """The completion as a regular expression over X, y and U."""
    if isinstance(X, FiniteLang):
        members = '{' + ', '.join(X.sorted()) + '}'
    else:
        members = f"<automaton with {X.n_states} states>"
    return (
        f"X ∪ {y}(U{y})*  where  X = {members},  "
        f"U = A* ∖ (X* ∪ A*{y}A*)"
    )


# Backtracking search for closed codes

def _closed_code_search(
        alphabet: Alphabet,
        candidates: List[Word],
        generators: Dict[Word, Optional[FrozenSet[Word]]],
        required: FrozenSet[Word],
        max_nodes: int,
        ) -> Iterator[FiniteLang]:
    """Yields every nonempty code that is a union of generator closures.

    Each candidate word is either included, with its whole closure, or
    excluded, in length-lex order. A branch dies when an inclusion
    brings back an excluded word or destroys the code property, which
    no later inclusion can repair. Each resulting set is yielded once.
    """
    current = frozenset()
    for w in required:
        closure = generators.get(w)
        if closure is None:
            return
        current |= closure
    if current and not is_code(FiniteLang(alphabet, current)):
        return

    nodes = 0

    def search(i, included, excluded):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchGuardError(
                'search nodes', max_nodes,
                f"closed-code search over {len(candidates)} words",
            )

        while i < len(candidates) and (
                candidates[i] in included or candidates[i] in excluded):
            i += 1
        if i == len(candidates):
            if included:
                yield FiniteLang(alphabet, included)
            return

        w = candidates[i]
        closure = generators[w]
        if closure is not None and not closure & excluded:
            grown = included | closure
            if is_code(FiniteLang(alphabet, grown)):
                yield from search(i + 1, grown, excluded)
        yield from search(i + 1, included, excluded | {w})

    yield from search(0, current, frozenset())
    log.debug("closed-code search visited %d nodes", nodes)


def _check_pool(candidates: List[Word], max_words: int) -> None:
    if len(candidates) > max_words:
        raise SearchGuardError(
            'admissible words', max_words,
            f"{len(candidates)} candidate words",
        )


def delta_closed_length_bound(k: int) -> List[int]:
    """The lengths a word of a δ_k-closed code can have.

    These are 1..k²-k-1 without k, and there are none for k = 1.
    """
    k = _handle_budget(k)
    return [n for n in range(1, k * k - k) if n != k]


def _delta_generators(
        alphabet: Alphabet, k: int,
        ) -> Tuple[List[Word], Dict[Word, Optional[FrozenSet[Word]]]]:
    lengths = set(delta_closed_length_bound(k))
    candidates = alphabet.sorted(
        w for n in lengths for w in alphabet.words_of_length(n))

    relation = EditRelation(EditKind.delete, k)
    generators = {}
    for w in candidates:
        closure = closure_brute(
            relation, FiniteLang(alphabet, frozenset({w}))).language.words
        if all(len(v) in lengths for v in closure):
            generators[w] = closure
        else:
            generators[w] = None
    return candidates, generators


def _validate_delta_closed(X: FiniteLang, k: int) -> FiniteLang:
    lengths = set(delta_closed_length_bound(k))
    if not is_code(X):
        raise VerificationError(f"search produced {X}, which is not a code")
    if not is_closed(X, EditRelation(EditKind.delete, k)):
        raise VerificationError(f"search produced {X}, which is not closed")
    if any(len(w) not in lengths for w in X.words):
        raise VerificationError(
            f"search produced {X}, with lengths outside {sorted(lengths)}")
    return X


def enumerate_delta_closed_codes(
        alphabet: Alphabet,
        k: int,
        max_words: int = MAX_ADMISSIBLE_WORDS,
        max_nodes: int = MAX_SEARCH_NODES,
        ) -> Iterator[FiniteLang]:
    """Yields every δ_k-closed code over the alphabet.

    Every such code only has words of the lengths given by
    delta_closed_length_bound, so the search is finite. Each yielded
    code is checked again before it is handed out.

    Parameters
    ----------
    alphabet : Alphabet
    k : int
    max_words : int, default MAX_ADMISSIBLE_WORDS
        The largest number of candidate words searched.
    max_nodes : int, default MAX_SEARCH_NODES
        The largest number of search nodes visited.

    Yields
    ------
    FiniteLang

    Raises
    ------
    SearchGuardError
        When either limit is exceeded.
    """
    k = _handle_budget(k)
    candidates, generators = _delta_generators(alphabet, k)
    _check_pool(candidates, max_words)

    for X in _closed_code_search(
            alphabet, candidates, generators, frozenset(), max_nodes):
        yield _validate_delta_closed(X, k)


def embed_delta_closed(
        X: FiniteLang,
        k: int,
        max_words: int = MAX_ADMISSIBLE_WORDS,
        max_nodes: int = MAX_SEARCH_NODES,
        ) -> List[FiniteLang]:
    """All complete δ_k-closed codes that contain X.

    Completeness of the finite candidates is decided by a uniform
    measure of 1.

    Raises
    ------
    NotACodeError
        If X is not a code.
    PreconditionError
        If X is not δ_k-closed.
    """
    k = _handle_budget(k)
    relation = EditRelation(EditKind.delete, k)
    if not is_code(X):
        raise NotACodeError(f"{X} is not a code")
    violation = closed_violation(X, relation)
    if violation is not None:
        raise PreconditionError(
            f"{X} is not {relation.symbol}-closed: {violation[1]!r} is in "
            f"{relation.symbol}({violation[0]!r})"
        )

    lengths = set(delta_closed_length_bound(k))
    if any(len(w) not in lengths for w in X.words):
        return []

    candidates, generators = _delta_generators(X.alphabet, k)
    _check_pool(candidates, max_words)

    return [
        _validate_delta_closed(Y, k)
        for Y in _closed_code_search(
            X.alphabet, candidates, generators, X.words, max_nodes)
        if bernoulli_measure(Y) == 1
    ]


# Relations without closed codes

NO_CLOSED_CODE_KINDS = frozenset({
    EditKind.insert, EditKind.insert_upto, EditKind.delete_upto,
    EditKind.delete,
})


@dataclass(frozen=True)
class NoClosedCodeWitness:
    """Evidence that no code containing ``source`` is closed under rel.

    ``chain`` runs from ``source`` to ``witness``, each word being in
    the image of the one before. A closed set holding ``source`` would
    hold ``witness``, which ``factorizations`` writes in two ways over
    the set, or which is the empty word.
    """

    relation: EditRelation
    source: Word
    witness: Word
    chain: Tuple[Word, ...]
    factorizations: Optional[Tuple[Factorization, Factorization]] = None
    reason: str = field(default='', compare=False)


def assert_no_closed_code(
        X: FiniteLang, rel: EditRelation) -> NoClosedCodeWitness:
    """Shows why the code X cannot be closed under rel.

    Under ι_k and I_k, the word x^(k+1) is reached from x by appending k
    letters of x^k at a time, and has two factorizations over X. Under
    Δ_k and δ_1, deleting one letter at a time reaches the empty word.

    Raises
    ------
    PreconditionError
        For another relation, or an empty X.
    NotACodeError
        If X is not a code.
    """
    _require_kind(rel, NO_CLOSED_CODE_KINDS, 'no-closed-code')
    if rel.kind is EditKind.delete and rel.budget != 1:
        raise PreconditionError(
            f"{rel.symbol}-closed codes can exist; only δ₁ has none")
    if not X.words:
        raise PreconditionError("the set is empty")
    if not is_code(X):
        raise NotACodeError(f"{X} is not a code")

    x = X.sorted()[0]
    k = rel.budget

    if rel.increases_length:
        tail = x * k
        chain = tuple(x + tail[:j * k] for j in range(len(x) + 1))
        witness = chain[-1]
        return NoClosedCodeWitness(
            rel, x, witness, chain,
            ((witness,), (x,) * (k + 1)),
            f"{witness} ∈ {rel.symbol}*({x}) is a product of {k + 1} "
            f"copies of {x}",
        )

    chain = tuple(x[j:] for j in range(len(x) + 1))
    return NoClosedCodeWitness(
        rel, x, '', chain, None,
        f"ε ∈ {rel.symbol}*({x}), and a code cannot contain ε",
    )


def confirm_no_closed_witness(
        witness: NoClosedCodeWitness,
        alphabet: Alphabet,
        cap: Optional[int] = None,
        ) -> bool:
    """Re-checks a witness step by step and with closure_brute."""
    rel = witness.relation
    chain = witness.chain
    if chain[0] != witness.source or chain[-1] != witness.witness:
        return False
    if not all(related(rel, a, b) for a, b in zip(chain, chain[1:])):
        return False

    if witness.factorizations is not None:
        left, right = witness.factorizations
        if left == right or ''.join(left) != ''.join(right):
            return False
    elif witness.witness != '':
        return False

    if cap is None:
        cap = max(len(witness.source), len(witness.witness))
    reached = closure_brute(
        rel, FiniteLang(alphabet, frozenset({witness.source})), cap)
    return witness.witness in reached.language


# Substitution-closed codes

def classify_sigma_closed(X: FiniteLang, k: int) -> ClosedCodeClassification:
    """The shape of a σ_k-closed code.

    A σ_k-closed code either has only words of length at most k, or is
    A^n for some n >= k+1, or, on two letters with k even, one of the
    two parity classes of A^n.

    Raises
    ------
    VerificationError
        If a closed code has none of these shapes.
    """
    k = _handle_budget(k)
    relation = EditRelation(EditKind.substitute, k)

    if not is_code(X):
        return _not_closed("not a code")
    violation = closed_violation(X, relation)
    if violation is not None:
        x, y = violation
        return _not_closed(
            f"{y} ∈ {relation.symbol}({x}) is not in the set", violation)

    if X.max_length <= k:
        return ClosedCodeClassification(ClosedShape.short_words)

    full = _is_full_cube(X)
    if full is not None:
        return ClosedCodeClassification(ClosedShape.uniform_full, length=full)

    condition = condition_d(X, k)
    lengths = X.lengths
    n = lengths[-1]
    parities = {ones_count(w, X.alphabet) % 2 for w in X.words} \
        if X.alphabet.is_binary else set()
    if condition.holds and len(lengths) == 1 and len(parities) == 1 \
            and len(X) == 2 ** (n - 1):
        parity = Parity.odd if parities.pop() else Parity.even
        return ClosedCodeClassification(
            ClosedShape.parity_half, length=n, parity=parity)

    raise VerificationError(
        f"{X} is a {relation.symbol}-closed code of unexpected shape")


def _sigma_generators(
        alphabet: Alphabet, k: int, lengths,
        ) -> Tuple[List[Word], Dict[Word, FrozenSet[Word]]]:
    candidates = alphabet.sorted(
        w for n in lengths for w in alphabet.words_of_length(n))
    relation = EditRelation(EditKind.substitute, k)
    generators = {
        w: closure_brute(
            relation, FiniteLang(alphabet, frozenset({w}))).language.words
        for w in candidates
    }
    return candidates, generators


def sigma_closed_completion(
        X: FiniteLang,
        k: int,
        max_words: int = MAX_ADMISSIBLE_WORDS,
        max_nodes: int = MAX_SEARCH_NODES,
        ) -> List[FiniteLang]:
    """All complete σ_k-closed codes containing a non-complete one.

    When X has only words of length at most k, the complete σ_k-closed
    codes within A^{<=k} that contain X are searched exhaustively.
    Otherwise X is a parity class of A^n, and A^n is the only candidate.

    Raises
    ------
    NotACodeError
        If X is not a code.
    PreconditionError
        If X is not σ_k-closed.
    CompleteLanguageError
        If X is already complete.
    SearchGuardError
        When a search limit is exceeded.
    """
    k = _handle_budget(k)
    relation = EditRelation(EditKind.substitute, k)
    if not is_code(X):
        raise NotACodeError(f"{X} is not a code")
    violation = closed_violation(X, relation)
    if violation is not None:
        raise PreconditionError(
            f"{X} is not {relation.symbol}-closed: {violation[1]!r} is in "
            f"{relation.symbol}({violation[0]!r})"
        )
    if bernoulli_measure(X) == 1:
        raise CompleteLanguageError("already complete")

    if X.max_length <= k:
        candidates, generators = _sigma_generators(
            X.alphabet, k, range(1, k + 1))
        _check_pool(candidates, max_words)
        return [
            Y for Y in _closed_code_search(
                X.alphabet, candidates, generators, X.words, max_nodes)
            if bernoulli_measure(Y) == 1
        ]

    lengths = X.lengths
    if len(lengths) != 1:
        return []
    n = lengths[0]
    return [FiniteLang(X.alphabet, frozenset(X.alphabet.words_of_length(n)))]


COMPOSITE_KINDS = frozenset({EditKind.substitute_upto, EditKind.levenshtein})


def classify_composite_closed(
        X: FiniteLang, rel: EditRelation) -> ClosedCodeClassification:
    """The shape of a Σ_k- or Λ_k-closed code.

    A Σ_k-closed code is A^n for some n. A nonempty finite set is
    never Λ_k-closed, since inserting a letter into its longest word
    leaves the set.

    Raises
    ------
    PreconditionError
        For another relation kind.
    VerificationError
        If a closed code is not of the form A^n.
    """
    _require_kind(rel, COMPOSITE_KINDS, 'composite classification')
    if not X.words:
        return ClosedCodeClassification(ClosedShape.short_words)
    if not is_code(X):
        return _not_closed("not a code")

    violation = closed_violation(X, rel)
    if violation is not None:
        x, y = violation
        return _not_closed(
            f"{y} ∈ {rel.symbol}({x}) is not in the set", violation)

    n = _is_full_cube(X)
    if n is None:
        raise VerificationError(
            f"{X} is a {rel.symbol}-closed code but not a full A^n")
    return ClosedCodeClassification(ClosedShape.uniform_full, length=n)
