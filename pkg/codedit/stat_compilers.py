"""Functions to compile analysis reports.

Each ``get_*_stats`` function runs one analysis and returns its results
as a dictionary of plain values, ready to be printed or dumped as JSON.
Every witness is checked again through library calls before it goes
into a report.
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from codedit.closure import (
    assert_no_closed_code, classify_composite_closed, classify_sigma_closed,
    completion_word, confirm_no_closed_witness, embed_delta_closed,
    er_completion, render_completion, sigma_closed_completion,
)
from codedit.codes import BernoulliDist, bernoulli_measure, is_code
from codedit.config import MAX_ADMISSIBLE_WORDS, MAX_SEARCH_NODES
from codedit.edit import (
    EditRelation, levenshtein, levenshtein_matrix, related, sigma_star,
)
from codedit.enums import EditKind
from codedit.errors import PreconditionError, VerificationError
from codedit.indep import (
    closed_violation, error_detection_margin, extend_independent,
    is_independent,
)
from codedit.langs import (
    FiniteLang, factor_language, is_complete, shortest_external_witness,
    star,
)
from codedit.words import Alphabet, Word

Stats = Dict[str, Any]


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationError(message)


def get_check_stats(
        X: FiniteLang, rel: EditRelation, prop: str = 'independent',
        ) -> Stats:
    """Tests independence or closedness of X under rel.

    Parameters
    ----------
    X : FiniteLang
    rel : EditRelation
    prop : {'independent', 'closed'}

    Returns
    -------
    dict
        ``holds`` and, when it fails, the violating pair.
    """
    stats = {'relation': rel.symbol, 'property': prop}

    if prop == 'independent':
        violation = is_independent(X, rel).violation
        if violation is not None:
            x, y = violation
            _check(x in X and y in X and related(rel, x, y),
                   f"stale independence violation {violation}")
    elif prop == 'closed':
        violation = closed_violation(X, rel)
        if violation is not None:
            x, y = violation
            _check(x in X and y not in X and related(rel, x, y),
                   f"stale closure violation {violation}")
    else:
        raise ValueError(
            f"prop must be 'independent' or 'closed', got {prop!r}")

    stats['holds'] = violation is None
    stats['violation'] = list(violation) if violation else None
    return stats


def get_code_stats(X: FiniteLang) -> Stats:
    """Tests whether X is a code, with an ambiguous word if it is not."""
    report = is_code(X)
    stats = {'holds': report.is_code, 'word': None, 'factorizations': None}

    if not report.is_code:
        left, right = report.counterexample
        _check(left != right and ''.join(left) == ''.join(right)
               and all(w in X for w in left + right),
               f"stale factorizations {left} and {right}")
        stats['word'] = report.word
        stats['factorizations'] = [list(left), list(right)]

    return stats


def get_completeness_stats(X: FiniteLang) -> Stats:
    """Tests completeness of X, with the shortest word outside F(X*)."""
    complete = is_complete(X)
    stats = {'holds': complete, 'witness': None}

    if not complete:
        w = shortest_external_witness(X)
        _check(not factor_language(star(X)).accepts(w),
               f"stale witness {w!r}")
        stats['witness'] = w

    return stats


def parse_distribution(text: str, alphabet: Alphabet) -> BernoulliDist:
    """Reads ``uniform`` or comma separated weights like ``1/3,2/3``."""
    if text.strip() == 'uniform':
        return BernoulliDist.uniform(alphabet)

    parts = [p.strip() for p in text.split(',')]
    if len(parts) != len(alphabet):
        raise ValueError(
            f"need {len(alphabet)} weights for {alphabet.symbols}, "
            f"got {text!r}"
        )
    try:
        weights = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"weights must be rationals, got {text!r}") from None
    return BernoulliDist.from_weights(alphabet, weights)


def get_measure_stats(
        X: FiniteLang, dist: Optional[BernoulliDist] = None) -> Stats:
    """The exact Bernoulli measure of X."""
    if dist is None:
        dist = BernoulliDist.uniform(X.alphabet)
    measure = bernoulli_measure(X, dist)
    return {
        'measure': str(measure),
        'numerator': measure.numerator,
        'denominator': measure.denominator,
        'distribution': {s: str(w) for s, w in dist.weights.items()},
    }


def get_orbit_stats(
        w: Word,
        k: int,
        alphabet: Alphabet,
        expand: bool = False,
        limit: Optional[int] = None,
        ) -> Stats:
    """The σ_k orbit of w, listed only when asked for."""
    orbit = sigma_star(w, k, alphabet)
    _check(w in orbit, f"{w!r} is missing from its own orbit")

    stats = {
        'word': w,
        'k': k,
        'shape': orbit.shape.name,
        'orbit': orbit.describe(),
        'cardinality': orbit.cardinality,
        'words': None,
    }
    if expand:
        words = orbit.expand(limit) if limit else orbit.expand()
        stats['words'] = words.sorted()
    return stats


def _word_lists(codes: Iterable[FiniteLang]) -> List[List[Word]]:
    return [X.sorted() for X in codes]


def get_closed_completion_stats(
        X: FiniteLang,
        rel: EditRelation,
        max_words: int = MAX_ADMISSIBLE_WORDS,
        max_nodes: int = MAX_SEARCH_NODES,
        ) -> Stats:
    """Complete closed codes containing X, under δ_k or σ_k."""
    if rel.kind is EditKind.substitute:
        found = sigma_closed_completion(X, rel.budget, max_words, max_nodes)
    elif rel.kind is EditKind.delete:
        found = embed_delta_closed(X, rel.budget, max_words, max_nodes)
    else:
        raise PreconditionError(
            f"closed completion supports δ_k and σ_k, got {rel.symbol}")

    for Y in found:
        _check(X <= Y and bernoulli_measure(Y) == 1
               and closed_violation(Y, rel) is None,
               f"stale completion {Y}")

    return {
        'relation': rel.symbol,
        'completions': _word_lists(found),
        'count': len(found),
    }


def get_er_completion_stats(X: FiniteLang) -> Stats:
    """Completes X and describes the resulting automaton."""
    Y = er_completion(X)
    y = completion_word(X)
    _check(Y.accepts(y) and all(Y.accepts(x) for x in X),
           f"completion does not accept {y!r} and X")
    return {
        'word': y,
        'expression': render_completion(X, y),
        'states': Y.n_states,
        'is_code': True,
        'complete': True,
        'dot': Y.to_dot('Y'),
    }


def get_enumeration_table(codes: Iterable[FiniteLang]) -> pd.DataFrame:
    """One row per code with its size, lengths and uniform measure."""
    rows = []
    for X in codes:
        measure = bernoulli_measure(X)
        rows.append({
            'code': ' '.join(X.sorted()),
            'size': len(X),
            'lengths': ','.join(str(n) for n in X.lengths),
            'measure': str(measure),
            'complete': measure == 1,
        })
    return pd.DataFrame(
        rows, columns=['code', 'size', 'lengths', 'measure', 'complete'])


def get_margin_stats(X: FiniteLang) -> Stats:
    """The error detection margin and the pairwise distance matrix."""
    margin = error_detection_margin(X)
    distances = levenshtein_matrix(X)
    closest = min(
        ((x, y) for x in X for y in X if x != y),
        key=lambda pair: distances.loc[pair[0], pair[1]],
    )
    _check(levenshtein(*closest) == margin + 1,
           f"margin {margin} does not match the pair {closest}")
    return {
        'margin': margin,
        'closest': list(closest),
        'distances': {
            x: {y: int(distances.loc[x, y]) for y in distances.columns}
            for x in distances.index
        },
    }


def get_extension_stats(
        X: FiniteLang, rel: EditRelation, rounds: int = 1) -> Stats:
    """Extends X word by word, keeping it an independent code."""
    added = extend_independent(X, rel, rounds)
    extended = X.add(*added)
    _check(is_code(extended).is_code and is_independent(extended, rel),
           f"extension {added} is not an independent code")
    return {
        'relation': rel.symbol,
        'added': added,
        'complete': is_complete(extended),
    }


def get_no_closed_stats(X: FiniteLang, rel: EditRelation) -> Stats:
    """Evidence that no code is closed under rel."""
    witness = assert_no_closed_code(X, rel)
    _check(confirm_no_closed_witness(witness, X.alphabet),
           f"witness {witness.witness!r} is not confirmed")
    return {
        'relation': rel.symbol,
        'source': witness.source,
        'witness': witness.witness,
        'chain': list(witness.chain),
        'factorizations': (
            [list(f) for f in witness.factorizations]
            if witness.factorizations else None
        ),
        'reason': witness.reason,
    }


def get_classification_stats(X: FiniteLang, rel: EditRelation) -> Stats:
    """The closed-code shape of X under σ_k, Σ_k or Λ_k."""
    if rel.kind is EditKind.substitute:
        result = classify_sigma_closed(X, rel.budget)
    else:
        result = classify_composite_closed(X, rel)

    if result.violation is not None:
        x, y = result.violation
        _check(related(rel, x, y) and y not in X,
               f"stale violation {result.violation}")

    return {
        'relation': rel.symbol,
        'shape': result.shape.name,
        'classification': result.describe(),
        'length': result.length,
        'parity': result.parity.name if result.parity else None,
        'reason': result.reason,
        'violation': list(result.violation) if result.violation else None,
    }
