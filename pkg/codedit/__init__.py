# flake8: noqa

from codedit.closure import (
    ClosedCodeClassification,
    ConditionD,
    NoClosedCodeWitness,
    assert_no_closed_code,
    classify_composite_closed,
    classify_sigma_closed,
    completion_word,
    condition_d,
    confirm_no_closed_witness,
    delta_closed_length_bound,
    embed_delta_closed,
    enumerate_delta_closed_codes,
    er_completion,
    render_completion,
    sigma_closed_completion,
)
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
from codedit.edit import (
    BruteClosure,
    EditRelation,
    OrbitDescriptor,
    apply,
    apply_set,
    closure_brute,
    hamming,
    image_words,
    lambda_membership,
    levenshtein,
    levenshtein_matrix,
    orbit_partition,
    related,
    sigma_star,
)
from codedit.enums import ClosedShape, EditKind, OrbitShape, Parity
from codedit.errors import (
    AlphabetError,
    CompleteLanguageError,
    EmptyWordError,
    LanguageFileError,
    NotACodeError,
    PreconditionError,
    SearchGuardError,
    VerificationError,
)
from codedit.indep import (
    IndependenceReport,
    closed_violation,
    error_detection_margin,
    extend_independent,
    independence_witness_regular,
    independent_extension_witness,
    is_closed,
    is_independent,
    is_independent_regular,
    is_maximal_independent,
)
from codedit.langfile import (
    format_language,
    parse_language,
    read_language,
    write_language,
)
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
from codedit.words import (
    Alphabet,
    complement_word,
    is_factor,
    is_overlapping_free,
    is_subword,
    longest_border,
    make_overlapping_free,
    ones_count,
    subwords,
    xor_words,
)


__author__ = 'codedit developers'
__version__ = '0.1.0'
__all__ = [
    'closure',
    'codes',
    'edit',
    'enums',
    'errors',
    'indep',
    'langfile',
    'langs',
    'stat_compilers',
    'words',
]


__doc__ = """
============================================================
codedit: variable-length codes under word edit relations
============================================================

What is it?
-----------

**codedit** is a Python package for experimenting with variable-length
codes: sets of words in which every concatenation can be split back
into codewords in only one way. It decides whether a finite or regular
set of words is a code, whether it is complete, and whether it stays
independent or closed when words are edited by deletions, insertions,
substitutions or Levenshtein steps.


Installation
------------

.. code-block:: bash

    pip install codedit


Use
---

.. code-block:: python

    import codedit as cd

    Z = cd.FiniteLang.from_words('ab', ['abb', 'baa'])
    cd.is_code(Z)                                    # CodeReport(is_code=True, ...)
    cd.bernoulli_measure(Z)                          # Fraction(1, 4)
    cd.is_independent(Z, cd.EditRelation.parse('delta:1'))
    cd.independent_extension_witness(Z, cd.EditRelation.parse('delta:1'))


API
---

Words are plain strings over an ``Alphabet``. Finite sets of words are
``FiniteLang`` values and regular sets are ``RegularLang`` automata;
every function taking a regular language also accepts a finite one.
Results are exact: measures are ``fractions.Fraction`` values, witnesses
are checked again before they are returned, and searches that would run
past their configured bounds stop with a ``SearchGuardError`` instead of
returning partial answers.

Check the docs for detailed guidance on each function and its parameters.


Features
--------

* Sardinas-Patterson tests for finite and regular sets, with a shortest
  ambiguous word.
* Automaton algebra: products, complement, concatenation, star, factor
  languages and minimization.
* Completeness tests and the shortest word outside F(X*).
* Exact Bernoulli measures of finite sets.
* The edit relations δ_k, ι_k, σ_k, Δ_k, I_k, Σ_k, Λ_k and Λ̲_k as set maps,
  the Levenshtein distance and symbolic σ_k orbits.
* Independence and closedness tests, one-word extension of independent
  codes and error detection margins.
* Completion of regular codes, and the search and classification of codes
  closed under deletions and substitutions.
* A ``codedit`` command line tool working on word-list files.


Dependencies
------------

* `pandas <https://github.com/pandas-dev/pandas>`_
* `NumPy <https://numpy.org/>`_


Contributing to codedit
------------------------

See CONTRIBUTING.rst

"""
