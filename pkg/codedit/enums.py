# -*- coding: utf-8 -*-
"""
Common enumerations to be used.

This module provides the enumerations shared across the package, as well
as the function used to create them.

New enumerations can be created using the |enumeration| function.
"""

from enum import Enum


def enumeration(name, *args):
    """
    Call ``Enum`` with a sequence of (unique) strings to create an
    enumeration object.
    """
    if not (args and all(isinstance(arg, str) and arg for arg in args)):
        raise ValueError(
            f"expected a non-empty sequence of strings, got {args}")

    if len(args) != len(set(args)):
        raise ValueError(f"enumeration items must be unique, got {args}")

    return Enum(name, ' '.join(args))


# The edit relations: delta_k, iota_k, sigma_k, Delta_k, I_k, Sigma_k,
# Lambda_k and the antireflexive Lambda_k.
EditKind = enumeration(
    'EditKind',
    'delete',
    'insert',
    'substitute',
    'delete_upto',
    'insert_upto',
    'substitute_upto',
    'levenshtein',
    'levenshtein_strict',
)

OrbitShape = enumeration(
    'OrbitShape', 'full_cube', 'parity_class', 'self_pair', 'explicit',
)

ClosedShape = enumeration(
    'ClosedShape',
    'short_words',
    'uniform_full',
    'parity_half',
    'not_closed_code',
)

Parity = enumeration('Parity', 'even', 'odd')
