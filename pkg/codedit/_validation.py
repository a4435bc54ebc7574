"""Internal functions for argument validation."""
from typing import Any

from codedit.errors import PreconditionError


def _handle_budget(k: Any, name: str = 'k') -> int:
    """Handles edit budget arguments, which must be integers >= 1."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise ValueError(f"{name} must be an int, got type {type(k)}")

    if k < 1:
        raise ValueError(f"{name} must be at least 1, got {k}")

    return k


def _handle_limit(limit: Any, name: str) -> int:
    """Handles search limit arguments, which must be positive ints."""
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
        raise ValueError(f"{name} must be a positive int, got {limit!r}")
    return limit


def _require_kind(rel, allowed, operation: str) -> None:
    """Raises if the relation kind is not one the operation supports."""
    if rel.kind not in allowed:
        names = ', '.join(sorted(kind.name for kind in allowed))
        raise PreconditionError(
            f"{operation} does not support {rel.symbol}; "
            f"supported kinds are: {names}"
        )
