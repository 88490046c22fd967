"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Iterable, Union

from .errors import InputError
from .words import Word, parse_word


def check_word(x: Union[Word, str]) -> Word:
    if isinstance(x, Word):
        return x
    if isinstance(x, str):
        return parse_word(x)
    raise InputError(f"expected a Word or word text, got {type(x).__name__}")


def check_relator(x: Union[Word, str]) -> Word:
    w = check_word(x)
    if not w:
        raise InputError("the relator is empty")
    return w


def check_relators(X: Iterable) -> list[Word]:
    """Accept a sequence of words/strings, or a 2D array with one column."""
    out = []
    for row in X:
        if hasattr(row, "__len__") and not isinstance(row, (str, Word)):
            if len(row) != 1:
                raise InputError("each sample must be a single relator")
            row = row[0]
        out.append(check_relator(row))
    if not out:
        raise InputError("no relators given")
    return out


def check_exponent(n) -> int:
    try:
        n = int(n)
    except (TypeError, ValueError):
        raise InputError(f"the exponent must be an integer, got {n!r}") from None
    if n < 2:
        raise InputError(f"the exponent n must be at least 2, got {n}")
    return n
