"""Automorphism test for ``G = <a, b ; s^n>``.

A basis pair of F(a, b) induces an automorphism of G exactly when it sends
the relator to a conjugate of itself or of its inverse.  Roots are unique up
to conjugacy in a free group, so testing the root ``s`` suffices.
"""

from __future__ import annotations

import enum

from .errors import InputError, NotABasisError
from .maps import GenMap, apply, family, nielsen_reduce_pair
from .words import A_GEN, CyclicWord, Word, is_proper_power


class AutVerdict(enum.Enum):
    NOT_AUT = "NotAut"
    FIXES_RELATOR = "FixesRelator"
    INVERTS_RELATOR = "InvertsRelator"

    @property
    def is_aut(self) -> bool:
        return self is not AutVerdict.NOT_AUT


def image_verdict(s: Word, m: GenMap) -> AutVerdict:
    """The conjugacy comparison alone, without the basis check."""
    target = CyclicWord(s)
    image = CyclicWord(apply(m, s))
    if image == target:
        return AutVerdict.FIXES_RELATOR
    if image == target.inverse():
        return AutVerdict.INVERTS_RELATOR
    return AutVerdict.NOT_AUT


def is_relator_auto(s: Word, m: GenMap) -> AutVerdict:
    if not s:
        raise InputError("the relator is empty")
    if is_proper_power(s)[0]:
        raise InputError(f"{s} is a proper power; pass its root")
    if not nielsen_reduce_pair(m.image_a, m.image_b).is_basis:
        raise NotABasisError(f"({m.image_a}, {m.image_b}) is not a basis of F(a, b)")
    return image_verdict(s, m)


def delta_syntactic(s: Word) -> bool:
    """Whether ``a -> a b`` fixes ``s`` or ``a s a^-1`` letter for letter.

    ``s`` must be cyclically reduced with zero exponent sum in a.  Both
    comparisons are needed: cone words like ``a b A b^2`` satisfy the first,
    while ``A b a b`` only satisfies the second.
    """
    delta = family("delta", 1)
    if apply(delta, s) == s:
        return True
    shifted = A_GEN * s * A_GEN.inverse()
    return apply(delta, shifted) == shifted
