"""Rewrite a relator so that the generator a has exponent sum zero.

Euclid's algorithm runs on the exponent-sum vector ``(sigma_a, sigma_b)``
using the Nielsen maps ``a -> a b^t`` and ``b -> b a^t``; when the zero lands
on the b-coordinate the generators are swapped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .errors import InputError
from .maps import IDENTITY_MAP, SWAP, GenMap, apply, compose, family
from .words import A_GEN, B_GEN, Word, cyclic_reduce, is_proper_power


@dataclass(frozen=True)
class Flags:
    primitive: bool = False
    in_derived: bool = False

    def as_dict(self) -> dict:
        return {"primitive": self.primitive, "in_derived": self.in_derived}


@dataclass(frozen=True)
class BalancedPresentation:
    """``<a, b ; s^n>`` with ``sigma_a(s) == 0``.

    ``basis_change`` carries the original relator to a conjugate of ``s`` or
    of its inverse.
    """

    s: Word
    n: int
    basis_change: GenMap
    flags: Flags
    original: Word
    steps: tuple[str, ...] = field(default=(), compare=False)


class Branch(enum.Enum):
    DERIVED = "Derived"
    PRIMITIVE = "Primitive"
    GENERIC = "Generic"


def check_relator(r: Word, n: int) -> None:
    if not r:
        raise InputError("the relator is empty")
    if n < 2:
        raise InputError(f"the exponent n must be at least 2, got {n}")
    if is_proper_power(r)[0]:
        raise InputError(f"the relator {r} is a proper power")


def balance_relator(r: Word, n: int = 2) -> BalancedPresentation:
    """Balance ``r`` so that the result has zero exponent sum in a.

    >>> from onerel.words import parse_word
    >>> str(balance_relator(parse_word("a^2 b^2")).s)
    'b A b a'
    """
    check_relator(r, n)
    p, q = r.exponent_sum("a"), r.exponent_sum("b")
    if p == 0 and q == 0:
        core = cyclic_reduce(r)[0]
        return BalancedPresentation(core, n, IDENTITY_MAP, Flags(in_derived=True), r,
                                    ("both exponent sums vanish",))
    change = IDENTITY_MAP
    steps: list[str] = []
    while p != 0 and q != 0:
        if abs(q) >= abs(p):
            t = -int(q / p)
            step = GenMap(A_GEN * B_GEN ** t, B_GEN, f"a -> a b^{t}")
            q += t * p
        else:
            t = -int(p / q)
            step = GenMap(A_GEN, B_GEN * A_GEN ** t, f"b -> b a^{t}")
            p += t * q
        change = compose(change, step)
        steps.append(step.tag)
    if q == 0:
        change = compose(change, SWAP)
        steps.append("swap a, b")
        p, q = q, p
    s = cyclic_reduce(apply(change, r))[0]
    primitive = False
    if s == B_GEN.inverse():
        change = compose(change, family("psi", -1))
        steps.append("b -> B")
        s = B_GEN
    if s == B_GEN:
        primitive = True
    return BalancedPresentation(s, n, change, Flags(primitive=primitive), r, tuple(steps))


def detect_branch(bp: BalancedPresentation) -> Branch:
    if bp.flags.in_derived:
        return Branch.DERIVED
    if bp.flags.primitive:
        return Branch.PRIMITIVE
    return Branch.GENERIC


def expected_b_sum(r: Word) -> int:
    """``|sigma_b|`` that balancing must produce: the gcd of the exponent sums."""
    return gcd(r.exponent_sum("a"), r.exponent_sum("b"))
