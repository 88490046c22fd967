"""Out(G) for ``G = <a, b ; b^n>``, realised as a finite group.

Every outer class has a unique representative ``a -> a^e b^i, b -> b^k`` with
``e = +-1``, ``i`` mod ``n`` and ``k`` a unit mod ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .maps import GenMap, compose
from .words import A_GEN, B_GEN


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def units(n: int) -> list[int]:
    return [k for k in range(1, n) if gcd(k, n) == 1]


def primitive_out_order(n: int) -> int:
    """``2 n phi(n)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 2 * n * totient(n)


def triple_map(e: int, i: int, k: int) -> GenMap:
    return GenMap(A_GEN ** e * B_GEN ** i, B_GEN ** k)


def normalize_map(m: GenMap, n: int) -> tuple[int, int, int]:
    """Read ``(e, i mod n, k mod n)`` off a map ``a -> b^c a^e b^d, b -> b^k``.

    Conjugating by ``b^c`` turns the image of ``a`` into ``a^e b^(c+d)``
    and leaves the image of ``b`` alone.
    """
    syl = m.image_b.syllables
    if len(syl) != 1 or syl[0][0] != "b":
        raise ValueError(f"image of b is not a power of b: {m.image_b}")
    k = syl[0][1] % n
    a_syl = [s for s in m.image_a.syllables if s[0] == "a"]
    if len(a_syl) != 1 or abs(a_syl[0][1]) != 1:
        raise ValueError(f"image of a is not b^c a^(+-1) b^d: {m.image_a}")
    return a_syl[0][1], m.image_a.exponent_sum("b") % n, k


@dataclass
class FiniteGroup:
    elements: list[tuple[int, int, int]]
    table: np.ndarray
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_associative(self) -> bool:
        t = self.table
        return bool(np.array_equal(t[t], t[:, t]))

    def has_identity(self) -> bool:
        idx = np.arange(self.order)
        e = self.identity
        return bool((self.table[e] == idx).all() and (self.table[:, e] == idx).all())

    def has_inverses(self) -> bool:
        return bool((self.table == self.identity).any(axis=1).all())

    def is_group(self) -> bool:
        return self.is_associative() and self.has_identity() and self.has_inverses()

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def exponent_divides(self, m: int) -> bool:
        cur = np.full(self.order, self.identity)
        for _ in range(m):
            cur = self.table[cur, np.arange(self.order)]
        return bool((cur == self.identity).all())

    def multiply(self, x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
        index = {el: j for j, el in enumerate(self.elements)}
        return self.elements[self.table[index[x], index[y]]]


def realize_primitive_out(n: int) -> FiniteGroup:
    """Multiplication table of Out(<a, b ; b^n>); the product ``x y`` means x then y."""
    if n < 2:
        raise ValueError("n must be at least 2")
    elements = [(e, i, k) for e in (1, -1) for i in range(n) for k in units(n)]
    index = {el: j for j, el in enumerate(elements)}
    maps = [triple_map(*el) for el in elements]
    size = len(elements)
    table = np.empty((size, size), dtype=np.int32)
    for x, mx in enumerate(maps):
        for y, my in enumerate(maps):
            table[x, y] = index[normalize_map(compose(mx, my), n)]
    return FiniteGroup(elements, table, index[(1, 0, 1)])
