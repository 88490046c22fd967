"""Endomorphisms of F(a, b) given by the images of the two generators.

Maps act on the right, so ``compose(m1, m2)`` first applies ``m1`` and then
``m2``: ``apply(compose(m1, m2), w) == apply(m2, apply(m1, w))``.
Conjugation uses ``conjugation(w)(x) == w^-1 x w``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .words import (
    A_GEN,
    B_GEN,
    IDENTITY,
    Word,
    cyclic_reduce,
    is_proper_power,
    parse_word,
)

FAMILIES = ("alpha", "beta", "zeta", "delta", "psi")


@dataclass(frozen=True)
class GenMap:
    """The endomorphism ``a -> image_a, b -> image_b``."""

    image_a: Word
    image_b: Word
    tag: Optional[str] = field(default=None, compare=False)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return f"a -> {self.image_a}; b -> {self.image_b}"


IDENTITY_MAP = GenMap(A_GEN, B_GEN, "delta(0)")
SWAP = GenMap(B_GEN, A_GEN)


def family(name: str, k: int) -> GenMap:
    """One of the parametric maps alpha_k, beta_k, zeta_k, delta_k, psi_k.

    ========  ============  ======
    family    a ->          b ->
    ========  ============  ======
    alpha_k   a^-1 b^k      b
    beta_k    a b^k         b^-1
    zeta_k    a^-1 b^k      b^-1
    delta_k   a b^k         b
    psi_k     a             b^k
    ========  ============  ======
    """
    name = name.lower()
    bk = B_GEN ** k
    if name == "alpha":
        return GenMap(A_GEN.inverse() * bk, B_GEN, f"alpha({k})")
    if name == "beta":
        return GenMap(A_GEN * bk, B_GEN.inverse(), f"beta({k})")
    if name == "zeta":
        return GenMap(A_GEN.inverse() * bk, B_GEN.inverse(), f"zeta({k})")
    if name == "delta":
        return GenMap(A_GEN * bk, B_GEN, f"delta({k})")
    if name == "psi":
        if k == 0:
            raise ValueError("psi(0) is not an automorphism")
        return GenMap(A_GEN, bk, f"psi({k})")
    raise ValueError(f"unknown family {name!r}")


def conjugation(w: Word) -> GenMap:
    """The inner automorphism ``x -> w^-1 x w``."""
    wi = w.inverse()
    return GenMap(wi * A_GEN * w, wi * B_GEN * w, f"conj({w})")


def _b_power(w: Word) -> Optional[int]:
    if not w.syllables:
        return 0
    if len(w.syllables) == 1 and w.syllables[0][0] == "b":
        return w.syllables[0][1]
    return None


def recognize(image_a: Word, image_b: Word) -> Optional[str]:
    """Family label for a pair of images, when it matches one syntactically."""
    syl = image_a.syllables
    eb = _b_power(image_b)
    if eb is None:
        return None
    if syl and syl[0][0] == "a" and abs(syl[0][1]) == 1 and len(syl) <= 2:
        k = syl[1][1] if len(syl) == 2 else 0
        sa = syl[0][1]
        if eb == 1:
            return f"delta({k})" if sa == 1 else f"alpha({k})"
        if eb == -1:
            return f"beta({k})" if sa == 1 else f"zeta({k})"
        if sa == 1 and k == 0 and eb != 0:
            return f"psi({eb})"
    return None


def apply(m: GenMap, w: Word) -> Word:
    """Substitute the images of ``m`` into ``w`` and freely reduce."""
    out = IDENTITY
    for gen, exp in w.syllables:
        img = m.image_a if gen == "a" else m.image_b
        out = out * (img ** exp)
    return out


def compose(m1: GenMap, m2: GenMap) -> GenMap:
    """``m1`` followed by ``m2``."""
    ia = apply(m2, m1.image_a)
    ib = apply(m2, m1.image_b)
    return GenMap(ia, ib, recognize(ia, ib))


def power(m: GenMap, k: int) -> GenMap:
    if k < 0:
        raise ValueError("only non-negative powers of an endomorphism are defined")
    out = IDENTITY_MAP
    for _ in range(k):
        out = compose(out, m)
    return out


class AbelMatrix(NamedTuple):
    """Exponent-sum matrix; rows are the images of a and b."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    @property
    def det(self) -> int:
        (p, q), (r, s) = self.rows
        return p * s - q * r

    def __matmul__(self, other: "AbelMatrix") -> "AbelMatrix":
        x, y = self.rows, other.rows
        return AbelMatrix(tuple(
            tuple(sum(x[i][t] * y[t][j] for t in range(2)) for j in range(2))
            for i in range(2)
        ))


def abel_matrix(m: GenMap) -> AbelMatrix:
    return AbelMatrix((
        (m.image_a.exponent_sum("a"), m.image_a.exponent_sum("b")),
        (m.image_b.exponent_sum("a"), m.image_b.exponent_sum("b")),
    ))


class NielsenResult(NamedTuple):
    is_basis: bool
    reduced: tuple[Word, Word]
    trace: list[str]


def _moves(u: Word, v: Word):
    ui, vi = u.inverse(), v.inverse()
    yield "u <- u v", (u * v, v)
    yield "u <- u V", (u * vi, v)
    yield "u <- v u", (v * u, v)
    yield "u <- V u", (vi * u, v)
    yield "v <- v u", (u, v * u)
    yield "v <- v U", (u, v * ui)
    yield "v <- u v", (u, u * v)
    yield "v <- U v", (u, ui * v)


def _is_letter_basis(u: Word, v: Word) -> bool:
    if len(u) != 1 or len(v) != 1:
        return False
    return u.syllables[0][0] != v.syllables[0][0]


def nielsen_reduce_pair(u: Word, v: Word, plateau_limit: int = 5000) -> NielsenResult:
    """Nielsen-reduce the pair ``(u, v)`` by length-decreasing elementary moves.

    When no single move shortens the pair, pairs of the same total length
    reachable by length-preserving moves are searched (up to
    ``plateau_limit`` of them) for one that admits a shortening move.
    """
    trace: list[str] = []
    while u and v and not _is_letter_basis(u, v):
        total = len(u) + len(v)
        best = None
        for name, (nu, nv) in _moves(u, v):
            t = len(nu) + len(nv)
            if t < total and (best is None or t < best[0]):
                best = (t, name, nu, nv)
        if best is not None:
            _, name, u, v = best
            trace.append(name)
            continue
        found = _plateau_escape(u, v, total, plateau_limit)
        if found is None:
            break
        path, u, v = found
        trace.extend(path)
    return NielsenResult(bool(u) and bool(v) and _is_letter_basis(u, v), (u, v), trace)


def _plateau_escape(u: Word, v: Word, total: int, limit: int):
    seen = {(u, v)}
    queue = deque([(u, v, [])])
    while queue and len(seen) < limit:
        cu, cv, path = queue.popleft()
        for name, (nu, nv) in _moves(cu, cv):
            t = len(nu) + len(nv)
            if t < total:
                return path + [name], nu, nv
            if t == total and (nu, nv) not in seen:
                seen.add((nu, nv))
                queue.append((nu, nv, path + [name]))
    return None


def is_basis_pair(m: GenMap) -> bool:
    return nielsen_reduce_pair(m.image_a, m.image_b).is_basis


def _replay(move: str, u: Word, v: Word) -> tuple[Word, Word]:
    return dict(_moves(u, v))[move]


def invert(m: GenMap) -> GenMap:
    """Inverse automorphism of F(a, b); raises if ``m`` is not a basis pair."""
    res = nielsen_reduce_pair(m.image_a, m.image_b)
    if not res.is_basis:
        raise ValueError(f"{m} is not an automorphism of F(a, b)")
    # the same moves applied to (a, b) give W1, W2 with m(W_i) = x^{+-1}
    w1, w2 = A_GEN, B_GEN
    for move in res.trace:
        w1, w2 = _replay(move, w1, w2)
    images = {}
    for w, final in zip((w1, w2), res.reduced):
        gen, exp = final.syllables[0]
        images[gen] = w if exp == 1 else w.inverse()
    return GenMap(images["a"], images["b"], recognize(images["a"], images["b"]))


def mod_inn_equal(m1: GenMap, m2: GenMap) -> tuple[bool, Optional[Word]]:
    """Decide whether ``m2 = m1`` followed by an inner automorphism of F(a, b).

    Returns ``(True, w)`` with ``m2.image_x == w^-1 m1.image_x w`` for both
    generators, or ``(False, None)``.
    """
    a1, b1, a2, b2 = m1.image_a, m1.image_b, m2.image_a, m2.image_b
    if not (a1 and b1 and a2 and b2):
        raise ValueError("mod_inn_equal needs nontrivial images")
    c1, u1 = cyclic_reduce(a1)
    c2, u2 = cyclic_reduce(a2)
    if len(c1) != len(c2):
        return False, None
    l1, l2 = c1.letters, c2.letters
    n = len(l1)
    shift = next((j for j in range(n) if l1[j:] + l1[:j] == l2), None)
    if shift is None:
        return False, None
    x = Word._trusted(()) if shift == 0 else _prefix(c1, shift)
    # every solution of w^-1 a1 w = a2 is u1 rho^t x u2^-1
    rho = is_proper_power(c1)[1]
    bb = u1.inverse() * b1 * u1
    dd = x * u2.inverse() * b2 * u2 * x.inverse()
    if bb * rho == rho * bb:
        window = range(0, 1)
    else:
        bound = (len(dd) + 2 * len(bb)) // (2 * len(rho)) + 3
        window = sorted(range(-bound, bound + 1), key=lambda t: (abs(t), t))
    for t in window:
        rt = rho ** t
        if rt.inverse() * bb * rt == dd:
            return True, u1 * rt * x * u2.inverse()
    return False, None


def _prefix(w: Word, k: int) -> Word:
    from .words import free_reduce

    return free_reduce(w.letters[:k])


_SHORTHAND = re.compile(r"^\s*(alpha|beta|zeta|delta|psi)\s*\(\s*(-?\d+)\s*\)\s*$", re.I)
_CONJ = re.compile(r"^\s*conj\s*\((.*)\)\s*$", re.I)
_ASSIGN = re.compile(r"^\s*([ab])\s*->\s*(.*)$")


def parse_map(text: str) -> GenMap:
    """Parse ``"a -> <word>; b -> <word>"`` or a shorthand such as ``beta(0)``.

    Unassigned generators are fixed.  ``conj(<word>)`` gives an inner map.
    """
    m = _SHORTHAND.match(text)
    if m:
        return family(m.group(1), int(m.group(2)))
    m = _CONJ.match(text)
    if m:
        return conjugation(parse_word(m.group(1)))
    images = {"a": A_GEN, "b": B_GEN}
    seen = set()
    for part in text.split(";"):
        if not part.strip():
            continue
        m = _ASSIGN.match(part)
        if not m:
            raise ValueError(f"cannot parse map clause {part.strip()!r}")
        gen = m.group(1)
        if gen in seen:
            raise ValueError(f"generator {gen} assigned twice")
        seen.add(gen)
        images[gen] = parse_word(m.group(2))
    if not seen:
        raise ValueError("empty map")
    return GenMap(images["a"], images["b"], recognize(images["a"], images["b"]))
