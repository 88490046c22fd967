"""Brute-force checks that bypass the shortcuts used by the classifier.

Everything here works at letter level with plain strings: conjugacy is
decided by substring search in a doubled cyclic core, automorphism tests act
on ``s^2`` rather than on the root, and adjacency scans read every rotation of
``s^2`` literally.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .maps import apply, family
from .words import A_GEN, B_GEN, Cone, Word, free_reduce, height_membership

_CHARS = {1: "a", -1: "A", 2: "b", -2: "B"}
FAMILY_NAMES = ("alpha", "beta", "zeta", "delta")


@dataclass(frozen=True)
class OracleConfig:
    k_window: int = 10
    max_word_len: int = 40
    sample_count: int = 200
    rng_seed: int = 0

    def __post_init__(self):
        for name in ("k_window", "max_word_len", "sample_count"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")


def _text(w: Word) -> str:
    return "".join(_CHARS[x] for x in w.letters)


def _cyclic_core_text(w: Word) -> str:
    t = _text(w)
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    while len(t) >= 2 and t[0] == inverse[t[-1]]:
        t = t[1:-1]
    return t


def free_conjugate(u: Word, v: Word) -> bool:
    """Conjugacy in F(a, b) by searching one cyclic core inside the other, doubled."""
    cu, cv = _cyclic_core_text(u), _cyclic_core_text(v)
    return len(cu) == len(cv) and cv in cu + cu


def oracle_is_aut(s: Word, name: str, k: int) -> bool:
    """Whether the family map sends ``s^2`` to a conjugate of ``s^2`` or ``s^-2``."""
    square = s * s
    image = apply(family(name, k), square)
    return free_conjugate(image, square) or free_conjugate(image, square.inverse())


@dataclass
class FamilyPasses:
    """Parameters ``k`` at which each family map passes the automorphism test."""

    passes: dict = field(default_factory=lambda: {f: set() for f in FAMILY_NAMES})
    window: tuple[int, int] = (0, 0)

    def restricted(self, name: str, ks: Iterable[int]) -> frozenset:
        return frozenset(set(ks) & self.passes[name])

    def to_witnesses(self, alpha_ks: Iterable[int], beta_ks: Iterable[int]):
        """The classifier's view: delta at 1, alpha/beta on the given candidates, zeta at 0."""
        from .classify import Witnesses

        return Witnesses(
            1 in self.passes["delta"],
            self.restricted("alpha", alpha_ks),
            self.restricted("beta", beta_ks),
            0 in self.passes["zeta"],
        )


def _check_balanced(s: Word) -> None:
    if not any(abs(x) == 1 for x in s.letters):
        raise ValueError("the relator contains no a-letters")
    if s.exponent_sum("a") != 0:
        raise ValueError("the relator must have zero exponent sum in a")


def enumerate_family_auts(s: Word, window: Optional[tuple[int, int]] = None) -> FamilyPasses:
    """Test alpha_k, beta_k, zeta_k, delta_k for every k in ``window`` (inclusive).

    The default window ``|k| <= |s| + 5`` is exhaustive: outside it the image
    of ``s`` is too long to be conjugate to ``s^{+-1}``.
    """
    _check_balanced(s)
    if window is None:
        window = (-(len(s) + 5), len(s) + 5)
    lo, hi = window
    out = FamilyPasses(window=(lo, hi))
    for name in FAMILY_NAMES:
        for k in range(lo, hi + 1):
            if oracle_is_aut(s, name, k):
                out.passes[name].add(k)
    return out


def _literal_adjacencies(text: str) -> tuple[list[int], list[int]]:
    plus, minus = [], []
    for m in re.finditer(r"(?=(a(b*|B*)a|A(b*|B*)A))", text):
        body = m.group(1)
        run = body[1:-1]
        i = len(run) if run[:1] != "B" else -len(run)
        (plus if body[0] == "a" else minus).append(i)
    return plus, minus


def literal_scan(s: Word) -> tuple[Optional[int], ...]:
    """Extremes of ``i`` over subwords ``a b^i a`` / ``A b^i A`` of rotations of ``s^2``."""
    _check_balanced(s)
    t = _cyclic_core_text(s) * 2
    plus: list[int] = []
    minus: list[int] = []
    for r in range(len(t)):
        p, m = _literal_adjacencies(t[r:] + t[:r])
        plus += p
        minus += m
    ext = lambda xs: (min(xs), max(xs)) if xs else (None, None)  # noqa: E731
    return ext(plus) + ext(minus)


def scan_power_crosscheck(s: Word) -> bool:
    from .words import scan_extremes

    st = scan_extremes(s)
    return (st.min_plus, st.max_plus, st.min_minus, st.max_minus) == literal_scan(s)


def verify_candidate_ranges(s: Word, widen: int = 10) -> bool:
    """Every alpha/beta pass near the candidate ranges lies inside them."""
    from .classify import candidate_parameters
    from .words import scan_extremes

    _check_balanced(s)
    if height_membership(s) is not Cone.NEITHER:
        raise ValueError("the relator is not in the finite branch")
    alphas, betas = candidate_parameters(scan_extremes(s))
    for name, cands in (("alpha", alphas), ("beta", betas)):
        lo, hi = min(cands) - widen, max(cands) + widen
        found = enumerate_family_auts_one(s, name, range(lo, hi + 1))
        if not found <= set(cands):
            return False
    return True


def enumerate_family_auts_one(s: Word, name: str, ks: Iterable[int]) -> set[int]:
    return {k for k in ks if oracle_is_aut(s, name, k)}


def _random_reduced(rng: random.Random, length: int) -> list[int]:
    letters = [rng.choice((1, -1, 2, -2))]
    while len(letters) < length:
        x = rng.choice((1, -1, 2, -2))
        if x != -letters[-1]:
            letters.append(x)
    return letters


def _cone_word(rng: random.Random, max_len: int) -> Word:
    x = A_GEN * B_GEN * A_GEN.inverse()
    if rng.random() < 0.5:
        x = A_GEN.inverse() * B_GEN * A_GEN
    gens = {1: x, -1: x.inverse(), 2: B_GEN, -2: B_GEN.inverse()}
    m = rng.randint(2, max(2, max_len // 2))
    w = Word()
    for code in _random_reduced(rng, m):
        w = w * gens[code]
    letters = w.letters
    r = rng.randrange(len(letters)) if letters else 0
    return free_reduce(letters[r:] + letters[:r])


def _acceptable(w: Word, balanced: bool, finite_branch: Optional[bool], max_len: int,
                allow_derived: bool) -> bool:
    from .words import is_cyclically_reduced, is_proper_power

    if not w or len(w) > max_len or not is_cyclically_reduced(w):
        return False
    if len(w.syllables) == 1 and w.syllables[0][0] == "b" and abs(w.syllables[0][1]) == 1:
        return False
    if is_proper_power(w)[0]:
        return False
    sa, sb = w.exponent_sum("a"), w.exponent_sum("b")
    if not allow_derived and sa == 0 and sb == 0:
        return False
    if balanced or finite_branch is not None:
        if sa != 0 or not any(abs(x) == 1 for x in w.letters):
            return False
    if finite_branch is not None:
        neither = height_membership(w) is Cone.NEITHER
        if neither != finite_branch:
            return False
    return True


def random_relator(cfg: OracleConfig, balanced: bool = False, finite_branch: Optional[bool] = None,
                   rng: Optional[random.Random] = None, allow_derived: bool = False,
                   max_tries: int = 100000) -> Word:
    """Sample a cyclically reduced relator meeting the constraints.

    ``finite_branch=True`` asks for words outside both cones (implies
    balanced), ``False`` for cone words, ``None`` for no preference.  Cone
    words are built directly from the cone generators and then rotated, since
    rejection sampling almost never hits them at moderate length.
    """
    rng = rng if rng is not None else random.Random(cfg.rng_seed)
    for _ in range(max_tries):
        if finite_branch is False:
            w = _cone_word(rng, cfg.max_word_len)
        else:
            length = rng.randint(1, cfg.max_word_len)
            w = free_reduce(_random_reduced(rng, length))
        if _acceptable(w, balanced, finite_branch, cfg.max_word_len, allow_derived):
            return w
    raise RuntimeError(f"no relator met the constraints after {max_tries} tries")


def random_relators(cfg: OracleConfig, count: Optional[int] = None, **constraints) -> list[Word]:
    rng = random.Random(cfg.rng_seed)
    return [random_relator(cfg, rng=rng, **constraints) for _ in range(count or cfg.sample_count)]
