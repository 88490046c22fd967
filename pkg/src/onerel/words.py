"""Words in the free group F(a, b).

A :class:`Word` is kept freely reduced and stored as syllable runs
``(generator, exponent)``; the single-letter view is materialised on demand
for rotation comparisons.  Letters are encoded as integers: ``1`` is ``a``,
``-1`` is ``a^-1``, ``2`` is ``b`` and ``-2`` is ``b^-1``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

GENERATORS = ("a", "b")
_GEN_CODE = {"a": 1, "b": 2}
_CODE_GEN = {1: "a", 2: "b"}
_CHAR_LETTER = {"a": 1, "A": -1, "b": 2, "B": -2}

LetterLike = Union[int, str]


class WordSyntaxError(ValueError):
    """Raised when word text does not match the word grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def _letter(x: LetterLike) -> int:
    if isinstance(x, str):
        try:
            return _CHAR_LETTER[x]
        except KeyError:
            raise ValueError(f"unknown letter {x!r}") from None
    if x not in (1, -1, 2, -2):
        raise ValueError(f"unknown letter code {x!r}")
    return x


class Word:
    """A freely reduced element of F(a, b).

    Build words with :func:`free_reduce`, :func:`parse_word` or the
    module constants :data:`A_GEN` and :data:`B_GEN`; products, inverses and
    powers are freely reduced automatically.

    >>> w = parse_word("a b A b^2")
    >>> str(w * w.inverse())
    '1'
    >>> len(w), w.exponent_sum("b")
    (5, 3)
    """

    __slots__ = ("syllables", "_letters", "_hash")

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        stack: list[list] = []
        for gen, exp in syllables:
            if gen not in _GEN_CODE:
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                continue
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([gen, exp])
        self.syllables: tuple[tuple[str, int], ...] = tuple((g, e) for g, e in stack)
        self._letters: Optional[tuple[int, ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, syllables: tuple[tuple[str, int], ...]) -> "Word":
        w = cls.__new__(cls)
        w.syllables = syllables
        w._letters = None
        w._hash = None
        return w

    @property
    def letters(self) -> tuple[int, ...]:
        if self._letters is None:
            out: list[int] = []
            for gen, exp in self.syllables:
                code = _GEN_CODE[gen] if exp > 0 else -_GEN_CODE[gen]
                out.extend([code] * abs(exp))
            self._letters = tuple(out)
        return self._letters

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        left = list(self.syllables)
        right = list(other.syllables)
        j = 0
        while left and j < len(right) and left[-1][0] == right[j][0]:
            gen, exp = left.pop()
            exp += right[j][1]
            j += 1
            if exp != 0:
                left.append((gen, exp))
                break
        return Word._trusted(tuple(left) + tuple(right[j:]))

    def inverse(self) -> "Word":
        return Word._trusted(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        if k == 0 or not self.syllables:
            return IDENTITY
        if len(self.syllables) == 1:
            gen, exp = self.syllables[0]
            return Word._trusted(((gen, exp * k),))
        if k < 0:
            return self.inverse() ** (-k)
        core, conj = cyclic_reduce(self)
        rep = core.syllables
        body = list(rep)
        for _ in range(k - 1):
            if body[-1][0] == rep[0][0]:
                # cyclically reduced: a shared boundary generator has matching sign
                g, e = body.pop()
                body.append((g, e + rep[0][1]))
                body.extend(rep[1:])
            else:
                body.extend(rep)
        return conj * Word._trusted(tuple(body)) * conj.inverse()

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.syllables if g == gen)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word()
A_GEN = Word((("a", 1),))
B_GEN = Word((("b", 1),))


def free_reduce(letters: Iterable[LetterLike]) -> Word:
    """Freely reduce a sequence of letters (``1, -1, 2, -2`` or ``a, A, b, B``)."""
    stack: list[int] = []
    for x in letters:
        code = _letter(x)
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return Word((_CODE_GEN[abs(c)], 1 if c > 0 else -1) for c in stack)


def exponent_sum(w: Word, gen: str) -> int:
    """The signed number of occurrences of ``gen`` in ``w``."""
    return w.exponent_sum(gen)


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``conjugator * core * conjugator^-1`` with ``core`` cyclically reduced."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    if i == 0:
        return w, IDENTITY
    return free_reduce(letters[i:j + 1]), free_reduce(letters[:i])


def is_cyclically_reduced(w: Word) -> bool:
    letters = w.letters
    return len(letters) < 2 or letters[0] != -letters[-1]


def least_rotation(seq: Sequence) -> int:
    """Index of the lexicographically least rotation of ``seq`` (Booth's algorithm)."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


class CyclicWord:
    """A conjugacy class of F(a, b), represented by a cyclically reduced core.

    Equality and hashing go through the least rotation of the letter ring.
    """

    __slots__ = ("core", "canonical")

    def __init__(self, w: Word):
        self.core = cyclic_reduce(w)[0]
        letters = self.core.letters
        k = least_rotation(letters)
        self.canonical: tuple[int, ...] = letters[k:] + letters[:k]

    @property
    def letters(self) -> tuple[int, ...]:
        return self.core.letters

    def __len__(self) -> int:
        return len(self.canonical)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(self.core.inverse())

    def rotations(self) -> list[Word]:
        letters = self.core.letters
        return [free_reduce(letters[i:] + letters[:i]) for i in range(len(letters))]

    def __repr__(self) -> str:
        return f"CyclicWord({format_word(self.core)!r})"


def _as_cyclic(w: Union[Word, CyclicWord]) -> CyclicWord:
    return w if isinstance(w, CyclicWord) else CyclicWord(w)


def cyclically_equal(u: Union[Word, CyclicWord], v: Union[Word, CyclicWord]) -> bool:
    """True iff the letter rings of ``u`` and ``v`` are rotations of each other."""
    return _as_cyclic(u) == _as_cyclic(v)


def is_proper_power(w: Word) -> tuple[bool, Word, int]:
    """Return ``(m > 1, root, m)`` with ``w = root^m`` and ``m`` maximal."""
    if not w:
        raise ValueError("the identity has no root")
    core, conj = cyclic_reduce(w)
    letters = core.letters
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and all(letters[i] == letters[i - d] for i in range(d, n)):
            break
    m = n // d
    root = conj * free_reduce(letters[:d]) * conj.inverse()
    return m > 1, root, m


@dataclass(frozen=True)
class ScanStats:
    """Extremes of the b-exponents ``i`` over cyclic subwords ``a b^i a`` / ``A b^i A``."""

    min_plus: Optional[int] = None
    max_plus: Optional[int] = None
    min_minus: Optional[int] = None
    max_minus: Optional[int] = None

    @property
    def present(self) -> bool:
        return self.min_plus is not None or self.min_minus is not None

    def as_dict(self) -> dict:
        return {
            "min_plus": self.min_plus,
            "max_plus": self.max_plus,
            "min_minus": self.min_minus,
            "max_minus": self.max_minus,
        }


def same_sign_gaps(letters: Sequence[int]) -> tuple[list[int], list[int]]:
    """b-exponents between cyclically consecutive a-letters of equal sign.

    Returns ``(plus, minus)``: gaps between two ``a`` letters and between two
    ``a^-1`` letters respectively.
    """
    positions = [i for i, x in enumerate(letters) if abs(x) == 1]
    n = len(letters)
    plus: list[int] = []
    minus: list[int] = []
    for idx, p in enumerate(positions):
        q = positions[(idx + 1) % len(positions)]
        if letters[p] != letters[q]:
            continue
        span = range(p + 1, q) if q > p else list(range(p + 1, n)) + list(range(0, q))
        gap = sum(1 if letters[t] == 2 else -1 for t in span)
        (plus if letters[p] == 1 else minus).append(gap)
    return plus, minus


def scan_extremes(s: Union[Word, CyclicWord]) -> ScanStats:
    """Scan the cyclic word ``s`` for same-sign a-adjacencies.

    >>> scan_extremes(parse_word("a^2 b A b^2 A b^3"))
    ScanStats(min_plus=0, max_plus=0, min_minus=2, max_minus=2)
    """
    cyc = _as_cyclic(s)
    letters = cyc.letters
    if not any(abs(x) == 1 for x in letters):
        raise ValueError("scan_extremes needs a word containing the generator a")
    if cyc.core.exponent_sum("a") != 0:
        raise ValueError("scan_extremes needs exponent sum zero in a")
    plus, minus = same_sign_gaps(letters)
    return ScanStats(
        min(plus) if plus else None,
        max(plus) if plus else None,
        min(minus) if minus else None,
        max(minus) if minus else None,
    )


class Cone(enum.Enum):
    POSITIVE = "PositiveCone"   # inside <a b a^-1, b>
    NEGATIVE = "NegativeCone"   # inside <a^-1 b a, b>
    NEITHER = "Neither"


def a_heights(w: Word) -> list[int]:
    """Running a-exponent sums, starting with the empty prefix."""
    heights = [0]
    h = 0
    for gen, exp in w.syllables:
        if gen == "a":
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                h += step
                heights.append(h)
    return heights


def height_membership(s: Word) -> Cone:
    """Decide membership of ``s`` in ``<a b a^-1, b>`` or ``<a^-1 b a, b>``."""
    if s.exponent_sum("a") != 0:
        raise ValueError("height_membership needs exponent sum zero in a")
    hs = set(a_heights(s))
    if hs <= {0, 1}:
        return Cone.POSITIVE
    if hs <= {-1, 0}:
        return Cone.NEGATIVE
    return Cone.NEITHER


def format_word(w: Word) -> str:
    """Canonical text: ``a``, ``b`` for generators, ``A``, ``B`` for inverses."""
    if not w.syllables:
        return "1"
    parts = []
    for gen, exp in w.syllables:
        ch = gen if exp > 0 else gen.upper()
        parts.append(ch if abs(exp) == 1 else f"{ch}^{abs(exp)}")
    return " ".join(parts)


_EXPONENT = re.compile(r"\^\s*(-?\d+)")


def parse_word(text: str) -> Word:
    """Parse word text such as ``"a b A b^2"`` or ``"(a b)^3 a^-2"``.

    Whitespace is ignored, ``A``/``B`` denote inverses, ``1`` the identity.
    """
    pos = 0
    n = len(text)
    # stack of (syllables collected, offset of the opening parenthesis)
    stack: list[tuple[list[tuple[str, int]], int]] = [([], -1)]
    last: Optional[tuple[int, int]] = None  # slice of stack top covering the last atom

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    while pos < n:
        ch = text[pos]
        top = stack[-1][0]
        if ch in _CHAR_LETTER:
            code = _CHAR_LETTER[ch]
            top.append((_CODE_GEN[abs(code)], 1 if code > 0 else -1))
            last = (len(top) - 1, len(top))
            pos += 1
        elif ch == "1":
            last = (len(top), len(top))
            pos += 1
        elif ch == "(":
            stack.append(([], pos))
            last = None
            pos += 1
        elif ch == ")":
            if len(stack) == 1:
                raise WordSyntaxError("unbalanced ')'", pos)
            inner, _ = stack.pop()
            parent = stack[-1][0]
            start = len(parent)
            parent.extend(inner)
            last = (start, len(parent))
            pos += 1
        elif ch == "^":
            if last is None:
                raise WordSyntaxError("exponent without a base", pos)
            m = _EXPONENT.match(text, pos)
            if not m:
                raise WordSyntaxError("malformed exponent", pos)
            k = int(m.group(1))
            lo, hi = last
            base = Word(top[lo:hi])
            del top[lo:]
            top.extend((base ** k).syllables)
            last = None
            pos = m.end()
        else:
            raise WordSyntaxError(f"unexpected character {ch!r}", pos)
        pos = skip_ws(pos)
    if len(stack) != 1:
        raise WordSyntaxError("unclosed '('", stack[-1][1])
    return Word(stack[0][0])
