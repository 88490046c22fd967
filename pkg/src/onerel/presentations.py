"""Symbolic group presentations and the relator mini-language.

Relators are short strings over named generators: ``"α^2"``,
``"α δ α = δ^-1"``, ``"[δ, ζ]"``, ``"a^β = A b^2"`` (``x^y`` is ``y^-1 x y``,
upper-case ``A``/``B`` are inverses of ``a``/``b``).  :func:`relator_word`
turns one into a list of ``(generator, exponent)`` pairs so a presentation
can be fed to a coset enumerator or evaluated on automorphisms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<sym>[^\W\d_](?:_-?\d+)?)|(?P<op>[\^()\[\],=]))")


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[str, ...]
    iso_label: str

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.relators)
        return " ".join(x for x in ("⟨", gens, "|", rels, "⟩") if x)

    def as_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": list(self.relators),
            "iso_label": self.iso_label,
        }

    def symbols(self) -> set[str]:
        out: set[str] = set()
        for rel in self.relators:
            out.update(relator_symbols(rel))
        return out

    def words(self) -> list[list[tuple[str, int]]]:
        return [relator_word(r, self.generators) for r in self.relators]


def _tokens(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot read relator {text!r} at offset {pos}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def relator_symbols(text: str) -> set[str]:
    """Generator names used by a relator, with ``A``/``B`` folded to ``a``/``b``."""
    syms = set()
    for kind, val in _tokens(text):
        if kind == "sym":
            syms.add(val.lower() if val in ("A", "B") else val)
    return syms


def _inv(w):
    return [(g, -e) for g, e in reversed(w)]


def _power(w, k):
    return w * k if k >= 0 else _inv(w) * (-k)


def _reduce(w):
    out: list[tuple[str, int]] = []
    for g, e in w:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return out


def relator_word(text: str, generators=None) -> list[tuple[str, int]]:
    """Read a relator (or relation ``lhs = rhs``) as the word ``lhs rhs^-1``."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (expected is not None and tok[1] != expected):
            raise ValueError(f"malformed relator {text!r}")
        pos += 1
        return tok

    def symbol(name):
        if name in ("A", "B") and (generators is None or name not in generators):
            return [(name.lower(), -1)]
        if generators is not None and name not in generators:
            raise ValueError(f"symbol {name!r} is not a generator in {text!r}")
        return [(name, 1)]

    def atom():
        kind, val = take()
        if kind == "sym":
            return symbol(val)
        if kind == "int" and val == "1":
            return []
        if val == "(":
            w = expr()
            take(")")
            return w
        if val == "[":
            x = expr()
            take(",")
            y = expr()
            take("]")
            return _inv(x) + _inv(y) + x + y
        raise ValueError(f"malformed relator {text!r}")

    def factor():
        w = atom()
        while peek()[1] == "^":
            take()
            kind, val = take()
            if kind == "int":
                w = _power(w, int(val))
            elif kind == "sym":
                y = symbol(val)
                w = _inv(y) + w + y
            else:
                raise ValueError(f"malformed exponent in {text!r}")
        return w

    def expr():
        w = []
        while peek()[0] is not None and peek()[1] not in (")", "]", ",", "="):
            w += factor()
        return w

    lhs = expr()
    if peek()[1] == "=":
        take()
        lhs = lhs + _inv(expr())
    if pos != len(toks):
        raise ValueError(f"trailing input in relator {text!r}")
    return _reduce(lhs)
