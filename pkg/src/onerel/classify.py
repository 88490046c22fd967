"""Classify Out(G) for ``G = <a, b ; R^n>`` and emit presentations.

After balancing, the relator ``s`` has zero exponent sum in a.  Out(G) is
infinite exactly when ``a -> a b`` fixes ``s``; then it is decided by three
maps (``alpha(0)``, ``beta(0)``, ``zeta(0)``).  Otherwise only finitely many
``alpha(k)`` and ``beta(k)`` can be automorphisms, and the admissible ``k``
are read off the same-sign a-adjacencies of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .autdetect import AutVerdict, delta_syntactic, image_verdict
from .errors import InputError, TheoryViolation
from .maps import family
from .normalize import BalancedPresentation, Branch, balance_relator, detect_branch
from .presentations import GroupPresentation
from .primitive import units
from .words import A_GEN, B_GEN, ScanStats, Word, cyclically_equal, format_word, scan_extremes

COMMUTATOR = A_GEN.inverse() * B_GEN.inverse() * A_GEN * B_GEN


@dataclass(frozen=True)
class OutClass:
    tag: str
    n: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.tag}({self.n})" if self.n is not None else self.tag

    @property
    def infinite(self) -> Optional[bool]:
        if self.tag in ("Z", "ZxC2", "Dinf", "DinfxC2", "DerivedCommutator"):
            return True
        if self.tag in ("Trivial", "C2", "C2xC2", "PrimitiveDnAutCn"):
            return False
        return None


TRIVIAL = OutClass("Trivial")
C2 = OutClass("C2")
C2XC2 = OutClass("C2xC2")
Z = OutClass("Z")
ZXC2 = OutClass("ZxC2")
DINF = OutClass("Dinf")
DINFXC2 = OutClass("DinfxC2")
DERIVED_COMMUTATOR = OutClass("DerivedCommutator")
DERIVED_UNCLASSIFIED = OutClass("DerivedUnclassified")


def primitive_class(n: int) -> OutClass:
    return OutClass("PrimitiveDnAutCn", n)


@dataclass(frozen=True)
class Witnesses:
    """Which family maps are automorphisms of G."""

    delta_in: bool = False
    alpha_ks: frozenset = frozenset()
    beta_ks: frozenset = frozenset()
    zeta0_in: bool = False

    def as_dict(self) -> dict:
        return {
            "delta": self.delta_in,
            "alphas": sorted(self.alpha_ks),
            "betas": sorted(self.beta_ks),
            "zeta0": self.zeta0_in,
        }


@dataclass
class ClassificationReport:
    out_class: OutClass
    witnesses: Witnesses
    balanced: BalancedPresentation
    branch: Branch
    scan: Optional[ScanStats] = None
    out_presentation: Optional[GroupPresentation] = None
    aut_presentation: Optional[GroupPresentation] = None
    trace: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def is_commutator_rotation(s: Word) -> bool:
    return cyclically_equal(s, COMMUTATOR) or cyclically_equal(s, COMMUTATOR.inverse())


def candidate_parameters(stats: ScanStats) -> tuple[list[int], list[int]]:
    """Parameters ``k`` for which alpha(k), beta(k) can possibly be automorphisms."""
    pmin, pmax, mmin, mmax = stats.min_plus, stats.max_plus, stats.min_minus, stats.max_minus
    if None in (pmin, pmax, mmin, mmax):
        raise ValueError("candidate ranges need same-sign adjacencies of both signs")
    alphas = {-(pmax + pmin)} | set(range(mmin - pmin, mmax - pmax + 1))
    betas = {pmax + pmin} | set(range(pmax - mmax, pmin - mmin + 1))
    return sorted(alphas), sorted(betas)


def class_from_witnesses(infinite: bool, w: Witnesses) -> OutClass:
    """Map an automorphism pattern to its Out(G) class, rejecting impossible ones."""
    a, b, z = w.alpha_ks, w.beta_ks, w.zeta0_in
    if infinite:
        pattern = (bool(a), bool(b), z)
        table = {
            (False, False, False): Z,
            (False, False, True): ZXC2,
            (True, False, False): DINF,
            (False, True, False): DINF,
            (True, True, True): DINFXC2,
        }
        if pattern in table and a <= {0} and b <= {0}:
            return table[pattern]
        raise TheoryViolation(f"impossible infinite-branch witness pattern {w.as_dict()}", w)
    if not a and not b:
        return C2 if z else TRIVIAL
    if len(a) + len(b) == 1 and not z:
        return C2
    if len(a) == 1 and len(b) == 1 and z and next(iter(a)) == -next(iter(b)):
        return C2XC2
    raise TheoryViolation(f"impossible finite-branch witness pattern {w.as_dict()}", w)


def _test(s: Word, name: str, k: int, trace: list[dict]) -> bool:
    verdict = image_verdict(s, family(name, k))
    trace.append({"step": "test", "map": f"{name}({k})", "verdict": verdict.value})
    return verdict is not AutVerdict.NOT_AUT


def classify_out(r: Word, n: int) -> ClassificationReport:
    bp = balance_relator(r, n)
    s = bp.s
    branch = detect_branch(bp)
    trace: list[dict] = [
        {"step": "balance", "s": format_word(s), "steps": list(bp.steps), "flags": bp.flags.as_dict()},
        {"step": "branch", "value": branch.value},
    ]
    notes: list[str] = []
    scan = None
    if branch is Branch.DERIVED:
        hit = is_commutator_rotation(s)
        trace.append({"step": "commutator_check", "value": hit})
        witnesses = Witnesses()
        if hit:
            out_class = DERIVED_COMMUTATOR
            notes.append("every automorphism of F(a, b) induces one of G, so Out(G) = Out(F(a, b)) = GL(2, Z)")
        else:
            out_class = DERIVED_UNCLASSIFIED
            notes.append("Out(G) injects canonically into Out(F(a, b)) = GL(2, Z) and is residually finite; "
                         "no finer classification is attempted")
    elif branch is Branch.PRIMITIVE:
        trace.append({"step": "primitive", "n": n})
        witnesses = Witnesses(True, frozenset({0}), frozenset({0}), True)
        out_class = primitive_class(n)
    else:
        infinite = delta_syntactic(s)
        trace.append({"step": "delta_test", "value": infinite})
        if infinite:
            alpha = _test(s, "alpha", 0, trace)
            beta = _test(s, "beta", 0, trace)
            zeta = _test(s, "zeta", 0, trace)
            witnesses = Witnesses(True, frozenset({0} if alpha else ()), frozenset({0} if beta else ()), zeta)
        else:
            scan = scan_extremes(s)
            trace.append({"step": "scan", **scan.as_dict()})
            alphas, betas = candidate_parameters(scan)
            trace.append({"step": "candidates", "alphas": alphas, "betas": betas})
            hit_a = frozenset(k for k in alphas if _test(s, "alpha", k, trace))
            hit_b = frozenset(k for k in betas if _test(s, "beta", k, trace))
            zeta = _test(s, "zeta", 0, trace)
            witnesses = Witnesses(False, hit_a, hit_b, zeta)
        out_class = class_from_witnesses(infinite, witnesses)
    trace.append({"step": "class", "value": str(out_class)})
    report = ClassificationReport(out_class, witnesses, bp, branch, scan, trace=trace, notes=notes)
    if out_class is not DERIVED_UNCLASSIFIED:
        report.out_presentation = emit_out_presentation(out_class, witnesses)
    if branch is not Branch.DERIVED:
        report.aut_presentation = emit_aut_presentation(report)
    return report


def replay_trace(trace: list[dict]) -> OutClass:
    """Recompute the class from the recorded branch and test verdicts alone."""
    steps = {t["step"]: t for t in trace if t["step"] != "test"}
    branch = steps["branch"]["value"]
    if branch == Branch.DERIVED.value:
        return DERIVED_COMMUTATOR if steps["commutator_check"]["value"] else DERIVED_UNCLASSIFIED
    if branch == Branch.PRIMITIVE.value:
        return primitive_class(steps["primitive"]["n"])
    passed = {"alpha": set(), "beta": set(), "zeta": set()}
    for t in trace:
        if t["step"] == "test" and t["verdict"] != AutVerdict.NOT_AUT.value:
            name, k = t["map"].rstrip(")").split("(")
            passed[name].add(int(k))
    w = Witnesses(steps["delta_test"]["value"], frozenset(passed["alpha"]),
                  frozenset(passed["beta"]), 0 in passed["zeta"])
    return class_from_witnesses(w.delta_in, w)


def _sym(name: str, k: int) -> str:
    return f"{name}_{k}"


def emit_out_presentation(c: OutClass, w: Witnesses) -> GroupPresentation:
    tag = c.tag
    if tag == "DerivedUnclassified":
        raise InputError("no presentation is known for this class")
    if tag == "Trivial":
        return GroupPresentation((), (), "trivial")
    if tag == "C2":
        if w.alpha_ks:
            g = _sym("α", next(iter(w.alpha_ks)))
        elif w.beta_ks:
            g = _sym("β", next(iter(w.beta_ks)))
        else:
            g = "ζ"
        return GroupPresentation((g,), (f"{g}^2",), "C2")
    if tag == "C2xC2":
        x, y = _sym("α", next(iter(w.alpha_ks))), _sym("β", next(iter(w.beta_ks)))
        return GroupPresentation((x, y, "ζ"), (f"{x}^2", f"{y}^2", "ζ^2", f"{x} {y} ζ"), "C2 x C2")
    if tag == "Z":
        return GroupPresentation(("δ",), (), "Z")
    if tag == "ZxC2":
        return GroupPresentation(("δ", "ζ"), ("ζ^2", "[δ, ζ]"), "Z x C2")
    if tag == "Dinf":
        g = "α" if w.alpha_ks else "β"
        return GroupPresentation(("δ", g), (f"{g}^2", f"{g} δ = δ^-1 {g}"), "D∞")
    if tag == "DinfxC2":
        return GroupPresentation(
            ("α", "δ", "ζ"),
            ("α^2", "ζ^2", "α δ α = δ^-1", "[α, ζ]", "[δ, ζ]"),
            "D∞ x C2",
        )
    if tag == "PrimitiveDnAutCn":
        n = c.n
        us = units(n)
        psi = {i: _sym("ψ", i) for i in us}
        rels = ["α^2", f"δ^{n}", "α δ α = δ^-1"]
        rels += [f"{psi[i]}^-1 δ {psi[i]} = δ^{i}" for i in us]
        rels += [f"[α, {psi[i]}]" for i in us]
        rels += [f"{psi[i]} {psi[j]} = {psi[i * j % n]}" for i in us for j in us]
        label = f"D{n} ⋊ Aut(C{n})" + (" ≅ C2 x C2" if n == 2 else "")
        return GroupPresentation(("α", "δ", *psi.values()), tuple(rels), label)
    if tag == "DerivedCommutator":
        # x, y, t act on Z^2 as [[0,-1],[1,0]], [[0,-1],[1,1]], [[0,1],[1,0]]
        return GroupPresentation(
            ("x", "y", "t"),
            ("x^4", "x^2 = y^3", "t^2", "(t x)^2", "(t y)^2"),
            "Out(F2) ≅ GL(2, Z)",
        )
    raise ValueError(f"unknown class {c}")


def _w(word: Word) -> str:
    return format_word(word)


def _join(*parts: str) -> str:
    """Juxtapose factors, dropping identities."""
    kept = [x for x in parts if x != "1"]
    return " ".join(kept) if kept else "1"


def emit_aut_presentation(report: ClassificationReport) -> GroupPresentation:
    """Aut(G) as an extension of Inn(G) = G by Out(G).

    ``a``, ``b`` stand for conjugation by those elements; ``x^y`` is
    ``y^-1 x y``.
    """
    if report.branch is Branch.DERIVED:
        raise InputError("Aut(G) presentations need a relator outside the derived subgroup")
    s, n = report.balanced.s, report.balanced.n
    tag, w = report.out_class.tag, report.witnesses
    base = ("a", "b")
    if report.branch is Branch.PRIMITIVE:
        return GroupPresentation(
            ("α", "β", "δ", *base),
            (f"b^{n}",
             "a^α = A", "b^α = b", "α^2 = 1",
             "a^β = a", "b^β = B", "β^2 = 1",
             "a^δ = a b", "b^δ = b", f"δ^{n} = 1",
             "[α, β] = 1",
             "δ^α = δ^-1 b", "δ^β = δ^-1"),
            "Inn(G) extended by the tame outer classes <α, β, δ>" if n > 2 else "Inn(G) extended by C2 x C2",
        )
    rel = f"({_w(s)})^{n}"
    bk = lambda k: _w(B_GEN ** k)  # noqa: E731
    if tag == "Trivial":
        return GroupPresentation(base, (rel,), "G")
    if tag == "C2" and w.alpha_ks:
        k = next(iter(w.alpha_ks))
        g = _sym("α", k)
        return GroupPresentation(
            (g, *base),
            (rel, f"{g}^2 = {bk(k)}", f"a^{g} = {_w(A_GEN.inverse() * B_GEN ** k)}", f"b^{g} = b"),
            "G extended by C2",
        )
    if tag == "C2" and w.beta_ks:
        k = next(iter(w.beta_ks))
        g = _sym("β", k)
        return GroupPresentation(
            (g, *base),
            (rel, f"a^{g} = {_w(A_GEN * B_GEN ** k)}", f"b^{g} = B", f"{g}^2 = 1"),
            "G ⋊ C2",
        )
    if tag == "C2":
        return GroupPresentation(("ζ", *base), (rel, "a^ζ = A", "b^ζ = B", "ζ^2 = 1"), "G ⋊ C2")
    if tag == "C2xC2":
        i = next(iter(w.alpha_ks))
        x, y = _sym("α", i), _sym("β", -i)
        return GroupPresentation(
            (x, y, "ζ", *base),
            (rel,
             f"a^{x} = {_w(A_GEN.inverse() * B_GEN ** i)}", f"b^{x} = b", f"{x}^2 = {bk(i)}",
             f"a^{y} = {_w(A_GEN * B_GEN ** -i)}", f"b^{y} = B", f"{y}^2 = 1",
             "a^ζ = A", "b^ζ = B", "ζ^2 = 1",
             f"{x} {y} = {_join('ζ', bk(-i))}", f"{x} ζ = {_join('ζ', x, bk(-i))}",
             f"{y} {x} = ζ", f"ζ {y} = {_join(x, bk(-i))}"),
            "G extended by C2 x C2",
        )
    if tag == "Z":
        return GroupPresentation(("δ", *base), (rel, "a^δ = a b", "b^δ = b"), "G ⋊ Z")
    if tag == "Dinf" and w.alpha_ks:
        return GroupPresentation(
            ("α", "δ", *base),
            (rel, "a^α = A", "b^α = b", "α^2 = 1", "a^δ = a b", "b^δ = b", "δ^α = δ^-1 b"),
            "G extended by D∞",
        )
    if tag == "Dinf":
        return GroupPresentation(
            ("β", "δ", *base),
            (rel, "a^β = a", "b^β = B", "β^2 = 1", "a^δ = a b", "b^δ = b", "δ^β = δ^-1"),
            "G ⋊ D∞",
        )
    if tag == "ZxC2":
        return GroupPresentation(
            ("ζ", "δ", *base),
            (rel, "a^ζ = A", "b^ζ = B", "ζ^2 = 1", "a^δ = a b", "b^δ = b", "δ^ζ = δ B"),
            "G extended by Z x C2",
        )
    if tag == "DinfxC2":
        return GroupPresentation(
            ("α", "β", "δ", *base),
            (rel,
             "a^α = A", "b^α = b", "α^2 = 1",
             "a^β = a", "b^β = B", "β^2 = 1",
             "a^δ = a b", "b^δ = b",
             "[α, β] = 1",
             "δ^α = δ^-1 b", "δ^β = δ^-1"),
            "G extended by D∞ x C2",
        )
    raise ValueError(f"no Aut(G) presentation for {report.out_class}")


def report_as_dict(report: ClassificationReport) -> dict:
    """The stable JSON form of a classification report."""
    pres = lambda p: p.as_dict() if p is not None else None  # noqa: E731
    return {
        "out_class": str(report.out_class),
        "witnesses": report.witnesses.as_dict(),
        "balanced": {
            "s": format_word(report.balanced.s),
            "n": report.balanced.n,
            "basis_change": str(report.balanced.basis_change),
            "flags": report.balanced.flags.as_dict(),
        },
        "scan": report.scan.as_dict() if report.scan is not None else None,
        "presentations": {"out": pres(report.out_presentation), "aut": pres(report.aut_presentation)},
        "trace": report.trace,
        "notes": report.notes,
    }
