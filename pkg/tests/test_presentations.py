import numpy as np
import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from onerel.classify import (
    C2,
    DERIVED_COMMUTATOR,
    DERIVED_UNCLASSIFIED,
    DINF,
    DINFXC2,
    TRIVIAL,
    Z,
    ZXC2,
    Witnesses,
    classify_out,
    emit_aut_presentation,
    emit_out_presentation,
    primitive_class,
)
from onerel.errors import InputError
from onerel.maps import IDENTITY_MAP, compose, conjugation, family, invert
from onerel.presentations import GroupPresentation, relator_symbols, relator_word
from onerel.primitive import primitive_out_order, realize_primitive_out
from onerel.words import A_GEN, B_GEN, parse_word

p = parse_word
fs = frozenset

# relators with a known class, one per witness pattern
SAMPLES = {
    "Z": ("a b A b^2 a b^3 A b^4", 2),
    "Dinf_alpha": ("a b A b^2 a b^3 A b a b^2 A b^3", 2),
    "Dinf_beta": ("a b A b^2", 2),
    "ZxC2": ("a b A b^2 a b^2 A b a b^3 A b^3", 2),
    "DinfxC2": ("a b A b", 3),
    "C2xC2": ("a^2 b A^2 b", 2),
    "C2_beta": ("a^2 b A b^2 A b^3", 2),
    "Trivial": ("a^3 b A^3 b^2 a b A b", 2),
    "Primitive5": ("a^2 b a b", 5),
    "Primitive2": ("a", 2),
}


def evaluate(word, assign, mul, inv, one):
    out = one
    for sym, e in word:
        x = assign[sym] if e > 0 else inv(assign[sym])
        for _ in range(abs(e)):
            out = mul(out, x)
    return out


# the mini-language

def test_relator_word_forms():
    assert relator_word("α^2") == [("α", 2)]
    assert relator_word("α δ α = δ^-1") == [("α", 1), ("δ", 1), ("α", 1), ("δ", 1)]
    assert relator_word("[δ, ζ]") == [("δ", -1), ("ζ", -1), ("δ", 1), ("ζ", 1)]
    assert relator_word("a^β = A b^2", ("β", "a", "b")) == [("β", -1), ("a", 1), ("β", 1), ("b", -2), ("a", 1)]
    assert relator_word("(t x)^2") == [("t", 1), ("x", 1), ("t", 1), ("x", 1)]
    assert relator_word("ψ_3 ψ_-1 = 1") == [("ψ_3", 1), ("ψ_-1", 1)]
    assert relator_word("x x^-1") == []


@pytest.mark.parametrize("text", ["α^", "(α", "[α δ]", "α = β = γ", "α)", "α ^ ^"])
def test_relator_word_errors(text):
    with pytest.raises(ValueError):
        relator_word(text)


def test_relator_word_rejects_unknown_generators():
    with pytest.raises(ValueError):
        relator_word("α β", ("α",))


def test_relator_symbols_fold_inverse_letters():
    assert relator_symbols("a^β = A b^2") == {"a", "b", "β"}


def test_presentation_text():
    assert str(GroupPresentation((), (), "trivial")) == "⟨ | ⟩"
    assert str(GroupPresentation(("δ",), (), "Z")) == "⟨ δ | ⟩"
    assert str(GroupPresentation(("x",), ("x^2",), "C2")) == "⟨ x | x^2 ⟩"
    assert GroupPresentation(("x",), ("x^2",), "C2").as_dict() == {
        "generators": ["x"], "relators": ["x^2"], "iso_label": "C2"}


# Out(G) presentations

def test_out_presentation_examples():
    dinf = emit_out_presentation(DINF, Witnesses(True, fs(), fs({0}), False))
    assert dinf.generators == ("δ", "β")
    assert dinf.relators == ("β^2", "β δ = δ^-1 β")
    assert emit_out_presentation(TRIVIAL, Witnesses()) == GroupPresentation((), (), "trivial")
    assert "C2 x C2" in emit_out_presentation(primitive_class(2), Witnesses()).iso_label
    with pytest.raises(InputError):
        emit_out_presentation(DERIVED_UNCLASSIFIED, Witnesses())


@pytest.mark.parametrize("name", sorted(SAMPLES))
def test_symbols_are_generators(name):
    rep = classify_out(p(SAMPLES[name][0]), SAMPLES[name][1])
    for pres in (rep.out_presentation, rep.aut_presentation):
        assert pres.symbols() <= set(pres.generators)
        pres.words()  # every relator parses against its generators


def fp_order(pres: GroupPresentation) -> int:
    names = [f"g{i}" for i in range(len(pres.generators))]
    F, *gens = free_group(" ".join(names))
    assign = dict(zip(pres.generators, gens))
    rels = [evaluate(w, assign, lambda x, y: x * y, lambda x: x ** -1, F.identity) for w in pres.words()]
    return FpGroup(F, rels).order()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_primitive_out_presentation_order(n):
    pres = emit_out_presentation(primitive_class(n), Witnesses())
    assert fp_order(pres) == primitive_out_order(n)


@pytest.mark.parametrize("name, order", [("C2xC2", 4), ("C2_beta", 2)])
def test_finite_out_presentation_orders(name, order):
    rep = classify_out(p(SAMPLES[name][0]), SAMPLES[name][1])
    assert fp_order(rep.out_presentation) == order


def test_c2_variants_have_order_two():
    for w in (Witnesses(False, fs({3}), fs(), False), Witnesses(False, fs(), fs(), True)):
        assert fp_order(emit_out_presentation(C2, w)) == 2


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_primitive_relators_hold_in_realised_group(n):
    g = realize_primitive_out(n)
    pres = emit_out_presentation(primitive_class(n), Witnesses())
    assign = {"α": (-1, 0, 1), "δ": (1, 1, 1)}
    assign.update({f"ψ_{k}": (1, 0, k) for k in range(1, n)})
    index = {el: j for j, el in enumerate(g.elements)}
    inverse = {x: next(y for y in g.elements if g.multiply(x, y) == (1, 0, 1)) for x in g.elements}
    for w in pres.words():
        assert evaluate(w, assign, g.multiply, inverse.__getitem__, (1, 0, 1)) == (1, 0, 1)
    # the generators really generate
    gens = {assign[x] for x in pres.generators}
    seen, frontier = {(1, 0, 1)}, [(1, 0, 1)]
    while frontier:
        frontier = [g.multiply(x, y) for x in frontier for y in gens if g.multiply(x, y) not in seen]
        seen.update(frontier)
    assert len(seen) == g.order and len(index) == g.order


# infinite classes in concrete matrix models: affine maps x -> +-x + t of Z,
# with an extra central sign for the C2 factor

def affine(sign, shift, c=1):
    return np.array([[sign, shift, 0], [0, 1, 0], [0, 0, c]], dtype=object)


MODELS = {
    "Z": {"δ": affine(1, 1)},
    "ZxC2": {"δ": affine(1, 1), "ζ": affine(1, 0, -1)},
    "Dinf": {"δ": affine(1, 1), "α": affine(-1, 0), "β": affine(-1, 0)},
    "DinfxC2": {"δ": affine(1, 1), "α": affine(-1, 0), "ζ": affine(1, 0, -1)},
}


def inv_affine(m):
    sign, shift, c = m[0, 0], m[0, 1], m[2, 2]
    return affine(sign, -sign * shift, c)


@pytest.mark.parametrize("cls, w", [
    (Z, Witnesses(True)),
    (ZXC2, Witnesses(True, zeta0_in=True)),
    (DINF, Witnesses(True, fs({0}), fs(), False)),
    (DINF, Witnesses(True, fs(), fs({0}), False)),
    (DINFXC2, Witnesses(True, fs({0}), fs({0}), True)),
])
def test_infinite_presentations_hold_in_models(cls, w):
    pres = emit_out_presentation(cls, w)
    model = MODELS[cls.tag]
    one = affine(1, 0)
    for word in pres.words():
        val = evaluate(word, model, lambda x, y: x.dot(y), inv_affine, one)
        assert (val == one).all(), word
    # delta has infinite order in the model
    assert model["δ"][0, 1] == 1


def test_gl2z_presentation_holds_for_matrices():
    pres = emit_out_presentation(DERIVED_COMMUTATOR, Witnesses())
    mats = {"x": np.array([[0, -1], [1, 0]]), "y": np.array([[0, -1], [1, 1]]), "t": np.array([[0, 1], [1, 0]])}
    one = np.eye(2, dtype=int)
    inv = lambda m: np.round(np.linalg.inv(m)).astype(int)  # noqa: E731
    for word in pres.words():
        assert (evaluate(word, mats, np.dot, inv, one) == one).all()


# Aut(G) presentations: relations other than the defining relator hold exactly
# among automorphisms of F(a, b), with a, b standing for inner automorphisms

def aut_assignment(tag, witnesses, n):
    out = {"a": conjugation(A_GEN), "b": conjugation(B_GEN), "δ": family("delta", 1),
           "α": family("alpha", 0), "β": family("beta", 0), "ζ": family("zeta", 0)}
    for k in witnesses.alpha_ks:
        out[f"α_{k}"] = family("alpha", k)
    for k in witnesses.beta_ks:
        out[f"β_{k}"] = family("beta", k)
    return out


def reduce_mod_b_order(w, n):
    """Normal form in Z * C_n (a infinite, b of order n)."""
    out = []
    for g, e in w.syllables:
        if g == "b":
            e %= n
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out.pop()[1] + e
            e2 = e2 % n if g == "b" else e2
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


@pytest.mark.parametrize("name", sorted(SAMPLES))
def test_aut_relations_hold(name):
    text, n = SAMPLES[name]
    rep = classify_out(p(text), n)
    pres = rep.aut_presentation
    assign = aut_assignment(rep.out_class.tag, rep.witnesses, n)
    primitive = name.startswith("Primitive")
    words = pres.words()
    assert pres.relators[0] == (f"b^{n}" if primitive else f"({rep.balanced.s})^{n}")
    for rel, word in zip(pres.relators[1:], words[1:]):
        val = evaluate(word, assign, compose, invert, IDENTITY_MAP)
        if primitive:
            # only required in G, where b has order n
            assert all(reduce_mod_b_order(img, n) == reduce_mod_b_order(ref, n)
                       for img, ref in ((val.image_a, A_GEN), (val.image_b, B_GEN))), rel
        else:
            assert val == IDENTITY_MAP, rel


def test_aut_presentation_labels():
    labels = {name: classify_out(p(t), n).aut_presentation.iso_label for name, (t, n) in SAMPLES.items()}
    assert labels["C2_beta"] == "G ⋊ C2"
    assert labels["Dinf_beta"] == "G ⋊ D∞"
    assert labels["Trivial"] == "G"
    assert labels["Z"] == "G ⋊ Z"
    prim = classify_out(p("a^2 b a b"), 5).aut_presentation
    assert "b^5" in prim.relators and "δ^5 = 1" in prim.relators and "a^δ = a b" in prim.relators


def test_aut_presentation_rejects_derived():
    rep = classify_out(p("a b A B"), 2)
    assert rep.aut_presentation is None
    with pytest.raises(InputError):
        emit_aut_presentation(rep)
