import pytest
from hypothesis import given
from hypothesis import strategies as st

from onerel.autdetect import AutVerdict, delta_syntactic, image_verdict, is_relator_auto
from onerel.errors import InputError, NotABasisError
from onerel.maps import IDENTITY_MAP, GenMap, apply, compose, conjugation, family
from onerel.oracle import free_conjugate
from onerel.words import Cone, free_reduce, height_membership, parse_word

from conftest import balanced_words, short_words
from test_maps import random_basis

p = parse_word
FIX, INV, NOT = AutVerdict.FIXES_RELATOR, AutVerdict.INVERTS_RELATOR, AutVerdict.NOT_AUT
FAMS = ("alpha", "beta", "zeta", "delta")


def oracle_verdict(s, m):
    image = apply(m, s)
    if free_conjugate(image, s):
        return FIX
    if free_conjugate(image, s.inverse()):
        return INV
    return NOT


def test_verdict_examples():
    r = p("a b A b^2")
    assert is_relator_auto(r, family("delta", 1)) is FIX
    assert is_relator_auto(r, family("beta", 0)) is INV
    assert is_relator_auto(r, family("alpha", 0)) is NOT
    assert is_relator_auto(p("a b A b"), family("zeta", 0)) is INV


def test_verdict_enum_values():
    assert [v.value for v in AutVerdict] == ["NotAut", "FixesRelator", "InvertsRelator"]
    assert FIX.is_aut and INV.is_aut and not NOT.is_aut


def test_rejects_non_basis_and_bad_relators():
    with pytest.raises(NotABasisError):
        is_relator_auto(p("a b A b^2"), GenMap(p("a^2"), p("b")))
    with pytest.raises(InputError):
        is_relator_auto(p(""), IDENTITY_MAP)
    with pytest.raises(InputError):
        is_relator_auto(p("(a b)^2"), IDENTITY_MAP)


@given(balanced_words(), st.sampled_from(FAMS), st.integers(-4, 4))
def test_verdict_matches_substring_oracle(s, name, k):
    m = family(name, k)
    assert is_relator_auto(s, m) is oracle_verdict(s, m)


@given(balanced_words())
def test_identity_fixes_every_relator(s):
    assert is_relator_auto(s, IDENTITY_MAP) is FIX


@given(balanced_words(), st.sampled_from(FAMS), st.integers(-3, 3), st.integers(0, 40))
def test_verdict_invariant_under_rotation_and_inversion(s, name, k, shift):
    m = family(name, k)
    v = is_relator_auto(s, m)
    letters = s.letters
    shift %= len(letters)
    rotated = free_reduce(letters[shift:] + letters[:shift])
    assert is_relator_auto(rotated, m) is v
    assert is_relator_auto(s.inverse(), m) is v


@given(balanced_words(), st.sampled_from(FAMS), st.integers(-3, 3), st.sampled_from(FAMS), st.integers(-3, 3))
def test_automorphisms_compose(s, n1, k1, n2, k2):
    m1, m2 = family(n1, k1), family(n2, k2)
    v1, v2 = is_relator_auto(s, m1), is_relator_auto(s, m2)
    if v1.is_aut and v2.is_aut:
        v = is_relator_auto(s, compose(m1, m2))
        assert v.is_aut
        assert (v is FIX) == (v1 is v2)


@given(balanced_words(), short_words, st.integers(0, 10**6), st.integers(0, 8))
def test_inner_and_general_maps_agree_with_oracle(s, w, seed, moves):
    import random

    assert is_relator_auto(s, conjugation(w)) is FIX
    m = random_basis(random.Random(seed), moves)
    assert is_relator_auto(s, m) is oracle_verdict(s, m)


@given(balanced_words())
def test_flip_maps_preserve_length(s):
    for name in ("alpha", "beta", "zeta"):
        assert len(apply(family(name, 0), s)) == len(s)


@given(balanced_words())
def test_delta_syntactic_matches_cone_membership(s):
    assert delta_syntactic(s) == (height_membership(s) is not Cone.NEITHER)


def test_delta_syntactic_examples():
    assert delta_syntactic(p("a b A b^2"))
    assert delta_syntactic(p("A b a b"))  # needs the conjugated comparison
    assert apply(family("delta", 1), p("A b a b")) != p("A b a b")
    assert not delta_syntactic(p("a^2 b A^2 b"))


def test_image_verdict_skips_basis_check():
    s = p("a b A b^2")
    assert image_verdict(s, GenMap(p("a"), p("b"))) is FIX
    assert image_verdict(s, GenMap(p("a^2"), p("b"))) is NOT
