import random
from math import gcd

import pytest
from hypothesis import given

from onerel.errors import InputError
from onerel.maps import IDENTITY_MAP, abel_matrix, apply
from onerel.normalize import Branch, balance_relator, detect_branch, expected_b_sum
from onerel.oracle import OracleConfig, random_relators
from onerel.words import B_GEN, CyclicWord, cyclic_reduce, is_proper_power, parse_word

from conftest import balanced_words, nonempty_words
from test_maps import all_words, basis_by_commutator, random_basis

p = parse_word


def contract_holds(r, bp):
    s = bp.s
    sa, sb = r.exponent_sum("a"), r.exponent_sum("b")
    image = CyclicWord(apply(bp.basis_change, r))
    return (
        s.exponent_sum("a") == 0
        and abs(s.exponent_sum("b")) == gcd(sa, sb)
        and abs(abel_matrix(bp.basis_change).det) == 1
        and image in (CyclicWord(s), CyclicWord(s).inverse())
        and cyclic_reduce(s)[0] == s
    )


def test_balance_examples():
    bp = balance_relator(p("a^2 b^2"), 2)
    assert bp.s == p("b A b a")
    assert bp.s.exponent_sum("b") == 2
    assert detect_branch(bp) is Branch.GENERIC

    r = p("a b A b^2")
    bp = balance_relator(r, 2)
    assert bp.s == r and bp.basis_change == IDENTITY_MAP

    bp = balance_relator(p("a^2 b a b"), 5)
    assert bp.flags.primitive and bp.s == B_GEN
    assert detect_branch(bp) is Branch.PRIMITIVE
    assert bp.n == 5


def test_primitive_example_extends_to_a_basis():
    r = p("a^2 b a b")
    assert any(basis_by_commutator(r, x) for x in all_words(3) if x)


def test_derived_relator():
    bp = balance_relator(p("a b A B"), 3)
    assert bp.flags.in_derived and not bp.flags.primitive
    assert detect_branch(bp) is Branch.DERIVED
    assert bp.basis_change == IDENTITY_MAP


def test_inverse_primitive_is_normalised_to_b():
    bp = balance_relator(p("B"), 2)
    assert bp.s == B_GEN and bp.flags.primitive
    assert apply(bp.basis_change, p("B")) == B_GEN


@pytest.mark.parametrize("text, n", [("", 2), ("(a b)^2", 2), ("a b A b^2", 1), ("a^4", 3)])
def test_balance_rejects_bad_input(text, n):
    with pytest.raises(InputError):
        balance_relator(p(text), n)


def test_balancing_contract_on_samples():
    sample = random_relators(OracleConfig(max_word_len=40, rng_seed=11), 1000)
    for r in sample:
        bp = balance_relator(r, 2)
        assert contract_holds(r, bp), str(r)
        assert expected_b_sum(r) == abs(bp.s.exponent_sum("b"))


@given(nonempty_words)
def test_balancing_contract_property(r):
    if is_proper_power(r)[0]:
        with pytest.raises(InputError):
            balance_relator(r, 2)
        return
    bp = balance_relator(r, 2)
    if bp.flags.in_derived:
        assert r.exponent_sum("a") == r.exponent_sum("b") == 0
        assert bp.s == cyclic_reduce(r)[0]
    else:
        assert contract_holds(r, bp)
        assert bp.s.exponent_sum("b") != 0


@given(balanced_words())
def test_balancing_is_idempotent(s):
    bp = balance_relator(s, 3)
    assert bp.s == s and bp.basis_change == IDENTITY_MAP
    again = balance_relator(bp.s, 3)
    assert again.s == bp.s


def primitive_by_search(r, max_len):
    """Whether some word of length <= max_len completes r to a basis."""
    return any(basis_by_commutator(r, x) for x in all_words(max_len) if x)


def test_primitive_flag_on_planted_primitives():
    rng = random.Random(5)
    for _ in range(200):
        m = random_basis(rng, rng.randrange(1, 12))
        r = m.image_a
        if is_proper_power(r)[0]:
            continue
        conj = p("a B a")
        assert balance_relator(r, 2).flags.primitive
        assert balance_relator(conj * r * conj.inverse(), 2).flags.primitive


def test_primitive_flag_matches_exhaustive_search():
    seen = {True: 0, False: 0}
    for r in random_relators(OracleConfig(max_word_len=8, rng_seed=3), 150):
        expected = primitive_by_search(r, 6)
        assert balance_relator(r, 2).flags.primitive == expected, str(r)
        seen[expected] += 1
    assert seen[True] > 5 and seen[False] > 5
