import pytest

from conftest import kr
from krlab.cartan import datum
from krlab.crystal import FormalFactorTouched, FormalHWCrystal, TensorCrystal, TensorElem
from krlab.demazure import (CharacterPolynomial, build_D, compare_characters, crystal_character,
                            demazure_character, demazure_operator, f_w_closure, split_w,
                            sub_longest_word, verify_A1_A2)
from krlab.tableaux import ClassicalTableauCrystal

# (z, tau, w1, w2, |B'|, |B''|)
FROZEN = {
    ("A2~1", 1, 1): ([2, 1], "(0,1,2)", [2, 1], [], 1, 3),
    ("A2~1", 1, 2): ([2, 1], "(0,1,2)", [2, 1], [], 1, 6),
    ("A3~1", 2, 2): ([2, 1, 3, 2], "(0,2)(1,3)", [2, 1, 3, 2], [], 1, 20),
    ("A2~2", 1, 2): ([1, 0], "id", [1], [0], 3, 6),
    ("A4~2", 1, 2): ([1, 2, 1, 0], "id", [1, 2, 1], [0], 3, 15),
    ("A4~2", 2, 1): ([2, 1, 0, 2, 1, 0], "id", [2, 1, 2], [0, 1, 0], 4, 10),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_reports(key):
    rep = verify_A1_A2(kr(*key))
    assert (rep.z_word, rep.tau, rep.w1, rep.w2, rep.b_prime, rep.b_double_prime) == FROZEN[key]
    assert rep.ok, rep.notes


def test_theta_case_string():
    # r = 1 in A_{2n}^(2): w2 = [0] and B' is the 0-string of length s + 1
    for s in (1, 2, 3):
        rep = verify_A1_A2(kr("A4~2", 1, s))
        assert rep.w2 == [0] and rep.b_prime == s + 1


def test_build_D_and_split():
    d = datum("A2~1")
    z, tau = build_D(d, d.omega(1))
    assert z == [2, 1] and tau.perm == (1, 2, 0)
    assert split_w(d, [2, 1]) == ([2, 1], [])
    with pytest.raises(ValueError):
        build_D(d, -1 * d.omega(1))


def test_demazure_operator_idempotent_and_braid():
    d = datum("A2~1")
    chi = CharacterPolynomial.monomial(d.fundamental_weight(1) + d.fundamental_weight(2))
    once = demazure_operator(d, 1, chi)
    assert demazure_operator(d, 1, once) == once
    assert demazure_character(d, [1, 2, 1], d.fundamental_weight(1) + d.fundamental_weight(2)) == \
        demazure_character(d, [2, 1, 2], d.fundamental_weight(1) + d.fundamental_weight(2))


@pytest.mark.parametrize("code, K, size", [("A2~1", [1, 2], 3), ("A3~1", [1, 2, 3], 6), ("C2~1", [1, 2], 4),
                                           ("D4~1", [1, 2, 3, 4], 12)])
def test_sub_longest_word_length(code, K, size):
    assert len(sub_longest_word(datum(code), K)) == size


def test_longest_word_gives_full_character():
    d = datum("A2~1")
    lam = d.fundamental_weight(1) + d.fundamental_weight(2)
    chi = demazure_character(d, sub_longest_word(d, [1, 2]), lam)
    assert chi.total() == 8
    assert sorted(chi.classical_projection().values()) == [1, 1, 1, 1, 1, 1, 2]


def test_f_w_closure_on_string():
    c = ClassicalTableauCrystal(1, (2,))
    top = c.highest()
    assert len(f_w_closure(c, top, [1])) == 3
    assert len(f_w_closure(c, top, [])) == 1


def test_f_w_closure_touching_formal_raises():
    B = kr("A2~1", 1, 1)
    formal = FormalHWCrystal(B.datum, (1, 0, 0))
    T = TensorCrystal([B, formal])
    with pytest.raises(FormalFactorTouched):
        f_w_closure(T, TensorElem((B.u, formal.element)), [0, 1, 0])


@pytest.mark.parametrize("key", [("A2~1", 2, 2), ("A3~1", 1, 3), ("A4~2", 2, 2), ("A2~2", 1, 3)])
def test_characters_match(key):
    ok, chi, crys = compare_characters(kr(*key))
    assert ok and chi.total() == sum(crys.values())


def test_crystal_character_counts():
    B = kr("A2~1", 1, 1)
    assert crystal_character(B, B.graph.elements) == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
