from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from krlab.crystal import check_axioms, k_highest_vectors
from krlab.tableaux import (SSYT, ClassicalTableauCrystal, all_ssyt, check_partition, e_sig, f_sig,
                            generate_B, partition_from_weight, yamanouchi)

SHAPES = [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1), (3, 2), (3, 3), (3, 2, 1), (3, 3, 3)]


def schur(shape, k):
    """Bialternant formula in k variables."""
    xs = sympy.symbols(f"x1:{k + 1}")
    lam = list(shape) + [0] * (k - len(shape))
    num = sympy.Matrix(k, k, lambda i, j: xs[i] ** (lam[j] + k - 1 - j))
    den = sympy.Matrix(k, k, lambda i, j: xs[i] ** (k - 1 - j))
    return xs, sympy.expand(sympy.cancel(num.det() / den.det()))


def hook_content(shape, k):
    out = Fraction(1)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])]
    for r, p in enumerate(shape):
        for c in range(p):
            out *= Fraction(k + c - r, (p - c - 1) + (conj[c] - r - 1) + 1)
    return out


@pytest.mark.parametrize("shape, n", [(sh, n) for n in (1, 2, 3) for sh in SHAPES if len(sh) <= n + 1])
def test_weight_multiset_is_schur(shape, n):
    xs, s = schur(shape, n + 1)
    tabs = list(all_ssyt(shape, n + 1))
    poly = sympy.expand(sum(sympy.prod([x ** e for x, e in zip(xs, T.content(n + 1))]) for T in tabs))
    assert sympy.expand(poly - s) == 0
    assert len(tabs) == hook_content(shape, n + 1)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("shape", [(2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_crystal_connected_with_unique_highest(shape, n):
    g = generate_B(shape, n)
    assert len(g) == hook_content(shape, n + 1)
    assert k_highest_vectors(g, g.elements, g.index_set) == [yamanouchi(shape)]
    assert check_axioms(g, g.elements, g.index_set) == []


def test_signature_rule_examples():
    T = SSYT(((1, 1), (2,)))
    assert f_sig(1, T) == SSYT(((1, 2), (2,)))
    assert f_sig(2, T) == SSYT(((1, 1), (3,)))
    assert e_sig(1, T) is None and e_sig(2, T) is None
    assert f_sig(1, SSYT(((1, 2), (2,)))) is None


def test_display_and_partitions():
    c = ClassicalTableauCrystal(2, (2, 1))
    assert c.display(SSYT(((1, 1), (2,)))) == SSYT(((1, 1), (2,))).row_word_display()
    assert partition_from_weight((1, 2)) == (3, 2)
    assert check_partition((2, 1, 0)) == (2, 1)
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        ClassicalTableauCrystal(1, (1, 1, 1))


@given(st.sampled_from([(2, 1), (3, 2), (2, 2, 1)]), st.data())
def test_f_then_e_round_trip(shape, data):
    tabs = list(all_ssyt(shape, 4))
    T = data.draw(st.sampled_from(tabs))
    i = data.draw(st.integers(1, 3))
    U = f_sig(i, T)
    assert U is None or (U.is_semistandard() and e_sig(i, U) == T)
