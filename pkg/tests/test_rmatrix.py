from bisect import bisect_right

import pytest

from conftest import kr
from krlab.crystal import TensorElem
from krlab.rmatrix import (all_elements, anchor, check_connected, combinatorial_R, dual_u, oracle_R,
                           to_u_sequence, verify_rmatrix, yang_baxter)


def insertion_tableau(word):
    rows = []
    for x in word:
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return rows


def row_word(b):
    return [v for row in reversed(b.rows) for v in row]


FROZEN = {
    ("1^2", "1"): ("1", "1^2"),
    ("1^2", "3"): ("1", "1 3"),
    ("1^2", "2"): ("1", "1 2"),
    ("1 3", "1"): ("3", "1^2"),
}


def test_frozen_images():
    B1, B2 = kr("A2~1", 1, 2), kr("A2~1", 1, 1)
    table = {(B1.display(b.factors[0]), B2.display(b.factors[1])): b for b in all_elements(B1, B2)}
    for key, (x, y) in FROZEN.items():
        img = combinatorial_R(B1, B2, table[key])
        assert (B2.display(img.factors[0]), B1.display(img.factors[1])) == (x, y)


def test_anchor_and_dual_u():
    B = kr("A2~1", 1, 2)
    assert B.display(anchor(B)) == "1^2" and B.display(dual_u(B)) == "3^2"
    V = kr("A4~2", 1, 1)
    assert V.display(anchor(V)) == "3 2 1 ⊗ 1" and V.display(dual_u(V)) == "4 3 2 ⊗ 1"
    assert anchor(V) != V.u


@pytest.mark.parametrize("s1, s2", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 2)])
def test_single_rows_match_insertion(s1, s2):
    # for single rows R is the unique swap preserving the insertion tableau
    B1, B2 = kr("A2~1", 1, s1), kr("A2~1", 1, s2)
    for b in all_elements(B1, B2):
        img = combinatorial_R(B1, B2, b)
        assert insertion_tableau(row_word(b.factors[0]) + row_word(b.factors[1])) == \
            insertion_tableau(row_word(img.factors[0]) + row_word(img.factors[1]))


@pytest.mark.parametrize("key1, key2", [
    (("A2~1", 1, 1), ("A2~1", 2, 1)),
    (("A2~1", 1, 2), ("A2~1", 2, 1)),
    (("A2~1", 2, 1), ("A2~1", 1, 2)),
    (("A3~1", 2, 1), ("A3~1", 1, 2)),
    (("A4~2", 1, 1), ("A4~2", 2, 1)),
    (("A2~2", 1, 1), ("A2~2", 1, 2)),
])
def test_recipe_equals_oracle(key1, key2):
    rep = verify_rmatrix(kr(*key1), kr(*key2))
    assert rep.ok, rep.to_json()


def test_mirror_walk_uses_lowering():
    B1, B2 = kr("A2~1", 1, 1), kr("A2~1", 1, 2)
    seq = to_u_sequence(B1, B2, TensorElem((B1.u, B2.u)))
    assert seq.kind == "f"
    assert seq.target == TensorElem((B1.u, dual_u(B2)))


def test_identity_on_equal_factors():
    B = kr("A2~1", 2, 2)
    R = oracle_R(B, B)
    assert all(R(b) == b for b in R.mapping)
    assert R.violations() == []


def test_connected():
    assert check_connected(kr("A2~1", 1, 1), kr("A2~1", 1, 1))
    assert check_connected(kr("A4~2", 1, 1), kr("A4~2", 2, 1))


def test_yang_baxter():
    assert yang_baxter(kr("A2~1", 1, 1), kr("A2~1", 2, 1), kr("A2~1", 1, 2))


def test_json_sorted():
    R = oracle_R(kr("A2~1", 1, 1), kr("A2~1", 2, 1))
    js = R.to_json()
    assert js == sorted(js) and len(js) == 9
