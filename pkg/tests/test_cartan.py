import pytest
from hypothesis import given, strategies as st

from krlab.cartan import AffineType, all_types, datum, parse_type
from krlab.errors import OutOfScope

TYPES = [t.code() for t in all_types(5)]


def test_parse_codes():
    assert parse_type("A2~1") == AffineType("A", 2)
    assert parse_type("A4~2") == AffineType("A2even", 2)
    assert parse_type("A5~2") == AffineType("A2odd", 3)
    assert parse_type("D4~2") == AffineType("D2", 3)
    assert datum("A4~2").type.code() == "A4~2"


def test_parse_rejects():
    with pytest.raises(OutOfScope):
        parse_type("E6~1")
    with pytest.raises(OutOfScope):
        parse_type("D4~3")
    with pytest.raises(ValueError):
        parse_type("X2")


@pytest.mark.parametrize("code, marks, comarks, c", [
    ("A2~1", (1, 1, 1), (1, 1, 1), (None, 1, 1)),
    ("B3~1", (1, 1, 2, 2), (1, 1, 2, 1), (None, 1, 1, 2)),
    ("C2~1", (1, 2, 1), (1, 1, 1), (None, 2, 1)),
    ("D4~1", (1, 1, 2, 1, 1), (1, 1, 2, 1, 1), (None, 1, 1, 1, 1)),
    ("A4~2", (2, 2, 1), (1, 2, 2), (None, 1, 1)),
    ("A5~2", (1, 1, 2, 1), (1, 1, 2, 2), (None, 1, 1, 1)),
    ("D3~2", (1, 1, 1), (1, 2, 1), (None, 1, 1)),
])
def test_marks_frozen(code, marks, comarks, c):
    d = datum(code)
    assert d.marks == marks
    assert d.comarks == comarks
    assert tuple(d.c) == c


@pytest.mark.parametrize("code", TYPES)
def test_null_root_is_in_kernel(code):
    d = datum(code)
    for i in d.nodes:
        assert sum(d.a(i, j) * d.marks[j] for j in d.nodes) == 0
        assert sum(d.comarks[j] * d.a(j, i) for j in d.nodes) == 0


@pytest.mark.parametrize("code", TYPES)
def test_simple_roots_have_level_zero(code):
    d = datum(code)
    for j in d.nodes:
        assert d.level(d.simple_root(j)) == 0
        assert d.level(d.fundamental_weight(j)) == d.comarks[j]


@pytest.mark.parametrize("code", TYPES)
def test_theta_pairing(code):
    d = datum(code)
    # alpha_0 = delta/a0 - theta/a0 at level zero, so theta/a0 has the opposite pairings
    for i in d.classical_nodes:
        assert d.theta()[i] == -d.marks[0] * d.a(i, 0)


def test_cartan_matrix_c2():
    d = datum("C2~1")
    assert [[d.a(i, j) for j in d.nodes] for i in d.nodes] == [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]


def test_cartan_matrix_a4_twisted():
    d = datum("A4~2")
    assert [[d.a(i, j) for j in d.nodes] for i in d.nodes] == [[2, -2, 0], [-1, 2, -2], [0, -1, 2]]
    assert 2 * d.delta_over_a0() == d.null_root()


@given(st.sampled_from(TYPES), st.data())
def test_reflection_is_involution(code, data):
    d = datum(code)
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=d.n + 1, max_size=d.n + 1))
    lam = d.weight(coeffs)
    i = data.draw(st.sampled_from(d.nodes))
    assert d.reflect(i, d.reflect(i, lam)) == lam
    assert d.level(d.reflect(i, lam)) == d.level(lam)


@given(st.sampled_from(TYPES), st.data())
def test_classical_projection_of_section(code, data):
    d = datum(code)
    mu = d.classical(data.draw(st.lists(st.integers(-3, 3), min_size=d.n, max_size=d.n)))
    assert d.classical_projection(d.section(mu)) == mu
    assert d.level(d.section(mu)) == 0
