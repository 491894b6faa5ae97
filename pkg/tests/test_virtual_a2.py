import pytest

from conftest import kr
from krlab.crystal import check_axioms
from krlab.errors import AssumptionViolation
from krlab.rank2 import regularity_check
from krlab.virtual_a2 import VirtualKR, build_virtual, classical_highest, expected_display, lem_y_instance

FROZEN = {
    ("A2~2", 1, 1): (3, "2 ⊗ 1"),
    ("A4~2", 1, 1): (5, "4 3 2 ⊗ 1"),
    ("A4~2", 2, 1): (10, "4 3 ⊗ 2 1"),
    ("A4~2", 1, 2): (15, "4^2 3^2 2^2 ⊗ 1^2"),
    ("A6~2", 1, 1): (7, "6 5 4 3 2 ⊗ 1"),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_size_and_u(key):
    V = kr(*key)
    size, u = FROZEN[key]
    assert len(V.graph) == size
    assert V.display(V.u) == u
    assert V.tau(0) == 0
    assert V.wt(V.u) == (0,) * len(V.datum.nodes)


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_axioms_and_regularity(key):
    V = kr(*key)
    assert check_axioms(V, V.graph.elements) == []
    assert regularity_check(V.graph).ok


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_ambient_string_lengths(key):
    V = kr(*key)
    for v in V.graph.elements:
        for i in V.datum.nodes:
            for j in V.ambient_colors(i):
                assert V.ambient.eps(j, v) == V.gamma(i) * V.eps(i, v)
                assert V.ambient.phi(j, v) == V.gamma(i) * V.phi(i, v)


def test_operator_colors():
    V = VirtualKR(3, 1, 1)
    assert [V.ambient_colors(i) for i in V.datum.nodes] == [(0,), (1, 5), (2, 4), (3, 3)]
    assert [V.gamma(i) for i in V.datum.nodes] == [1, 1, 1, 2]


def test_doubled_zero_operator_fails():
    V = VirtualKR(2, 1, 1, zero_multiplicity=2)
    g = V.graph
    assert len(g) == 4
    assert check_axioms(V, g.elements) != []
    assert not regularity_check(g).ok
    with pytest.raises(AssumptionViolation):
        V.u


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("s", [1, 2])
def test_lem_y_rows(n, s):
    for r in range(1, n + 1):
        V = VirtualKR(n, r, s)
        for k in range(r):
            out = lem_y_instance(V, k)
            assert out["ok"], out
            assert out["b"] == expected_display(n, r, s, k, "b")


def test_lem_y_example():
    out = lem_y_instance(VirtualKR(2, 2, 1), 1)
    assert (out["b"], out["y"], out["f0s_y"]) == ("3 1 ⊗ 2 1", "4 2 ⊗ 2 1", "2 1 ⊗ 2 1")


def test_classical_highest_and_range():
    V = VirtualKR(2, 2, 1)
    assert classical_highest(V, 0) == V.u
    assert V.display(classical_highest(V, 2)) == "2 1 ⊗ 2 1"
    with pytest.raises(ValueError):
        build_virtual(2, 3, 1)
