from fractions import Fraction

import pytest

from conftest import kr
from krlab.rank2 import is_finite_rank2, reference_graph, regularity_check

CARTANS = {
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def positive_coroots(cartan):
    """Positive coroots in the simple coroot basis, by reflection closure."""
    simple = [(1, 0), (0, 1)]
    roots, frontier = set(simple), list(simple)
    while frontier:
        beta = frontier.pop()
        for i in (0, 1):
            pair = sum(beta[j] * cartan[j][i] for j in (0, 1))
            gamma = tuple(beta[j] - pair * simple[i][j] for j in (0, 1))
            if all(x >= 0 for x in gamma) and any(gamma) and gamma not in roots:
                roots.add(gamma)
                frontier.append(gamma)
    return roots


def weyl_dimension(cartan, lam):
    out = Fraction(1)
    for k in positive_coroots(cartan):
        out *= Fraction(sum(k[j] * (lam[j] + 1) for j in (0, 1)), sum(k))
    return out


def test_root_counts():
    assert [len(positive_coroots(c)) for c in CARTANS.values()] == [2, 3, 4, 4, 6]


def test_known_dimensions():
    assert weyl_dimension(CARTANS["G2"], (1, 0)) == 7 or weyl_dimension(CARTANS["G2"], (0, 1)) == 7
    assert weyl_dimension(CARTANS["A2"], (1, 1)) == 8
    assert weyl_dimension(CARTANS["B2"], (1, 1)) == 16


@pytest.mark.parametrize("name", sorted(CARTANS))
@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1), (2, 1), (0, 3)])
def test_path_model_matches_weyl_dimension(name, lam):
    cartan = CARTANS[name]
    crystal, order, _ = reference_graph(cartan, lam)
    assert len(order) == weyl_dimension(cartan, lam)
    for b in order:
        for i in (0, 1):
            assert crystal.phi(i, b) - crystal.eps(i, b) == crystal.wt(b)[i]
            c = crystal.f(i, b)
            assert c is None or crystal.e(i, c) == b


@pytest.mark.parametrize("name", sorted(CARTANS))
def test_path_model_unique_highest(name):
    crystal, order, _ = reference_graph(CARTANS[name], (1, 1))
    tops = [p for p in order if crystal.e(0, p) is None and crystal.e(1, p) is None]
    assert tops == [order[0]]


def test_affine_pairs_are_skipped():
    B = kr("A2~2", 1, 1)
    assert not is_finite_rank2(B.datum, 0, 1)
    rep = regularity_check(B.graph)
    assert rep.ok and rep.skipped_pairs == [(0, 1)] and rep.checked == 0


@pytest.mark.parametrize("code, r, s", [("A2~1", 1, 2), ("A3~1", 2, 1), ("A4~2", 1, 2)])
def test_kr_regular(code, r, s):
    rep = regularity_check(kr(code, r, s).graph)
    assert rep.ok and rep.checked > 0
