"""Exact computation in the affine Weyl group W and the extended group W~.

Elements are exact linear maps on P in the basis ``Lambda_0..Lambda_n, delta/a_0``.
Words are lists ``[i1, ..., ik]`` meaning the product ``s_{i1} s_{i2} ... s_{ik}``,
so the last letter acts first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import AffineWeight, CartanDatum, ClassicalWeight
from .dynkin import DynkinAut

Matrix = tuple[tuple[Fraction, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
                 for row in a)


def _matvec(a: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def _identity(size: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))


def _from_columns(cols: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(c[i]) for c in cols) for i in range(len(cols)))


@dataclass(frozen=True)
class ExtendedWeylElement:
    datum: CartanDatum = field(compare=False, hash=False, repr=False)
    matrix: Matrix

    def __mul__(self, other: ExtendedWeylElement) -> ExtendedWeylElement:
        return ExtendedWeylElement(self.datum, _matmul(self.matrix, other.matrix))

    def __call__(self, lam: AffineWeight) -> AffineWeight:
        return AffineWeight.from_vector(_matvec(self.matrix, lam.vector()))

    def apply_vector(self, vec: Sequence) -> tuple[Fraction, ...]:
        return _matvec(self.matrix, vec)

    def inverse(self) -> ExtendedWeylElement:
        size = len(self.matrix)
        m = [list(row) + [Fraction(int(i == j)) for j in range(size)]
             for i, row in enumerate(self.matrix)]
        for c in range(size):
            p = next(k for k in range(c, size) if m[k][c] != 0)
            m[c], m[p] = m[p], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for k in range(size):
                if k != c and m[k][c] != 0:
                    fac = m[k][c]
                    m[k] = [x - fac * y for x, y in zip(m[k], m[c])]
        return ExtendedWeylElement(self.datum, tuple(tuple(r[size:]) for r in m))

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.matrix]


def identity(d: CartanDatum) -> ExtendedWeylElement:
    return ExtendedWeylElement(d, _identity(d.n + 2))


def test_point(d: CartanDatum) -> tuple[Fraction, ...]:
    """Regular dominant point ``x = sum_i Lambda_i`` used to detect descents."""
    return tuple(Fraction(1) for _ in d.nodes) + (Fraction(0),)


def simple_reflection(d: CartanDatum, i: int) -> ExtendedWeylElement:
    cols = []
    for j in d.nodes:
        cols.append(d.reflect(i, d.fundamental_weight(j)).vector())
    cols.append(d.delta_over_a0().vector())
    return ExtendedWeylElement(d, _from_columns(cols))


def from_word(d: CartanDatum, word: Sequence[int]) -> ExtendedWeylElement:
    out = identity(d)
    for i in word:
        out = out * simple_reflection(d, i)
    return out


def apply_word(d: CartanDatum, word: Sequence[int], lam: AffineWeight) -> AffineWeight:
    for i in reversed(word):
        lam = d.reflect(i, lam)
    return lam


def in_M_tilde(d: CartanDatum, mu: ClassicalWeight) -> bool:
    return all(mu[i].denominator == 1 and mu[i].numerator % d.c[i] == 0
               for i in d.classical_nodes)


def _m_scale(d: CartanDatum, i: int) -> Fraction:
    # M = Z W_0 theta/a_0; for A_{2n}^(2) this contains alpha_n / 2
    if d.type.family == "A2even" and i == d.n:
        return Fraction(1, 2)
    return Fraction(d.c[i])


def in_M(d: CartanDatum, mu: ClassicalWeight) -> bool:
    coords = d.alpha_coordinates(mu)
    return all((x / _m_scale(d, i + 1)).denominator == 1 for i, x in enumerate(coords))


def translation(d: CartanDatum, alpha: ClassicalWeight, check: bool = True) -> ExtendedWeylElement:
    """t_alpha(lam) = lam + <c,lam> alpha - ((lam|alpha) + (alpha|alpha)<c,lam>/2) delta."""
    if check and not in_M_tilde(d, alpha):
        raise ValueError(f"{alpha} is not in the lattice M~ for {d.type}")
    a_aff = d.section(alpha)
    norm = d.classical_pair(alpha, alpha)
    cols = []
    for j in d.nodes:
        lam = d.fundamental_weight(j)
        lev = d.level(lam)
        shift = d.pair_with_classical(lam, alpha) + norm * lev / 2
        img = lam + lev * a_aff - shift * d.null_root()
        cols.append(img.vector())
    cols.append(d.delta_over_a0().vector())
    return ExtendedWeylElement(d, _from_columns(cols))


def reflection_theta(d: CartanDatum) -> ExtendedWeylElement:
    """s_theta(lam) = lam - (theta|lam)/a_0 * theta."""
    theta = d.theta()
    theta_aff = d.section(theta)
    a0 = d.marks[0]
    cols = []
    for j in d.nodes:
        lam = d.fundamental_weight(j)
        cols.append((lam - (d.pair_with_classical(lam, theta) / a0) * theta_aff).vector())
    cols.append(d.delta_over_a0().vector())
    return ExtendedWeylElement(d, _from_columns(cols))


# -- descents, lengths, factorization ----------------------------------------


def _descent_walk(d: CartanDatum, vec, allowed) -> tuple[list[int], tuple]:
    """Strip left descents (smallest index first) from the point ``vec = w(x)``."""
    word = []
    vec = tuple(vec)
    while True:
        i = next((j for j in allowed if vec[j] < 0), None)
        if i is None:
            return word, vec
        root = d.simple_root(i).vector()
        k = vec[i]
        vec = tuple(v - k * r for v, r in zip(vec, root))
        word.append(i)


def factor_w_sigma(w: ExtendedWeylElement) -> tuple[list[int], DynkinAut]:
    """Write ``w = z tau`` with z in W (reduced word) and tau in Sigma."""
    d = w.datum
    word, end = _descent_walk(d, w.apply_vector(test_point(d)), d.nodes)
    if end != test_point(d):
        raise AssertionError("descent walk did not return to the test point")
    tau_mat = from_word(d, list(reversed(word))) * w  # z^{-1} w
    perm = []
    for j in d.nodes:
        col = [tau_mat.matrix[i][j] for i in d.nodes]
        hits = [i for i, x in enumerate(col) if x != 0]
        if len(hits) != 1 or col[hits[0]] != 1:
            raise ValueError("element is not in W~ (Sigma-part is not a diagram permutation)")
        perm.append(hits[0])
    tau = DynkinAut(tuple(perm))
    if tuple(perm) not in d.automorphisms:
        raise ValueError("element is not in W~ (Sigma-part is not a diagram automorphism)")
    if tau(0) not in d.special_nodes:
        raise ValueError("Sigma-part does not send 0 to a special node")
    return word, tau


def reduced_word(w: ExtendedWeylElement) -> list[int]:
    """Reduced word of ``w`` in W; elements with nontrivial Sigma-part are rejected."""
    word, tau = factor_w_sigma(w)
    if not tau.is_identity():
        raise ValueError(f"element has nontrivial Sigma-part {tau}; factor it first")
    return word


def length(w: ExtendedWeylElement) -> int:
    """Length of the W-part (``l(z tau) = l(z)``)."""
    return len(factor_w_sigma(w)[0])


def min_coset_rep_left_W0(w: ExtendedWeylElement) -> tuple[list[int], list[int]]:
    """``w = w1 w2`` with w1 in W_0 and w2 minimal in ``W_0 w``.

    Returns reduced words ``(w1_word, w2_word)``; the factorization is length additive.
    """
    d = w.datum
    w1_word, end = _descent_walk(d, w.apply_vector(test_point(d)), d.classical_nodes)
    # end = w2(x); the remaining descents (all at node 0 first) give w2
    w2_word, fin = _descent_walk(d, end, d.nodes)
    if fin != test_point(d):
        raise ValueError("element has nontrivial Sigma-part; factor it first")
    return w1_word, w2_word


def shortest_to_antidominant(d: CartanDatum, lam: ClassicalWeight) -> list[int]:
    """Shortest ``w in W_0`` with ``w(lam)`` antidominant, as a reduced word."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    applied = []
    mu = lam
    while True:
        i = next((j for j in d.classical_nodes if mu[j] > 0), None)
        if i is None:
            return list(reversed(applied))
        mu = d.classical_reflect(i, mu)
        applied.append(i)


def apply_classical_word(d: CartanDatum, word: Sequence[int], mu: ClassicalWeight) -> ClassicalWeight:
    for i in reversed(word):
        if i == 0:
            raise ValueError("classical words may not contain node 0")
        mu = d.classical_reflect(i, mu)
    return mu


def longest_classical_word(d: CartanDatum) -> list[int]:
    rho = d.classical(1 for _ in d.classical_nodes)
    return shortest_to_antidominant(d, rho)


def lambda_star(d: CartanDatum, lam: ClassicalWeight) -> ClassicalWeight:
    """``lam* = -w_0(lam)``."""
    return -apply_classical_word(d, longest_classical_word(d), lam)


def wtilde_word(d: CartanDatum, r: int) -> list[int]:
    """The explicit reduced word of the minimal coset representative w_2 for ``t_{-c_r omega_r}``."""
    fam = d.type.family
    word: list[int] = []
    if fam in ("B", "D", "A2odd"):
        if r % 2 == 0:
            i = r // 2
            for k in range(i, 0, -1):
                word += [0] + list(range(2, 2 * k)) + list(range(1, 2 * k - 1))
        else:
            i = (r - 1) // 2
            for k in range(i, 0, -1):
                word += [0] + list(range(2, 2 * k + 1)) + list(range(1, 2 * k))
    elif fam in ("C", "A2even", "D2"):
        for k in range(r, 0, -1):
            word += [0] + list(range(1, k))
    else:
        raise ValueError(f"no explicit w_2 formula for family {fam}")
    return word


def classical_translation_part(w: ExtendedWeylElement) -> ClassicalWeight:
    """mu with ``w = t_mu u`` (u in W_0), read from the level-one action on Lambda_0."""
    d = w.datum
    img = w(d.fundamental_weight(0))
    return d.classical_projection(img)


def sigma_part_by_coset(w: ExtendedWeylElement) -> int:
    """Special node j whose tau_j is the Sigma-part of w, found via ``-mu = omega_j mod M``."""
    d = w.datum
    mu = classical_translation_part(w)
    hits = [j for j in d.special_nodes if in_M(d, -mu - d.omega(j))]
    if len(hits) != 1:
        raise ValueError("no unique coset representative: element is not in W~")
    return hits[0]
