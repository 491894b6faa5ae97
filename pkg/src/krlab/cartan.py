"""Affine Cartan data and exact weight-lattice arithmetic.

Nodes are labelled with Kac's conventions; node 0 is always the affine node.
Affine weights are stored in the basis ``Lambda_0, ..., Lambda_n, delta/a_0``
so the null root ``delta`` has coordinate ``a_0`` in the last slot.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import OutOfScope

# family code -> (display template, minimum rank)
FAMILIES = {
    "A": ("A{n}^(1)", 1),
    "B": ("B{n}^(1)", 3),
    "C": ("C{n}^(1)", 2),
    "D": ("D{n}^(1)", 4),
    "A2odd": ("A{m}^(2)", 3),   # A_{2n-1}^(2)
    "A2even": ("A{m}^(2)", 1),  # A_{2n}^(2)
    "D2": ("D{m}^(2)", 2),      # D_{n+1}^(2)
}

UNTWISTED = ("A", "B", "C", "D")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class AffineType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown or unsupported affine family {self.family!r}")
        lo = FAMILIES[self.family][1]
        if self.rank < lo:
            raise ValueError(
                f"rank {self.rank} out of range for {self.family}: need n >= {lo}"
            )

    @property
    def twisted(self) -> bool:
        return self.family not in UNTWISTED

    def code(self) -> str:
        """String form accepted by :func:`parse_type`, e.g. ``A4~2``."""
        n = self.rank
        if self.family in UNTWISTED:
            return f"{self.family}{n}~1"
        if self.family == "A2odd":
            return f"A{2 * n - 1}~2"
        if self.family == "A2even":
            return f"A{2 * n}~2"
        return f"D{n + 1}~2"

    def __str__(self):
        n = self.rank
        m = {"A2odd": 2 * n - 1, "A2even": 2 * n, "D2": n + 1}.get(self.family, n)
        return FAMILIES[self.family][0].format(n=n, m=m)


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])(\d+)~([123])\s*$")


def parse_type(text: str) -> AffineType:
    """Parse ``"A2~1"``, ``"A4~2"``, ``"D5~2"`` ... into an :class:`AffineType`."""
    m = _TYPE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse affine type {text!r} (expected e.g. 'A2~1')")
    letter, sub, sup = m.group(1).upper(), int(m.group(2)), int(m.group(3))
    if letter in "EFG" or sup == 3:
        raise OutOfScope(f"exceptional affine type {text!r} is out of scope")
    if sup == 1:
        return AffineType(letter, sub)
    if letter == "A":
        if sub % 2 == 0:
            return AffineType("A2even", sub // 2)
        return AffineType("A2odd", (sub + 1) // 2)
    if letter == "D":
        return AffineType("D2", sub - 1)
    raise ValueError(f"no twisted affine type {text!r}")


def _cartan_matrix(t: AffineType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    f = t.family
    if f == "A":
        if n == 1:
            bond(0, 1, -2, -2)
        else:
            for i in range(n + 1):
                bond(i, (i + 1) % (n + 1))
    elif f == "B":
        bond(0, 2)
        bond(1, 2)
        for k in range(2, n - 1):
            bond(k, k + 1)
        bond(n - 1, n, -1, -2)
    elif f == "C":
        bond(0, 1, -1, -2)
        for k in range(1, n - 1):
            bond(k, k + 1)
        bond(n - 1, n, -2, -1)
    elif f == "D":
        bond(0, 2)
        bond(1, 2)
        for k in range(2, n - 2):
            bond(k, k + 1)
        bond(n - 2, n - 1)
        bond(n - 2, n)
    elif f == "A2odd":
        bond(0, 2)
        bond(1, 2)
        for k in range(2, n - 1):
            bond(k, k + 1)
        bond(n - 1, n, -2, -1)
    elif f == "A2even":
        if n == 1:
            bond(0, 1, -4, -1)
        else:
            bond(0, 1, -2, -1)
            for k in range(1, n - 1):
                bond(k, k + 1)
            bond(n - 1, n, -2, -1)
    elif f == "D2":
        bond(0, 1, -2, -1)
        for k in range(1, n - 1):
            bond(k, k + 1)
        bond(n - 1, n, -1, -2)
    return tuple(tuple(row) for row in a)


def _kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Primitive positive integer vector spanning the (1-dim) kernel."""
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                fac = m[k][c]
                m[k] = [x - fac * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError("Cartan matrix does not have corank one")
    fc = free[0]
    vec = [Fraction(0)] * ncols
    vec[fc] = Fraction(1)
    for row, pc in zip(m, pivots):
        vec[pc] = -row[fc]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError("kernel vector is not positive")
    return tuple(ints)


def _invert(mat: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        p = next(k for k in range(c, n) if m[k][c] != 0)
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for k in range(n):
            if k != c and m[k][c] != 0:
                fac = m[k][c]
                m[k] = [x - fac * y for x, y in zip(m[k], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def diagram_automorphisms(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All permutations ``p`` of the nodes with ``a[p[i]][p[j]] == a[i][j]``.

    Backtracking search; sorted lexicographically.
    """
    size = len(cartan)
    out = []
    perm = [None] * size
    used = [False] * size

    def extend(i):
        if i == size:
            out.append(tuple(perm))
            return
        for cand in range(size):
            if used[cand]:
                continue
            if all(cartan[cand][perm[j]] == cartan[i][j] and cartan[perm[j]][cand] == cartan[j][i]
                   for j in range(i)):
                perm[i] = cand
                used[cand] = True
                extend(i + 1)
                used[cand] = False
        perm[i] = None

    extend(0)
    return sorted(out)


@dataclass(frozen=True)
class AffineWeight:
    """Element of P: ``sum_i coeffs[i] Lambda_i + delta_coeff * delta/a_0``."""

    coeffs: tuple[Fraction, ...]
    delta_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(x) for x in self.coeffs))
        object.__setattr__(self, "delta_coeff", _frac(self.delta_coeff))

    def __add__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)),
                            self.delta_coeff + other.delta_coeff)

    def __sub__(self, other: AffineWeight) -> AffineWeight:
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, k) -> AffineWeight:
        k = _frac(k)
        return AffineWeight(tuple(k * x for x in self.coeffs), k * self.delta_coeff)

    def __getitem__(self, i: int) -> Fraction:
        """``<alpha_i^vee, self>``."""
        return self.coeffs[i]

    def vector(self) -> tuple[Fraction, ...]:
        return self.coeffs + (self.delta_coeff,)

    @classmethod
    def from_vector(cls, vec: Sequence) -> AffineWeight:
        return cls(tuple(vec[:-1]), vec[-1])

    def to_json(self) -> dict:
        return {"lambda": [frac_str(x) for x in self.coeffs], "delta": frac_str(self.delta_coeff)}

    @classmethod
    def from_json(cls, data: dict) -> AffineWeight:
        return cls(tuple(Fraction(x) for x in data["lambda"]), Fraction(data["delta"]))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*L{i}" if c != 1 else f"L{i}")
        if self.delta_coeff:
            terms.append(f"{self.delta_coeff}*d/a0")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class ClassicalWeight:
    """Element of P_0 in the fundamental weight basis; ``mu[i]`` is the
    coefficient of omega_i for ``1 <= i <= n``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(x) for x in self.coeffs))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i - 1]

    def __add__(self, other):
        return ClassicalWeight(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return ClassicalWeight(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ClassicalWeight(tuple(-x for x in self.coeffs))

    def __rmul__(self, k):
        k = _frac(k)
        return ClassicalWeight(tuple(k * x for x in self.coeffs))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = [f"{c}*w{i + 1}" if c != 1 else f"w{i + 1}"
                 for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class CartanDatum:
    type: AffineType
    cartan_matrix: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    comarks: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.type.rank

    @property
    def nodes(self) -> range:
        return range(self.n + 1)

    @property
    def classical_nodes(self) -> range:
        return range(1, self.n + 1)

    def a(self, i: int, j: int) -> int:
        """``<alpha_i^vee, alpha_j>``."""
        return self.cartan_matrix[i][j]

    @cached_property
    def c(self) -> tuple:
        """``c_i = max(1, a_i / a_i^vee)``; index 0 is unused (``None``)."""
        vals = [None]
        for i in self.classical_nodes:
            q = Fraction(self.marks[i], self.comarks[i])
            vals.append(int(max(Fraction(1), q)))
        return tuple(vals)

    @cached_property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        return tuple(diagram_automorphisms(self.cartan_matrix))

    @cached_property
    def special_nodes(self) -> tuple[int, ...]:
        """Nodes mapped to 0 by some diagram automorphism."""
        return tuple(sorted({i for p in self.automorphisms for i in self.nodes if p[i] == 0}))

    @cached_property
    def classical_cartan(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.a(i, j) for j in self.classical_nodes) for i in self.classical_nodes)

    @cached_property
    def classical_cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.classical_cartan)

    # -- affine weights ------------------------------------------------------

    def zero(self) -> AffineWeight:
        return AffineWeight((0,) * (self.n + 1), 0)

    def fundamental_weight(self, i: int) -> AffineWeight:
        return AffineWeight(tuple(int(j == i) for j in self.nodes), 0)

    def delta_over_a0(self) -> AffineWeight:
        return AffineWeight((0,) * (self.n + 1), 1)

    def null_root(self) -> AffineWeight:
        return AffineWeight((0,) * (self.n + 1), self.marks[0])

    def simple_root(self, j: int) -> AffineWeight:
        """``alpha_j = sum_i a_ij Lambda_i + [j == 0] delta/a_0``."""
        return AffineWeight(tuple(self.a(i, j) for i in self.nodes), int(j == 0))

    def level(self, lam: AffineWeight) -> Fraction:
        return sum((self.comarks[i] * lam.coeffs[i] for i in self.nodes), Fraction(0))

    def weight(self, coeffs: Iterable, delta=0) -> AffineWeight:
        return AffineWeight(tuple(coeffs), delta)

    # -- classical weights ---------------------------------------------------

    def classical(self, coeffs: Iterable) -> ClassicalWeight:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"classical weight needs {self.n} coordinates")
        return ClassicalWeight(coeffs)

    def omega(self, i: int) -> ClassicalWeight:
        """Fundamental weight omega_i; ``omega(0)`` is 0 by convention."""
        return ClassicalWeight(tuple(int(j == i) for j in self.classical_nodes))

    def classical_zero(self) -> ClassicalWeight:
        return ClassicalWeight((0,) * self.n)

    def classical_root(self, j: int) -> ClassicalWeight:
        """alpha_j (j >= 1) in the omega basis."""
        return ClassicalWeight(tuple(self.a(i, j) for i in self.classical_nodes))

    def section(self, mu: ClassicalWeight) -> AffineWeight:
        """``omega_i -> Lambda_i - a_i^vee Lambda_0``."""
        lam0 = -sum((self.comarks[i] * mu[i] for i in self.classical_nodes), Fraction(0))
        return AffineWeight((lam0,) + mu.coeffs, 0)

    def classical_projection(self, lam: AffineWeight) -> ClassicalWeight:
        return ClassicalWeight(lam.coeffs[1:])

    def alpha_coordinates(self, mu: ClassicalWeight) -> tuple[Fraction, ...]:
        """Coefficients of mu in the simple-root basis alpha_1..alpha_n."""
        inv = self.classical_cartan_inverse
        # omega-coords = A0 . alpha-coords  with (A0)_{ij} = <alpha_i^vee, alpha_j>
        return tuple(sum((inv[i][j] * mu.coeffs[j] for j in range(self.n)), Fraction(0))
                     for i in range(self.n))

    def root_norm(self, i: int) -> Fraction:
        """``(alpha_i | alpha_i) = 2 a_i^vee / a_i``."""
        return Fraction(2 * self.comarks[i], self.marks[i])

    def pair_with_classical(self, lam: AffineWeight, mu: ClassicalWeight) -> Fraction:
        """``(lam | mu)`` for mu in P_0 viewed at level zero.

        Expands mu in simple roots and uses ``(alpha_i | lam) = (a_i^vee/a_i) <alpha_i^vee, lam>``.
        """
        coords = self.alpha_coordinates(mu)
        return sum((coords[i - 1] * Fraction(self.comarks[i], self.marks[i]) * lam.coeffs[i]
                    for i in self.classical_nodes), Fraction(0))

    def classical_pair(self, mu: ClassicalWeight, nu: ClassicalWeight) -> Fraction:
        return self.pair_with_classical(self.section(mu), nu)

    def theta(self) -> ClassicalWeight:
        """``theta = sum_{i != 0} a_i alpha_i`` in the omega basis."""
        out = self.classical_zero()
        for i in self.classical_nodes:
            out = out + self.marks[i] * self.classical_root(i)
        return out

    def classical_reflect(self, i: int, mu: ClassicalWeight) -> ClassicalWeight:
        return mu - mu[i] * self.classical_root(i)

    def reflect(self, i: int, lam: AffineWeight) -> AffineWeight:
        return lam - lam.coeffs[i] * self.simple_root(i)

    def __repr__(self):
        return f"CartanDatum({self.type.code()})"


@lru_cache(maxsize=None)
def datum(t: AffineType | str) -> CartanDatum:
    """Complete Cartan data for a nonexceptional affine type."""
    if isinstance(t, str):
        t = parse_type(t)
    mat = _cartan_matrix(t)
    marks = _kernel_vector(mat)
    comarks = _kernel_vector([list(col) for col in zip(*mat)])
    return CartanDatum(t, mat, marks, comarks)


def all_types(max_rank: int) -> list[AffineType]:
    out = []
    for fam, (_, lo) in FAMILIES.items():
        for n in range(lo, max_rank + 1):
            out.append(AffineType(fam, n))
    return out
