"""Diagram automorphisms: Aut(X), the special subgroup Sigma, and Aut(X) -> Aut(X_0)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import AffineWeight, CartanDatum, ClassicalWeight


@dataclass(frozen=True, order=True)
class DynkinAut:
    """Permutation of the node set; ``perm[i]`` is the image of node i."""

    perm: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def __mul__(self, other: DynkinAut) -> DynkinAut:
        # (self * other)(i) = self(other(i))
        return DynkinAut(tuple(self.perm[j] for j in other.perm))

    def inverse(self) -> DynkinAut:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DynkinAut(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    @classmethod
    def identity(cls, size: int) -> DynkinAut:
        return cls(tuple(range(size)))

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.perm[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.perm[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def act(self, lam: AffineWeight) -> AffineWeight:
        """``Lambda_i -> Lambda_{sigma(i)}``, ``delta -> delta``."""
        new = [Fraction(0)] * len(self.perm)
        for i, c in enumerate(lam.coeffs):
            new[self.perm[i]] = c
        return AffineWeight(tuple(new), lam.delta_coeff)

    def act_coords(self, coords: tuple) -> tuple:
        new = [0] * len(self.perm)
        for i, c in enumerate(coords):
            new[self.perm[i]] = c
        return tuple(new)

    def to_json(self) -> list[int]:
        return list(self.perm)

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "id"


def automorphism_group(d: CartanDatum) -> list[DynkinAut]:
    """Aut(X) by brute-force search against the Cartan matrix."""
    return [DynkinAut(p) for p in d.automorphisms]


def special_nodes(d: CartanDatum) -> tuple[int, ...]:
    return d.special_nodes


def special_automorphism(d: CartanDatum, i: int) -> DynkinAut:
    """tau_i, read off as the Sigma-part of ``t_{-omega_i}``."""
    from .weyl import factor_w_sigma, translation

    if i not in d.special_nodes:
        raise ValueError(f"node {i} is not special for {d.type}")
    if i == 0:
        return DynkinAut.identity(d.n + 1)
    _, tau = factor_w_sigma(translation(d, -d.omega(i)))
    if tau(i) != 0:
        raise AssertionError(f"tau_{i} does not send {i} to 0")
    return tau


def sigma_group(d: CartanDatum) -> dict[int, DynkinAut]:
    return {i: special_automorphism(d, i) for i in d.special_nodes}


def level_zero_action(d: CartanDatum, sigma: DynkinAut, mu: ClassicalWeight) -> ClassicalWeight:
    """``sigma(omega_r) = omega_{sigma(r)} - a_r^vee omega_{sigma(0)}``, extended linearly."""
    out = d.classical_zero()
    for r in d.classical_nodes:
        if mu[r]:
            img = d.omega(sigma(r)) - d.comarks[r] * d.omega(sigma(0))
            out = out + mu[r] * img
    return out


def dominant_representative(d: CartanDatum, mu: ClassicalWeight) -> ClassicalWeight:
    while True:
        i = next((j for j in d.classical_nodes if mu[j] < 0), None)
        if i is None:
            return mu
        mu = d.classical_reflect(i, mu)


def classical_restriction(d: CartanDatum, sigma: DynkinAut) -> dict[int, int]:
    """sigma' on I \\ {0}: ``sigma'(i) = j`` iff ``sigma(omega_i)`` lies in ``W_0 omega_j``."""
    out = {}
    for i in d.classical_nodes:
        dom = dominant_representative(d, level_zero_action(d, sigma, d.omega(i)))
        hits = [j for j in d.classical_nodes if dom == d.omega(j)]
        if len(hits) != 1:
            raise AssertionError(f"sigma(omega_{i}) is not in the orbit of a fundamental weight")
        out[i] = hits[0]
    return out
