"""Demazure crystals, Demazure characters, and the Demazure structure inside KR crystals."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartan import AffineWeight, CartanDatum, ClassicalWeight
from .crystal import (Crystal, FormalFactorTouched, FormalHWCrystal, TensorCrystal, TensorElem,
                      generate, node_cap, NodeCapExceeded)
from .dynkin import DynkinAut
from .weyl import factor_w_sigma, from_word, lambda_star, min_coset_rep_left_W0, translation

Key = tuple[int, ...]  # Lambda_0..Lambda_n coordinates, then the delta/a_0 coefficient


# -- f_w closures --------------------------------------------------------------


@dataclass
class DemazureSet:
    crystal: Crystal
    generator: object
    word: list[int]
    witness: dict = field(default_factory=dict)  # element -> [(i, m), ...] applied in order

    @property
    def elements(self) -> list:
        return list(self.witness)

    def __len__(self):
        return len(self.witness)

    def __contains__(self, b):
        return b in self.witness


def f_w_closure(crystal: Crystal, b, word: Sequence[int], cap: int | None = None) -> DemazureSet:
    """``{f_{i1}^{m1} ... f_{iN}^{mN} b}`` for the word ``[i1, ..., iN]`` (last letter acts first).

    Raises FormalFactorTouched if some operator acts on a formal highest weight factor.
    """
    cap = node_cap() if cap is None else cap
    witness = {b: []}
    for i in reversed(word):
        new = dict(witness)
        for x, path in witness.items():
            m, y = 0, x
            while (y := crystal.f(i, y)) is not None:
                m += 1
                if y not in new:
                    new[y] = path + [(i, m)]
                    if len(new) > cap:
                        raise NodeCapExceeded(f"more than {cap} elements in f_w closure")
        witness = new
    return DemazureSet(crystal, b, list(word), witness)


# -- characters ------------------------------------------------------------------


@dataclass
class CharacterPolynomial:
    """Finite sum of ``c * e^lambda`` with lambda in P (exact integer coordinates)."""

    terms: dict[Key, int] = field(default_factory=dict)

    def add(self, key: Key, c: int) -> None:
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __add__(self, other: CharacterPolynomial) -> CharacterPolynomial:
        out = CharacterPolynomial(dict(self.terms))
        for k, c in other.terms.items():
            out.add(k, c)
        return out

    def __eq__(self, other):
        return isinstance(other, CharacterPolynomial) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    @classmethod
    def monomial(cls, lam: AffineWeight) -> CharacterPolynomial:
        return cls({_key(lam): 1})

    def classical_projection(self) -> Counter:
        """Drop the Lambda_0 and delta coordinates; multiplicities become a Counter."""
        out = Counter()
        for k, c in self.terms.items():
            out[k[1:-1]] += c
        return Counter({k: v for k, v in out.items() if v})

    def total(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> list:
        return [[list(k), c] for k, c in sorted(self.terms.items())]


def _key(lam: AffineWeight) -> Key:
    vec = lam.vector()
    if any(x.denominator != 1 for x in vec):
        raise ValueError(f"{lam} is not integral")
    return tuple(int(x) for x in vec)


def _root_key(d: CartanDatum, i: int) -> Key:
    return _key(d.simple_root(i))


def demazure_operator(d: CartanDatum, i: int, chi: CharacterPolynomial) -> CharacterPolynomial:
    """The isobaric divided difference D_i."""
    alpha = _root_key(d, i)
    out = CharacterPolynomial()
    for lam, c in chi.terms.items():
        m = lam[i]
        if m >= 0:
            for k in range(m + 1):
                out.add(tuple(x - k * a for x, a in zip(lam, alpha)), c)
        elif m <= -2:
            for k in range(1, -m):
                out.add(tuple(x + k * a for x, a in zip(lam, alpha)), -c)
    return out


def demazure_character(d: CartanDatum, word: Sequence[int], lam: AffineWeight) -> CharacterPolynomial:
    """``D_{i1} ... D_{iN} e^lam`` (the last letter acts first)."""
    chi = CharacterPolynomial.monomial(lam)
    for i in reversed(word):
        chi = demazure_operator(d, i, chi)
    return chi


def crystal_character(crystal: Crystal, elements: Iterable) -> Counter:
    """Classical weight multiset ``sum_b e^{wt(b)}`` (Lambda_0 coordinate dropped)."""
    return Counter(tuple(crystal.wt(b))[1:] for b in elements)


# -- D(lambda, s) ----------------------------------------------------------------


def build_D(d: CartanDatum, lam: ClassicalWeight) -> tuple[list[int], DynkinAut]:
    """Factor ``t_{-lam*} = z tau``; D(lam, s) is ``B_z(s Lambda_{tau(0)})``."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    return factor_w_sigma(translation(d, -lambda_star(d, lam)))


def split_w(d: CartanDatum, z_word: Sequence[int]) -> tuple[list[int], list[int]]:
    """Length-additive ``z = w1 w2`` with w1 in W_0 and w2 minimal in ``W_0 z``."""
    return min_coset_rep_left_W0(from_word(d, z_word))


def sub_longest_word(d: CartanDatum, K: Sequence[int]) -> list[int]:
    """Longest element of the parabolic subgroup W_K (K of finite type)."""
    K = list(K)
    vec = {i: 1 for i in K}
    applied = []
    while True:
        i = next((j for j in K if vec[j] > 0), None)
        if i is None:
            return list(reversed(applied))
        m = vec[i]
        for j in K:
            vec[j] -= m * d.a(j, i)
        applied.append(i)
        if len(applied) > 10_000:
            raise ValueError(f"{K} is not of finite type")


def k_character(chi: CharacterPolynomial, K: Sequence[int]) -> Counter:
    out = Counter()
    for k, c in chi.terms.items():
        out[tuple(k[i] for i in K)] += c
    return out


# -- the Demazure structure inside B^{r,s} ----------------------------------------


@dataclass
class DemazureReport:
    label: str
    z_word: list[int]
    tau: str
    w1: list[int]
    w2: list[int]
    level: int
    b_prime: int = 0
    b_double_prime: int = 0
    kr_size: int = 0
    a1: bool = False
    a2: bool = False
    closure: bool = False
    characters: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.a1 and self.a2 and self.closure and self.characters


def verify_A1_A2(B) -> DemazureReport:
    """Check (A1), (A2) and the classical closure for a KR crystal with c_r dividing s."""
    d = B.datum
    c = d.c[B.r]
    level = B.s // c
    z, tau = factor_w_sigma(translation(d, -c * lambda_star(d, d.omega(B.r))))
    w1, w2 = split_w(d, z)
    rep = DemazureReport(B.label, z, str(tau), w1, w2, level)
    u = B.u
    formal_c = FormalHWCrystal(d, tuple(level * int(i == 0) for i in d.nodes))
    T = TensorCrystal([B, formal_c])
    u_prime = TensorElem((u, formal_c.element))

    # (A2): the f_{w2} closure never acts on the formal factor
    try:
        b_prime = f_w_closure(T, u_prime, w2)
        rep.a2 = all(x.factors[1] == formal_c.element for x in b_prime.elements)
    except FormalFactorTouched as exc:
        rep.notes.append(f"(A2) fails: f_{exc.i} acts on the formal factor")
        return rep
    rep.b_prime = len(b_prime)

    # (A1): B' matches B_{w2}(s Lambda_{tau(0)}) and B(s omega~_{tau(0)}) for g_K
    top = level * d.fundamental_weight(tau(0))
    K = list(range(B.r)) if w2 else []
    dem = demazure_character(d, w2, top)
    full_K = demazure_character(d, sub_longest_word(d, K), top) if K else dem
    crystal_K = Counter(tuple(T.wt(x)[i] for i in K) for x in b_prime.elements)
    rep.a1 = (len(b_prime) == dem.total() == full_K.total()
              and k_character(dem, K) == k_character(full_K, K) == crystal_K)
    if not w2:
        rep.a1 = rep.a1 and b_prime.elements == [u_prime]
    if not rep.a1:
        rep.notes.append(f"(A1) fails: |B'|={len(b_prime)}, Demazure={dem.total()}, K-full={full_K.total()}")

    # classical closure B'' of B' is all of B (x) u
    closure = generate(T, b_prime.elements, d.classical_nodes)
    rep.b_double_prime = len(closure)
    rep.kr_size = len(B.graph)
    rep.closure = (len(closure) == len(B.graph)
                   and all(x.factors[1] == formal_c.element for x in closure.elements))

    # characters: D_z(s Lambda_{tau(0)}) against the weights of B
    chi = demazure_character(d, z, top)
    rep.characters = chi.classical_projection() == crystal_character(B, B.graph.elements)
    if not rep.characters:
        rep.notes.append("Demazure character differs from the KR weight multiset")
    return rep


def compare_characters(B) -> tuple[bool, CharacterPolynomial, Counter]:
    d = B.datum
    c = d.c[B.r]
    z, tau = factor_w_sigma(translation(d, -c * lambda_star(d, d.omega(B.r))))
    chi = demazure_character(d, z, (B.s // c) * d.fundamental_weight(tau(0)))
    crys = crystal_character(B, B.graph.elements)
    return chi.classical_projection() == crys, chi, crys
