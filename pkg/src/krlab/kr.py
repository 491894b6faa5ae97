"""Shared structure of KR crystals B^{r,s}: affine generation and the element u."""
from __future__ import annotations

from functools import cached_property

from .cartan import CartanDatum
from .crystal import Crystal, CrystalGraph, generate
from .dynkin import DynkinAut
from .errors import AssumptionViolation
from .weyl import factor_w_sigma, lambda_star, translation


def starred_tau(d: CartanDatum, r: int) -> DynkinAut:
    """Sigma-part of ``t_{-c_r omega_r*}``."""
    mu = -(d.c[r]) * lambda_star(d, d.omega(r))
    return factor_w_sigma(translation(d, mu))[1]


def unstarred_tau(d: CartanDatum, r: int) -> DynkinAut:
    """Sigma-part of ``t_{-c_r omega_r}``."""
    return factor_w_sigma(translation(d, -(d.c[r]) * d.omega(r)))[1]


class KRCrystal(Crystal):
    """A finite affine crystal B^{r,s}; subclasses provide operators and a seed."""

    def __init__(self, d: CartanDatum, r: int, s: int):
        if r not in d.classical_nodes:
            raise ValueError(f"r must lie in 1..{d.n}")
        if s < 1:
            raise ValueError("s must be positive")
        self.datum = d
        self.r = r
        self.s = s

    @property
    def label(self) -> str:
        return f"{self.datum.type.code()}:B[{self.r},{self.s}]"

    def seed(self):
        raise NotImplementedError

    @cached_property
    def graph(self) -> CrystalGraph:
        return generate(self, [self.seed()])

    @cached_property
    def classical_graph(self) -> CrystalGraph:
        return generate(self, self.graph.elements, self.datum.classical_nodes)

    @cached_property
    def tau(self) -> DynkinAut:
        return starred_tau(self.datum, self.r)

    def u_data(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Expected ``(eps(u), phi(u))`` in Lambda-coordinates."""
        d = self.datum
        c = d.c[self.r]
        if self.s % c:
            raise AssumptionViolation(f"s={self.s} is not a multiple of c_r={c}")
        k = self.s // c
        eps = tuple(k * int(i == 0) for i in d.nodes)
        phi = tuple(k * int(i == self.tau(0)) for i in d.nodes)
        return eps, phi

    def find_u(self):
        eps, phi = self.u_data()
        hits = [b for b in self.graph.elements
                if self.eps_vector(b) == eps and self.phi_vector(b) == phi]
        if len(hits) != 1:
            raise AssumptionViolation(
                f"{self.label}: {len(hits)} elements with eps={eps}, phi={phi}")
        return hits[0]

    @cached_property
    def u(self):
        return self.find_u()


def zero_arrow_completions(B: KRCrystal, limit: int | None = None) -> list[dict]:
    """All 0-arrow sets on the classical crystal of B that make a regular affine
    crystal with a unique element u of the required (eps, phi).

    Exhaustive search; only meant for small instances.
    """
    from .crystal import check_axioms
    from .rank2 import regularity_check

    d = B.datum
    cg = B.classical_graph
    elems = cg.elements
    wt = {b: B.wt(b) for b in elems}
    alpha0 = tuple(d.a(j, 0) for j in d.nodes)
    by_weight: dict = {}
    for b in elems:
        by_weight.setdefault(wt[b], []).append(b)
    eps_u, phi_u = B.u_data()
    found: list[dict] = []
    used: set = set()
    choice: dict = {}

    def finish():
        edges = {(s, i): t for (s, i), t in cg.f_edges.items()}
        edges.update({(s, 0): t for s, t in choice.items()})
        g = CrystalGraph(d, elems, d.nodes, edges, wt, B.display)
        if check_axioms(g, elems) or not regularity_check(g).ok:
            return
        hits = [b for b in elems if g.eps_vector(b) == eps_u and g.phi_vector(b) == phi_u]
        if len(hits) == 1:
            found.append(dict(choice))

    def rec(k):
        if limit is not None and len(found) >= limit:
            return
        if k == len(elems):
            finish()
            return
        b = elems[k]
        target_wt = tuple(x - a for x, a in zip(wt[b], alpha0))
        options = [t for t in by_weight.get(target_wt, []) if t not in used]
        if wt[b][0] <= 0:
            rec(k + 1)  # f_0 undefined on b is allowed only when phi_0 can be 0
        for t in options:
            choice[b] = t
            used.add(t)
            rec(k + 1)
            used.discard(t)
            del choice[b]

    rec(0)
    return found
