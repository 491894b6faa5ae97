"""Independent rank-2 reference crystals and the regularity check built on them.

Reference crystals come from Littelmann's path model started at the straight
line ``t -> t*lam``; paths are stored as sequences of displacement vectors in the
fundamental weight basis, with exact rational splitting and merging of
parallel consecutive pieces as the normal form.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .crystal import Crystal, CrystalGraph, components, k_highest_vectors

Vec = tuple[Fraction, Fraction]


def _parallel_same_direction(u: Vec, v: Vec) -> bool:
    return u[0] * v[1] == u[1] * v[0] and (u[0] * v[0] + u[1] * v[1]) > 0


def _normalize(segs: Sequence[Vec]) -> tuple[Vec, ...]:
    out: list[Vec] = []
    for s in segs:
        if s == (0, 0):
            continue
        if out and _parallel_same_direction(out[-1], s):
            out[-1] = (out[-1][0] + s[0], out[-1][1] + s[1])
        else:
            out.append((Fraction(s[0]), Fraction(s[1])))
    return tuple(out)


@dataclass(frozen=True)
class Rank2PathCrystal(Crystal):
    """Straight-line path crystal for a finite rank-2 Cartan matrix ``[[2, a12], [a21, 2]]``."""

    cartan: tuple[tuple[int, int], tuple[int, int]]
    highest: tuple[int, int]
    datum: None = field(default=None, compare=False)

    @property
    def index_set(self):
        return (0, 1)

    def start(self) -> tuple[Vec, ...]:
        return _normalize([tuple(Fraction(x) for x in self.highest)])

    def _root(self, i: int) -> Vec:
        # alpha_i in omega coordinates is column i of the Cartan matrix
        return (Fraction(self.cartan[0][i]), Fraction(self.cartan[1][i]))

    def _heights(self, path, i):
        h = [Fraction(0)]
        for s in path:
            h.append(h[-1] + s[i])
        return h

    def _split(self, path, i, k, target):
        """Split segment k where the i-height reaches target; returns new segment list."""
        h = self._heights(path, i)
        s = path[k]
        frac = (target - h[k]) / (h[k + 1] - h[k])
        head = (s[0] * frac, s[1] * frac)
        tail = (s[0] - head[0], s[1] - head[1])
        return list(path[:k]) + [head, tail] + list(path[k + 1:])

    def _reflect(self, segs, i, lo, hi):
        """Apply s_i to the segments with index in [lo, hi)."""
        a = self._root(i)
        out = []
        for k, v in enumerate(segs):
            if lo <= k < hi:
                v = (v[0] - v[i] * a[0], v[1] - v[i] * a[1])
            out.append(v)
        return _normalize(out)

    def f(self, i, path):
        h = self._heights(path, i)
        m = min(h)
        if h[-1] - m < 1:
            return None
        t0 = max(k for k, x in enumerate(h) if x == m)
        k = next(k for k in range(t0, len(path)) if h[k + 1] >= m + 1)
        segs = list(path) if h[k + 1] == m + 1 else self._split(path, i, k, m + 1)
        return self._reflect(segs, i, t0, k + 1)

    def e(self, i, path):
        h = self._heights(path, i)
        m = min(h)
        if m > -1:
            return None
        t1 = min(k for k, x in enumerate(h) if x == m)
        k = max(k for k in range(t1) if h[k] >= m + 1)
        if h[k] == m + 1:
            return self._reflect(list(path), i, k, t1)
        return self._reflect(self._split(path, i, k, m + 1), i, k + 1, t1 + 1)

    def wt(self, path):
        return tuple(int(sum((s[i] for s in path), Fraction(0))) for i in (0, 1))

    def eps(self, i, path):
        return int(-min(self._heights(path, i)))

    def phi(self, i, path):
        h = self._heights(path, i)
        return int(h[-1] - min(h))


def reference_graph(cartan, highest) -> tuple[Rank2PathCrystal, list, dict]:
    """All elements and f-edges of the reference crystal B(highest)."""
    c = Rank2PathCrystal(tuple(tuple(r) for r in cartan), tuple(highest))
    top = c.start()
    order, seen, edges = [top], {top}, {}
    queue = deque([top])
    while queue:
        p = queue.popleft()
        for i in (0, 1):
            q = c.f(i, p)
            if q is None:
                continue
            edges[(p, i)] = q
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return c, order, edges


def is_finite_rank2(datum, i: int, j: int) -> bool:
    return datum.a(i, j) * datum.a(j, i) < 4


def _isomorphic(graph: Crystal, top, K: tuple[int, int], comp_size: int, ref_edges, ref_top, ref_size) -> bool:
    if comp_size != ref_size:
        return False
    mapping = {top: ref_top}
    queue = deque([top])
    while queue:
        b = queue.popleft()
        for local, i in enumerate(K):
            nb = graph.f(i, b)
            nr = ref_edges.get((mapping[b], local))
            if (nb is None) != (nr is None):
                return False
            if nb is None:
                continue
            if nb in mapping:
                if mapping[nb] != nr:
                    return False
            else:
                mapping[nb] = nr
                queue.append(nb)
    return len(set(mapping.values())) == len(mapping) == ref_size


@dataclass
class RegularityReport:
    checked: int = 0
    skipped_pairs: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def regularity_check(graph: CrystalGraph) -> RegularityReport:
    """Compare every rank-2 component with the path-model reference crystal.

    Pairs of nodes forming an affine rank-2 subdiagram are skipped (their
    components are not highest weight crystals of a finite algebra).
    """
    d = graph.datum
    report = RegularityReport()
    cache = {}
    for i, j in combinations(graph.index_set, 2):
        if not is_finite_rank2(d, i, j):
            report.skipped_pairs.append((i, j))
            continue
        cartan = ((2, d.a(i, j)), (d.a(j, i), 2))
        for comp in components(graph, (i, j)):
            tops = k_highest_vectors(graph, comp, (i, j))
            report.checked += 1
            if len(tops) != 1:
                report.violations.append(
                    f"K={{{i},{j}}} component of {graph.display(comp[0])}: {len(tops)} highest vectors")
                continue
            top = tops[0]
            lam = (graph.phi(i, top), graph.phi(j, top))
            key = (cartan, lam)
            if key not in cache:
                _, order, edges = reference_graph(cartan, lam)
                cache[key] = (order[0], edges, len(order))
            ref_top, ref_edges, ref_size = cache[key]
            if not _isomorphic(graph, top, (i, j), len(comp), ref_edges, ref_top, ref_size):
                report.violations.append(
                    f"K={{{i},{j}}} component of {graph.display(top)} is not B({lam[0]},{lam[1]})")
    return report
