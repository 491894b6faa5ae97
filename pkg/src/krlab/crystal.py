"""The crystal contract and generic constructions.

Weights of crystal elements are integer tuples of Lambda-coordinates
(``wt[i] = <alpha_i^vee, wt>``); the delta part is tracked separately where needed.

Tensor products use the anti-Kashiwara convention: each factor contributes the
signature ``+^phi -^eps``, adjacent ``-+`` pairs cancel, ``f_i`` acts on the factor
owning the rightmost uncancelled ``+`` and ``e_i`` on the leftmost uncancelled ``-``.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

from .cartan import CartanDatum
from .dynkin import DynkinAut

DEFAULT_NODE_CAP = 10**6


class NodeCapExceeded(RuntimeError):
    """Raised when BFS generation exceeds the configured node cap."""


class FormalFactorTouched(RuntimeError):
    """Raised when some f_i would act on a formal highest weight factor."""

    def __init__(self, i: int, position: int | None = None):
        super().__init__(f"f_{i} acts on the formal highest weight factor")
        self.i = i
        self.position = position


def node_cap() -> int:
    return int(os.environ.get("KRLAB_NODE_CAP", DEFAULT_NODE_CAP))


# -- element types -----------------------------------------------------------


@dataclass(frozen=True)
class TensorElem:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("tensor elements need at least one factor")


@dataclass(frozen=True)
class FormalHW:
    """Stand-in for the highest weight vector ``u_Lambda`` of B(Lambda)."""

    weight: tuple[int, ...]


@dataclass(frozen=True)
class DualElem:
    inner: Hashable


@dataclass(frozen=True)
class TwistElem:
    sigma: DynkinAut
    inner: Hashable


# -- the contract ------------------------------------------------------------


class Crystal:
    """Base class. Subclasses supply ``e``, ``f``, ``wt``; string data defaults to walking."""

    datum: CartanDatum

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(self.datum.nodes)

    def e(self, i: int, b):
        raise NotImplementedError

    def f(self, i: int, b):
        raise NotImplementedError

    def wt(self, b) -> tuple[int, ...]:
        raise NotImplementedError

    def eps(self, i: int, b) -> int:
        k = 0
        while (b := self.e(i, b)) is not None:
            k += 1
        return k

    def phi(self, i: int, b) -> int:
        k = 0
        while (b := self.f(i, b)) is not None:
            k += 1
        return k

    def eps_vector(self, b) -> tuple[int, ...]:
        return tuple(self.eps(i, b) for i in self.index_set)

    def phi_vector(self, b) -> tuple[int, ...]:
        return tuple(self.phi(i, b) for i in self.index_set)

    def display(self, b) -> str:
        return str(b)

    def f_word(self, word: Sequence[int], b, powers: Sequence[int] | None = None):
        """Apply ``f_{i1} ... f_{ik}`` to b (rightmost first); None if undefined."""
        powers = powers or [1] * len(word)
        for i, m in zip(reversed(word), reversed(powers)):
            for _ in range(m):
                if b is None:
                    return None
                b = self.f(i, b)
        return b

    def e_word(self, word: Sequence[int], b, powers: Sequence[int] | None = None):
        powers = powers or [1] * len(word)
        for i, m in zip(reversed(word), reversed(powers)):
            for _ in range(m):
                if b is None:
                    return None
                b = self.e(i, b)
        return b

    def f_max(self, i: int, b):
        while (nb := self.f(i, b)) is not None:
            b = nb
        return b

    def e_max(self, i: int, b):
        while (nb := self.e(i, b)) is not None:
            b = nb
        return b


def reflection_S(crystal: Crystal, i: int, b):
    """Kashiwara's reflection on the i-string through b."""
    k = crystal.phi(i, b) - crystal.eps(i, b)
    op = crystal.f if k >= 0 else crystal.e
    for _ in range(abs(k)):
        b = op(i, b)
    return b


# -- constructions -----------------------------------------------------------


class FormalHWCrystal(Crystal):
    def __init__(self, datum: CartanDatum, weight: Sequence[int]):
        self.datum = datum
        self.element = FormalHW(tuple(int(x) for x in weight))

    def e(self, i, b):
        return None

    def f(self, i, b):
        raise FormalFactorTouched(i)

    def eps(self, i, b):
        return 0

    def phi(self, i, b):
        return b.weight[i]

    def wt(self, b):
        return b.weight

    def display(self, b):
        return "u[" + ",".join(map(str, b.weight)) + "]"


def _signature(factors: Sequence[Crystal], i: int, elems: Sequence):
    """Reduced signature: (uncancelled plus owners, uncancelled minus stack)."""
    plus_owner = None
    plus_count = 0
    minus: list[list[int]] = []  # [factor index, count], bottom first
    for k, (c, b) in enumerate(zip(factors, elems)):
        p = c.phi(i, b)
        while p and minus:
            take = min(p, minus[-1][1])
            p -= take
            minus[-1][1] -= take
            if minus[-1][1] == 0:
                minus.pop()
        if p:
            plus_owner = k
            plus_count += p
        m = c.eps(i, b)
        if m:
            minus.append([k, m])
    return plus_owner, plus_count, minus


class TensorCrystal(Crystal):
    def __init__(self, factors: Sequence[Crystal]):
        if not factors:
            raise ValueError("empty tensor product")
        self.factors = tuple(factors)
        self.datum = factors[0].datum

    def _replace(self, b: TensorElem, k: int, new):
        if new is None:
            return None
        fs = list(b.factors)
        fs[k] = new
        return TensorElem(tuple(fs))

    def f(self, i, b):
        owner, _, _ = _signature(self.factors, i, b.factors)
        if owner is None:
            return None
        try:
            return self._replace(b, owner, self.factors[owner].f(i, b.factors[owner]))
        except FormalFactorTouched as exc:
            raise FormalFactorTouched(i, owner) from exc

    def e(self, i, b):
        _, _, minus = _signature(self.factors, i, b.factors)
        if not minus:
            return None
        k = minus[0][0]
        return self._replace(b, k, self.factors[k].e(i, b.factors[k]))

    def phi(self, i, b):
        return _signature(self.factors, i, b.factors)[1]

    def eps(self, i, b):
        return sum(m for _, m in _signature(self.factors, i, b.factors)[2])

    def wt(self, b):
        out = None
        for c, x in zip(self.factors, b.factors):
            w = c.wt(x)
            out = w if out is None else tuple(p + q for p, q in zip(out, w))
        return out

    def display(self, b):
        return " ⊗ ".join(c.display(x) for c, x in zip(self.factors, b.factors))


class DualCrystal(Crystal):
    def __init__(self, inner: Crystal):
        self.inner = inner
        self.datum = inner.datum

    def f(self, i, b):
        x = self.inner.e(i, b.inner)
        return None if x is None else DualElem(x)

    def e(self, i, b):
        x = self.inner.f(i, b.inner)
        return None if x is None else DualElem(x)

    def eps(self, i, b):
        return self.inner.phi(i, b.inner)

    def phi(self, i, b):
        return self.inner.eps(i, b.inner)

    def wt(self, b):
        return tuple(-x for x in self.inner.wt(b.inner))

    def display(self, b):
        return self.inner.display(b.inner) + "^v"


def dual_formal(datum: CartanDatum, weight: Sequence[int]) -> tuple[DualCrystal, DualElem]:
    """The lowest weight vector ``u_Lambda^vee`` of ``B(Lambda)^vee``; e into it raises."""
    inner = FormalHWCrystal(datum, weight)

    class _DualFormal(DualCrystal):
        def e(self, i, b):
            raise FormalFactorTouched(i)

    c = _DualFormal(inner)
    return c, DualElem(inner.element)


class TwistCrystal(Crystal):
    """``B^sigma`` with ``f_{sigma(i)}(b^sigma) = (f_i b)^sigma``."""

    def __init__(self, sigma: DynkinAut, inner: Crystal):
        self.sigma = sigma
        self.inv = sigma.inverse()
        self.inner = inner
        self.datum = inner.datum

    def f(self, i, b):
        x = self.inner.f(self.inv(i), b.inner)
        return None if x is None else TwistElem(self.sigma, x)

    def e(self, i, b):
        x = self.inner.e(self.inv(i), b.inner)
        return None if x is None else TwistElem(self.sigma, x)

    def eps(self, i, b):
        return self.inner.eps(self.inv(i), b.inner)

    def phi(self, i, b):
        return self.inner.phi(self.inv(i), b.inner)

    def wt(self, b):
        return self.sigma.act_coords(self.inner.wt(b.inner))

    def wrap(self, b) -> TwistElem:
        return TwistElem(self.sigma, b)

    def display(self, b):
        return self.inner.display(b.inner) + f"^{self.sigma}"


# -- finite graphs -----------------------------------------------------------


class CrystalGraph(Crystal):
    """Frozen finite crystal graph over an index subset K."""

    def __init__(self, datum: CartanDatum, elements: Sequence, index_set: Iterable[int],
                 f_edges: dict, weights: dict, display: Callable[[Any], str] = str):
        self.datum = datum
        self.elements = list(elements)
        self._index_set = tuple(sorted(index_set))
        self.f_edges = dict(f_edges)
        self.e_edges = {(t, i): s for (s, i), t in self.f_edges.items()}
        self.weights = dict(weights)
        self._display = display
        self._members = set(self.elements)

    @property
    def index_set(self):
        return self._index_set

    def __len__(self):
        return len(self.elements)

    def __contains__(self, b):
        return b in self._members

    def __iter__(self):
        return iter(self.elements)

    def f(self, i, b):
        return self.f_edges.get((b, i))

    def e(self, i, b):
        return self.e_edges.get((b, i))

    def wt(self, b):
        return self.weights[b]

    def display(self, b):
        return self._display(b)

    def edges(self) -> list[tuple[Any, Any, int]]:
        return [(s, t, i) for (s, i), t in self.f_edges.items()]

    def _sorted(self):
        names = {b: self.display(b) for b in self.elements}
        if len(set(names.values())) != len(names):
            raise ValueError("display strings do not identify elements")
        nodes = sorted(names.values())
        edges = sorted((names[s], names[t], i) for s, t, i in self.edges())
        return nodes, edges

    def to_json(self) -> str:
        nodes, edges = self._sorted()
        data = {"nodes": nodes,
                "edges": [{"from": s, "to": t, "color": i} for s, t, i in edges]}
        return json.dumps(data, indent=2, ensure_ascii=False)

    def to_dot(self) -> str:
        nodes, edges = self._sorted()
        idx = {name: k for k, name in enumerate(nodes)}
        lines = ["digraph crystal {"]
        for name, k in idx.items():
            lines.append(f'  n{k} [label="{name}"];')
        for s, t, i in edges:
            lines.append(f'  n{idx[s]} -> n{idx[t]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def graph_from_json(text: str) -> tuple[list[str], list[tuple[str, str, int]]]:
    """Nodes and ``(from, to, color)`` edges of an exported graph."""
    data = json.loads(text)
    return list(data["nodes"]), [(e["from"], e["to"], e["color"]) for e in data["edges"]]


def graph_to_json(nodes: Sequence[str], edges: Iterable[tuple[str, str, int]]) -> str:
    data = {"nodes": sorted(nodes),
            "edges": [{"from": s, "to": t, "color": i} for s, t, i in sorted(edges)]}
    return json.dumps(data, indent=2, ensure_ascii=False)


def generate(crystal: Crystal, seeds: Iterable, index_set: Iterable[int] | None = None,
             cap: int | None = None) -> CrystalGraph:
    """BFS closure of the seeds under e_i, f_i for i in the index set."""
    K = tuple(crystal.index_set if index_set is None else index_set)
    cap = node_cap() if cap is None else cap
    seen, order = set(), []
    queue = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            order.append(s)
            queue.append(s)
    f_edges = {}
    while queue:
        b = queue.popleft()
        for i in K:
            for op, forward in ((crystal.f, True), (crystal.e, False)):
                nb = op(i, b)
                if nb is None:
                    continue
                if forward:
                    f_edges[(b, i)] = nb
                else:
                    f_edges[(nb, i)] = b
                if nb not in seen:
                    seen.add(nb)
                    order.append(nb)
                    queue.append(nb)
                    if len(order) > cap:
                        raise NodeCapExceeded(f"more than {cap} elements generated")
    weights = {b: crystal.wt(b) for b in order}
    return CrystalGraph(crystal.datum, order, K, f_edges, weights, crystal.display)


def components(graph: CrystalGraph, index_set: Iterable[int]) -> list[list]:
    """Connected components of the graph restricted to colors in the index set."""
    K = set(index_set)
    seen, out = set(), []
    for b in graph.elements:
        if b in seen:
            continue
        comp, queue = [], deque([b])
        seen.add(b)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for i in K:
                for y in (graph.f(i, x), graph.e(i, x)):
                    if y is not None and y not in seen:
                        seen.add(y)
                        queue.append(y)
        out.append(comp)
    return out


def k_highest_vectors(crystal: Crystal, elements: Iterable, index_set: Iterable[int]) -> list:
    K = tuple(index_set)
    return [b for b in elements if all(crystal.e(i, b) is None for i in K)]


def check_axioms(crystal: Crystal, elements: Iterable, index_set: Iterable[int] | None = None) -> list[str]:
    """Violations of the partial-inverse, weight and string-length axioms."""
    d = crystal.datum
    K = tuple(crystal.index_set if index_set is None else index_set)
    bad = []
    for b in elements:
        w = crystal.wt(b)
        for i in K:
            walk_eps = Crystal.eps(crystal, i, b)
            walk_phi = Crystal.phi(crystal, i, b)
            if (walk_eps, walk_phi) != (crystal.eps(i, b), crystal.phi(i, b)):
                bad.append(f"string lengths at {crystal.display(b)} color {i}")
            if w[i] != walk_phi - walk_eps:
                bad.append(f"weight pairing at {crystal.display(b)} color {i}")
            fb = crystal.f(i, b)
            if fb is not None:
                if crystal.e(i, fb) != b:
                    bad.append(f"e_{i} f_{i} != id at {crystal.display(b)}")
                expect = tuple(x - d.a(j, i) for j, x in enumerate(w))
                if crystal.wt(fb) != expect:
                    bad.append(f"wt(f_{i} b) at {crystal.display(b)}")
            eb = crystal.e(i, b)
            if eb is not None and crystal.f(i, eb) != b:
                bad.append(f"f_{i} e_{i} != id at {crystal.display(b)}")
    return bad
