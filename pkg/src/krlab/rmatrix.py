"""Connectedness of ``B_1 (x) B_2`` and the combinatorial R-matrix ``B_1 (x) B_2 -> B_2 (x) B_1``.

The recipe brings ``b_1 (x) b_2`` to a fixed element by raising operators (or by
lowering operators when ``s_1 < s_2``) inside a tensor product with formal
highest weight factors, does the same for the anchor ``u_1 (x) u_2``, and
transports the words to ``B_2 (x) B_1``. An independent oracle propagates the
bijection from the anchor along matching edges.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .crystal import (FormalHWCrystal, NodeCapExceeded, TensorCrystal, TensorElem, dual_formal, generate,
                      node_cap)
from .errors import AssumptionViolation, IntegrityError, KrlabError
from .kr import KRCrystal


class Disconnected(KrlabError):
    """A twofold tensor product has more than one affine component."""


def _level(B: KRCrystal) -> int:
    return B.s // B.datum.c[B.r]


def _unit(B: KRCrystal, node: int, k: int) -> tuple[int, ...]:
    return tuple(k * int(i == node) for i in B.datum.nodes)


def dual_u(B: KRCrystal):
    """The element with ``eps = k Lambda_{tau^{-1}(0)}`` and ``phi = k Lambda_0``."""
    k = _level(B)
    eps, phi = _unit(B, B.tau.inverse()(0), k), _unit(B, 0, k)
    hits = [b for b in B.graph.elements if B.eps_vector(b) == eps and B.phi_vector(b) == phi]
    if len(hits) != 1:
        raise AssumptionViolation(f"{B.label}: {len(hits)} elements with eps={eps}, phi={phi}")
    return hits[0]


def anchor(B: KRCrystal):
    """The unique element of classical weight ``c_r k omega_r``."""
    target = tuple(B.s * int(i == B.r) for i in B.datum.classical_nodes)
    hits = [b for b in B.graph.elements if tuple(B.wt(b)[1:]) == target]
    if len(hits) != 1:
        raise AssumptionViolation(f"{B.label}: {len(hits)} elements of classical weight {target}")
    return hits[0]


def check_connected(*factors: KRCrystal) -> bool:
    """A single affine component containing every element of the tensor product."""
    T = TensorCrystal(list(factors))
    seed = TensorElem(tuple(B.u for B in factors))
    total = 1
    for B in factors:
        total *= len(B.graph)
    return len(generate(T, [seed])) == total


# -- the raising/lowering recipe ------------------------------------------------


@dataclass(frozen=True)
class USequence:
    """``kind`` is "e" or "f"; ``word`` is applied first letter first and ends at ``target``."""

    kind: str
    word: tuple[int, ...]
    target: TensorElem


class _Augmented:
    """``b_1 (x) b_2`` padded by formal factors; the walk runs in two stages.

    Stage one uses ``B(k_2 Lambda_{tau_2^{-1}(0)})`` on the right (for
    ``k_1 >= k_2``) and repeats an e_i that is defined on ``b_2 (x) u`` until
    ``b_2`` moves, stopping at the first ``c_1 (x) u_2'``; stage two adds
    ``(k_1 - k_2) Lambda_0`` and continues to ``u_1 (x) u_2'``. For
    ``k_1 < k_2`` the mirror image uses dual factors on the left and f's.
    """

    def __init__(self, B1: KRCrystal, B2: KRCrystal):
        k1, k2 = _level(B1), _level(B2)
        self.kind = "e" if k1 >= k2 else "f"
        if self.kind == "e":
            first = _unit(B2, B2.tau.inverse()(0), k2)
            extra = _unit(B2, 0, k1 - k2)
        else:
            first = _unit(B1, B1.tau(0), k1)
            extra = _unit(B1, 0, k2 - k1)
        merged = tuple(a + b for a, b in zip(first, extra))
        self.stages = [self._padded(B1, B2, w) for w in (first, merged)]

    def _padded(self, B1, B2, weight):
        d = B1.datum
        if self.kind == "e":
            formal = FormalHWCrystal(d, weight)
            return (TensorCrystal([B1, B2, formal]),
                    lambda x: TensorElem(x.factors + (formal.element,)),
                    lambda y: TensorElem(y.factors[:2]))
        dual, elem = dual_formal(d, weight)
        return (TensorCrystal([dual, B1, B2]),
                lambda x: TensorElem((elem,) + x.factors),
                lambda y: TensorElem(y.factors[1:]))

    def _inner_pair(self, T: TensorCrystal):
        """The formal factor with its neighbour (which sits at position 1 of T)."""
        if self.kind == "e":
            return TensorCrystal(T.factors[1:]), lambda x: TensorElem(x.factors[1:])
        return TensorCrystal(T.factors[:2]), lambda x: TensorElem(x.factors[:2])

    def walk(self, b: TensorElem, fixed) -> USequence:
        """Stage one moves the factor next to the formal one until ``fixed`` holds;
        stage two applies the smallest applicable index until nothing applies."""
        word = []
        T, pad, strip = self.stages[0]
        op = T.e if self.kind == "e" else T.f
        pair, sub = self._inner_pair(T)
        pair_op = pair.e if self.kind == "e" else pair.f
        x = pad(b)
        while not fixed(strip(x)):
            i = next((i for i in T.datum.nodes if pair_op(i, sub(x)) is not None), None)
            if i is None:
                raise Disconnected(f"first stage stops at {strip(x)}")
            # operators act on the far factor first, then move the near one
            start = x.factors[1]
            for _ in range(node_cap()):
                y = op(i, x)
                if y is None:
                    raise IntegrityError(f"{self.kind}_{i} undefined in the first stage at {strip(x)}")
                word.append(i)
                x = y
                if x.factors[1] != start:
                    break
            else:
                raise NodeCapExceeded(f"first stage does not move the factor at {strip(x)}")
        b = strip(x)
        T, pad, strip = self.stages[1]
        op = T.e if self.kind == "e" else T.f
        x, seen = pad(b), set()
        while True:
            if x in seen:
                raise Disconnected(f"walk cycles at {strip(x)}")
            seen.add(x)
            step = next(((i, y) for i in T.datum.nodes if (y := op(i, x)) is not None), None)
            if step is None:
                break
            word.append(step[0])
            x = step[1]
        return USequence(self.kind, tuple(word), strip(x))


def to_u_sequence(B1: KRCrystal, B2: KRCrystal, b: TensorElem) -> USequence:
    """Greedy smallest-index walk from ``b`` to ``u_1 (x) u_2'``.

    ``u_2'`` is :func:`dual_u` of ``B2``; ending anywhere else means the
    product is disconnected.
    """
    aug = _Augmented(B1, B2)
    u2 = dual_u(B2)
    if aug.kind == "e":
        seq = aug.walk(b, lambda x: x.factors[1] == u2)
    else:
        seq = aug.walk(b, lambda x: x.factors[0] == B1.u)
    expected = TensorElem((B1.u, u2))
    if seq.target != expected:
        raise Disconnected(f"walk from {b} ends at {seq.target}, not at {expected}")
    return seq


def _replay(T: TensorCrystal, kind: str, word, x):
    op = T.e if kind == "e" else T.f
    for i in word:
        x = op(i, x)
        if x is None:
            raise IntegrityError(f"{kind}_{i} undefined while replaying {list(word)}")
    return x


def combinatorial_R(B1: KRCrystal, B2: KRCrystal, b: TensorElem,
                    with_words: bool = False):
    """``R(b) = f_{reverse(i)} e_{j} (u_2 (x) u_1)`` (roles of e and f swap when s_1 < s_2)."""
    T21 = TensorCrystal([B2, B1])
    to_b = to_u_sequence(B1, B2, b)
    a1, a2 = anchor(B1), anchor(B2)
    to_anchor = to_u_sequence(B1, B2, TensorElem((a1, a2)))
    image_of_target = _replay(T21, to_anchor.kind, to_anchor.word, TensorElem((a2, a1)))
    back = "f" if to_b.kind == "e" else "e"
    out = _replay(T21, back, tuple(reversed(to_b.word)), image_of_target)
    if with_words:
        return out, to_b, to_anchor
    return out


# -- the oracle -------------------------------------------------------------------


@dataclass
class RMap:
    domain: TensorCrystal
    codomain: TensorCrystal
    mapping: dict

    def __call__(self, b):
        return self.mapping[b]

    def __len__(self):
        return len(self.mapping)

    def violations(self) -> list[str]:
        """Failures of bijectivity, weight preservation and commutation with e_i, f_i."""
        bad = []
        if len(set(self.mapping.values())) != len(self.mapping):
            bad.append("not injective")
        nodes = self.domain.datum.nodes
        for b, rb in self.mapping.items():
            if self.domain.wt(b) != self.codomain.wt(rb):
                bad.append(f"weight at {b}")
            for i in nodes:
                for op, op2 in ((self.domain.e, self.codomain.e), (self.domain.f, self.codomain.f)):
                    x = op(i, b)
                    y = op2(i, rb)
                    if (None if x is None else self.mapping.get(x)) != y:
                        bad.append(f"color {i} at {b}")
        return bad

    def to_json(self) -> list:
        def ser(x):
            return [str(f) for f in x.factors]
        return sorted([ser(b), ser(rb)] for b, rb in self.mapping.items())


def oracle_R(B1: KRCrystal, B2: KRCrystal) -> RMap:
    """Propagate the swapped anchor along matching edge colors."""
    T12, T21 = TensorCrystal([B1, B2]), TensorCrystal([B2, B1])
    a1, a2 = anchor(B1), anchor(B2)
    start, image = TensorElem((a1, a2)), TensorElem((a2, a1))
    mapping = {start: image}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        rb = mapping[b]
        for i in T12.datum.nodes:
            for op, op2 in ((T12.f, T21.f), (T12.e, T21.e)):
                x, y = op(i, b), op2(i, rb)
                if (x is None) != (y is None):
                    raise IntegrityError(f"color {i} defined on one side only at {b}")
                if x is None:
                    continue
                if x in mapping:
                    if mapping[x] != y:
                        raise IntegrityError(f"inconsistent propagation at {x}")
                    continue
                mapping[x] = y
                queue.append(x)
    if len(mapping) != len(B1.graph) * len(B2.graph):
        raise Disconnected(f"oracle reached {len(mapping)} of {len(B1.graph) * len(B2.graph)} elements")
    return RMap(T12, T21, mapping)


def all_elements(B1: KRCrystal, B2: KRCrystal) -> list[TensorElem]:
    return [TensorElem((x, y)) for x, y in product(B1.graph.elements, B2.graph.elements)]


@dataclass
class RReport:
    label: str
    connected: bool
    size: int
    recipe_matches: bool
    involutive: bool
    violations: list

    @property
    def ok(self) -> bool:
        return self.connected and self.recipe_matches and self.involutive and not self.violations

    def to_json(self) -> dict:
        return {"label": self.label, "connected": self.connected, "size": self.size,
                "recipe_matches": self.recipe_matches, "involutive": self.involutive,
                "violations": self.violations[:20], "ok": self.ok}


def verify_rmatrix(B1: KRCrystal, B2: KRCrystal) -> RReport:
    label = f"{B1.label} (x) B[{B2.r},{B2.s}]"
    connected = check_connected(B1, B2)
    if not connected:
        return RReport(label, False, 0, False, False, ["disconnected"])
    R12 = oracle_R(B1, B2)
    R21 = oracle_R(B2, B1)
    recipe = all(combinatorial_R(B1, B2, b) == R12(b) for b in R12.mapping)
    involutive = all(R21(R12(b)) == b for b in R12.mapping)
    return RReport(label, True, len(R12), recipe, involutive, R12.violations())


def yang_baxter(B1: KRCrystal, B2: KRCrystal, B3: KRCrystal) -> bool:
    """``(R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R)`` on ``B_1 (x) B_2 (x) B_3``."""
    maps = {}

    def R(X, Y):
        key = (id(X), id(Y))
        if key not in maps:
            maps[key] = oracle_R(X, Y)
        return maps[key]

    def left(Xs, t):
        a, b, c = t
        r = R(Xs[0], Xs[1])(TensorElem((a, b))).factors
        return (Xs[1], Xs[0], Xs[2]), (r[0], r[1], c)

    def right(Xs, t):
        a, b, c = t
        r = R(Xs[1], Xs[2])(TensorElem((b, c))).factors
        return (Xs[0], Xs[2], Xs[1]), (a, r[0], r[1])

    for t in product(B1.graph.elements, B2.graph.elements, B3.graph.elements):
        lhs = left(*right(*left((B1, B2, B3), t)))
        rhs = right(*left(*right((B1, B2, B3), t)))
        if lhs[1] != rhs[1]:
            return False
    return True
