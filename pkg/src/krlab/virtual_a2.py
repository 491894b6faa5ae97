"""KR crystals of type A_{2n}^(2) as virtual crystals inside type A_{2n-1}^(1).

``B^{r,s}`` is the closure of ``u_{s omega_{2n-r}} (x) u_{s omega_r}`` in
``V = B^{2n-r,s} (x) B^{r,s}`` under the virtual operators

* ``f^_0 = f_0``,
* ``f^_i = f_i f_{2n-i}`` for ``1 <= i <= n-1``,
* ``f^_n = f_n f_n``.

Node 0 is the end of the diagram with mark 2 (Kac labeling), so the classical
subalgebra on nodes ``1..n`` is of type C_n.
"""
from __future__ import annotations

from .cartan import AffineType, datum
from .crystal import TensorCrystal, TensorElem
from .errors import AlignmentError
from .kr import KRCrystal
from .kr_a import KRCrystalA
from .tableaux import yamanouchi


class VirtualKR(KRCrystal):
    """B^{r,s} of type A_{2n}^(2)."""

    def __init__(self, n: int, r: int, s: int, zero_multiplicity: int = 1):
        super().__init__(datum(AffineType("A2even", n)), r, s)
        self.n = n
        self.left = KRCrystalA(2 * n - 1, 2 * n - r, s)
        self.right = KRCrystalA(2 * n - 1, r, s)
        self.ambient = TensorCrystal([self.left, self.right])
        self.zero_multiplicity = zero_multiplicity

    def ambient_colors(self, i: int) -> tuple[int, ...]:
        if i == 0:
            return (0,) * self.zero_multiplicity
        if i == self.n:
            return (self.n, self.n)
        return (i, 2 * self.n - i)

    def gamma(self, i: int) -> int:
        """How many times one ambient color repeats in the i-th virtual operator."""
        colors = self.ambient_colors(i)
        return colors.count(colors[0])

    def seed(self) -> TensorElem:
        n, r, s = self.n, self.r, self.s
        return TensorElem((yamanouchi((s,) * (2 * n - r)), yamanouchi((s,) * r)))

    def _apply(self, op, i: int, v):
        colors = self.ambient_colors(i)
        x = op(colors[0], v)
        if x is None:
            if any(op(j, v) is not None for j in colors[1:]):
                raise AlignmentError(f"virtual operator {i}: only part of {colors} applies")
            return None
        for j in colors[1:]:
            y = op(j, x)
            if y is None:
                raise AlignmentError(f"virtual operator {i}: {colors} applies partially")
            x = y
        return x

    def f(self, i, v):
        return self._apply(self.ambient.f, i, v)

    def e(self, i, v):
        return self._apply(self.ambient.e, i, v)

    def wt(self, v):
        amb = self.ambient.wt(v)
        out = []
        for i in self.datum.nodes:
            g = self.gamma(i)
            if any(amb[j] != amb[i] for j in self.ambient_colors(i)) or amb[i] % g:
                raise AlignmentError(f"ambient weight {amb} is not aligned at node {i}")
            out.append(amb[i] // g)
        return tuple(out)

    def ambient_eps(self, i: int, v) -> int:
        return self.ambient.eps(self.ambient_colors(i)[0], v)

    def ambient_phi(self, i: int, v) -> int:
        return self.ambient.phi(self.ambient_colors(i)[0], v)

    def display(self, v):
        return " ⊗ ".join(T.row_word_display() for T in v.factors)


def build_virtual(n: int, r: int, s: int) -> VirtualKR:
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in 1..{n}")
    return VirtualKR(n, r, s)


# -- extremal paths between classical components -------------------------------


def classical_highest(V: VirtualKR, k: int):
    """The classical highest weight element of weight ``s omega_k`` (``k = 0`` gives u)."""
    d = V.datum
    target = tuple(V.s * int(i == k) for i in d.classical_nodes)
    hits = [b for b in V.graph.elements
            if all(V.e(i, b) is None for i in d.classical_nodes) and V.wt(b)[1:] == target]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} classical highest weight elements of weight {target}")
    return hits[0]


def _row_display(values: list[int], s: int) -> str:
    return " ".join(f"{v}^{s}" if s > 1 else f"{v}" for v in values)


def expected_display(n: int, r: int, s: int, k: int, which: str) -> str:
    """Expected pair of row words for ``b``, ``y`` or ``f_0^s y`` (rows bottom to top)."""
    right = list(range(r, 0, -1))
    upper = list(range(2 * n - k, r, -1))
    if which == "b":
        left = upper + list(range(k, 0, -1))
    elif which == "y":
        left = [2 * n] + list(range(2 * n - k - 1, r, -1)) + list(range(k + 1, 1, -1))
    elif which == "f0s_y":
        left = list(range(2 * n - k - 1, r, -1)) + list(range(k + 1, 0, -1))
    else:
        raise ValueError(which)
    return _row_display(left, s) + " ⊗ " + _row_display(right, s)


def lem_y_instance(V: VirtualKR, k: int) -> dict:
    """Check the extremal element y for ``b = u_{s omega_k}`` and ``0 <= k < r``."""
    from .crystal import reflection_S

    d, s = V.datum, V.s
    if not 0 <= k < V.r:
        raise ValueError("need 0 <= k < r")
    b = classical_highest(V, k)
    y = b
    for i in range(k, 0, -1):
        y = reflection_S(V, i, y)
    monomial = V.f_word(list(range(1, k + 1)), b, [s] * k)
    lam = lambda *idx: tuple(s * sum(int(i == j) for j in idx) for i in d.nodes)
    if k > 0:
        eps_expected, phi_expected = lam(0, 1), lam(0, k + 1)
    else:
        eps_expected = phi_expected = lam(0)
    f0s = V.f_word([0], y, [s])
    target = classical_highest(V, k + 1) if k + 1 <= V.r else None
    out = {
        "k": k,
        "b": V.display(b),
        "y": V.display(y),
        "f0s_y": None if f0s is None else V.display(f0s),
        "monomial_matches": monomial == y,
        "eps_ok": V.eps_vector(y) == eps_expected,
        "phi_ok": V.phi_vector(y) == phi_expected,
        "f0s_ok": f0s is not None and f0s == target,
        "rows_ok": (V.display(b) == expected_display(V.n, V.r, s, k, "b")
                    and (k == 0 or V.display(y) == expected_display(V.n, V.r, s, k, "y"))
                    and f0s is not None
                    and V.display(f0s) == expected_display(V.n, V.r, s, k, "f0s_y")),
    }
    out["ok"] = all(out[key] for key in ("monomial_matches", "eps_ok", "phi_ok", "f0s_ok", "rows_ok"))
    return out
