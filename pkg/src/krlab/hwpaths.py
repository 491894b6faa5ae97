"""Lowering-operator monomials from u to the classical highest weight vectors of B^{r,c_r s}."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cartan import CartanDatum
from .tableaux import check_partition

BD_FAMILIES = ("B", "D", "A2odd")
C_FAMILIES = ("C", "A2even", "D2")


@dataclass(frozen=True)
class OperatorMonomial:
    """Blocks of ``(i, m)`` pairs; blocks and pairs are applied right to left."""

    blocks: tuple[tuple[tuple[int, int], ...], ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [p for blk in self.blocks for p in blk]

    def is_empty(self) -> bool:
        return not self.pairs()

    def apply(self, crystal, b):
        """Apply to b; returns None as soon as some operator is undefined."""
        for i, m in reversed(self.pairs()):
            for _ in range(m):
                b = crystal.f(i, b)
                if b is None:
                    return None
        return b

    def to_json(self) -> list[list[int]]:
        return [[i, m] for i, m in self.pairs()]

    def __str__(self):
        def term(i, m):
            return f"f{i}" if m == 1 else f"f{i}^{m}"
        return "".join("(" + "".join(term(i, m) for i, m in blk) + ")" for blk in self.blocks) or "1"


def _block(pairs: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple((i, m) for i, m in pairs if m > 0)


def bd_admissible(r: int, s: int, lam: Sequence[int]) -> bool:
    """lam arises from the r x s rectangle by removing vertical dominoes."""
    lam = check_partition(lam)
    if len(lam) > r or (lam and lam[0] > s):
        return False
    cols = [sum(1 for p in lam if p > j) for j in range(s)]
    return all((r - h) % 2 == 0 for h in cols)


def c_admissible(r: int, s: int, lam: Sequence[int]) -> bool:
    lam = check_partition(lam)
    return len(lam) <= r and (not lam or lam[0] <= s)


def path_BD_family(r: int, s: int, lam: Sequence[int]) -> OperatorMonomial:
    if not bd_admissible(r, s, lam):
        raise ValueError(f"{tuple(lam)} is not obtained from the {r}x{s} rectangle by removing vertical dominoes")
    lam = list(check_partition(lam)) + [0] * r
    t = r % 2
    blocks = []
    for i in range((r - t) // 2, 0, -1):
        m = lam[2 * i - 1]
        pairs = [(0, m)] + [(j, m) for j in range(2, 2 * i + t)] + [(j, m) for j in range(1, 2 * i - 1 + t)]
        blk = _block(pairs)
        if blk:
            blocks.append(blk)
    return OperatorMonomial(tuple(blocks))


def path_C_family(r: int, s: int, lam: Sequence[int], c_r: int = 1) -> OperatorMonomial:
    if not c_admissible(r, s, lam):
        raise ValueError(f"{tuple(lam)} is not contained in the {r}x{s} rectangle")
    lam = list(check_partition(lam)) + [0] * r
    blocks = []
    for i in range(r, 0, -1):
        m = c_r * lam[i - 1]
        blk = _block([(j, m) for j in range(0, i)])
        if blk:
            blocks.append(blk)
    return OperatorMonomial(tuple(blocks))


def path_C_family_transposed(r: int, s: int, lam: Sequence[int], c_r: int = 1) -> OperatorMonomial:
    """Variant with exponent ``c_r lam_{r-i+1+j}`` on ``f_j`` in block i.

    Agrees with :func:`path_C_family` on rectangles and single rows.
    """
    if not c_admissible(r, s, lam):
        raise ValueError(f"{tuple(lam)} is not contained in the {r}x{s} rectangle")
    lam = list(check_partition(lam)) + [0] * (r + 1)
    blocks = []
    for i in range(r, 0, -1):
        blk = _block([(j, c_r * lam[r - i + j]) for j in range(0, i)])
        if blk:
            blocks.append(blk)
    return OperatorMonomial(tuple(blocks))


def _partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix, cap):
        yield check_partition(prefix)
        if len(prefix) == rows:
            return
        for p in range(min(cap, cols), 0, -1):
            yield from rec(prefix + [p], p)
    seen = set()
    for lam in rec([], cols):
        if lam not in seen:
            seen.add(lam)
            yield lam


def admissible_partitions(d: CartanDatum, r: int, s: int) -> list[tuple[int, ...]]:
    """Index set for the classical highest weights of ``B^{r, c_r s}``."""
    fam = d.type.family
    if fam in C_FAMILIES:
        return sorted(_partitions_in_box(r, s))
    if fam in BD_FAMILIES:
        return sorted(lam for lam in _partitions_in_box(r, s) if bd_admissible(r, s, lam))
    if fam == "A":
        return [(s,) * r]
    raise ValueError(f"no highest weight paths for family {fam}")


def monomial_for(d: CartanDatum, r: int, s: int, lam: Sequence[int],
                 variant: str = "stated") -> OperatorMonomial:
    """``variant`` selects the C-family formula: "stated" or "transposed"."""
    fam = d.type.family
    if fam in C_FAMILIES:
        if variant == "transposed":
            return path_C_family_transposed(r, s, lam, d.c[r])
        if variant != "stated":
            raise ValueError(f"unknown variant {variant!r}")
        return path_C_family(r, s, lam, d.c[r])
    if fam in BD_FAMILIES:
        return path_BD_family(r, s, lam)
    if fam == "A":
        if tuple(check_partition(lam)) != (s,) * r:
            raise ValueError("type A KR crystals are classically irreducible")
        return OperatorMonomial(())
    raise ValueError(f"no highest weight paths for family {fam}")


def partition_to_omega(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = list(lam) + [0] * (n + 1)
    return tuple(lam[i] - lam[i + 1] for i in range(n))


@dataclass
class PathReport:
    label: str
    variant: str = "stated"
    entries: list = field(default_factory=list)  # (partition, monomial string, ok, note)
    components: int = 0

    @property
    def ok(self) -> bool:
        return all(e[2] for e in self.entries) and len(self.entries) == self.components

    def failures(self) -> list[tuple[int, ...]]:
        return [e[0] for e in self.entries if not e[2]]

    def to_json(self) -> dict:
        return {"label": self.label, "variant": self.variant, "components": self.components,
                "ok": self.ok,
                "entries": [{"partition": list(lam), "monomial": m, "ok": ok, "note": note}
                            for lam, m, ok, note in self.entries]}


def verify_paths(B, variant: str = "stated") -> PathReport:
    """Apply every monomial to u and check the endpoint is the expected highest weight vector."""
    d = B.datum
    c = d.c[B.r]
    if B.s % c:
        raise ValueError("s must be a multiple of c_r")
    s = B.s // c
    rep = PathReport(B.label, variant)
    from .crystal import components
    rep.components = len(components(B.classical_graph, d.classical_nodes))
    ends = set()
    for lam in admissible_partitions(d, B.r, s):
        mono = monomial_for(d, B.r, s, lam, variant)
        end = mono.apply(B, B.u)
        if end is None:
            rep.entries.append((lam, str(mono), False, "undefined operator application"))
            continue
        if d.type.family == "A":
            target = partition_to_omega(lam, d.n)
        else:
            target = partition_to_omega([c * p for p in lam], d.n)
        highest = all(B.e(i, end) is None for i in d.classical_nodes)
        weight_ok = tuple(B.wt(end)[1:]) == target
        fresh = end not in ends
        ends.add(end)
        note = "" if highest and weight_ok and fresh else (
            f"highest={highest} weight={tuple(B.wt(end)[1:])} expected={target} fresh={fresh}")
        rep.entries.append((lam, str(mono), highest and weight_ok and fresh, note))
    return rep
