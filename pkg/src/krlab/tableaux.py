"""Classical type A_n crystals B(lambda) on semistandard Young tableaux.

Entries are 1-based letters in ``1..n+1``. The crystal structure is the
signature rule applied to the column reading word (columns left to right, each
read bottom to top), viewed as a tensor product of single letters: letter i
contributes ``+`` for color i and letter ``i+1`` contributes ``-``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, Sequence

from .cartan import CartanDatum, datum
from .crystal import Crystal, CrystalGraph, generate


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return tuple(p for p in parts if p)


def partition_from_weight(mu: Sequence[int]) -> tuple[int, ...]:
    """Dominant classical weight (omega coords) to a partition with at most n rows."""
    n = len(mu)
    return check_partition([sum(mu[j] for j in range(i, n)) for i in range(n)])


@dataclass(frozen=True)
class SSYT:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self.rows) for c in range(len(row))]

    def reading_cells(self) -> list[tuple[int, int]]:
        """Column reading order: columns left to right, each bottom to top."""
        out = []
        width = len(self.rows[0]) if self.rows else 0
        for c in range(width):
            height = sum(1 for row in self.rows if len(row) > c)
            out.extend((r, c) for r in range(height - 1, -1, -1))
        return out

    def reading_word(self) -> list[int]:
        return [self.rows[r][c] for r, c in self.reading_cells()]

    def replace(self, cell: tuple[int, int], value: int) -> SSYT:
        rows = [list(r) for r in self.rows]
        rows[cell[0]][cell[1]] = value
        return SSYT(tuple(tuple(r) for r in rows))

    def content(self, n_letters: int) -> tuple[int, ...]:
        counts = [0] * n_letters
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def row_word_display(self) -> str:
        """Rows bottom to top, run-length encoded: ``3^2 2^2 1^2``."""
        letters = [v for row in reversed(self.rows) for v in row]
        parts = []
        for v, grp in groupby(letters):
            m = len(list(grp))
            parts.append(f"{v}^{m}" if m > 1 else f"{v}")
        return " ".join(parts) or "()"

    def __str__(self):
        return "[" + "/".join(",".join(map(str, r)) for r in self.rows) + "]"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _signature_cell(T: SSYT, i: int):
    """Positions of the uncancelled letters for color i on the reading word.

    Returns (rightmost unmatched ``i`` cell or None, leftmost unmatched ``i+1`` cell or None,
    number of unmatched ``i``, number of unmatched ``i+1``).
    """
    unmatched_plus: list = []
    minus_stack: list = []
    for cell in T.reading_cells():
        v = T.rows[cell[0]][cell[1]]
        if v == i:
            if minus_stack:
                minus_stack.pop()
            else:
                unmatched_plus.append(cell)
        elif v == i + 1:
            minus_stack.append(cell)
    return (unmatched_plus[-1] if unmatched_plus else None,
            minus_stack[0] if minus_stack else None,
            len(unmatched_plus), len(minus_stack))


def f_sig(i: int, T: SSYT) -> SSYT | None:
    cell = _signature_cell(T, i)[0]
    return None if cell is None else T.replace(cell, i + 1)


def e_sig(i: int, T: SSYT) -> SSYT | None:
    cell = _signature_cell(T, i)[1]
    return None if cell is None else T.replace(cell, i)


def classical_weight_coords(T: SSYT, n: int) -> tuple[int, ...]:
    """``<alpha_i^vee, wt(T)>`` for i = 1..n."""
    c = T.content(n + 1)
    return tuple(c[i - 1] - c[i] for i in range(1, n + 1))


def yamanouchi(shape: Sequence[int]) -> SSYT:
    """The highest weight tableau u_lambda: row j filled with j."""
    return SSYT(tuple(tuple([j + 1] * p) for j, p in enumerate(shape)))


def rectangle(r: int, s: int) -> tuple[int, ...]:
    return (s,) * r


def all_ssyt(shape: Sequence[int], n_letters: int) -> Iterator[SSYT]:
    """Enumerate SSYT of the given shape by filling cells in row order."""
    shape = tuple(shape)
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    grid: dict = {}

    def rec(k):
        if k == len(cells):
            yield SSYT(tuple(tuple(grid[(r, c)] for c in range(p)) for r, p in enumerate(shape)))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, n_letters + 1):
            grid[(r, c)] = v
            yield from rec(k + 1)
        grid.pop((r, c), None)

    yield from rec(0)


class ClassicalTableauCrystal(Crystal):
    """B(lambda) of type A_n with colors 1..n, embedded in the A_n^(1) datum."""

    def __init__(self, n: int, shape: Sequence[int]):
        shape = check_partition(shape)
        if len(shape) > n + 1:
            raise ValueError(f"shape {shape} has more than {n + 1} rows")
        self.n = n
        self.shape = shape
        self.datum: CartanDatum = datum(f"A{n}~1")

    @property
    def index_set(self):
        return tuple(range(1, self.n + 1))

    def f(self, i, T):
        return f_sig(i, T)

    def e(self, i, T):
        return e_sig(i, T)

    def eps(self, i, T):
        return _signature_cell(T, i)[3]

    def phi(self, i, T):
        return _signature_cell(T, i)[2]

    def wt(self, T):
        cl = classical_weight_coords(T, self.n)
        return (-sum(cl),) + cl

    def display(self, T):
        return T.row_word_display()

    def highest(self) -> SSYT:
        return yamanouchi(self.shape)


def generate_B(shape: Sequence[int], n: int) -> CrystalGraph:
    """B(lambda) for type A_n as a frozen crystal graph on colors 1..n."""
    c = ClassicalTableauCrystal(n, shape)
    return generate(c, [c.highest()], c.index_set)
