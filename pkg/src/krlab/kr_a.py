"""KR crystals B^{r,s} of type A_n^(1) on r x s rectangular tableaux.

The classical part is the signature rule; 0-arrows come from promotion via
``f_0 = pr^{-1} f_1 pr``.
"""
from __future__ import annotations

from functools import cached_property

from .cartan import datum
from .crystal import CrystalGraph
from .kr import KRCrystal
from .tableaux import SSYT, _signature_cell, all_ssyt, e_sig, f_sig, yamanouchi


def _grid(T: SSYT) -> list[list]:
    return [list(r) for r in T.rows]


def _freeze(grid) -> SSYT:
    return SSYT(tuple(tuple(r) for r in grid))


def _slide_out(grid, r: int, c: int) -> tuple[int, int]:
    """Move a hole at (r, c) toward the top-left; the larger of up/left fills it."""
    while True:
        up = grid[r - 1][c] if r > 0 else None
        left = grid[r][c - 1] if c > 0 else None
        if up is None and left is None:
            return r, c
        if left is None or (up is not None and up >= left):
            grid[r][c], grid[r - 1][c] = up, None
            r -= 1
        else:
            grid[r][c], grid[r][c - 1] = left, None
            c -= 1


def _slide_in(grid, r: int, c: int) -> tuple[int, int]:
    """Move a hole at (r, c) toward the bottom-right; the smaller of down/right fills it."""
    rows, cols = len(grid), len(grid[0])
    while True:
        down = grid[r + 1][c] if r + 1 < rows else None
        right = grid[r][c + 1] if c + 1 < cols else None
        if down is None and right is None:
            return r, c
        if right is None or (down is not None and down <= right):
            grid[r][c], grid[r + 1][c] = down, None
            r += 1
        else:
            grid[r][c], grid[r][c + 1] = right, None
            c += 1


def promotion(T: SSYT, n: int) -> SSYT:
    """Remove n+1, slide, add 1 to every entry, fill the vacated cells with 1."""
    top = n + 1
    grid = _grid(T)
    holes = sorted(((r, c) for r, row in enumerate(grid) for c, v in enumerate(row) if v == top),
                   key=lambda x: x[1])
    for r, c in holes:
        grid[r][c] = None
    for r, c in holes:
        _slide_out(grid, r, c)
    return _freeze([[1 if v is None else v + 1 for v in row] for row in grid])


def promotion_inverse(T: SSYT, n: int) -> SSYT:
    """Remove 1, slide the other way, subtract 1, fill the vacated cells with n+1."""
    grid = _grid(T)
    holes = sorted(((r, c) for r, row in enumerate(grid) for c, v in enumerate(row) if v == 1),
                   key=lambda x: -x[1])
    for r, c in holes:
        grid[r][c] = None
    for r, c in holes:
        _slide_in(grid, r, c)
    return _freeze([[n + 1 if v is None else v - 1 for v in row] for row in grid])


class KRCrystalA(KRCrystal):
    """B^{r,s} of type A_n^(1)."""

    def __init__(self, n: int, r: int, s: int):
        super().__init__(datum(f"A{n}~1"), r, s)
        self.n = n

    def seed(self) -> SSYT:
        return yamanouchi((self.s,) * self.r)

    def pr(self, T: SSYT) -> SSYT:
        return promotion(T, self.n)

    def pr_inv(self, T: SSYT) -> SSYT:
        return promotion_inverse(T, self.n)

    def f(self, i, T):
        if i == 0:
            x = f_sig(1, self.pr(T))
            return None if x is None else self.pr_inv(x)
        return f_sig(i, T)

    def e(self, i, T):
        if i == 0:
            x = e_sig(1, self.pr(T))
            return None if x is None else self.pr_inv(x)
        return e_sig(i, T)

    def eps(self, i, T):
        if i == 0:
            return self.eps(1, self.pr(T))
        return _signature_cell(T, i)[3]

    def phi(self, i, T):
        if i == 0:
            return self.phi(1, self.pr(T))
        return _signature_cell(T, i)[2]

    def wt(self, T):
        c = T.content(self.n + 1)
        cl = tuple(c[i - 1] - c[i] for i in range(1, self.n + 1))
        return (-sum(cl),) + cl

    def display(self, T):
        return T.row_word_display()

    @cached_property
    def all_tableaux(self) -> list[SSYT]:
        return list(all_ssyt((self.s,) * self.r, self.n + 1))


def kr_graph_A(n: int, r: int, s: int) -> CrystalGraph:
    return KRCrystalA(n, r, s).graph
