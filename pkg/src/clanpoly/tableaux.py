"""Flagged Schur polynomials via semistandard tableaux, and pipe
diagrams with the relocation move closure."""

from .poly import Poly
from . import perms


def flagged_schur(lam, flags, n):
    """Sum of x^T over semistandard tableaux of shape lam whose row i
    entries are at most flags[i-1], in an n-variable universe."""
    if len(lam) != len(flags):
        raise ValueError("partition and flagging lengths differ")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must weakly decrease")
    rows = [(lam[i], flags[i]) for i in range(len(lam)) if lam[i]]
    if not rows:
        return Poly.one(n)

    def row_fillings(width, cap, above):
        out = []
        cur = []

        def rec(c, left):
            if c == width:
                out.append(tuple(cur))
                return
            lo = max(left, above[c] + 1 if above else 1)
            for v in range(lo, cap + 1):
                cur.append(v)
                rec(c + 1, v)
                cur.pop()

        rec(0, 1)
        return out

    total = Poly.zero(n)

    def descend(r, above, weight):
        nonlocal total
        if r == len(rows):
            total = total + Poly.monomial(n, tuple(weight), (0,) * n, 0)
            return
        width, cap = rows[r]
        for row in row_fillings(width, cap, above):
            for v in row:
                weight[v - 1] += 1
            descend(r + 1, row, weight)
            for v in row:
                weight[v - 1] -= 1

    descend(0, None, [0] * n)
    return total


class PipeDiagram:
    """A set of + cells inside the n-by-n grid, columns capped."""

    __slots__ = ("n", "cells", "bound")

    def __init__(self, n, cells, bound):
        cells = frozenset(cells)
        for (r, c) in cells:
            if not (1 <= r <= n and 1 <= c <= n):
                raise ValueError("cell outside the grid")
            if c > bound:
                raise ValueError("cell beyond the column bound")
        self.n = n
        self.cells = cells
        self.bound = bound

    def __eq__(self, other):
        return (isinstance(other, PipeDiagram) and self.n == other.n
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.n, self.cells))

    def render(self):
        return "\n".join(
            "".join("+" if (r, c) in self.cells else "."
                    for c in range(1, self.n + 1))
            for r in range(1, self.n + 1))


def wt_beta(diagram):
    n = diagram.n
    f = Poly.one(n)
    b = Poly.beta(n)
    for (i, j) in sorted(diagram.cells):
        xi, yj = Poly.x(n, i), Poly.y(n, j)
        f = f * (xi - yj + b * xi * yj)
    return f


def pipe_diagrams(w, column_bound):
    """All diagrams reachable from the + filling of the Rothe diagram
    by relocating a + from the bottom-right of an otherwise empty
    2-by-2 window to its top-left."""
    if not perms.is_vexillary(w):
        raise ValueError("pipe diagrams need a vexillary permutation")
    n = len(w)
    start = frozenset(perms.rothe_diagram(w))
    if any(c > column_bound for (_r, c) in start):
        raise ValueError("Rothe diagram exceeds the column bound")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cells in frontier:
            for (r, c) in cells:
                if r < 2 or c < 2:
                    continue
                window = ((r - 1, c - 1), (r - 1, c), (r, c - 1))
                if any(cell in cells for cell in window):
                    continue
                moved = (cells - {(r, c)}) | {(r - 1, c - 1)}
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return {PipeDiagram(n, cells, column_bound) for cells in seen}
