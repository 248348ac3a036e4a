"""Bit-packed row reduction over GF(2).

Rows are Python ints; bit j is the coordinate at base index j. Elimination
pivots on the lowest set bit, so results depend only on row order.
"""

from __future__ import annotations


class GF2Basis:
    """Incremental echelon basis keyed by pivot bit."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, row: int) -> int:
        while row:
            low = (row & -row).bit_length() - 1
            piv = self.pivots.get(low)
            if piv is None:
                return row
            row ^= piv
        return 0

    def add(self, row: int) -> bool:
        """Insert row; True when it was independent of the basis."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[(r & -r).bit_length() - 1] = r
        return True

    def __contains__(self, row: int) -> bool:
        return self.reduce(row) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows) -> int:
    basis = GF2Basis()
    for r in rows:
        basis.add(r)
    return basis.rank


def prefix_ranks(rows) -> list[int]:
    """rank of rows[:m] for m = 1..len(rows)."""
    basis = GF2Basis()
    out = []
    for r in rows:
        basis.add(r)
        out.append(basis.rank)
    return out


def pack(bits) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b:
            out |= 1 << j
    return out


def unpack(row: int, width: int) -> list[int]:
    return [(row >> j) & 1 for j in range(width)]
