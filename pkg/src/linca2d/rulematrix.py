"""Construction of the (mn x mn) GF(2) rule matrix of a linear rule.

Row i lists exactly the cells whose current states XOR into cell i's next
state: entry (i, j) is 1 iff some selected fundamental's offset carries
cell i onto cell j inside the grid.  Multiplying this matrix with the
row-major flattening of a grid reproduces direct evolution.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapacityError, DimensionError
from .gf2 import Gf2Matrix
from .rules import FUNDAMENTALS, OFFSETS, decompose

#: rule matrices are dense dim^2-bit objects; cap dim well below the grid cap
MAX_MATRIX_DIM = 1 << 12


def build(rule: int, m: int, n: int) -> Gf2Matrix:
    """Rule matrix of `rule` for an m x n grid (dim = m*n)."""
    _check_dims(m, n)
    offsets = [OFFSETS[w] for w in decompose(rule)]
    rows = []
    for r in range(m):
        for c in range(n):
            word = 0
            for dr, dc in offsets:
                rr, cc = r + dr, c + dc
                if 0 <= rr < m and 0 <= cc < n:
                    word |= 1 << (rr * n + cc)
            rows.append(word)
    return Gf2Matrix(m * n, tuple(rows))


def fundamental_supports_disjoint(m: int, n: int) -> bool:
    """True iff no two fundamental rule matrices share a 1-entry.

    Always true under this construction (distinct offsets reach distinct
    cells); kept as a runtime guard for the join laws.
    """
    _check_dims(m, n)
    mats = [build(w, m, n) for w in FUNDAMENTALS]
    return all((a & b).popcount() == 0 for a, b in combinations(mats, 2))


def _check_dims(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DimensionError(f"grid dimensions must be positive, got {m}x{n}")
    if m * n > MAX_MATRIX_DIM:
        raise CapacityError(
            f"rule matrix dimension {m * n} exceeds the {MAX_MATRIX_DIM} cap")
