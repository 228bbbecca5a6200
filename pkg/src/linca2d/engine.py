"""Direct XOR evolution of a grid under a linear rule with null boundary.

The stencil is applied a whole row at a time: for each selected neighbor
offset, the source row is shifted horizontally and XORed into the output
row, so a step costs O(m * popcount(rule)) word operations instead of a
per-cell loop.  Cells outside the grid read as 0.
"""

from __future__ import annotations

from .grid import Grid
from .rules import OFFSETS, decompose


def step(g: Grid, rule: int) -> Grid:
    """One generation: each cell becomes the XOR of its selected neighbors."""
    mask = (1 << g.n) - 1
    out = [0] * g.m
    for weight in decompose(rule):
        dr, dc = OFFSETS[weight]
        lo = max(0, -dr)
        hi = min(g.m, g.m - dr)
        if dc == 0:
            for r in range(lo, hi):
                out[r] ^= g.rows[r + dr]
        elif dc == 1:
            # source column c+1 feeds cell c: shift the row toward bit 0
            for r in range(lo, hi):
                out[r] ^= g.rows[r + dr] >> 1
        else:
            # source column c-1 feeds cell c: shift away from bit 0, clip at n
            for r in range(lo, hi):
                out[r] ^= (g.rows[r + dr] << 1) & mask
    return Grid(g.m, g.n, tuple(out))


def evolve(g: Grid, rule: int, steps: int) -> list[Grid]:
    """Trajectory of length steps+1; element 0 is the starting grid."""
    if steps < 0:
        raise ValueError("step count must be non-negative")
    trajectory = [g]
    for _ in range(steps):
        trajectory.append(step(trajectory[-1], rule))
    return trajectory
