"""Dense square bit matrices over GF(2).

Rows are the packing unit: row i is one Python integer with bit j holding
entry (i, j), so XOR, AND and population counts run word-parallel.  All
operations return fresh matrices; nothing mutates in place.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, ParseError
from .grid import BitVector


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable dim x dim matrix over GF(2); rows[i] bit j = entry (i, j)."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"matrix dimension must be positive, got {self.dim}")
        if len(self.rows) != self.dim:
            raise DimensionError(f"expected {self.dim} rows, got {len(self.rows)}")
        limit = 1 << self.dim
        for i, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise DimensionError(f"row {i} has bits beyond column {self.dim - 1}")

    @classmethod
    def zero(cls, dim: int) -> Gf2Matrix:
        return cls(dim, (0,) * dim)

    @classmethod
    def identity(cls, dim: int) -> Gf2Matrix:
        return cls(dim, tuple(1 << i for i in range(dim)))

    @classmethod
    def from_coords(cls, dim: int, coords: Iterable[tuple[int, int]]) -> Gf2Matrix:
        rows = [0] * dim
        for i, j in coords:
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(f"entry ({i}, {j}) outside a {dim}x{dim} matrix")
            rows[i] |= 1 << j
        return cls(dim, tuple(rows))

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> Gf2Matrix:
        dim = len(entries)
        rows = []
        for row in entries:
            if len(row) != dim:
                raise DimensionError("matrix entries must be square")
            word = 0
            for j, b in enumerate(row):
                if b not in (0, 1):
                    raise DimensionError(f"entry value {b!r} is not 0 or 1")
                word |= b << j
            rows.append(word)
        return cls(dim, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError((i, j))
        return (self.rows[i] >> j) & 1

    def to_coords(self) -> list[tuple[int, int]]:
        """1-entries in lexicographic (row, column) order."""
        out = []
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                out.append((i, low.bit_length() - 1))
                row ^= low
        return out

    def __xor__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Gf2Matrix(self.dim,
                         tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Gf2Matrix(self.dim,
                         tuple(a & b for a, b in zip(self.rows, other.rows)))

    def transpose(self) -> Gf2Matrix:
        cols = [0] * self.dim
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        return Gf2Matrix(self.dim, tuple(cols))

    def matvec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2): out bit i = parity(row i AND v)."""
        if v.length != self.dim:
            raise DimensionError(f"vector length {v.length} != matrix dim {self.dim}")
        word = 0
        for i, row in enumerate(self.rows):
            word |= ((row & v.word).bit_count() & 1) << i
        return BitVector(self.dim, word)

    def matmul(self, other: Gf2Matrix) -> Gf2Matrix:
        """Product over GF(2): row i of the result XORs other's rows selected
        by the set bits of this matrix's row i."""
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        rows = []
        for row in self.rows:
            acc = 0
            r = row
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            rows.append(acc)
        return Gf2Matrix(self.dim, tuple(rows))

    def matpow(self, t: int) -> Gf2Matrix:
        """t-th power by binary exponentiation; t = 0 gives the identity."""
        if t < 0:
            raise ValueError("negative matrix power")
        result = Gf2Matrix.identity(self.dim)
        base = self
        while t:
            if t & 1:
                result = result.matmul(base)
            base = base.matmul(base)
            t >>= 1
        return result

    def rank(self) -> int:
        """Row rank over GF(2) by Gaussian elimination on packed rows."""
        work = list(self.rows)
        rank = 0
        pivot_row = 0
        for col in range(self.dim):
            bit = 1 << col
            pivot = next((r for r in range(pivot_row, self.dim) if work[r] & bit),
                         None)
            if pivot is None:
                continue
            work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
            for r in range(self.dim):
                if r != pivot_row and work[r] & bit:
                    work[r] ^= work[pivot_row]
            pivot_row += 1
            rank += 1
            if pivot_row == self.dim:
                break
        return rank

    def popcount(self) -> int:
        """Number of 1 entries."""
        return sum(row.bit_count() for row in self.rows)

    def is_invertible(self) -> bool:
        return self.rank() == self.dim


@dataclass(frozen=True)
class MatrixHeader:
    """Metadata carried on the header line of matrix text."""

    dim: int
    rule: int | None = None
    grid_rows: int | None = None
    grid_cols: int | None = None


_FULL_HEADER = re.compile(r"#\s*rule\s+(\d+)\s+rows\s+(\d+)\s+cols\s+(\d+)\s+dim\s+(\d+)\s*$")
_DIM_HEADER = re.compile(r"#\s*dim\s+(\d+)\s*$")


def serialize_matrix(a: Gf2Matrix, format: str = "dense", *,
                     rule: int | None = None,
                     grid_dims: tuple[int, int] | None = None) -> str:
    """Render a matrix as text with its header line.

    With `rule` and `grid_dims` the header names the rule the matrix was
    built from; otherwise it carries only the dimension.
    """
    if rule is not None and grid_dims is not None:
        m, n = grid_dims
        header = f"# rule {rule} rows {m} cols {n} dim {a.dim}\n"
    else:
        header = f"# dim {a.dim}\n"
    if format == "dense":
        body = "".join(
            "".join(str((row >> j) & 1) for j in range(a.dim)) + "\n"
            for row in a.rows)
    elif format == "coords":
        body = "".join(f"{i} {j}\n" for i, j in a.to_coords())
    else:
        raise ValueError(f"unknown matrix format {format!r}")
    return header + body


def parse_matrix(text: str) -> tuple[Gf2Matrix, MatrixHeader]:
    """Parse matrix text in either dense or coords body format."""
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty matrix text", line=1)
    header_line = lines[0].strip()
    full = _FULL_HEADER.match(header_line)
    only_dim = _DIM_HEADER.match(header_line)
    if full:
        rule, m, n, dim = (int(g) for g in full.groups())
        if m * n != dim:
            raise ParseError(f"header dim {dim} != rows*cols {m * n}", line=1)
        header = MatrixHeader(dim=dim, rule=rule, grid_rows=m, grid_cols=n)
    elif only_dim:
        header = MatrixHeader(dim=int(only_dim.group(1)))
    else:
        raise ParseError(f"bad matrix header {header_line!r}", line=1)
    dim = header.dim
    if dim < 1:
        raise ParseError("matrix dimension must be positive", line=1)

    body = [(idx, ln.strip()) for idx, ln in enumerate(lines[1:], start=2)
            if ln.strip() != ""]
    if any(" " in ln for _, ln in body):
        coords = []
        seen = set()
        for idx, ln in body:
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"bad coordinate line {ln!r}", line=idx)
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"bad coordinate line {ln!r}", line=idx) from None
            if not (0 <= i < dim and 0 <= j < dim):
                raise ParseError(f"entry ({i}, {j}) outside dim {dim}", line=idx)
            if (i, j) in seen:
                raise ParseError(f"duplicate entry ({i}, {j})", line=idx)
            seen.add((i, j))
            coords.append((i, j))
        return Gf2Matrix.from_coords(dim, coords), header
    if not body:
        return Gf2Matrix.zero(dim), header
    if len(body) != dim:
        raise ParseError(f"expected {dim} dense rows, got {len(body)}",
                         line=body[-1][0])
    rows = []
    for idx, ln in body:
        if len(ln) != dim or any(ch not in "01" for ch in ln):
            raise ParseError(f"bad dense row {ln!r}", line=idx)
        word = 0
        for j, ch in enumerate(ln):
            word |= (ch == "1") << j
        rows.append(word)
    return Gf2Matrix(dim, tuple(rows)), header
