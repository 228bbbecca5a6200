"""Binary problem matrices: construction, flattening, text I/O, random grids.

A grid is an m x n matrix of bits stored row-major, one packed integer per
row with bit c holding column c.  Two text formats are supported: "plain"
(one line of 0/1 characters per row) and PBM P1, since a grid is exactly a
black-and-white bitmap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DimensionError, ParseError

#: hard cap on cell count; rule matrices are (mn x mn), so this bounds them too
MAX_CELLS = 1 << 20

_MASK64 = (1 << 64) - 1
_XS64_MULT = 2685821657736338717  # 0x2545F4914F6CDD1D
_XS64_ZERO_SEED = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class BitVector:
    """Fixed-length bit sequence, bit i of `word` holding element i."""

    length: int
    word: int

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("negative BitVector length")
        if not 0 <= self.word < (1 << self.length):
            raise DimensionError("BitVector word has bits beyond its length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        word = 0
        count = 0
        for b in bits:
            if b not in (0, 1):
                raise DimensionError(f"bit value {b!r} is not 0 or 1")
            word |= b << count
            count += 1
        return cls(count, word)

    def to_bits(self) -> list[int]:
        return [(self.word >> i) & 1 for i in range(self.length)]

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.word >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_bits())

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise DimensionError(
                f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.word ^ other.word)


@dataclass(frozen=True)
class Grid:
    """Immutable m x n bit matrix; rows[r] packs row r with bit c = column c."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DimensionError(f"grid dimensions must be positive, got {self.m}x{self.n}")
        if self.m * self.n > MAX_CELLS:
            raise CapacityError(
                f"{self.m}x{self.n} grid exceeds the {MAX_CELLS}-cell cap")
        if len(self.rows) != self.m:
            raise DimensionError(f"expected {self.m} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise DimensionError(f"row {r} has bits beyond column {self.n - 1}")

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]]) -> Grid:
        m = len(cells)
        n = len(cells[0]) if m else 0
        rows = []
        for row in cells:
            if len(row) != n:
                raise DimensionError("ragged cell rows")
            word = 0
            for c, b in enumerate(row):
                if b not in (0, 1):
                    raise DimensionError(f"cell value {b!r} is not 0 or 1")
                word |= b << c
            rows.append(word)
        return cls(m, n, tuple(rows))

    @classmethod
    def zero(cls, m: int, n: int) -> Grid:
        return cls(m, n, (0,) * m)

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.m and 0 <= c < self.n):
            raise IndexError((r, c))
        return (self.rows[r] >> c) & 1

    def to_cells(self) -> list[list[int]]:
        return [[(row >> c) & 1 for c in range(self.n)] for row in self.rows]

    def __xor__(self, other: Grid) -> Grid:
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionError(
                f"grid shape mismatch: {self.m}x{self.n} vs {other.m}x{other.n}")
        return Grid(self.m, self.n,
                    tuple(a ^ b for a, b in zip(self.rows, other.rows)))


def flatten(g: Grid) -> BitVector:
    """Row-major flattening: bit r*n+c of the result is cell (r, c)."""
    word = 0
    for r, row in enumerate(g.rows):
        word |= row << (r * g.n)
    return BitVector(g.m * g.n, word)


def unflatten(v: BitVector, m: int, n: int) -> Grid:
    """Inverse of flatten; v must have exactly m*n bits."""
    if v.length != m * n:
        raise DimensionError(f"vector length {v.length} != {m}*{n}")
    mask = (1 << n) - 1
    return Grid(m, n, tuple((v.word >> (r * n)) & mask for r in range(m)))


class Xorshift64Star:
    """Pinned xorshift64* stream; seed 0 is remapped so the state is never 0."""

    def __init__(self, seed: int):
        seed &= _MASK64
        self._s = seed if seed != 0 else _XS64_ZERO_SEED

    def next_word(self) -> int:
        s = self._s
        s ^= s >> 12
        s = (s ^ (s << 25)) & _MASK64
        s ^= s >> 27
        self._s = s
        return (s * _XS64_MULT) & _MASK64

    def next_bit(self) -> int:
        return self.next_word() >> 63

    def next_below(self, bound: int) -> int:
        return self.next_word() % bound


def random_grid(m: int, n: int, seed: int) -> Grid:
    """Deterministic random grid: cell i takes bit 63 of the i-th stream word."""
    if m < 1 or n < 1:
        raise DimensionError(f"grid dimensions must be positive, got {m}x{n}")
    if m * n > MAX_CELLS:
        raise CapacityError(f"{m}x{n} grid exceeds the {MAX_CELLS}-cell cap")
    gen = Xorshift64Star(seed)
    rows = []
    for _ in range(m):
        word = 0
        for c in range(n):
            word |= gen.next_bit() << c
        rows.append(word)
    return Grid(m, n, tuple(rows))


def serialize_grid(g: Grid, format: str = "plain") -> str:
    """Render a grid as text; format is "plain" or "pbm"."""
    if format == "plain":
        return "".join(
            "".join(str((row >> c) & 1) for c in range(g.n)) + "\n"
            for row in g.rows)
    if format == "pbm":
        lines = [f"P1\n{g.n} {g.m}\n"]
        for row in g.rows:
            lines.append(" ".join(str((row >> c) & 1) for c in range(g.n)) + "\n")
        return "".join(lines)
    raise ValueError(f"unknown grid format {format!r}")


def parse_grid(text: str) -> Grid:
    """Parse plain or PBM P1 grid text (auto-detected by the P1 magic)."""
    if text.lstrip()[:2] == "P1":
        return _parse_pbm(text)
    return _parse_plain(text)


def _parse_plain(text: str) -> Grid:
    raw_lines = text.split("\n")
    # drop trailing blank lines only; interior blanks are ragged rows
    while raw_lines and raw_lines[-1].strip() == "":
        raw_lines.pop()
    if not raw_lines:
        raise ParseError("empty grid", line=1)
    rows: list[int] = []
    width = None
    for idx, raw in enumerate(raw_lines, start=1):
        stripped = "".join(ch for ch in raw if not ch.isspace())
        for ch in stripped:
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r}", line=idx)
        if width is None:
            width = len(stripped)
            if width == 0:
                raise ParseError("blank first row", line=idx)
        if len(stripped) != width:
            raise ParseError(
                f"ragged row: {len(stripped)} cells, expected {width}", line=idx)
        word = 0
        for c, ch in enumerate(stripped):
            word |= (ch == "1") << c
        rows.append(word)
    _check_capacity(len(rows), width or 0)
    return Grid(len(rows), width or 0, tuple(rows))


def _parse_pbm(text: str) -> Grid:
    lines = text.split("\n")
    # tokens tagged with their 1-based line; comments allowed only before dims
    pos = 0
    line_no = 0
    tokens: list[tuple[str, int]] = []

    def refill(allow_comments: bool) -> None:
        nonlocal pos, line_no
        while pos < len(lines) and not tokens:
            line_no = pos + 1
            raw = lines[pos]
            pos += 1
            if allow_comments and raw.lstrip().startswith("#"):
                continue
            tokens.extend((tok, line_no) for tok in raw.split())

    def take(what: str, allow_comments: bool = False) -> tuple[str, int]:
        refill(allow_comments)
        if not tokens:
            raise ParseError(f"unexpected end of input, expected {what}",
                             line=max(line_no, 1))
        return tokens.pop(0)

    magic, ln = take("P1 magic")
    if magic != "P1":
        raise ParseError(f"expected P1 magic, got {magic!r}", line=ln)
    wtok, ln = take("width", allow_comments=True)
    htok, ln2 = take("height", allow_comments=True)
    try:
        n, m = int(wtok), int(htok)
    except ValueError:
        raise ParseError(f"bad dimensions {wtok!r} {htok!r}", line=ln) from None
    if m < 1 or n < 1:
        raise ParseError(f"bad dimensions {n} {m}", line=ln)
    _check_capacity(m, n)
    bits = []
    for _ in range(m * n):
        tok, ln = take("pixel")
        if tok not in ("0", "1"):
            raise ParseError(f"invalid pixel token {tok!r}", line=ln)
        bits.append(tok == "1")
    refill(allow_comments=False)
    if tokens:
        tok, ln = tokens[0]
        raise ParseError(f"trailing token {tok!r} after {m * n} pixels", line=ln)
    rows = []
    for r in range(m):
        word = 0
        for c in range(n):
            word |= bits[r * n + c] << c
        rows.append(word)
    return Grid(m, n, tuple(rows))


def _check_capacity(m: int, n: int) -> None:
    if m * n > MAX_CELLS:
        raise CapacityError(f"{m}x{n} grid exceeds the {MAX_CELLS}-cell cap")
