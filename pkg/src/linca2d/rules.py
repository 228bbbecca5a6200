"""Rule numbering for two-dimensional nine-neighborhood linear rules.

A rule number is a 9-bit integer whose set bits select the single-neighbor
"fundamental" rules the cell XORs together.  The weights are laid out on the
3x3 stencil as

    64  128  256
    32    1    2
    16    8    4

so weight 1 is the cell itself, 2 its right neighbor, 128 its top neighbor,
and so on.  Row deltas grow downward, column deltas rightward.
"""

from __future__ import annotations

from typing import Iterable

from .errors import RuleRangeError

RULE_COUNT = 512

FUNDAMENTALS: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64, 128, 256)

#: fundamental weight -> (row delta, column delta) of the neighbor it reads
OFFSETS: dict[int, tuple[int, int]] = {
    1: (0, 0),
    2: (0, 1),
    4: (1, 1),
    8: (1, 0),
    16: (1, -1),
    32: (0, -1),
    64: (-1, -1),
    128: (-1, 0),
    256: (-1, 1),
}

#: fundamental weight -> the fundamental reading the mirrored neighbor
TRANSPOSE_PARTNERS: dict[int, int] = {
    1: 1,
    2: 32, 32: 2,
    4: 64, 64: 4,
    8: 128, 128: 8,
    16: 256, 256: 16,
}

DIRECTION_NAMES: dict[tuple[int, int], str] = {
    (0, 0): "self",
    (0, 1): "right",
    (1, 1): "bottom-right",
    (1, 0): "bottom",
    (1, -1): "bottom-left",
    (0, -1): "left",
    (-1, -1): "top-left",
    (-1, 0): "top",
    (-1, 1): "top-right",
}


def check_rule(rule: int) -> int:
    """Validate a rule number, returning it unchanged."""
    if not isinstance(rule, int) or isinstance(rule, bool):
        raise RuleRangeError(f"rule must be an integer, got {rule!r}")
    if not 0 <= rule < RULE_COUNT:
        raise RuleRangeError(f"rule {rule} outside 0..511")
    return rule


def check_fundamental(weight: int) -> int:
    """Validate a fundamental weight, returning it unchanged."""
    if weight not in OFFSETS:
        raise RuleRangeError(f"{weight!r} is not a fundamental rule weight")
    return weight


def decompose(rule: int) -> tuple[int, ...]:
    """Split a rule into its fundamental weights, ascending."""
    check_rule(rule)
    return tuple(w for w in FUNDAMENTALS if rule & w)


def compose(fundamentals: Iterable[int]) -> int:
    """Sum distinct fundamental weights back into a rule number."""
    rule = 0
    for w in fundamentals:
        check_fundamental(w)
        if rule & w:
            raise RuleRangeError(f"duplicate fundamental weight {w}")
        rule |= w
    return rule


def offset_of(weight: int) -> tuple[int, int]:
    """Neighbor offset (dr, dc) read by a fundamental rule."""
    return OFFSETS[check_fundamental(weight)]


def transpose_partner(weight: int) -> int:
    """The fundamental whose rule matrix is the transpose of this one's."""
    return TRANSPOSE_PARTNERS[check_fundamental(weight)]


def partner_rule(rule: int) -> int:
    """Rule formed by replacing every fundamental with its transpose partner."""
    return compose(transpose_partner(w) for w in decompose(rule))


def describe_rule(rule: int) -> str:
    """Human-readable summary: binary form, decomposition, offsets, partner."""
    check_rule(rule)
    parts = decompose(rule)
    lines = [f"rule {rule} (binary {rule:09b})"]
    if parts:
        lines.append(f"{rule} = " + " + ".join(str(w) for w in parts))
    else:
        lines.append(f"{rule} has no dependencies (next state is always 0)")
    if parts:
        lines.append("dependencies:")
        for w in parts:
            dr, dc = OFFSETS[w]
            lines.append(f"  {w:3d} -> ({dr:+d},{dc:+d}) {DIRECTION_NAMES[(dr, dc)]}")
    lines.append(f"transpose partner rule: {partner_rule(rule)}")
    return "\n".join(lines) + "\n"
