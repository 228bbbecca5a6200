"""Linear rules of two-dimensional nine-neighborhood cellular automata.

Three equivalent models of the 512 XOR rules: direct stencil evolution on
a grid, GF(2) rule matrices, and colored directed graphs, plus a suite
that machine-checks the models against each other.
"""

from .engine import evolve, step
from .errors import CapacityError, DimensionError, ParseError, RuleRangeError
from .gf2 import Gf2Matrix, MatrixHeader, parse_matrix, serialize_matrix
from .graph import GraphStats, RuleGraph, colored_graph, from_matrix, stats, to_dot
from .grid import (
    BitVector,
    Grid,
    Xorshift64Star,
    flatten,
    parse_grid,
    random_grid,
    serialize_grid,
    unflatten,
)
from .rulematrix import build, fundamental_supports_disjoint
from .rules import (
    FUNDAMENTALS,
    OFFSETS,
    compose,
    decompose,
    describe_rule,
    offset_of,
    partner_rule,
    transpose_partner,
)
from .verify import (
    VerificationReport,
    render_report,
    run_suites,
    verify_equivalence,
    verify_golden_corpus,
    verify_join_laws,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "CapacityError",
    "DimensionError",
    "FUNDAMENTALS",
    "Gf2Matrix",
    "GraphStats",
    "Grid",
    "MatrixHeader",
    "OFFSETS",
    "ParseError",
    "RuleGraph",
    "RuleRangeError",
    "VerificationReport",
    "Xorshift64Star",
    "build",
    "colored_graph",
    "compose",
    "decompose",
    "describe_rule",
    "evolve",
    "flatten",
    "from_matrix",
    "fundamental_supports_disjoint",
    "offset_of",
    "parse_grid",
    "parse_matrix",
    "partner_rule",
    "random_grid",
    "render_report",
    "run_suites",
    "serialize_grid",
    "serialize_matrix",
    "stats",
    "step",
    "to_dot",
    "transpose_partner",
    "unflatten",
    "verify_equivalence",
    "verify_golden_corpus",
    "verify_join_laws",
    "verify_theorems",
]
