"""Rule matrices as colored directed graphs.

A rule matrix is an adjacency matrix: vertex i is cell i of the grid and
edge (i, j) means cell i's next state reads cell j.  When a graph is built
from a rule number, each edge is colored by the fundamental rule that
contributed it; fundamental supports never overlap, so the color of an
edge is unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import Gf2Matrix
from .rulematrix import build
from .rules import decompose

#: DOT color per fundamental weight; None is the uncolored (matrix-only) case
EDGE_COLORS: dict[int | None, str] = {
    1: "black",
    2: "red",
    4: "orange",
    8: "gold",
    16: "green",
    32: "blue",
    64: "purple",
    128: "brown",
    256: "cyan",
    None: "gray",
}


@dataclass(frozen=True)
class RuleGraph:
    """Directed graph on grid cells; edge color is a fundamental weight or None."""

    vertex_count: int
    edges: tuple[tuple[int, int, int | None], ...]
    grid_dims: tuple[int, int] | None = None

    def __post_init__(self):
        seen = set()
        for src, dst, color in self.edges:
            if not (0 <= src < self.vertex_count and 0 <= dst < self.vertex_count):
                raise ValueError(f"edge ({src}, {dst}) outside vertex range")
            if (src, dst) in seen:
                raise ValueError(f"duplicate edge ({src}, {dst})")
            if color is not None and color not in EDGE_COLORS:
                raise ValueError(f"unknown edge color {color!r}")
            if src == dst and color not in (None, 1):
                raise ValueError(f"self-loop ({src}, {src}) colored {color}; "
                                 "only the self-dependency produces loops")
            seen.add((src, dst))

    def edge_set(self) -> set[tuple[int, int]]:
        return {(src, dst) for src, dst, _ in self.edges}


@dataclass(frozen=True)
class GraphStats:
    """Structural summary: loops, isolated vertices, weak components, degrees."""

    self_loop_count: int
    isolated: tuple[int, ...]
    weak_components: tuple[tuple[int, ...], ...]
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.weak_components)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def from_matrix(a: Gf2Matrix) -> RuleGraph:
    """Adjacency-matrix view: one uncolored edge per 1-entry."""
    edges = tuple((i, j, None) for i, j in a.to_coords())
    return RuleGraph(a.dim, edges)


def colored_graph(rule: int, m: int, n: int) -> RuleGraph:
    """Union of the fundamental graphs of `rule`, edges colored by origin."""
    colored: dict[tuple[int, int], int] = {}
    for weight in decompose(rule):
        for i, j in build(weight, m, n).to_coords():
            colored[(i, j)] = weight
    edges = tuple((i, j, colored[(i, j)]) for i, j in sorted(colored))
    return RuleGraph(m * n, edges, grid_dims=(m, n))


def stats(g: RuleGraph) -> GraphStats:
    """Compute loop count, isolated vertices, weak components and degrees.

    Components are weak: edge direction is forgotten, and self-loops merge
    nothing.  Isolated means total degree zero, so a vertex carrying only a
    self-loop is not isolated.
    """
    n = g.vertex_count
    out_deg = [0] * n
    in_deg = [0] * n
    loops = 0
    uf = _UnionFind(n)
    for src, dst, _ in g.edges:
        out_deg[src] += 1
        in_deg[dst] += 1
        if src == dst:
            loops += 1
        else:
            uf.union(src, dst)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(uf.find(v), []).append(v)
    components = tuple(tuple(sorted(vs)) for vs in
                       sorted(members.values(), key=lambda vs: vs[0]))
    isolated = tuple(v for v in range(n) if out_deg[v] + in_deg[v] == 0)
    return GraphStats(
        self_loop_count=loops,
        isolated=isolated,
        weak_components=components,
        out_degrees=tuple(out_deg),
        in_degrees=tuple(in_deg),
    )


def to_dot(g: RuleGraph) -> str:
    """Deterministic DOT text: vertices ascending, edges sorted by (src, dst)."""
    lines = ["digraph rule_graph {"]
    for v in range(g.vertex_count):
        lines.append(f"  v{v};")
    for src, dst, color in sorted(g.edges):
        lines.append(f"  v{src} -> v{dst} [color={EDGE_COLORS[color]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
