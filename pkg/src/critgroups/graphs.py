"""Multigraphs with integer edge multiplicities, plus the constructors used
throughout the package: cycles, complete graphs, wedge sums, path additions
and polygon stacks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Undirected multigraph on vertices 0..n-1.

    Parallel edges are stored as a multiplicity per unordered vertex pair.
    Self-loops are rejected. Instances are treated as immutable: all
    operations build new graphs.
    """

    def __init__(self, n: int, edges: Mapping[tuple[int, int], int] | Iterable = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        table: dict[tuple[int, int], int] = {}
        if isinstance(edges, Mapping):
            items = [(u, v, m) for (u, v), m in edges.items()]
        else:
            items = []
            for e in edges:
                if len(e) == 2:
                    u, v = e
                    items.append((u, v, 1))
                else:
                    u, v, m = e
                    items.append((u, v, m))
        for u, v, m in items:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if m < 1:
                raise ValueError(f"edge ({u},{v}) has multiplicity {m} < 1")
            k = _key(u, v)
            table[k] = table.get(k, 0) + m
        self._edges = table
        adj: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for (u, v), m in table.items():
            adj[u][v] = m
            adj[v][u] = m
        self._adj = adj
        self._deg = [sum(adj[v].values()) for v in range(n)]

    def multiplicity(self, u: int, v: int) -> int:
        return self._edges.get(_key(u, v), 0)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def incident(self, v: int) -> list[tuple[int, int]]:
        """Sorted (neighbor, multiplicity) pairs for vertex v."""
        return sorted(self._adj[v].items())

    def edge_items(self) -> list[tuple[tuple[int, int], int]]:
        """Sorted ((u, v), multiplicity) pairs with u < v."""
        return sorted(self._edges.items())

    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._edges.values())

    def edge_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edge_items()})"


def is_connected(g: Multigraph) -> bool:
    """True iff every vertex is reachable from vertex 0 (K_1 is connected)."""
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def cycle_graph(m: int) -> Multigraph:
    """Cycle on m vertices; m = 2 gives the two-vertex double edge."""
    if m < 2:
        raise ValueError(f"cycle needs at least 2 vertices, got {m}")
    if m == 2:
        return Multigraph(2, {(0, 1): 2})
    return Multigraph(m, {(i, (i + 1) % m): 1 for i in range(m)})


def complete_graph(m: int) -> Multigraph:
    if m < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {m}")
    return Multigraph(m, {(i, j): 1 for i in range(m) for j in range(i + 1, m)})


def wedge_sum(g1: Multigraph, v1: int, g2: Multigraph, v2: int) -> Multigraph:
    """Glue g2 onto g1 by identifying v2 with v1.

    Relabeling is deterministic: vertex w of g2 maps to v1 if w == v2, else
    to g1.n + w (minus one if w > v2), so g2's remaining vertices occupy
    g1.n .. g1.n + g2.n - 2 in their original order.
    """
    if not (0 <= v1 < g1.n):
        raise ValueError(f"vertex {v1} out of range for first graph (n={g1.n})")
    if not (0 <= v2 < g2.n):
        raise ValueError(f"vertex {v2} out of range for second graph (n={g2.n})")

    def relabel(w: int) -> int:
        if w == v2:
            return v1
        return g1.n + (w if w < v2 else w - 1)

    edges = g1.edge_dict()
    for (u, v), m in g2.edge_items():
        k = _key(relabel(u), relabel(v))
        edges[k] = edges.get(k, 0) + m
    return Multigraph(g1.n + g2.n - 1, edges)


def add_path(g: Multigraph, x: int, y: int, length: int) -> Multigraph:
    """Add a path of `length` edges (length - 1 new vertices) between x and y.

    New vertices get consecutive indices g.n .. g.n + length - 2;
    length = 1 just increments the multiplicity of (x, y).
    """
    if x == y:
        raise ValueError("path endpoints must be distinct (self-loops forbidden)")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"path endpoints ({x},{y}) out of range for n={g.n}")
    if length < 1:
        raise ValueError(f"path length must be >= 1, got {length}")
    edges = g.edge_dict()
    chain = [x] + list(range(g.n, g.n + length - 1)) + [y]
    for a, b in zip(chain, chain[1:]):
        k = _key(a, b)
        edges[k] = edges.get(k, 0) + 1
    return Multigraph(g.n + length - 1, edges)


def delete_edges(g: Multigraph, x: int, y: int, count: int | None = None) -> Multigraph:
    """Remove `count` parallel edges between x and y (all of them when None)."""
    m = g.multiplicity(x, y)
    if count is None:
        count = m
    if not (0 <= count <= m):
        raise ValueError(f"cannot remove {count} edges from multiplicity {m}")
    edges = g.edge_dict()
    k = _key(x, y)
    if m - count == 0:
        edges.pop(k, None)
    else:
        edges[k] = m - count
    return Multigraph(g.n, edges)


# ----------------------------------------------------------------------------
# Polygon stacks


@dataclass
class StackGraph:
    """A stack of polygons together with its attachment bookkeeping.

    level_edges[i] is the edge shared by polygon i+1 and polygon i+2 (the
    pair the next path was attached across); paths[i] lists the vertices of
    polygon i+1's path in order (paths[0] is the base cycle's vertex order);
    level_positions[i] is the index of level_edges[i] within paths[i].
    active_pair is the pair available for the next attachment, None for the
    empty stack.
    """

    graph: Multigraph
    level_edges: list[tuple[int, int]]
    active_pair: tuple[int, int] | None
    paths: list[list[int]] = field(default_factory=list)
    level_positions: list[int] = field(default_factory=list)

    @property
    def levels(self) -> int:
        return len(self.paths)


def check_stack_spec(ks: Sequence[int]) -> tuple[int, ...]:
    spec = tuple(int(k) for k in ks)
    for k in spec:
        if k < 2:
            raise ValueError(f"stack entries must be >= 2, got {k}")
    return spec


def polygon_stack(ks: Sequence[int], attach_positions: Sequence[int] | None = None) -> StackGraph:
    """Build the polygon stack for (k_1, ..., k_n).

    Level 1 is a k_1-cycle with canonical attachment pair (0, 1); each later
    level adds a path of k_i - 1 edges across the current attachment pair.
    By default the next pair is (x, first new vertex) for k_i >= 3 and is
    unchanged for k_i = 2. `attach_positions` overrides the default choice:
    entry i selects which consecutive pair of level i+1's path hosts level
    i+2 (position j means the pair (path[j], path[j+1]), cyclically on the
    base cycle).
    """
    spec = check_stack_spec(ks)
    if attach_positions is not None and len(attach_positions) != max(len(spec) - 1, 0):
        raise ValueError("need one attach position per level after the first")
    if not spec:
        return StackGraph(Multigraph(1), [], None, [], [])

    g = cycle_graph(spec[0])
    paths: list[list[int]] = [list(range(spec[0]))]
    level_edges: list[tuple[int, int]] = []
    positions: list[int] = []

    for idx, k in enumerate(spec[1:]):
        prev = paths[-1]
        cyclic = idx == 0  # base cycle allows any of its edges
        npairs = len(prev) if cyclic else len(prev) - 1
        pos = 0 if attach_positions is None else int(attach_positions[idx])
        if not (0 <= pos < npairs):
            raise ValueError(f"attach position {pos} invalid for level {idx + 2}")
        x = prev[pos]
        y = prev[(pos + 1) % len(prev)] if cyclic else prev[pos + 1]
        base_n = g.n
        g = add_path(g, x, y, k - 1)
        paths.append([x] + list(range(base_n, g.n)) + [y])
        level_edges.append((x, y))
        positions.append(pos)

    top = paths[-1]
    return StackGraph(g, level_edges, (top[0], top[1]), paths, positions)


# ----------------------------------------------------------------------------
# Text formats


def parse_stack_spec(text: str) -> tuple[int, ...]:
    """Parse a comma-separated stack spec like '3,4,4'."""
    text = text.strip()
    if not text:
        return ()
    try:
        return check_stack_spec([int(p) for p in text.split(",")])
    except ValueError as exc:
        raise ValueError(f"bad stack spec {text!r}: {exc}") from None


def parse_graph(text: str) -> Multigraph:
    """Read the graph text format.

    One `n <count>` line, then `e <u> <v> [mult]` lines; `#` starts a
    comment. Repeated `e` lines for the same pair accumulate multiplicity.
    """
    n = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate n line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
        elif parts[0] == "e":
            if len(parts) not in (3, 4):
                raise ValueError(f"line {lineno}: expected 'e <u> <v> [mult]'")
            u, v = int(parts[1]), int(parts[2])
            m = int(parts[3]) if len(parts) == 4 else 1
            triples.append((u, v, m))
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'n <count>' line")
    return Multigraph(n, triples)


def format_graph(g: Multigraph) -> str:
    lines = [f"n {g.n}"]
    for (u, v), m in g.edge_items():
        lines.append(f"e {u} {v}" if m == 1 else f"e {u} {v} {m}")
    return "\n".join(lines) + "\n"


def format_dot(g: Multigraph) -> str:
    """Plain-structure DOT export (parallel edges repeated)."""
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v), m in g.edge_items():
        lines.extend(f"  {u} -- {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
