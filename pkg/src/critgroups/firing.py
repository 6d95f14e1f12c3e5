"""Chip-firing moves and the constructive reductions on cycles and polygon
stacks.

A configuration is a plain list of ints, one chip count per vertex; counts
may be negative. A move log is a list of (vertex, times) pairs where
positive times mean fire and negative mean borrow; replaying a log from the
start configuration reproduces the end configuration exactly.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Multigraph, StackGraph

MoveLog = list[tuple[int, int]]


def degree(c: Sequence[int]) -> int:
    """Total number of chips."""
    return sum(c)


def parse_configuration(text: str) -> list[int]:
    """Parse comma-separated chip counts like '0,4,-1,-1'."""
    try:
        return [int(p) for p in text.strip().split(",")]
    except ValueError:
        raise ValueError(f"bad configuration {text!r}") from None


def format_configuration(c: Sequence[int]) -> str:
    return ",".join(str(x) for x in c)


def fire(g: Multigraph, c: Sequence[int], v: int, times: int = 1) -> list[int]:
    """Fire vertex v `times` times (negative times borrow)."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(c) != g.n:
        raise ValueError(f"configuration length {len(c)} != n={g.n}")
    out = [int(x) for x in c]
    out[v] -= times * g.degree(v)
    for u, mult in g.incident(v):
        out[u] += times * mult
    return out


def replay_log(g: Multigraph, c: Sequence[int], log: Sequence[tuple[int, int]]) -> list[int]:
    out = [int(x) for x in c]
    for v, times in log:
        out = fire(g, out, v, times)
    return out


def _borrow(g: Multigraph, cur: list[int], log: MoveLog, v: int, count: int) -> None:
    # borrow `count` times at v, in place; zero borrows are dropped from the log
    if count == 0:
        return
    cur[v] += count * g.degree(v)
    for u, mult in g.incident(v):
        cur[u] -= count * mult
    log.append((v, -count))


def _is_canonical_cycle(g: Multigraph) -> bool:
    if g.n < 3:
        return False
    want = {tuple(sorted((i, (i + 1) % g.n))): 1 for i in range(g.n)}
    return g.edge_dict() == want


def _sweep_cycle(g: Multigraph, cur: list[int], log: MoveLog, order: list[int], pos: int) -> None:
    """Clear a cycle (given as its vertex order) onto the adjacent pair
    (order[pos], order[pos+1]), walking the long way around."""
    n = len(order)
    walk = [order[(pos + 2 + s) % n] for s in range(n - 1)]
    for t in range(n - 2):
        _borrow(g, cur, log, walk[t + 1], cur[walk[t]])


def _sweep_path(g: Multigraph, cur: list[int], log: MoveLog, path: list[int], pos: int) -> None:
    """Consolidate all chips on a path onto (path[pos], path[pos+1]).

    Borrows happen only at interior path vertices, so nothing leaks back
    into whatever the path endpoints are attached to.
    """
    last = len(path) - 1
    for j in range(1, pos + 1):
        _borrow(g, cur, log, path[j], cur[path[j - 1]])
    for j in range(last - 1, pos, -1):
        _borrow(g, cur, log, path[j], cur[path[j + 1]])


def reduce_on_cycle(g: Multigraph, c: Sequence[int]) -> tuple[list[int], MoveLog]:
    """Reduce a degree-zero configuration on C_n to a multiple of the delta
    configuration on the last two vertices.

    The output is (0, ..., 0, m, -m); m is recoverable as the next-to-last
    entry. Requires the canonical cycle labeling (edges i, i+1 mod n).
    """
    if not _is_canonical_cycle(g):
        raise ValueError("reduce_on_cycle needs a canonical cycle on >= 3 vertices")
    if len(c) != g.n:
        raise ValueError(f"configuration length {len(c)} != n={g.n}")
    if sum(c) != 0:
        raise ValueError(f"configuration must have degree 0, got {sum(c)}")
    cur = [int(x) for x in c]
    log: MoveLog = []
    _sweep_cycle(g, cur, log, list(range(g.n)), g.n - 2)
    return cur, log


def reduce_to_pair(sg: StackGraph, c: Sequence[int], pos: int) -> tuple[list[int], MoveLog]:
    """Reduce a degree-zero configuration on a polygon stack onto the
    consecutive pair at index `pos` of the top level's path.

    Follows the inductive construction: clear the base cycle onto the first
    shared edge, consolidate each intermediate path onto the next shared
    edge, then consolidate the top path onto the requested pair. For a bare
    cycle, `pos` indexes its edges cyclically.
    """
    g = sg.graph
    if not sg.paths:
        raise ValueError("empty stack has no vertex pair to reduce onto")
    if len(c) != g.n:
        raise ValueError(f"configuration length {len(c)} != n={g.n}")
    if sum(c) != 0:
        raise ValueError(f"configuration must have degree 0, got {sum(c)}")

    top = sg.paths[-1]
    levels = len(sg.paths)
    if levels == 1:
        if not (0 <= pos < len(top)):
            raise ValueError(f"pair position {pos} out of range for the base cycle")
    elif not (0 <= pos < len(top) - 1):
        raise ValueError(f"pair position {pos} out of range for the top path")

    cur = [int(x) for x in c]
    log: MoveLog = []
    if levels == 1:
        _sweep_cycle(g, cur, log, top, pos)
    else:
        _sweep_cycle(g, cur, log, sg.paths[0], sg.level_positions[0])
        for t in range(1, levels - 1):
            _sweep_path(g, cur, log, sg.paths[t], sg.level_positions[t])
        _sweep_path(g, cur, log, top, pos)
    return cur, log
