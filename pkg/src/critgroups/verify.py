"""Independent oracles and consistency harnesses: brute-force spanning
structure counts, the edge-deletion coprimality predicates, and the seeded
search for generating-pair counterexamples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterator

from .critical import critical_group, is_cyclic, pair_report
from .graphs import Multigraph, add_path, delete_edges, is_connected


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge; False when a and b were already joined (cycle)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _edge_instances(g: Multigraph) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for (u, v), m in g.edge_items():
        out.extend([(u, v)] * m)
    return out


def brute_spanning_trees(g: Multigraph, limit: int = 20) -> int:
    """Count spanning trees by enumerating edge-instance subsets.

    Parallel edges count as distinct instances, matching the matrix-tree
    determinant. Refuses graphs with more than `limit` edge instances.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    instances = _edge_instances(g)
    if len(instances) > limit:
        raise ValueError(f"{len(instances)} edges exceeds enumeration limit {limit}")
    if g.n == 1:
        return 1
    count = 0
    for subset in combinations(instances, g.n - 1):
        uf = _UnionFind(g.n)
        if all(uf.union(u, v) for u, v in subset):
            count += 1
    return count


def brute_spanning_forests(g: Multigraph, x: int, y: int, limit: int = 20) -> int:
    """Count two-tree spanning forests separating roots x and y."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if x == y:
        raise ValueError("roots must be distinct")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"roots ({x},{y}) out of range for n={g.n}")
    instances = _edge_instances(g)
    if len(instances) > limit:
        raise ValueError(f"{len(instances)} edges exceeds enumeration limit {limit}")
    count = 0
    for subset in combinations(instances, g.n - 2):
        uf = _UnionFind(g.n)
        if all(uf.union(u, v) for u, v in subset) and uf.find(x) != uf.find(y):
            count += 1
    return count


# ----------------------------------------------------------------------------
# Edge-deletion coprimality predicates


@dataclass
class LorenziniReport:
    """Coprimality data for a vertex pair joined by c > 0 edges.

    When deleting the x-y edges disconnects the graph the deleted-graph
    order is recorded as 0, coprime as False, and pair_generates as None
    (not applicable).
    """

    x: int
    y: int
    multiplicity: int
    order_g: int
    order_g1: int
    coprime: bool
    cyclic_g: bool
    pair_generates: bool | None
    g1_connected: bool


def lorenzini_check(g: Multigraph, x: int, y: int) -> LorenziniReport:
    mult = g.multiplicity(x, y)
    if mult <= 0:
        raise ValueError(f"vertices {x} and {y} must be joined by at least one edge")
    kg = critical_group(g)
    g1 = delete_edges(g, x, y)
    connected = is_connected(g1)
    if connected:
        order_g1 = critical_group(g1).order
        coprime = gcd(kg.order, order_g1) == 1
        generates: bool | None = pair_report(kg, x, y).generates
    else:
        order_g1 = 0
        coprime = False
        generates = None
    return LorenziniReport(
        x=x,
        y=y,
        multiplicity=mult,
        order_g=kg.order,
        order_g1=order_g1,
        coprime=coprime,
        cyclic_g=is_cyclic(kg),
        pair_generates=generates,
        g1_connected=connected,
    )


@dataclass
class ChainCheck:
    pair: tuple[int, int]
    order_g1_prime: int
    coprime_with_g1: bool


@dataclass
class LorenziniPathReport:
    base: LorenziniReport
    length: int
    order_g_prime: int
    cyclic_g_prime: bool
    chain: list[ChainCheck]


def lorenzini_path_check(g: Multigraph, x: int, y: int, length: int) -> LorenziniPathReport:
    """Add a path of `length` edges between x and y and verify the chain
    coprimality conclusion: |K(G_1)| stays coprime to |K(G_1')| for every
    deleted chain edge, and K(G') is cyclic."""
    base = lorenzini_check(g, x, y)
    if not (base.g1_connected and base.coprime):
        raise ValueError("hypothesis fails: deleted graph must be connected with coprime order")
    gp = add_path(g, x, y, length)
    kgp = critical_group(gp)
    if length == 1:
        pairs = [(x, y)]
    else:
        chain = [x] + list(range(g.n, g.n + length - 1)) + [y]
        pairs = list(zip(chain, chain[1:]))
    checks = []
    for a, b in pairs:
        g1p = delete_edges(gp, a, b, count=1)
        order = critical_group(g1p).order
        checks.append(ChainCheck((a, b), order, gcd(base.order_g1, order) == 1))
    return LorenziniPathReport(
        base=base,
        length=length,
        order_g_prime=kgp.order,
        cyclic_g_prime=is_cyclic(kgp),
        chain=checks,
    )


# ----------------------------------------------------------------------------
# Graph sampling and enumeration


def random_connected_multigraph(rng: random.Random, max_vertices: int, max_extra_edges: int) -> Multigraph:
    """Seeded sample: Erdos-Renyi simple graph conditioned on connectivity,
    then up to max_extra_edges multiplicity bumps on random vertex pairs."""
    if max_vertices < 2:
        raise ValueError("need at least 2 vertices to sample")
    n = rng.randint(2, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        p = rng.uniform(0.3, 0.9)
        edges = {pair: 1 for pair in pairs if rng.random() < p}
        g = Multigraph(n, edges)
        if edges and is_connected(g):
            break
    for _ in range(rng.randint(0, max_extra_edges)):
        u, v = rng.sample(range(n), 2)
        edges_d = g.edge_dict()
        key = (u, v) if u < v else (v, u)
        edges_d[key] = edges_d.get(key, 0) + 1
        g = Multigraph(n, edges_d)
    return g


def enumerate_connected_simple_graphs(max_vertices: int) -> Iterator[Multigraph]:
    """All labeled connected simple graphs on 1..max_vertices vertices."""
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = {pairs[i]: 1 for i in range(len(pairs)) if mask >> i & 1}
            g = Multigraph(n, edges)
            if is_connected(g):
                yield g


# ----------------------------------------------------------------------------
# Counterexample search harness


@dataclass
class SearchOutcome:
    """Result of scanning for pairs with coprime orders whose delta
    configuration fails to generate. It is unknown whether such a pair can
    exist; an empty counterexample list is a perfectly valid outcome."""

    examined: int
    coprime_instances: int
    counterexamples: list[tuple[Multigraph, tuple[int, int]]]
    seed: int | None
    params: dict = field(default_factory=dict)


def coprime_pair_search(
    max_vertices: int,
    max_extra_edges: int = 0,
    trials: int = 0,
    seed: int | None = None,
    exhaustive: bool = False,
) -> SearchOutcome:
    """Scan (graph, adjacent pair) instances for coprime-order pairs that do
    not generate. Exhaustive mode walks all labeled connected simple graphs
    up to max_vertices; otherwise `trials` seeded multigraph samples."""
    params = {
        "max_vertices": max_vertices,
        "max_extra_edges": max_extra_edges,
        "trials": trials,
        "exhaustive": exhaustive,
    }
    if exhaustive:
        graphs: Iterator[Multigraph] | list[Multigraph] = enumerate_connected_simple_graphs(max_vertices)
    else:
        rng = random.Random(seed)
        graphs = [random_connected_multigraph(rng, max_vertices, max_extra_edges) for _ in range(trials)]
    examined = 0
    coprime_count = 0
    counterexamples: list[tuple[Multigraph, tuple[int, int]]] = []
    for g in graphs:
        if g.n < 2:
            continue
        kg = critical_group(g)
        for (x, y), _m in g.edge_items():
            examined += 1
            g1 = delete_edges(g, x, y)
            if not is_connected(g1):
                continue
            if gcd(kg.order, critical_group(g1).order) != 1:
                continue
            coprime_count += 1
            if not pair_report(kg, x, y).generates:
                counterexamples.append((g, (x, y)))
    return SearchOutcome(examined, coprime_count, counterexamples, seed, params)


def reverify_outcome(outcome: SearchOutcome) -> bool:
    """Recompute both defining conditions of every reported counterexample."""
    for g, (x, y) in outcome.counterexamples:
        if g.multiplicity(x, y) < 1:
            return False
        rep = lorenzini_check(g, x, y)
        if not (rep.g1_connected and rep.coprime and rep.pair_generates is False):
            return False
    return True
