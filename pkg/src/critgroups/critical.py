"""Critical groups of connected multigraphs.

The group of a graph on n vertices is Z^{n-1} modulo the column span of the
reduced Laplacian; its structure is read off the Smith normal form, which we
keep around so element orders and equivalence queries stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .graphs import Multigraph, is_connected
from .linalg import IntMatrix, SnfDecomposition, smith_normal_form


def reduced_laplacian(g: Multigraph, q: int) -> IntMatrix:
    """Graph Laplacian with row and column q deleted.

    Row/column i corresponds to vertex i, skipping q; diagonal entries are
    degrees with multiplicity, off-diagonal entries minus the multiplicity.
    """
    if g.n < 2:
        raise ValueError("reduced Laplacian needs at least 2 vertices")
    if not (0 <= q < g.n):
        raise ValueError(f"vertex {q} out of range for n={g.n}")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    keep = [v for v in range(g.n) if v != q]
    rows = []
    for u in keep:
        row = []
        for v in keep:
            row.append(g.degree(u) if u == v else -g.multiplicity(u, v))
        rows.append(row)
    return IntMatrix.from_rows(rows)


@dataclass
class CriticalGroup:
    """Invariant factors and the SNF data backing order/equivalence queries."""

    invariant_factors: list[int]
    order: int
    deleted_vertex: int
    snf: SnfDecomposition
    n: int

    def restrict(self, c: Sequence[int]) -> list[int]:
        """Drop the deleted vertex's entry from a full configuration."""
        if len(c) != self.n:
            raise ValueError(f"configuration length {len(c)} != n={self.n}")
        return [int(x) for i, x in enumerate(c) if i != self.deleted_vertex]


def critical_group(g: Multigraph, q: int | None = None) -> CriticalGroup:
    """Critical group of a connected multigraph (trivial for one vertex)."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if q is None:
        q = g.n - 1
    if g.n == 1:
        empty = smith_normal_form(IntMatrix(0, 0, []))
        return CriticalGroup([], 1, 0, empty, 1)
    dec = smith_normal_form(reduced_laplacian(g, q))
    diag = dec.diagonal()
    order = 1
    for d in diag:
        order *= d
    if order == 0:
        raise ValueError("reduced Laplacian is singular; graph not connected?")
    return CriticalGroup([d for d in diag if d > 1], order, q, dec, g.n)


def is_cyclic(kg: CriticalGroup) -> bool:
    return len(kg.invariant_factors) <= 1


def delta_config(g: Multigraph, x: int, y: int) -> list[int]:
    """One chip at x, minus one at y, zero elsewhere."""
    if x == y:
        raise ValueError("delta configuration needs two distinct vertices")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"pair ({x},{y}) out of range for n={g.n}")
    c = [0] * g.n
    c[x] = 1
    c[y] = -1
    return c


def configuration_order(kg: CriticalGroup, c: Sequence[int]) -> int:
    """Order of a degree-zero configuration's class in the critical group."""
    if sum(c) != 0:
        raise ValueError(f"configuration must have degree 0, got {sum(c)}")
    b = kg.restrict(c)
    w = kg.snf.u.mult_vector(b)
    diag = kg.snf.diagonal()
    return lcm(*(d // gcd(d, wi) for d, wi in zip(diag, w))) if diag else 1


def are_equivalent(kg: CriticalGroup, c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff the two configurations differ by a sequence of firing moves."""
    if len(c1) != kg.n or len(c2) != kg.n:
        raise ValueError(f"configurations must have length {kg.n}")
    if sum(c1) != sum(c2):
        return False
    b = [a - b_ for a, b_ in zip(kg.restrict(c1), kg.restrict(c2))]
    return kg.snf.image_contains(b)


@dataclass
class PairReport:
    x: int
    y: int
    element_order: int
    generates: bool


def pair_report(kg: CriticalGroup, x: int, y: int) -> PairReport:
    if x == y or not (0 <= x < kg.n and 0 <= y < kg.n):
        raise ValueError(f"invalid vertex pair ({x},{y}) for n={kg.n}")
    c = [0] * kg.n
    c[x] = 1
    c[y] = -1
    order = configuration_order(kg, c)
    return PairReport(x, y, order, order == kg.order)


def find_generating_pairs(g: Multigraph) -> list[PairReport]:
    """Reports for every unordered vertex pair, in lexicographic order."""
    kg = critical_group(g)
    return [pair_report(kg, x, y) for x in range(g.n) for y in range(x + 1, g.n)]


# ----------------------------------------------------------------------------
# Direct sums (wedge-sum comparisons)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def direct_sum_factors(fs1: Sequence[int], fs2: Sequence[int]) -> list[int]:
    """Invariant factors of the direct sum of two invariant-factor lists.

    Merges the prime-power multisets and rebuilds the divisibility chain:
    the largest factor takes each prime's largest exponent, and so on.
    """
    exps: dict[int, list[int]] = {}
    for f in list(fs1) + list(fs2):
        if f <= 1:
            continue
        for p, e in _factorize(f).items():
            exps.setdefault(p, []).append(e)
    depth = max((len(v) for v in exps.values()), default=0)
    chain = []
    for slot in range(depth):
        f = 1
        for p, es in exps.items():
            es_sorted = sorted(es, reverse=True)
            if slot < len(es_sorted):
                f *= p ** es_sorted[slot]
        chain.append(f)
    return sorted(chain)
