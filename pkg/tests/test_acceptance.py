"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete. All comparisons are exact integer equality; the elapsed-time
bounds are asserted too (they carry generous margins on any recent machine).
"""

import itertools
import random
import time
from math import gcd

from critgroups import (
    add_path,
    alternating_tables,
    brute_spanning_forests,
    brute_spanning_trees,
    complete_graph,
    constant_k_closed_form,
    constant_k_table,
    critical_group,
    cycle_graph,
    determinant,
    direct_sum_factors,
    enumerate_connected_simple_graphs,
    find_generating_pairs,
    forest_count,
    house_closed_form,
    IntMatrix,
    is_cyclic,
    lorenzini_check,
    pair_report,
    polygon_stack,
    coprime_pair_search,
    random_connected_multigraph,
    reduce_to_pair,
    reduced_laplacian,
    replay_log,
    reverify_outcome,
    smith_normal_form,
    tree_count,
    wedge_sum,
)
from critgroups.critical import are_equivalent


class criterion:
    """Prints `ACCEPTANCE <num>: PASS/FAIL - <desc>` when the block exits."""

    def __init__(self, num, desc, seconds):
        self.num = num
        self.desc = desc
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {self.num}: {status} - {self.desc} ({elapsed:.1f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, f"criterion {self.num} took {elapsed:.1f}s, limit {self.seconds}s"
        return False


def test_criterion_1_paper_constants():
    with criterion(1, "paper constants reproduce exactly", 5):
        assert tree_count((3, 4)) == 11
        assert forest_count((3, 4)) == 8
        assert brute_spanning_forests(cycle_graph(4), 0, 1) == 3
        wedge35 = wedge_sum(cycle_graph(3), 0, cycle_graph(5), 0)
        assert critical_group(wedge35).invariant_factors == [15]
        wedge357 = wedge_sum(wedge35, 0, cycle_graph(7), 0)
        assert critical_group(wedge357).invariant_factors == [105]
        assert not any(r.generates for r in find_generating_pairs(wedge357))
        for n in range(3, 7):
            assert critical_group(complete_graph(n)).invariant_factors == [n] * (n - 2)
        assert house_closed_form(0) == 3
        assert house_closed_form(1) == 11
        for k1 in range(2, 6):
            for k2 in range(2, 6):
                a, b = alternating_tables(k1, k2, 1)
                assert a.values == [1, k1 * k2 - 1]
                assert b.values == [0, k1]


def test_criterion_2_stack_triangulation():
    with criterion(2, "stack triangulation over entries [2,6], length <= 4", 120):
        checked = 0
        for length in range(1, 5):
            for spec in itertools.product(range(2, 7), repeat=length):
                sg = polygon_stack(spec)
                g = sg.graph
                t = tree_count(spec)
                kg = critical_group(g)
                det = abs(determinant(reduced_laplacian(g, g.n - 1)))
                prod = 1
                for f in kg.invariant_factors:
                    prod *= f
                assert t == det == kg.order == prod
                assert is_cyclic(kg)
                if g.edge_count() <= 20:
                    assert brute_spanning_trees(g) == t
                checked += 1
        assert checked == 5 + 25 + 125 + 625


def test_criterion_3_cycle_pair_law():
    with criterion(3, "generating pairs on C_n iff gcd(i-j, n) = 1", 10):
        for n in range(3, 13):
            for rep in find_generating_pairs(cycle_graph(n)):
                assert rep.generates == (gcd(rep.x - rep.y, n) == 1)


def test_criterion_4_path_addition():
    with criterion(4, "path addition keeps consecutive pairs generating", 120):
        rng = random.Random(20260811)
        bases = 0
        attempts = 0
        while bases < 50:
            attempts += 1
            assert attempts < 5000
            g = random_connected_multigraph(rng, 6, 2)
            generating = [r for r in find_generating_pairs(g) if r.generates]
            if not generating:
                continue
            bases += 1
            x, y = generating[0].x, generating[0].y
            for ell in (1, 2, 3, 4):
                extended = add_path(g, x, y, ell)
                kg = critical_group(extended)
                chain = [x] + list(range(g.n, g.n + ell - 1)) + [y]
                for a, b in zip(chain, chain[1:]):
                    assert pair_report(kg, a, b).generates


def test_criterion_5_wedge_lemma():
    with criterion(5, "wedge groups are direct sums", 60):
        rng = random.Random(515)
        for _ in range(100):
            g1 = random_connected_multigraph(rng, 5, 2)
            g2 = random_connected_multigraph(rng, 5, 2)
            v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
            kw = critical_group(wedge_sum(g1, v1, g2, v2))
            k1, k2 = critical_group(g1), critical_group(g2)
            assert kw.order == k1.order * k2.order
            assert kw.invariant_factors == direct_sum_factors(
                k1.invariant_factors, k2.invariant_factors
            )


def test_criterion_6_snf_properties():
    with criterion(6, "SNF transform/divisibility suite on 500 matrices", 30):
        rng = random.Random(606)
        for _ in range(500):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            a = IntMatrix(r, c, [rng.randint(-9, 9) for _ in range(r * c)])
            dec = smith_normal_form(a)
            assert (dec.u @ a @ dec.v) == dec.d
            assert abs(determinant(dec.u)) == 1
            assert abs(determinant(dec.v)) == 1
            diag = dec.diagonal()
            assert all(d >= 0 for d in diag)
            nonzero = [d for d in diag if d]
            assert diag[: len(nonzero)] == nonzero
            for x, y in zip(nonzero, nonzero[1:]):
                assert y % x == 0
            if r == c:
                prod = 1
                for d in diag:
                    prod *= d
                assert abs(determinant(a)) == prod


def test_criterion_7_closed_forms():
    with criterion(7, "closed forms equal recurrences exactly, n <= 20", 5):
        for k in (3, 4, 5, 6):
            table = constant_k_table(k, 20)
            for n in range(21):
                assert constant_k_closed_form(k, n) == table.values[n]
        prev2, prev = 3, 11
        assert house_closed_form(0) == 3 and house_closed_form(1) == 11
        for n in range(2, 21):
            prev2, prev = prev, 4 * prev - prev2
            assert house_closed_form(n) == prev


def test_criterion_8_reduction_correctness():
    with criterion(8, "200 seeded reductions: support, replay, equivalence", 60):
        rng = random.Random(808)
        for _ in range(200):
            spec = tuple(rng.randint(2, 5) for _ in range(rng.randint(1, 3)))
            sg = polygon_stack(spec)
            g = sg.graph
            c = [rng.randint(-3, 3) for _ in range(g.n)]
            c[rng.randrange(g.n)] -= sum(c)
            top = sg.paths[-1]
            span = len(top) if len(sg.paths) == 1 else len(top) - 1
            pos = rng.randrange(span)
            out, log = reduce_to_pair(sg, c, pos)
            pair = {top[pos], top[(pos + 1) % len(top)]}
            assert all(out[v] == 0 for v in range(g.n) if v not in pair)
            assert replay_log(g, c, log) == out
            assert are_equivalent(critical_group(g), c, out)


def test_criterion_9_lorenzini_consistency():
    with criterion(9, "coprime orders never contradict cyclicity; search re-verifies", 300):
        for g in enumerate_connected_simple_graphs(5):
            for (x, y), _ in g.edge_items():
                rep = lorenzini_check(g, x, y)
                assert not (rep.coprime and not rep.cyclic_g), (
                    "counterexample to the coprimality theorem", g.edge_items(), (x, y)
                )
        rng = random.Random(909)
        for _ in range(200):
            g = random_connected_multigraph(rng, 5, 3)
            for (x, y), _ in g.edge_items():
                rep = lorenzini_check(g, x, y)
                assert not (rep.coprime and not rep.cyclic_g)
        outcome = coprime_pair_search(5, exhaustive=True)
        assert outcome.examined > 0
        assert reverify_outcome(outcome)
        sampled = coprime_pair_search(5, max_extra_edges=3, trials=200, seed=909)
        assert reverify_outcome(sampled)
