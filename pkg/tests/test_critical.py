import itertools
import random
from collections import deque
from math import gcd

import pytest

from critgroups import (
    Multigraph,
    add_path,
    are_equivalent,
    complete_graph,
    configuration_order,
    critical_group,
    cycle_graph,
    delta_config,
    determinant,
    direct_sum_factors,
    find_generating_pairs,
    fire,
    is_cyclic,
    pair_report,
    polygon_stack,
    random_connected_multigraph,
    reduced_laplacian,
    wedge_sum,
)


def paw_graph():
    # triangle on 1, 2, 3 with a pendant edge to 0
    return Multigraph(4, {(0, 1): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1})


def wedge_3_5():
    return wedge_sum(cycle_graph(3), 0, cycle_graph(5), 0)


def wedge_3_5_7():
    return wedge_sum(wedge_3_5(), 0, cycle_graph(7), 0)


def test_reduced_laplacian_examples():
    assert reduced_laplacian(cycle_graph(3), 2).to_rows() == [[2, -1], [-1, 2]]
    assert reduced_laplacian(cycle_graph(2), 1).to_rows() == [[2]]
    house = polygon_stack((3, 4)).graph
    assert determinant(reduced_laplacian(house, 4)) == 11
    with pytest.raises(ValueError):
        reduced_laplacian(Multigraph(1), 0)
    disconnected = Multigraph(4, {(0, 1): 1, (2, 3): 1})
    with pytest.raises(ValueError):
        reduced_laplacian(disconnected, 0)


def test_reduced_laplacian_determinant_independent_of_q():
    for g in (cycle_graph(5), complete_graph(4), paw_graph(), polygon_stack((3, 4)).graph):
        dets = {abs(determinant(reduced_laplacian(g, q))) for q in range(g.n)}
        assert len(dets) == 1


def test_critical_group_examples():
    assert critical_group(wedge_3_5()).invariant_factors == [15]
    assert critical_group(complete_graph(5)).invariant_factors == [5, 5, 5]
    path6 = Multigraph(6, {(i, i + 1): 1 for i in range(5)})
    kg = critical_group(path6)
    assert kg.invariant_factors == [] and kg.order == 1
    single = critical_group(Multigraph(1))
    assert single.order == 1 and single.invariant_factors == []
    with pytest.raises(ValueError):
        critical_group(Multigraph(4, {(0, 1): 1, (2, 3): 1}))


def test_order_is_tree_count():
    from critgroups import brute_spanning_trees

    rng = random.Random(9)
    for _ in range(25):
        g = random_connected_multigraph(rng, 5, 2)
        if g.edge_count() <= 20:
            assert critical_group(g).order == brute_spanning_trees(g)


def test_delta_config():
    c4 = cycle_graph(4)
    assert delta_config(c4, 0, 1) == [1, -1, 0, 0]
    assert delta_config(c4, 1, 0) == [-x for x in delta_config(c4, 0, 1)]
    assert sum(delta_config(c4, 2, 0)) == 0
    with pytest.raises(ValueError):
        delta_config(c4, 1, 1)


def test_configuration_orders_on_wedge():
    g = wedge_3_5()
    kg = critical_group(g)
    # adjacent pairs sit on a 3-cycle or a 5-cycle: order 3 or 5
    for (x, y), _ in g.edge_items():
        assert configuration_order(kg, delta_config(g, x, y)) in (3, 5)
    # vertex 1 on the triangle, vertex 4 two steps around the pentagon
    assert configuration_order(kg, delta_config(g, 1, 4)) == 15
    assert configuration_order(kg, [0] * g.n) == 1
    with pytest.raises(ValueError):
        configuration_order(kg, [1] + [0] * (g.n - 1))


def test_configuration_order_divides_group_order():
    rng = random.Random(31)
    for _ in range(20):
        g = random_connected_multigraph(rng, 6, 2)
        kg = critical_group(g)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                o = configuration_order(kg, delta_config(g, x, y))
                assert kg.order % o == 0
                assert o == configuration_order(kg, delta_config(g, y, x))


def test_are_equivalent_paw():
    g = paw_graph()
    kg = critical_group(g)
    assert are_equivalent(kg, [0, 4, -1, -1], [1, 1, 0, 0])
    assert not are_equivalent(kg, [0, 0, 0, 0], [1, 0, 0, 0])  # degrees differ
    rng = random.Random(1)
    for _ in range(20):
        c = [rng.randint(-3, 3) for _ in range(4)]
        v = rng.randrange(4)
        assert are_equivalent(kg, c, fire(g, c, v, rng.randint(-2, 2)))


def _equivalence_oracle_set(g, radius):
    """All values of L* z for integer firing vectors z in a box."""
    kg = critical_group(g)
    rows = reduced_laplacian(g, kg.deleted_vertex).to_rows()
    m = len(rows)
    out = set()
    for z in itertools.product(range(-radius, radius + 1), repeat=m):
        out.add(tuple(sum(rows[i][k] * z[k] for k in range(m)) for i in range(m)))
    return kg, out


def test_equivalence_against_firing_vector_enumeration():
    path3 = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    cases = [
        (cycle_graph(3), 2),
        (path3, 2),
        (cycle_graph(4), 2),
        (paw_graph(), 2),
        (cycle_graph(5), 1),
    ]
    for g, width in cases:
        kg, reachable = _equivalence_oracle_set(g, radius=8)
        q = kg.deleted_vertex
        for c in itertools.product(range(-width, width + 1), repeat=g.n):
            if sum(c) != 0:
                continue
            b = tuple(x for i, x in enumerate(c) if i != q)
            assert are_equivalent(kg, list(c), [0] * g.n) == (b in reachable)


def _bfs_reaches_zero(g, c, box=6, max_states=100000):
    start = tuple(c)
    target = (0,) * g.n
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == target:
            return True
        for v in range(g.n):
            for step in (1, -1):
                nxt = tuple(fire(g, list(state), v, step))
                if all(abs(x) <= box for x in nxt) and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        assert len(seen) <= max_states
    return False


def test_equivalence_against_move_search():
    path3 = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    for g in (cycle_graph(3), path3):
        kg = critical_group(g)
        for c in itertools.product(range(-2, 3), repeat=3):
            if sum(c) != 0:
                continue
            assert _bfs_reaches_zero(g, c) == are_equivalent(kg, list(c), [0, 0, 0])


def test_generating_pairs_on_cycles():
    for n in (5, 6, 8):
        for rep in find_generating_pairs(cycle_graph(n)):
            assert rep.generates == (gcd(rep.x - rep.y, n) == 1)


def test_cyclic_group_without_generating_pair():
    g = wedge_3_5_7()
    kg = critical_group(g)
    assert kg.invariant_factors == [105]
    reports = find_generating_pairs(g)
    assert len(reports) == g.n * (g.n - 1) // 2
    assert not any(r.generates for r in reports)
    assert {r.element_order for r in reports} <= {3, 5, 7, 15, 21, 35}


def test_house_generating_pair():
    sg = polygon_stack((3, 4))
    kg = critical_group(sg.graph)
    # the middle pair of the added path
    assert pair_report(kg, 3, 4).generates


def test_trivial_group_pairs_generate():
    path4 = Multigraph(4, {(i, i + 1): 1 for i in range(3)})
    for rep in find_generating_pairs(path4):
        assert rep.element_order == 1 and rep.generates


def test_is_cyclic():
    assert is_cyclic(critical_group(polygon_stack((3, 4)).graph))
    assert not is_cyclic(critical_group(complete_graph(4)))
    tree = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    assert is_cyclic(critical_group(tree))


def test_direct_sum_factors():
    assert direct_sum_factors([3], [5]) == [15]
    assert direct_sum_factors([4, 4], []) == [4, 4]
    assert direct_sum_factors([2], [4]) == [2, 4]
    assert direct_sum_factors([6], [4]) == [2, 12]
    assert direct_sum_factors([], []) == []


def test_wedge_lemma():
    rng = random.Random(55)
    for _ in range(40):
        g1 = random_connected_multigraph(rng, 5, 2)
        g2 = random_connected_multigraph(rng, 5, 2)
        v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
        kw = critical_group(wedge_sum(g1, v1, g2, v2))
        k1, k2 = critical_group(g1), critical_group(g2)
        assert kw.order == k1.order * k2.order
        assert kw.invariant_factors == direct_sum_factors(
            k1.invariant_factors, k2.invariant_factors
        )


def test_path_addition_theorem_small():
    rng = random.Random(14)
    bases = 0
    while bases < 10:
        g = random_connected_multigraph(rng, 5, 1)
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
