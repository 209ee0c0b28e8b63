from itertools import combinations, product

import pytest

from builders import double_star, prufer_tree
from distinguishing import oracle
from distinguishing.enumeration import (GeneratorConfig, all_trees, all_unicyclic, bicentric_only,
                                        census, cycle_length, in_T_only, instances, rooted_shapes)
from distinguishing.graph import Graph, is_tree, is_unicyclic, unicyclic_cycle
from distinguishing.trees import free_tree_code

# OEIS A000055, A000081 and A001429
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
ROOTED = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657}


def test_tree_counts():
    assert [sum(1 for _ in all_trees(n)) for n in range(1, 13)] == TREES


def test_rooted_shape_counts():
    assert [len(rooted_shapes(n)) for n in range(1, 11)] == ROOTED


def test_unicyclic_counts():
    assert {n: sum(1 for _ in all_unicyclic(n)) for n in UNICYCLIC} == UNICYCLIC


def test_trees_valid_and_distinct():
    for n in range(1, 11):
        trees = list(all_trees(n))
        assert all(is_tree(t) and t.n == n for t in trees)
        assert len({free_tree_code(t) for t in trees}) == len(trees)


def test_trees_cover_all_labeled_trees():
    """Every Prüfer sequence decodes to a tree isomorphic to exactly one
    generated tree."""
    for n in range(3, 8):
        codes = {free_tree_code(t) for t in all_trees(n)}
        seen = {free_tree_code(prufer_tree(list(seq), n)) for seq in product(range(n), repeat=n - 2)}
        assert seen == codes


def _labeled_unicyclic(n):
    pairs = list(combinations(range(n), 2))
    for edges in combinations(pairs, n):
        g = Graph.from_edges(n, edges)
        if is_unicyclic(g):
            yield g


def test_unicyclic_cover_and_distinct():
    for n in range(3, 7):
        gens = list(all_unicyclic(n))
        assert all(is_unicyclic(g) for g in gens)
        for a, b in combinations(gens, 2):
            assert not oracle.isomorphic(a, b)
        for g in _labeled_unicyclic(n):
            assert sum(oracle.isomorphic(g, h) for h in gens) == 1


def test_unicyclic_cycle_is_prefix():
    for g in all_unicyclic(7):
        cyc = unicyclic_cycle(g)
        assert sorted(cyc) == list(range(len(cyc)))


def test_resume_cursor():
    full = list(all_trees(9))
    assert list(all_trees(9, start=10)) == full[10:]
    assert list(all_unicyclic(7, start=5)) == list(all_unicyclic(7))[5:]


def test_order_bounds():
    with pytest.raises(ValueError):
        list(all_trees(17))
    with pytest.raises(ValueError):
        list(all_unicyclic(2))


def test_instances_orders():
    orders = [g.n for g in instances("tree", 3, 6)]
    assert orders == sorted(orders) and len(orders) == sum(TREES[2:6])


def test_census_filters():
    cfg = GeneratorConfig(max_n=8, filters=[in_T_only])
    found = [(g, r) for g, r in census(cfg)]
    assert [(g.n, r.D, r.Dprime) for g, r in found] == [(6, 2, 3), (8, 3, 4)]
    assert [free_tree_code(g) for g, _ in found] == \
        [free_tree_code(double_star(2, 2)), free_tree_code(double_star(3, 3))]
    for g, r in found:
        assert (oracle.brute_D(g), oracle.brute_Dprime(g)) == (r.D, r.Dprime)
    cfg = GeneratorConfig(max_n=6, filters=[bicentric_only])
    assert all(r.bicentric for _, r in census(cfg))
    cfg = GeneratorConfig(max_n=6, family="unicyclic", filters=[cycle_length(5, 6)])
    assert sorted(len(r.cycle) for _, r in census(cfg)) == [5, 5, 6]


def test_census_oracle_cross_check():
    cfg = GeneratorConfig(max_n=7, family="unicyclic", oracle_max_n=7)
    assert sum(1 for _ in census(cfg)) == 1 + 2 + 5 + 13 + 33


def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(max_n=0)
    with pytest.raises(ValueError):
        GeneratorConfig(max_n=5, family="forest")
