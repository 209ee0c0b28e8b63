import pytest

from builders import double_star, paired_spiders, path_graph, star_graph
from distinguishing import oracle
from distinguishing.colabel import is_rooted_distinguishing
from distinguishing.enumeration import all_trees
from distinguishing.graph import EdgeLabeling, Graph, NotSupportedError
from distinguishing.tree_dist import (SatCount, classify_tree, count_edge_classes,
                                      count_edge_classes_exact, edge_class_labelings, in_family_T,
                                      rooted_D, tree_D, tree_Dprime, witness_labelings)
from distinguishing.trees import Bicentric, halves, labeled_code, root_at


def test_satcount_arithmetic():
    assert SatCount.of(5, 10) == 5
    big = SatCount.of(12, 10)
    assert big.saturated and big != 10 and big != 12
    assert SatCount.of(0, 1).cap == 2
    assert SatCount.of(3, 100).scale(4) == 12
    assert SatCount.of(5, 100).choose(2) == 10
    assert SatCount.of(6, 10).times(SatCount.of(2, 10)).saturated
    assert SatCount.of(1, 10) < SatCount.of(2, 10)


def test_count_edge_classes_examples():
    # a single vertex has one (empty) labeling
    assert count_edge_classes(root_at(path_graph(1), 0), 2) == 1
    # P3 from an end: two edges in a chain
    assert count_edge_classes_exact(root_at(path_graph(3), 0), 2) == 4
    # P3 from the middle: two interchangeable edges need different labels
    assert count_edge_classes_exact(root_at(path_graph(3), 1), 2) == 1
    assert count_edge_classes_exact(root_at(path_graph(3), 1), 3) == 3
    # K_{1,3} from the centre
    assert count_edge_classes_exact(root_at(star_graph(3), 0), 2) == 0
    assert count_edge_classes_exact(root_at(star_graph(3), 0), 3) == 1
    assert count_edge_classes_exact(root_at(path_graph(4), 1), 2) == 8


def test_count_matches_brute_force():
    for n in range(1, 8):
        for t in all_trees(n):
            for v in range(n):
                r = root_at(t, v)
                for k in (1, 2, 3):
                    assert count_edge_classes_exact(r, k) == oracle.brute_class_count(r, k)


def test_count_monotone_in_k():
    for n in range(1, 10):
        for t in all_trees(n):
            r = root_at(t, 0)
            values = [count_edge_classes_exact(r, k) for k in range(1, 6)]
            assert values == sorted(values)


def test_saturated_count_agrees_with_exact():
    for n in range(1, 10):
        for t in all_trees(n):
            r = root_at(t, 0)
            for k in (1, 2, 3):
                exact = count_edge_classes_exact(r, k)
                sat = count_edge_classes(r, k)
                assert sat.cap == max(n, 2)
                assert sat.saturated == (exact >= sat.cap)
                if not sat.saturated:
                    assert sat == exact


def test_rooted_D_examples():
    assert rooted_D(root_at(path_graph(1), 0)) == 1
    assert rooted_D(root_at(star_graph(4), 0)) == 4
    assert rooted_D(root_at(path_graph(5), 0)) == 1


@pytest.mark.parametrize("g, d, dp", [
    (path_graph(3), 2, 2),
    (path_graph(4), 2, 2),
    (path_graph(6), 2, 2),
    (star_graph(3), 3, 3),
    (star_graph(5), 5, 5),
    (double_star(2, 2), 2, 3),
    (double_star(2, 3), 3, 3),
    (paired_spiders(), 2, 3),
])
def test_tree_values(g, d, dp):
    assert tree_D(g) == d
    assert tree_Dprime(g) == dp
    assert bool(in_family_T(g)) == (dp == d + 1)


def test_order_two():
    assert tree_D(path_graph(2)) == 2
    with pytest.raises(NotSupportedError):
        tree_Dprime(path_graph(2))
    with pytest.raises(NotSupportedError):
        in_family_T(path_graph(2))


def test_family_breakdown():
    m = in_family_T(star_graph(3))
    assert not m and m.failed == (1,)
    m = in_family_T(double_star(1, 2))
    assert not m and m.failed == (2,)
    m = in_family_T(path_graph(6))
    assert not m and m.failed == (3,) and m.classes_at_D == 4
    m = in_family_T(double_star(2, 2))
    assert m and m.failed == () and m.classes_at_D == 1


def test_paired_spiders():
    t = paired_spiders()
    r = classify_tree(t)
    assert (r.D, r.Dprime, r.in_family_T) == (2, 3, True)
    assert r.center == Bicentric(0, 1) and r.halves_isomorphic
    assert r.N_at_D == 1
    tv, _ = halves(t)
    assert oracle.brute_class_count(tv, 2) == 1


def test_values_match_oracle():
    for n in range(3, 10):
        for t in all_trees(n):
            assert tree_D(t) == oracle.brute_D(t)
            assert tree_Dprime(t) == oracle.brute_Dprime(t)


def test_witnesses_are_distinguishing():
    for n in range(3, 13):
        for t in all_trees(n):
            r = classify_tree(t)
            fv, fe = r.witness_vertex, r.witness_edge
            assert max(fv.labels) <= r.D and max(fe.labels.values()) <= r.Dprime
            assert oracle.is_distinguishing(t, fv)
            assert oracle.is_distinguishing(t, fe)


def test_asymmetric_tree_gets_constant_witnesses():
    # smallest asymmetric tree: a spider with legs 1, 2, 3
    t = Graph.from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
    assert len(oracle.automorphisms(t)) == 1
    fv, fe = witness_labelings(t)
    assert set(fv.labels) == {1} and set(fe.labels.values()) == {1}


def test_edge_class_labelings_are_distinct_classes():
    for n in range(1, 9):
        for t in all_trees(n):
            r = root_at(t, 0)
            for k in (1, 2, 3):
                exact = count_edge_classes_exact(r, k)
                found = edge_class_labelings(r, k, 5)
                assert len(found) == min(exact, 5)
                codes = set()
                for colab in found:
                    lab = EdgeLabeling({r.parent_edge(x): y for x, y in colab.items()}, k)
                    assert is_rooted_distinguishing(r, lab)
                    codes.add(labeled_code(r, lab))
                assert len(codes) == len(found)
