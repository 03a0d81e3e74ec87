import random

import pytest

from groupirr import (
    LabellingImpossible,
    RootedTree,
    build_graph,
    complete_graph,
    cycle_graph,
    enumerate_abelian_groups,
    group_irregularity_strength,
    is_exceptional_group,
    label_graph,
    label_star,
    label_tree,
    make_group,
    path_graph,
    random_connected_graph,
    random_tree,
    spanning_tree_prefer_nonstar,
    star_graph,
    weighted_degrees,
)


def degrees_of(g, lab, grp):
    return weighted_degrees(g, lab, grp).weighted_degrees


def certify(g, lab, grp):
    report = weighted_degrees(g, lab, grp)
    assert report.is_irregular, report.collision_witness
    return report


def test_strength_examples():
    assert group_irregularity_strength(star_graph(26)).value == 28
    assert group_irregularity_strength(star_graph(26)).case_tag == "STAR_EXCEPTIONAL"
    res = group_irregularity_strength(path_graph(6))
    assert (res.value, res.case_tag) == (7, "N_MOD4_2")
    res = group_irregularity_strength(cycle_graph(5))
    assert (res.value, res.case_tag) == (5, "DEFAULT")
    # non-star n = 2 mod 4 graphs never take the +2 case
    assert group_irregularity_strength(cycle_graph(26)).value == 27
    # stars with n = 2 mod 4 but n+1 not a power of 3
    assert group_irregularity_strength(star_graph(6)).value == 7
    assert group_irregularity_strength(star_graph(8)).value == 8


def test_strength_rejects_bad_input():
    with pytest.raises(ValueError):
        group_irregularity_strength(build_graph(2, [(0, 1)]))
    with pytest.raises(ValueError):
        group_irregularity_strength(build_graph(4, [(0, 1), (2, 3)]))


def test_is_exceptional_group():
    assert is_exceptional_group(star_graph(8), make_group([3, 3]))
    assert is_exceptional_group(path_graph(6), make_group([2, 2, 2]))
    assert not is_exceptional_group(path_graph(6), make_group([8]))
    assert not is_exceptional_group(path_graph(8), make_group([3, 3]))  # stars only
    assert not is_exceptional_group(star_graph(8), make_group([9]))
    with pytest.raises(ValueError):
        is_exceptional_group(path_graph(6), make_group([7]))  # order = s_g


def test_star_z5_uses_all_nonzero_elements():
    g = star_graph(5)
    lab = label_star(5, make_group([5]))
    report = certify(g, lab, make_group([5]))
    assert sorted(lab.labels.values()) == [(1,), (2,), (3,), (4,)]
    assert report.weighted_degrees[0] == (0,)


def test_star_z4_example():
    lab = label_star(4, make_group([4]))
    assert sorted(lab.labels.values()) == [(0,), (1,), (2,)]
    report = certify(star_graph(4), lab, make_group([4]))
    assert report.weighted_degrees[0] == (3,)


def test_star_k15_z7():
    grp = make_group([7])
    lab = label_star(6, grp)
    report = certify(star_graph(6), lab, grp)
    assert len(set(report.weighted_degrees)) == 6


def test_label_star_rejects_exceptional_and_small():
    with pytest.raises(LabellingImpossible) as exc:
        label_star(8, make_group([3, 3]))
    assert exc.value.clause == "3^q = n+1"
    with pytest.raises(LabellingImpossible) as exc:
        label_star(6, make_group([2, 2, 2]))
    assert exc.value.clause == "2^q = n+2"
    with pytest.raises(ValueError):
        label_star(6, make_group([6]))  # below s_g = 7
    with pytest.raises(ValueError):
        label_star(2, make_group([5]))


def test_tree_p4_z4():
    grp = make_group([4])
    tree = spanning_tree_prefer_nonstar(path_graph(4))
    lab = label_tree(tree, grp)
    report = certify(tree.to_graph(), lab, grp)
    assert sorted(report.weighted_degrees) == [(0,), (1,), (2,), (3,)]


def test_tree_p5_z5():
    grp = make_group([5])
    tree = spanning_tree_prefer_nonstar(path_graph(5))
    lab = label_tree(tree, grp)
    report = certify(tree.to_graph(), lab, grp)
    assert sorted(report.weighted_degrees) == sorted(grp.elements())


def test_tree_n8_over_z3xz3_table_case():
    # an 8-vertex non-star tree with both color classes odd (sizes 5 and 3)
    tree = RootedTree(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7)])
    assert tree.color_class_sizes in ((5, 3), (3, 5))
    grp = make_group([3, 3])
    lab = label_tree(tree, grp)
    certify(tree.to_graph(), lab, grp)


def test_tree_n6_both_classes_odd_over_z3xz3():
    # classes of sizes 3 and 3: not reachable by the 5+3 gadget
    grp = make_group([3, 3])
    tree = spanning_tree_prefer_nonstar(path_graph(6))
    lab = label_tree(tree, grp)
    certify(tree.to_graph(), lab, grp)


def test_label_tree_rejects_stars():
    with pytest.raises(ValueError):
        label_tree(spanning_tree_prefer_nonstar(star_graph(5)), make_group([5]))


def test_label_graph_k3_z3():
    g = complete_graph(3)
    grp = make_group([3])
    lab = label_graph(g, grp)
    report = certify(g, lab, grp)
    assert sorted(report.weighted_degrees) == [(0,), (1,), (2,)]
    assert sorted(lab.labels.values()) == [(0,), (1,), (2,)]


def test_label_graph_k4_z4():
    g = complete_graph(4)
    grp = make_group([4])
    certify(g, label_graph(g, grp), grp)


def test_label_graph_star_exceptional_clause():
    with pytest.raises(LabellingImpossible) as exc:
        label_graph(star_graph(6), make_group([2, 2, 2]))
    assert exc.value.clause == "2^q = n+2"


def test_label_graph_small_or_parity_obstructions():
    with pytest.raises(LabellingImpossible):
        label_graph(path_graph(5), make_group([4]))  # order < n
    with pytest.raises(LabellingImpossible):
        label_graph(path_graph(6), make_group([6]))  # order n, n = 2 mod 4
    with pytest.raises(ValueError):
        label_graph(star_graph(26), make_group([27]))  # n+1 < s_g, not (Z3)^q


def test_nontree_edges_labelled_zero():
    grp = make_group([7])
    for g in (cycle_graph(7), complete_graph(6), random_connected_graph(7, 5, random.Random(1))):
        if grp.order < group_irregularity_strength(g).value:
            continue
        lab = label_graph(g, grp)
        tree_edges = set(spanning_tree_prefer_nonstar(g).edges())
        for e in g.edges:
            if e not in tree_edges:
                assert lab.labels[e] == grp.zero


def test_odd_star_degree_multiset_covers_group_when_order_matches():
    # odd n with order exactly n: every group element shows up once
    for n in (5, 7, 9, 11):
        for grp in enumerate_abelian_groups(n):
            lab = label_star(n, grp)
            report = certify(star_graph(n), lab, grp)
            assert sorted(report.weighted_degrees) == sorted(grp.elements())
            assert report.weighted_degrees[0] == grp.zero


def _sweep(graphs, orders_of):
    for g in graphs:
        s = group_irregularity_strength(g).value
        for order in orders_of(s):
            for grp in enumerate_abelian_groups(order):
                exceptional = order > s and is_exceptional_group(g, grp)
                if exceptional:
                    with pytest.raises(LabellingImpossible):
                        label_graph(g, grp)
                    continue
                lab = label_graph(g, grp)
                certify(g, lab, grp)


def test_family_sweep_at_strength():
    graphs = [f(n) for n in range(3, 11) for f in (path_graph, cycle_graph, star_graph, complete_graph)]
    _sweep(graphs, lambda s: [s])


def test_family_sweep_above_strength():
    graphs = [f(n) for n in (4, 6, 7, 8) for f in (path_graph, star_graph, cycle_graph)]
    _sweep(graphs, lambda s: range(s + 1, s + 5))


def test_random_tree_sweep():
    rng = random.Random(99)
    graphs = [random_tree(rng.randrange(4, 26), rng) for _ in range(12)]
    _sweep(graphs, lambda s: [s, s + 1, s + 2])


def test_random_graph_sweep():
    rng = random.Random(17)
    graphs = [random_connected_graph(rng.randrange(4, 12), rng.randrange(0, 8), rng) for _ in range(12)]
    _sweep(graphs, lambda s: [s, s + 1])


def test_broom_trees_with_unbalanced_classes():
    # spider: center with long legs, classes get lopsided
    edges = [(0, i) for i in range(1, 5)] + [(i, i + 4) for i in range(1, 5)]
    g = build_graph(9, edges)
    _sweep([g], lambda s: range(s, s + 4))
