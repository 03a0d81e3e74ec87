import itertools
import random

import pytest

from groupirr import (
    Labelling,
    RootedTree,
    apply_phi,
    build_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    make_group,
    path_graph,
    random_tree,
    read_edge_list,
    spanning_tree_prefer_nonstar,
    star_graph,
    tree_path,
    weighted_degrees,
)
from groupirr.graphs import write_edge_list


def test_build_graph_basics():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edges == [(0, 1), (0, 2), (1, 2)]
    assert g.adj[0] == [1, 2]
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert star.is_star()
    k2 = build_graph(2, [(0, 1)])
    assert k2.edges == [(0, 1)]


def test_build_graph_dedup_and_errors():
    g = build_graph(3, [(0, 1), (1, 0)])
    assert g.edges == [(0, 1)]
    with pytest.raises(ValueError):
        build_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])


def test_is_connected():
    assert is_connected(complete_graph(3))
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(build_graph(1, []))


def test_spanning_tree_examples():
    t = spanning_tree_prefer_nonstar(complete_graph(3))
    assert t.is_star  # every 3-vertex tree is one

    t = spanning_tree_prefer_nonstar(complete_graph(4))
    assert not t.is_star
    degrees = [0] * 4
    for u, v in t.edges():
        degrees[u] += 1
        degrees[v] += 1
    assert max(degrees) <= 2

    t = spanning_tree_prefer_nonstar(star_graph(6))
    assert t.is_star


def test_spanning_tree_star_iff_star_or_n3():
    # every connected graph on up to 6 vertices, by edge-subset enumeration
    for n in range(3, 7):
        all_edges = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(all_edges)):
            edges = [e for i, e in enumerate(all_edges) if bits >> i & 1]
            if len(edges) < n - 1:
                continue
            g = build_graph(n, edges)
            if not is_connected(g):
                continue
            t = spanning_tree_prefer_nonstar(g)
            assert sorted({(min(u, v), max(u, v)) for u, v in t.edges()}) == t.edges()
            assert set(t.edges()) <= set(g.edges)
            assert t.is_star == (g.is_star() or n == 3), (n, edges)


def test_rooted_tree_structure():
    t = RootedTree(6, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5)])
    assert t.parent[0] == 0 and t.root == 0
    assert t.bfs_order[0] == 0
    order_pos = {v: i for i, v in enumerate(t.bfs_order)}
    for v in range(6):
        if v != t.root:
            assert order_pos[t.parent[v]] < order_pos[v]
    assert t.color[0] == 1
    for u, v in t.edges():
        assert t.color[u] != t.color[v]
    assert sum(t.color_class_sizes) == 6


def test_tree_path():
    t = RootedTree(4, [(0, 1), (1, 2), (2, 3)])
    assert tree_path(t, 0, 3) == [0, 1, 2, 3]
    assert tree_path(t, 3, 0) == [3, 2, 1, 0]
    star = RootedTree(4, [(0, 1), (0, 2), (0, 3)])
    assert tree_path(star, 1, 2) == [1, 0, 2]
    assert tree_path(star, 1, 0) == [1, 0]
    with pytest.raises(ValueError):
        tree_path(star, 2, 2)


def test_tree_path_random_properties():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(2, 30)
        g = random_tree(n, rng)
        t = RootedTree(n, g.edges)
        edge_set = set(g.edges)
        x, y = rng.sample(range(n), 2)
        path = tree_path(t, x, y)
        assert path[0] == x and path[-1] == y
        assert len(set(path)) == len(path)
        for a, b in zip(path, path[1:]):
            assert (min(a, b), max(a, b)) in edge_set


def test_apply_phi_short_paths():
    grp = make_group([5])
    single = RootedTree(2, [(0, 1)])
    lab = Labelling.zero(single.to_graph(), grp)
    out = apply_phi(lab, single, 0, 1, (2,))
    assert out.label_of(0, 1) == (2,)
    report = weighted_degrees(single.to_graph(), out, grp)
    assert report.weighted_degrees == [(2,), (2,)]  # odd edge count: both gain

    cherry = RootedTree(3, [(0, 1), (1, 2)])
    lab = Labelling.zero(cherry.to_graph(), grp)
    out = apply_phi(lab, cherry, 0, 2, (2,))
    assert out.label_of(0, 1) == (2,) and out.label_of(1, 2) == (3,)
    report = weighted_degrees(cherry.to_graph(), out, grp)
    assert report.weighted_degrees == [(2,), (0,), (3,)]  # even count: +a / -a

    unchanged = apply_phi(lab, cherry, 0, 2, (0,))
    assert unchanged == lab
    assert lab.label_of(0, 1) == (0,)  # functional: input untouched


def test_apply_phi_locality_random():
    rng = random.Random(23)
    grp = make_group([4, 3])
    elems = list(grp.elements())
    for _ in range(60):
        n = rng.randrange(3, 50)
        g = random_tree(n, rng)
        t = RootedTree(n, g.edges)
        lab = Labelling(g, grp, {e: rng.choice(elems) for e in g.edges})
        before = weighted_degrees(g, lab, grp).weighted_degrees
        x, y = rng.sample(range(n), 2)
        a = rng.choice(elems)
        after = weighted_degrees(g, apply_phi(lab, t, x, y, a), grp).weighted_degrees
        edge_count = len(tree_path(t, x, y)) - 1
        for v in range(n):
            if v == x:
                assert after[v] == grp.add(before[v], a)
            elif v == y:
                expected = a if edge_count % 2 == 1 else grp.neg(a)
                assert after[v] == grp.add(before[v], expected)
            else:
                assert after[v] == before[v]


def test_edge_list_round_trip(tmp_path):
    g = cycle_graph(5)
    path = tmp_path / "c5.txt"
    write_edge_list(path, g)
    h = read_edge_list(path)
    assert h.n == 5 and h.edges == g.edges
    commented = tmp_path / "c.txt"
    commented.write_text("# a cycle\n3 3\n0 1\n1 2\n0 2\n")
    assert read_edge_list(commented).edges == [(0, 1), (0, 2), (1, 2)]
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    with pytest.raises(ValueError):
        read_edge_list(bad)


def test_generators():
    assert len(path_graph(6).edges) == 5
    assert len(cycle_graph(6).edges) == 6
    assert star_graph(7).is_star()
    assert len(complete_graph(5).edges) == 10
    rng = random.Random(3)
    for _ in range(20):
        t = random_tree(rng.randrange(2, 40), rng)
        assert is_connected(t) and len(t.edges) == t.n - 1
