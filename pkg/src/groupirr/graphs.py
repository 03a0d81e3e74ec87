"""Simple graphs, rooted spanning trees and edge labellings.

Vertices are 0..n-1, edges are unordered pairs stored as sorted tuples.
Rooted trees carry the BFS order, depths and a proper 2-coloring, which is
everything the labelling constructions and the path-collection solver need.
The path operator ``apply_phi`` alternately adds an element and its inverse
along the unique tree path between two vertices; it shifts the weighted
degrees of exactly the two endpoints and of nobody else.
"""

from __future__ import annotations

import random
from collections import deque

from .groups import AbelianGroup, Element


class SimpleGraph:
    """Undirected simple graph: no loops, no parallel edges."""

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((min(u, v), max(u, v)))
        self.n = n
        self.edges: list[tuple[int, int]] = sorted(seen)
        self.adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
        for nbrs in self.adj:
            nbrs.sort()

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_star(self) -> bool:
        """True for K_{1,n-1} (any tree on <= 3 vertices qualifies)."""
        if self.n < 3:
            return len(self.edges) == self.n - 1
        return len(self.edges) == self.n - 1 and any(
            len(self.adj[v]) == self.n - 1 for v in range(self.n)
        )

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={len(self.edges)})"


def build_graph(n: int, edge_list) -> SimpleGraph:
    return SimpleGraph(n, edge_list)


def is_connected(g: SimpleGraph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


class RootedTree:
    """A spanning tree rooted at ``root`` with BFS order and 2-coloring.

    color is 1 on even depths (the root included) and 2 on odd depths;
    children lists are ascending by vertex id.
    """

    def __init__(self, n: int, tree_edges, root: int = 0) -> None:
        edges = sorted({(min(u, v), max(u, v)) for u, v in tree_edges})
        if len(edges) != n - 1:
            raise ValueError(f"{len(edges)} edges cannot form a tree on {n} vertices")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        parent = [-1] * n
        depth = [0] * n
        order = [root]
        parent[root] = root
        for u in order:
            for v in adj[u]:
                if parent[v] == -1 and v != root:
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    order.append(v)
        if len(order) != n:
            raise ValueError("tree edges do not connect all vertices")
        self.n = n
        self.root = root
        self.parent = parent
        self.depth = depth
        self.bfs_order = order
        self.children: list[list[int]] = [[] for _ in range(n)]
        for v in order[1:]:
            self.children[parent[v]].append(v)
        for kids in self.children:
            kids.sort()
        self.color = [1 + d % 2 for d in depth]
        n2 = sum(1 for c in self.color if c == 2)
        self.color_class_sizes = (n - n2, n2)
        deg = [len(adj[v]) for v in range(n)]
        self.is_star = n <= 3 or max(deg) == n - 1
        # BFS ranks renumber the tree so that every vertex's children are
        # consecutive (ascending id within siblings): the children of the
        # rank-i vertex hold ranks rank_child_start[i]+1..rank_child_start[i+1],
        # which lets bottom-up sweeps run as one backward sequential scan
        self.bfs_rank = [0] * n
        for i, v in enumerate(order):
            self.bfs_rank[v] = i
        self.rank_child_start = [0] * (n + 1)
        for i, v in enumerate(order):
            self.rank_child_start[i + 1] = self.rank_child_start[i] + len(self.children[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (min(v, self.parent[v]), max(v, self.parent[v]))
            for v in range(self.n)
            if v != self.root
        )

    def color_class(self, c: int) -> list[int]:
        return [v for v in range(self.n) if self.color[v] == c]

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges())

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root}, is_star={self.is_star})"


def spanning_tree_prefer_nonstar(g: SimpleGraph) -> RootedTree:
    """BFS spanning tree from vertex 0, repaired to a non-star when possible.

    If BFS happens to produce a star but g itself is not one (and n >= 4),
    some edge of g avoids the star center; swapping it for one center-leaf
    tree edge breaks the star while staying spanning.
    """
    if not is_connected(g):
        raise ValueError("graph is not connected")
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    tree_edges = []
    parent = [-1] * g.n
    parent[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if parent[v] == -1:
                parent[v] = u
                tree_edges.append((min(u, v), max(u, v)))
                queue.append(v)
    tree = RootedTree(g.n, tree_edges, root=0)
    if tree.is_star and g.n >= 4 and not g.is_star():
        center = max(range(g.n), key=lambda v: len([u for u in tree_edges if v in u]))
        swap = next(e for e in g.edges if center not in e)
        drop = (min(center, swap[1]), max(center, swap[1]))
        tree_edges = [e for e in tree_edges if e != drop] + [swap]
        tree = RootedTree(g.n, tree_edges, root=0)
    return tree


def tree_path(t: RootedTree, x1: int, x2: int) -> list[int]:
    """The unique tree path from x1 to x2, via the lowest common ancestor."""
    if x1 == x2:
        raise ValueError("path endpoints must differ")
    up1, up2 = [x1], [x2]
    a, b = x1, x2
    while t.depth[a] > t.depth[b]:
        a = t.parent[a]
        up1.append(a)
    while t.depth[b] > t.depth[a]:
        b = t.parent[b]
        up2.append(b)
    while a != b:
        a = t.parent[a]
        b = t.parent[b]
        up1.append(a)
        up2.append(b)
    return up1 + up2[-2::-1]


class Labelling:
    """Map from the edges of a fixed graph to elements of a fixed group."""

    def __init__(self, graph: SimpleGraph, group: AbelianGroup, labels=None) -> None:
        self.graph = graph
        self.group = group
        self.labels: dict[tuple[int, int], Element] = dict(labels) if labels else {}

    @classmethod
    def zero(cls, graph: SimpleGraph, group: AbelianGroup) -> "Labelling":
        z = group.zero
        return cls(graph, group, {e: z for e in graph.edges})

    def copy(self) -> "Labelling":
        return Labelling(self.graph, self.group, self.labels)

    def label_of(self, u: int, v: int) -> Element:
        return self.labels[(min(u, v), max(u, v))]

    def set_label(self, u: int, v: int, value: Element) -> None:
        self.labels[(min(u, v), max(u, v))] = self.group.canonical(value)

    def add_along_path(self, path: list[int], a: Element) -> None:
        """Add +a to odd-position edges of the path and -a to even ones."""
        grp = self.group
        value = a
        neg = grp.neg(a)
        for i in range(len(path) - 1):
            e = (min(path[i], path[i + 1]), max(path[i], path[i + 1]))
            self.labels[e] = grp.add(self.labels[e], value if i % 2 == 0 else neg)

    def __eq__(self, other) -> bool:
        return isinstance(other, Labelling) and self.labels == other.labels


def apply_phi(lab: Labelling, t: RootedTree, x1: int, x2: int, a: Element) -> Labelling:
    """Relabel the x1..x2 tree path: +a on odd positions, -a on even.

    Weighted-degree effect: on a path with an even number of edges x1 gains
    a and x2 gains -a; with an odd number both gain a; nobody else moves.
    """
    out = lab.copy()
    out.add_along_path(tree_path(t, x1, x2), a)
    return out


# -- graph generators (test corpus and benchmarks) -------------------------


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tree(n: int, rng: random.Random) -> SimpleGraph:
    """Random recursive tree: vertex v attaches to a uniform earlier vertex."""
    return SimpleGraph(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_connected_graph(n: int, extra_edges: int, rng: random.Random) -> SimpleGraph:
    """Random tree plus ``extra_edges`` distinct random chords."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    budget = n * (n - 1) // 2 - len(edges)
    for _ in range(min(extra_edges, budget) * 20):
        if extra_edges <= 0:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e not in edges:
            edges.add(e)
            extra_edges -= 1
    return SimpleGraph(n, sorted(edges))


# -- edge-list file format --------------------------------------------------


def read_edge_list(path) -> SimpleGraph:
    """Read 'n m' then m lines 'u v'; '#' starts a comment line."""
    with open(path) as fh:
        rows = [ln.strip() for ln in fh]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError(f"{path}: empty edge-list file")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"{path}: expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        u, v = ln.split()[:2]
        edges.append((int(u), int(v)))
    return SimpleGraph(n, edges)


def write_edge_list(path, g: SimpleGraph) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(g.edges)}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")
