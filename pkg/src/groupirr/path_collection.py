"""Shortest Path Collection on trees.

Given a rooted tree and an even-size set A of marked vertices, pair the
marked vertices so that the total length of the tree paths joining the
pairs is minimum.  A single leaves-to-root greedy sweep achieves the lower
bound sum(k(v)) where k(v) counts the child subtrees of v holding an odd
number of marked vertices, so the sweep is provably optimal and runs in
linear time.  An exhaustive perfect-matching enumerator serves as an
independent reference for small instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import RootedTree, tree_path


@dataclass
class PathCollection:
    """A pairing of the marked set plus the edge-disjoint connecting paths."""

    pairs: list[tuple[int, int]]
    paths: list[list[int]]
    total_length: int


def _check_marked(t: RootedTree, marked) -> set[int]:
    a = set(marked)
    if not a or len(a) % 2 != 0:
        raise ValueError(f"marked set must be non-empty and even, got {sorted(a)}")
    if not all(0 <= v < t.n for v in a):
        raise ValueError("marked vertex out of range")
    return a


def shortest_path_collection(t: RootedTree, marked, checked: bool = False) -> PathCollection:
    """Greedy bottom-up pairing; total length always equals spc_lower_bound.

    Vertices are processed in reverse BFS order (leaves first, root last),
    children in ascending id.  Each still-growing path is tracked by its
    marked endpoint and its current tip; two paths whose tips are siblings
    merge through the parent, a lone path extends upward.  With ``checked``
    the sweep asserts that a vertex carries a growing path exactly when its
    subtree holds an odd number of marked vertices, and the output paths
    are verified to be pairwise edge-disjoint.
    """
    a_set = _check_marked(t, marked)
    in_a = bytearray(t.n)
    for v in a_set:
        in_a[v] = 1

    if checked:
        odd_subtree = [0] * t.n
        for v in reversed(t.bfs_order):
            c = 1 if in_a[v] else 0
            for u in t.children[v]:
                c += odd_subtree[u]
            odd_subtree[v] = c

    # The sweep tracks only the marked endpoint of each still-growing path,
    # parked in the slot of its tip vertex (slot = BFS rank - 1): the slots
    # of v's children sit contiguously in ascending child order, and
    # consecutive survivors pair up.  Two paths merging at their shared
    # parent v finish as a path whose marked endpoints have v as lowest
    # common ancestor, so every finished path is simply the tree path
    # between its pair and is materialized from the parent links afterwards.
    n = t.n
    carried = [-1] * max(n - 1, 1)
    pairs: list[tuple[int, int]] = []
    order = t.bfs_order
    rank_of = t.bfs_rank
    pref = t.rank_child_start

    in_a_rank = bytearray(n)
    for v in a_set:
        r = rank_of[v]
        in_a_rank[r] = 1
        if pref[r] == pref[r + 1]:
            carried[r - 1] = v  # marked leaves park themselves immediately

    for r in range(n - 1, -1, -1):
        lo = pref[r]
        hi = pref[r + 1]
        if lo == hi:
            continue  # leaf, handled above
        survivor = -1
        for idx in range(lo, hi):
            a1 = carried[idx]
            if a1 >= 0:
                if survivor >= 0:
                    pairs.append((survivor, a1) if survivor < a1 else (a1, survivor))
                    survivor = -1
                else:
                    survivor = a1
        if in_a_rank[r]:
            v = order[r]
            if survivor >= 0:
                pairs.append((survivor, v) if survivor < v else (v, survivor))
                survivor = -1
            else:
                survivor = v
        if survivor >= 0:
            if r == 0:
                raise AssertionError("unpaired endpoint left at the root")
            carried[r - 1] = survivor

    if checked:
        # slots are written exactly once and never cleared, so a parked
        # endpoint survives as the record of the flag right after its vertex
        # was processed: set iff the subtree holds an odd marked count
        for v in range(n):
            if v != t.root:
                assert (carried[rank_of[v] - 1] >= 0) == (odd_subtree[v] % 2 == 1), v

    paths = [tree_path(t, a1, a2) for a1, a2 in pairs]
    total = sum(len(p) - 1 for p in paths)
    if checked:
        assert sorted(x for pr in pairs for x in pr) == sorted(a_set)
        used = set()
        for p in paths:
            for i in range(len(p) - 1):
                e = (min(p[i], p[i + 1]), max(p[i], p[i + 1]))
                assert e not in used, f"edge {e} reused across paths"
                used.add(e)
        for pr, p in zip(pairs, paths):
            assert {p[0], p[-1]} == set(pr)
    return PathCollection(pairs, paths, total)


def spc_lower_bound(t: RootedTree, marked) -> int:
    """sum over v of the number of child subtrees with odd marked count."""
    a_set = _check_marked(t, marked)
    in_a = [False] * t.n
    for v in a_set:
        in_a[v] = True
    odd = [0] * t.n
    total = 0
    for v in reversed(t.bfs_order):
        c = 1 if in_a[v] else 0
        for u in t.children[v]:
            parity = odd[u]
            c += parity
            total += parity
        odd[v] = c % 2
    return total


def tree_distances_from(t: RootedTree, source: int) -> list[int]:
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in t.children[u] + ([t.parent[u]] if u != t.root else []):
            if dist[v] == -1:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def matching_oracle(t: RootedTree, marked) -> int:
    """Exact optimum by enumerating all perfect pairings of the marked set.

    (|A|-1)!! pairings, so |A| is capped at 12.
    """
    a_list = sorted(_check_marked(t, marked))
    if len(a_list) > 12:
        raise ValueError(f"marked set of size {len(a_list)} too large for exhaustion")
    dist = {v: tree_distances_from(t, v) for v in a_list}

    def best(rest: tuple[int, ...]) -> int:
        if not rest:
            return 0
        first = rest[0]
        return min(
            dist[first][rest[i]] + best(rest[1:i] + rest[i + 1 :])
            for i in range(1, len(rest))
        )

    return best(tuple(a_list))
