"""Independent certification of labellings and a desk-scale existence oracle.

``weighted_degrees`` recomputes every vertex degree from scratch and reports
the first collision, so it shares no code path with the constructions it
checks.  ``brute_force_exists`` settles existence questions exhaustively,
pruning as soon as a vertex with all incident edges assigned duplicates an
earlier final degree.  ``certify_or_refute`` runs whichever side the closed
form predicts and treats any disagreement between theory and search as a
hard error.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Labelling, SimpleGraph, is_connected
from .groups import AbelianGroup, Element, make_group


class BudgetExceeded(Exception):
    """The exhaustive search space does not fit in the allowed budget."""


class InconsistencyError(Exception):
    """Theory and exhaustive search disagree: a bug, never swallowed."""


@dataclass
class DegreeReport:
    weighted_degrees: list[Element]
    is_irregular: bool
    collision_witness: tuple[int, int] | None
    degree_sum: Element


def weighted_degrees(g: SimpleGraph, lab: Labelling, grp: AbelianGroup) -> DegreeReport:
    """Per-vertex sums of incident labels, plus the first collision if any."""
    degrees = [grp.zero] * g.n
    for u, v in g.edges:
        if (u, v) not in lab.labels:
            raise ValueError(f"labelling misses edge ({u},{v})")
        x = grp.canonical(lab.labels[(u, v)])
        degrees[u] = grp.add(degrees[u], x)
        degrees[v] = grp.add(degrees[v], x)
    witness = None
    seen: dict[Element, int] = {}
    for v, d in enumerate(degrees):
        if witness is None and d in seen:
            witness = (seen[d], v)
        seen.setdefault(d, v)
    total = grp.zero
    for d in degrees:
        total = grp.add(total, d)
    return DegreeReport(degrees, witness is None, witness, total)


def _bfs_edge_order(g: SimpleGraph) -> list[tuple[int, int]]:
    # complete vertices as early as possible: sort edges by the later
    # endpoint in BFS discovery order, then by the earlier one
    rank = [g.n] * g.n
    nxt = 0
    for start in range(g.n):
        if rank[start] < g.n:
            continue
        rank[start] = nxt
        nxt += 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if rank[v] == g.n:
                    rank[v] = nxt
                    nxt += 1
                    queue.append(v)
    return sorted(g.edges, key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]])))


def brute_force_exists(g: SimpleGraph, grp: AbelianGroup, budget: int = 10**8) -> bool:
    """True iff some labelling of g over grp has all weighted degrees distinct.

    Exhaustive depth-first search over edge labels in BFS edge order; a
    vertex whose incident edges are all assigned has its degree frozen and
    any duplicate among frozen degrees aborts the subtree.  Raises
    BudgetExceeded when |group| ** |edges| > budget before searching.
    """
    m = len(g.edges)
    k = grp.order
    if k**m > budget:
        raise BudgetExceeded(f"{k}^{m} labellings exceed budget {budget}")
    if g.n == 0:
        return True

    # elements encoded as 0..k-1 (lex rank); add/sub via row tables
    elems = list(grp.elements())
    index = {x: i for i, x in enumerate(elems)}
    add = [[index[grp.add(x, y)] for y in elems] for x in elems]
    sub = [[index[grp.sub(x, y)] for y in elems] for x in elems]

    edges = _bfs_edge_order(g)
    left = [len(g.adj[v]) for v in range(g.n)]
    deg = [0] * g.n
    # vertices with no edges freeze immediately
    frozen = 0
    for v in range(g.n):
        if left[v] == 0:
            if frozen & 1:  # two isolated vertices share degree 0
                return False
            frozen |= 1

    all_labels = list(range(k))
    full_mask = (1 << k) - 1

    def search(i: int, frozen_mask: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        lu, lv = left[u] - 1, left[v] - 1
        left[u], left[v] = lu, lv
        du, dv = deg[u], deg[v]
        # when an endpoint becomes final here, walk its still-free final
        # degrees and derive the one label reaching each, instead of
        # trying all k labels
        if lu == 0:
            fin, other, d_fin, d_other = u, v, du, dv
            other_final = lv == 0
        elif lv == 0:
            fin, other, d_fin, d_other = v, u, dv, du
            other_final = False
        else:
            fin = -1
        if fin >= 0:
            add_row = add[d_other]
            free = ~frozen_mask & full_mask
            while free:
                bit = free & -free
                free ^= bit
                target = bit.bit_length() - 1
                lab = sub[target][d_fin]  # the one label with d_fin + lab = target
                n_other = add_row[lab]
                mask = frozen_mask | bit
                if other_final:
                    obit = 1 << n_other
                    if mask & obit:
                        continue
                    mask |= obit
                deg[fin] = target
                deg[other] = n_other
                if search(i + 1, mask):
                    left[u], left[v] = lu + 1, lv + 1
                    deg[u], deg[v] = du, dv
                    return True
            left[u], left[v] = lu + 1, lv + 1
            deg[u], deg[v] = du, dv
            return False
        add_u, add_v = add[du], add[dv]
        for lab in all_labels:
            deg[u] = add_u[lab]
            deg[v] = add_v[lab]
            if search(i + 1, frozen_mask):
                left[u], left[v] = lu + 1, lv + 1
                deg[u], deg[v] = du, dv
                return True
        left[u], left[v] = lu + 1, lv + 1
        deg[u], deg[v] = du, dv
        return False

    return search(0, frozen)


def enumerate_abelian_groups(m: int) -> list[AbelianGroup]:
    """One group per isomorphism class of order m.

    For each prime power p^e dividing m exactly, the p-part is a choice of
    partition of e; classes are the cross product over primes.  Factors are
    emitted primes ascending, parts descending, e.g. 12 -> Z4xZ3, Z2xZ2xZ3.
    """
    if m < 2:
        raise ValueError("group order must be >= 2")
    factorization = []
    d, rest = 2, m
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                e += 1
                rest //= d
            factorization.append((d, e))
        d += 1
    if rest > 1:
        factorization.append((rest, 1))

    def partitions(e: int, cap: int) -> list[tuple[int, ...]]:
        if e == 0:
            return [()]
        out = []
        for part in range(min(e, cap), 0, -1):
            out.extend((part,) + tail for tail in partitions(e - part, part))
        return out

    per_prime = [
        [tuple(p**part for part in parts) for parts in partitions(e, e)]
        for p, e in factorization
    ]
    groups = []

    def cross(i: int, acc: tuple[int, ...]) -> None:
        if i == len(per_prime):
            groups.append(make_group(acc))
            return
        for choice in per_prime[i]:
            cross(i + 1, acc + choice)

    cross(0, ())
    return groups


@dataclass
class Certificate:
    """Outcome of cross-checking one (graph, group) pair."""

    exists: bool
    prediction: bool | None  # what the closed form says; None where it is silent
    labelling: Labelling | None
    report: DegreeReport | None
    searched: int | None  # size of the exhausted labelling space, if searched


def predict_labelling_exists(g: SimpleGraph, grp: AbelianGroup) -> bool | None:
    """Existence according to the closed form; None in the thin band between
    n and s_g where the theory names no answer for this particular group."""
    from .labeller import _matches_exceptional_clause, group_irregularity_strength

    s = group_irregularity_strength(g)
    k = grp.order
    if k < g.n:
        return False
    if _matches_exceptional_clause(g.is_star(), g.n, grp) is not None:
        return False
    if k == g.n and g.n % 4 == 2:
        return False
    if k >= s.value:
        return True
    return None


def certify_or_refute(g: SimpleGraph, grp: AbelianGroup, budget: int = 10**8) -> Certificate:
    """Construct when theory says yes, exhaust when it says no, and fail
    hard on any disagreement."""
    from .labeller import LabellingImpossible, label_graph

    if not is_connected(g) or g.n < 3:
        raise ValueError("need a connected graph on >= 3 vertices")
    prediction = predict_labelling_exists(g, grp)
    if prediction is True:
        lab = label_graph(g, grp)
        report = weighted_degrees(g, lab, grp)
        if not report.is_irregular:
            raise InconsistencyError("constructed labelling failed verification")
        return Certificate(True, True, lab, report, None)
    exists = brute_force_exists(g, grp, budget)
    if prediction is False and exists:
        raise InconsistencyError(
            f"theory forbids a labelling of this graph over {grp}, search found one"
        )
    if prediction is False:
        try:
            label_graph(g, grp)
        except (LabellingImpossible, ValueError):
            pass
        else:
            raise InconsistencyError("labeller built a labelling theory forbids")
    return Certificate(exists, prediction, None, None, grp.order ** len(g.edges))
