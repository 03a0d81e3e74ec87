"""Command-line front end.

Subcommands: strength, label, verify, oracle, spc, bench, sweep.
Exit codes: 0 success, 1 malformed input, 2 proven impossibility,
3 verification failure, 4 budget exceeded.  Output for the algorithmic
subcommands is deterministic given the inputs and seed; ``bench`` reports
wall times and is the one exception.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from dataclasses import dataclass

from .graphs import (
    Labelling,
    RootedTree,
    SimpleGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_tree,
    read_edge_list,
    star_graph,
    spanning_tree_prefer_nonstar,
)
from .groups import AbelianGroup, format_element, parse_element, parse_group_spec
from .labeller import LabellingImpossible, group_irregularity_strength, label_graph
from .path_collection import shortest_path_collection, spc_lower_bound
from .verifier import (
    BudgetExceeded,
    brute_force_exists,
    enumerate_abelian_groups,
    weighted_degrees,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IMPOSSIBLE = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4


@dataclass
class RunConfig:
    subcommand: str
    graph_path: str | None = None
    group_spec: str | None = None
    labelling_path: str | None = None
    marked: list[int] | None = None
    budget: int = 10**8
    seed: int = 0
    output_format: str = "human"
    max_n: int = 9
    extra_orders: int = 2
    sizes: list[int] | None = None
    marked_frac: float = 0.25
    repeats: int = 5


def write_labelling(path, lab: Labelling) -> None:
    with open(path, "w") as fh:
        fh.write(render_labelling(lab))


def render_labelling(lab: Labelling) -> str:
    lines = [f"{u} {v} {format_element(lab.labels[(u, v)])}" for u, v in lab.graph.edges]
    return "\n".join(lines) + "\n"


def read_labelling(path, g: SimpleGraph, grp: AbelianGroup) -> Labelling:
    """Edge-list rows with one appended element column: 'u v (g1,...,gk)'."""
    lab = Labelling(g, grp)
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            parts = ln.split(None, 2)
            if len(parts) != 3:
                raise ValueError(f"bad labelling line: {ln!r}")
            u, v = int(parts[0]), int(parts[1])
            lab.set_label(u, v, parse_element(parts[2], grp))
    return lab


def _cmd_strength(cfg: RunConfig, out) -> int:
    g = read_edge_list(cfg.graph_path)
    res = group_irregularity_strength(g)
    if cfg.output_format == "tsv":
        out.write(f"{res.value}\t{res.case_tag}\n")
    else:
        out.write(f"{res.value} {res.case_tag}\n")
    return EXIT_OK


def _cmd_label(cfg: RunConfig, out) -> int:
    g = read_edge_list(cfg.graph_path)
    grp = parse_group_spec(cfg.group_spec)
    try:
        lab = label_graph(g, grp)
    except LabellingImpossible as exc:
        out.write(f"impossible: {exc.reason}\n")
        if exc.clause:
            out.write(f"clause: {exc.clause}\n")
        return EXIT_IMPOSSIBLE
    out.write(render_labelling(lab))
    report = weighted_degrees(g, lab, grp)
    for v, d in enumerate(report.weighted_degrees):
        out.write(f"# w {v} {format_element(d)}\n")
    return EXIT_OK


def _cmd_verify(cfg: RunConfig, out) -> int:
    g = read_edge_list(cfg.graph_path)
    grp = parse_group_spec(cfg.group_spec)
    lab = read_labelling(cfg.labelling_path, g, grp)
    report = weighted_degrees(g, lab, grp)
    if report.is_irregular:
        out.write("irregular\n")
        return EXIT_OK
    u, v = report.collision_witness
    out.write(f"collision {u} {v} {format_element(report.weighted_degrees[u])}\n")
    return EXIT_VERIFY


def _cmd_oracle(cfg: RunConfig, out) -> int:
    g = read_edge_list(cfg.graph_path)
    grp = parse_group_spec(cfg.group_spec)
    try:
        exists = brute_force_exists(g, grp, cfg.budget)
    except BudgetExceeded as exc:
        out.write(f"budget-exceeded: {exc}\n")
        return EXIT_BUDGET
    if exists:
        out.write("exists\n")
        return EXIT_OK
    out.write("not-exists\n")
    return EXIT_IMPOSSIBLE


def _cmd_spc(cfg: RunConfig, out) -> int:
    g = read_edge_list(cfg.graph_path)
    if len(g.edges) != g.n - 1:
        raise ValueError("spc expects a tree (n-1 edges)")
    tree = RootedTree(g.n, g.edges, root=0)
    collection = shortest_path_collection(tree, cfg.marked, checked=True)
    bound = spc_lower_bound(tree, cfg.marked)
    for (u, v), path in zip(collection.pairs, collection.paths):
        if cfg.output_format == "tsv":
            out.write(f"{u}\t{v}\t{len(path) - 1}\n")
        else:
            out.write(f"pair {u} {v} length {len(path) - 1}: {' '.join(map(str, path))}\n")
    out.write(f"total {collection.total_length}\n")
    out.write(f"certificate {bound}\n")
    if collection.total_length != bound:
        raise AssertionError("greedy total differs from its certificate")
    return EXIT_OK


def _cmd_bench(cfg: RunConfig, out) -> int:
    rng = random.Random(cfg.seed)
    previous = None
    for size in cfg.sizes:
        times = []
        for _ in range(cfg.repeats):
            g = random_tree(size, rng)
            tree = RootedTree(g.n, g.edges, root=0)
            marked = rng.sample(range(size), max(2, int(size * cfg.marked_frac) // 2 * 2))
            t0 = time.perf_counter()
            shortest_path_collection(tree, marked)
            times.append(time.perf_counter() - t0)
        med = statistics.median(times)
        ratio = "" if previous is None else f" ratio {med / previous:.2f}"
        out.write(f"n {size} median {med:.4f}s{ratio}\n")
        previous = med
    return EXIT_OK


def sweep_corpus(max_n: int, seed: int):
    """Named deterministic graph corpus for the sweep subcommand."""
    rng = random.Random(seed)
    corpus = []
    for n in range(3, max_n + 1):
        corpus.append((f"path{n}", path_graph(n)))
        corpus.append((f"cycle{n}", cycle_graph(n)))
        corpus.append((f"star{n}", star_graph(n)))
        corpus.append((f"complete{n}", complete_graph(n)))
    for i in range(10):
        n = rng.randrange(4, max_n + 1)
        corpus.append((f"random{i}n{n}", random_connected_graph(n, rng.randrange(0, n), rng)))
    return corpus


def _cmd_sweep(cfg: RunConfig, out) -> int:
    from .labeller import _matches_exceptional_clause

    rows = []
    failures = 0
    for name, g in sweep_corpus(cfg.max_n, cfg.seed):
        s = group_irregularity_strength(g)
        for order in range(s.value, s.value + 1 + cfg.extra_orders):
            for grp in enumerate_abelian_groups(order):
                expected_clause = _matches_exceptional_clause(g.is_star(), g.n, grp)
                try:
                    lab = label_graph(g, grp)
                    report = weighted_degrees(g, lab, grp)
                    if expected_clause is not None:
                        status, ok = "labelled-but-exceptional", False
                    elif report.is_irregular:
                        status, ok = "certified", True
                    else:
                        status, ok = "collision", False
                except LabellingImpossible as exc:
                    ok = exc.clause == expected_clause and expected_clause is not None
                    status = f"impossible[{exc.clause}]"
                failures += 0 if ok else 1
                rows.append((name, g.n, str(grp), status, "PASS" if ok else "FAIL"))
    rows.sort()
    for row in rows:
        out.write("\t".join(str(c) for c in row) + "\n")
    out.write(f"sweep {'PASS' if failures == 0 else 'FAIL'} {len(rows) - failures}/{len(rows)}\n")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


_HANDLERS = {
    "strength": _cmd_strength,
    "label": _cmd_label,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "spc": _cmd_spc,
    "bench": _cmd_bench,
    "sweep": _cmd_sweep,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        return _HANDLERS[cfg.subcommand](cfg, out)
    except (ValueError, OSError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupirr",
        description="Irregular edge labellings of connected graphs over finite Abelian groups",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("strength", help="print s_g and its case tag")
    p.add_argument("graph", help="edge-list file: first line 'n m', then 'u v' rows")
    p.add_argument("--format", choices=["human", "tsv"], default="human")

    p = sub.add_parser("label", help="construct and print a certified labelling")
    p.add_argument("graph")
    p.add_argument("group", help="group spec such as Z4xZ3 or 4x3")
    p.add_argument("--format", choices=["human", "tsv"], default="human")

    p = sub.add_parser("verify", help="check a labelling file for irregularity")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("labelling", help="rows 'u v (g1,...,gk)'")

    p = sub.add_parser("oracle", help="exhaustive existence search")
    p.add_argument("graph")
    p.add_argument("group")
    p.add_argument("--budget", type=int, default=10**8)

    p = sub.add_parser("spc", help="optimal pairing of marked vertices in a tree")
    p.add_argument("graph")
    p.add_argument("marked", type=int, nargs="+")
    p.add_argument("--format", choices=["human", "tsv"], default="human")

    p = sub.add_parser("bench", help="wall times of the path-collection solver")
    p.add_argument("--sizes", default="100000,200000,400000")
    p.add_argument("--marked-frac", type=float, default=0.25)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sweep", help="corpus x group construct-and-certify run")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--extra-orders", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand)
    cfg.graph_path = getattr(args, "graph", None)
    cfg.group_spec = getattr(args, "group", None)
    cfg.labelling_path = getattr(args, "labelling", None)
    cfg.marked = getattr(args, "marked", None)
    cfg.budget = getattr(args, "budget", cfg.budget)
    cfg.seed = getattr(args, "seed", cfg.seed)
    cfg.output_format = getattr(args, "format", cfg.output_format)
    cfg.max_n = getattr(args, "max_n", cfg.max_n)
    cfg.extra_orders = getattr(args, "extra_orders", cfg.extra_orders)
    cfg.marked_frac = getattr(args, "marked_frac", cfg.marked_frac)
    cfg.repeats = getattr(args, "repeats", cfg.repeats)
    if hasattr(args, "sizes"):
        cfg.sizes = [int(s) for s in str(args.sizes).split(",") if s]
    return cfg


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
