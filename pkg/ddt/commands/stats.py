"""``ddt stats``: size, hom, f and neighbourhood-distance summary of a graph file."""
from __future__ import annotations

import argparse

from config import settings
from ddt.commands.common import emit, enumeration_guard, exact_guard, global_flags, manifest, require_seed, trials
from ddt.models.reports import GraphStats
from ddt.services.degree_diversity import f_exact, randomized_witness
from ddt.services.graph_core import distance_histogram, edge_count, max_degree
from ddt.services.homogeneous import hom
from ddt.utils.graph_io import load_graph


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("stats", parents=[global_flags()], help="summarise a graph file")
    parser.add_argument("path")
    parser.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    parser.add_argument("--trials", type=int, default=None, help="witness trials above the enumeration guard")
    parser.set_defaults(handler=run, command_name="stats")


def run(args: argparse.Namespace) -> int:
    g = load_graph(args.path, args.input_format)
    guard = exact_guard(args)
    limit = enumeration_guard(args)
    seed = args.seed if args.seed is not None else 0
    if g.n > guard or g.n > limit:
        seed = require_seed(args, f"n={g.n} is above an exact guard, so estimates are randomized")
    result = hom(g, guard=guard, allow_estimate=True, seed=seed)
    trial_count = None
    if g.n <= limit:
        witness, f_is_exact = f_exact(g, guard=limit), True
    else:
        trial_count = trials(args)
        witness, f_is_exact = randomized_witness(g, trial_count, seed), False
    delta_skipped = g.n > settings.pair_guard_n
    histogram = {} if delta_skipped else distance_histogram(g)
    report = GraphStats(
        subject=args.path,
        n=g.n,
        edges=edge_count(g),
        max_degree=max_degree(g),
        hom=result.size,
        hom_exact=result.exact,
        hom_kind=result.witness.kind,
        hom_witness=result.witness.members.vertices(),
        f=witness.distinct_count,
        f_exact=f_is_exact,
        f_witness=witness.subset.vertices(),
        delta_min=min(histogram) if histogram else None,
        delta_max=max(histogram) if histogram else None,
        delta_histogram={str(d): count for d, count in sorted(histogram.items())},
        delta_skipped=delta_skipped,
    )
    emit(report, args, manifest(args, input_path=args.path, trial_count=trial_count))
    return 0
