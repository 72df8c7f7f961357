"""``ddt witness``: best randomized distinct-degree witness over seeded trials."""
from __future__ import annotations

import argparse

from ddt.commands.common import emit, exact_guard, global_flags, manifest, require_seed, trials
from ddt.models.reports import WitnessReport
from ddt.services.degree_diversity import randomized_witness, sqrt_diversity_bound
from ddt.services.homogeneous import hom
from ddt.utils.graph_io import load_graph


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("witness", parents=[global_flags()], help="randomized distinct-degree witness")
    parser.add_argument("path")
    parser.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    parser.add_argument("--trials", type=int, default=None)
    parser.set_defaults(handler=run, command_name="witness")


def run(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    g = load_graph(args.path, args.input_format)
    witness = randomized_witness(g, trial_count, seed)
    bound = None
    if 0 < g.n <= exact_guard(args):
        bound = sqrt_diversity_bound(g.n, hom(g, guard=exact_guard(args)).size)
    report = WitnessReport(
        subject=args.path,
        n=g.n,
        trials=trial_count,
        seed=seed,
        distinct_count=witness.distinct_count,
        subset=witness.subset.vertices(),
        representatives=witness.representatives.vertices(),
        bound=bound,
    )
    emit(report, args, manifest(args, input_path=args.path, trial_count=trial_count))
    return 0
