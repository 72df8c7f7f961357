"""``ddt experiment``: Monte-Carlo campaigns (histogram, cluster events, ratio table)."""
from __future__ import annotations

import argparse

from ddt.commands.cluster import add_partition_flags, cluster_params
from ddt.commands.common import emit, exact_guard, exit_code, global_flags, manifest, require_seed, trials
from ddt.services.constructions import disjoint_cliques
from ddt.services.harness import cluster_event_experiment, degree_histogram_experiment, ratio_experiment
from ddt.utils.graph_io import load_graph


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("experiment", help="run a Monte-Carlo experiment")
    kinds = parser.add_subparsers(dest="experiment", required=True)

    histogram = kinds.add_parser("histogram", parents=[global_flags()],
                                 help="degree histogram of disjoint cliques under a 1/2-random subset")
    histogram.add_argument("--m", type=int, required=True, help="number of cliques")
    histogram.add_argument("--k", type=int, required=True, help="clique size")
    histogram.add_argument("--trials", type=int, default=None)
    histogram.set_defaults(handler=run_histogram, command_name="experiment histogram")

    events = kinds.add_parser("events", parents=[global_flags()], help="cluster events at desk scale")
    events.add_argument("path")
    events.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    add_partition_flags(events)
    events.add_argument("--k", type=int, required=True)
    events.add_argument("--eps", type=float, default=0.1)
    events.add_argument("--eta", type=float, default=0.0)
    events.add_argument("--trials", type=int, default=None)
    events.set_defaults(handler=run_events, command_name="experiment events")

    ratio = kinds.add_parser("ratio", parents=[global_flags()], help="f*hom/n against sqrt(n/hom)")
    ratio.add_argument("paths", nargs="+")
    ratio.add_argument("--trials", type=int, default=None)
    ratio.set_defaults(handler=run_ratio, command_name="experiment ratio")


def run_histogram(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    g = disjoint_cliques(args.m, args.k)
    report = degree_histogram_experiment(g, args.k, trial_count, seed,
                                         subject=f"disjoint_cliques(m={args.m}, k={args.k})")
    emit(report, args, manifest(args, family={"family": "disjoint_cliques", "m": args.m, "k": args.k},
                                trial_count=trial_count))
    return exit_code(report)


def run_events(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    params = cluster_params(args)
    g = load_graph(args.path, args.input_format)
    report = cluster_event_experiment(g, params, args.k, args.eps, args.eta, trial_count, seed, subject=args.path)
    emit(report, args, manifest(args, input_path=args.path, trial_count=trial_count))
    return exit_code(report)


def run_ratio(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    graphs = [(path, load_graph(path)) for path in args.paths]
    report = ratio_experiment(graphs, trial_count, seed, guard=exact_guard(args))
    emit(report, args, manifest(args, input_path=",".join(args.paths), trial_count=trial_count))
    return 0
