"""``ddt cluster``: seed-and-grow partition by neighbourhood distance."""
from __future__ import annotations

import argparse

from pydantic import ValidationError

from ddt.commands.common import emit, exit_code, global_flags, manifest
from ddt.errors import UsageError
from ddt.models.clustering import ClusterParams
from ddt.models.reports import ClusterReport
from ddt.services.clustering import partition, validate_partition
from ddt.utils.graph_io import load_graph


def add_partition_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d0", type=float, required=True, help="seed radius: delta(w, x) < d0")
    parser.add_argument("--link-dist", type=float, required=True, help="growth: delta(x, C) <= link-dist")
    parser.add_argument("--growth", type=float, default=0.1, help="keep growing while |T| >= growth*|C|")
    parser.add_argument("--seed-frac", type=float, default=0.01)
    parser.add_argument("--min-cluster-frac", type=float, default=0.001)


def cluster_params(args: argparse.Namespace) -> ClusterParams:
    try:
        return ClusterParams(
            seed_radius=args.d0,
            link_dist=args.link_dist,
            growth_ratio=args.growth,
            seed_frac=args.seed_frac,
            min_cluster_frac=args.min_cluster_frac,
        )
    except ValidationError as exc:
        raise UsageError(f"invalid partition parameters: {exc.errors()[0]['msg']}") from exc


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("cluster", parents=[global_flags()], help="partition a graph file")
    parser.add_argument("path")
    parser.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    add_partition_flags(parser)
    parser.add_argument("--validate-k", type=float, default=None, help="intra-cluster threshold K to validate")
    parser.add_argument("--validate-j", type=float, default=None, help="inter-cluster threshold J to validate")
    parser.add_argument("--min-size", type=int, default=1)
    parser.add_argument("--max-leftover", type=int, default=None)
    parser.set_defaults(handler=run, command_name="cluster")


def run(args: argparse.Namespace) -> int:
    params = cluster_params(args)
    g = load_graph(args.path, args.input_format)
    result = partition(g, params)
    validation = None
    if args.validate_k is not None or args.validate_j is not None:
        K = args.validate_k if args.validate_k is not None else result.max_intra + 1
        J = args.validate_j if args.validate_j is not None else args.link_dist
        max_leftover = g.n if args.max_leftover is None else args.max_leftover
        validation = validate_partition(g, result, K, J, args.min_size, max_leftover).model_dump()
    report = ClusterReport(
        subject=args.path,
        clusters=[cluster.vertices() for cluster in result.clusters],
        leftover=result.leftover.vertices(),
        max_intra=result.max_intra,
        min_inter=result.min_inter,
        validation=validation,
    )
    emit(report, args, manifest(args, input_path=args.path))
    return exit_code(report)
