"""``ddt verify``: verification campaigns that end in a pass/fail report."""
from __future__ import annotations

import argparse

from config import settings
from ddt.commands.common import (
    emit,
    enumeration_guard,
    exact_guard,
    exit_code,
    global_flags,
    manifest,
    require_seed,
    trials,
)
from ddt.constants import CONSTANT_GRID_EPSS, CONSTANT_GRID_KS
from ddt.services.harness import (
    central_binomial_checks,
    collision_grid_checks,
    concentration_checks,
    constants_checks,
    verify_extremal_construction,
    verify_sqrt_bound,
)
from ddt.services.sweep import exhaustive_small_sweep
from ddt.utils.graph_io import load_graph


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="run a verification campaign")
    campaigns = parser.add_subparsers(dest="campaign", required=True)

    sqrt_bound = campaigns.add_parser("sqrt-bound", aliases=["theorem1"], parents=[global_flags()],
                                      help="f(G) >= sqrt(n/hom)/250 with its pair-mass inequalities")
    sqrt_bound.add_argument("path")
    sqrt_bound.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    sqrt_bound.add_argument("--trials", type=int, default=None)
    sqrt_bound.set_defaults(handler=run_sqrt_bound, command_name="verify sqrt-bound")

    extremal = campaigns.add_parser("extremal", aliases=["theorem2"], parents=[global_flags()],
                                    help="m disjoint (k-1)-cliques: f = k-1, hom = max(m, k-1)")
    extremal.add_argument("--k", type=int, required=True)
    extremal.add_argument("--m", type=int, required=True)
    extremal.set_defaults(handler=run_extremal, command_name="verify extremal")

    sweep = campaigns.add_parser("sweep", parents=[global_flags()], help="every labelled graph up to n-max")
    sweep.add_argument("--n-max", type=int, default=4)
    sweep.set_defaults(handler=run_sweep, command_name="verify sweep")

    concentration = campaigns.add_parser("concentration", parents=[global_flags()],
                                         help="subset-size and degree-graph concentration")
    concentration.add_argument("path")
    concentration.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
    concentration.add_argument("--trials", type=int, default=None)
    concentration.set_defaults(handler=run_concentration, command_name="verify concentration")

    constants = campaigns.add_parser("constants", parents=[global_flags()], help="proof constant consistency")
    constants.add_argument("--k", type=int, nargs="+", default=list(CONSTANT_GRID_KS))
    constants.add_argument("--eps", type=float, nargs="+", default=list(CONSTANT_GRID_EPSS))
    constants.set_defaults(handler=run_constants, command_name="verify constants")

    collision = campaigns.add_parser("collision", parents=[global_flags()], help="collision probability grid")
    collision.add_argument("--s-max", type=int, default=200)
    collision.set_defaults(handler=run_collision, command_name="verify collision")

    central = campaigns.add_parser("central-binomial", parents=[global_flags()], help="central binomial bound")
    central.add_argument("--s-max", type=int, default=10_000)
    central.set_defaults(handler=run_central_binomial, command_name="verify central-binomial")


def run_sqrt_bound(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    g = load_graph(args.path, args.input_format)
    report = verify_sqrt_bound(g, trial_count, seed, guard=exact_guard(args),
                               enumeration_guard=enumeration_guard(args), subject=args.path)
    emit(report, args, manifest(args, input_path=args.path, trial_count=trial_count))
    return exit_code(report)


def run_extremal(args: argparse.Namespace) -> int:
    report = verify_extremal_construction(args.k, args.m, guard=enumeration_guard(args))
    emit(report, args, manifest(args, family={"family": "disjoint_cliques", "m": args.m, "k": args.k - 1}))
    return exit_code(report)


def run_sweep(args: argparse.Namespace) -> int:
    threads = settings.threads if args.threads is None else args.threads
    report = exhaustive_small_sweep(args.n_max, threads=threads)
    emit(report, args, manifest(args))
    return exit_code(report)


def run_concentration(args: argparse.Namespace) -> int:
    seed = require_seed(args)
    trial_count = trials(args)
    g = load_graph(args.path, args.input_format)
    report = concentration_checks(g, trial_count, seed, guard=exact_guard(args), subject=args.path)
    emit(report, args, manifest(args, input_path=args.path, trial_count=trial_count))
    return exit_code(report)


def run_constants(args: argparse.Namespace) -> int:
    report = constants_checks(args.k, args.eps)
    emit(report, args, manifest(args))
    return exit_code(report)


def run_collision(args: argparse.Namespace) -> int:
    report = collision_grid_checks(args.s_max)
    emit(report, args, manifest(args))
    return exit_code(report)


def run_central_binomial(args: argparse.Namespace) -> int:
    report = central_binomial_checks(args.s_max)
    emit(report, args, manifest(args))
    return exit_code(report)
