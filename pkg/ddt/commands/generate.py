"""``ddt generate``: write a named graph family as an edge list."""
from __future__ import annotations

import argparse
import sys

from pydantic import ValidationError

from ddt.commands.common import global_flags, require_seed
from ddt.errors import UsageError
from ddt.models.families import FamilySpec
from ddt.services.constructions import build_family
from ddt.utils.graph_io import serialize_edge_list

FAMILIES = ["disjoint-cliques", "complement-blowup", "random"]


def family_spec(args: argparse.Namespace) -> FamilySpec:
    family = args.family.replace("-", "_")
    seed = require_seed(args, "random graphs are seeded") if family == "random" else None
    try:
        return FamilySpec(family=family, m=args.m, k=args.k, b=args.b, n=args.n, p=args.p, seed=seed)
    except ValidationError as exc:
        raise UsageError(f"invalid {args.family} parameters: {exc.errors()[0]['msg']}") from exc


def add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--m", type=int, default=None, help="number of cliques")
    parser.add_argument("--k", type=int, default=None, help="clique size, or the target degree count")
    parser.add_argument("--b", type=int, default=None, help="inner clique size of the complement blow-up")
    parser.add_argument("--n", type=int, default=None, help="vertex count")
    parser.add_argument("--p", type=float, default=None, help="edge probability")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("generate", parents=[global_flags()], help="write a graph family")
    add_family_flags(parser)
    parser.set_defaults(handler=run, command_name="generate")


def run(args: argparse.Namespace) -> int:
    g = build_family(family_spec(args))
    data = serialize_edge_list(g)
    if args.out is None:
        sys.stdout.write(data.decode("ascii"))
    else:
        with open(args.out, "wb") as f:
            f.write(data)
    return 0
