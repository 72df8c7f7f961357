"""Flags, manifests and output shared by every subcommand."""
from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from pydantic import BaseModel

from config import settings
from ddt.constants import VERSION
from ddt.errors import UsageError
from ddt.models.reports import RunManifest
from ddt.utils.graph_io import write_report


def global_flags() -> argparse.ArgumentParser:
    """Parent parser so global flags may follow the subcommand."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=None, help="master seed; required by randomized commands")
    parent.add_argument("--guard-n", type=int, default=None, help="exact clique search guard")
    parent.add_argument("--enum-guard-n", type=int, default=None, help="f_exact enumeration guard")
    parent.add_argument("--format", choices=["json", "csv"], default="json")
    parent.add_argument("--out", default=None, help="output path (default: standard output)")
    parent.add_argument("--threads", type=int, default=None, help="harness worker processes")
    parent.add_argument("--timestamp", action="store_true", help="add generated_at to the manifest")
    return parent


def require_seed(args: argparse.Namespace, reason: str = "") -> int:
    if args.seed is None:
        raise UsageError(f"{args.command_name} needs --seed{': ' + reason if reason else ''}")
    if args.seed < 0:
        raise UsageError("--seed must be non-negative")
    return args.seed


def exact_guard(args: argparse.Namespace) -> int:
    return settings.exact_guard_n if args.guard_n is None else args.guard_n


def enumeration_guard(args: argparse.Namespace) -> int:
    return settings.enumeration_guard_n if args.enum_guard_n is None else args.enum_guard_n


def trials(args: argparse.Namespace) -> int:
    value = settings.default_trials if getattr(args, "trials", None) is None else args.trials
    if value < 1:
        raise UsageError("--trials must be at least 1")
    return value


def manifest(
    args: argparse.Namespace,
    input_path: Optional[str] = None,
    family: Optional[Dict[str, Any]] = None,
    trial_count: Optional[int] = None,
) -> RunManifest:
    return RunManifest(
        command=args.command_name,
        input=input_path,
        family=family,
        seed=args.seed,
        trials=trial_count,
        guards={"exact_guard_n": exact_guard(args), "enumeration_guard_n": enumeration_guard(args)},
        output=args.out,
        format=args.format,
        version=VERSION,
        generated_at=datetime.now(timezone.utc).isoformat() if args.timestamp else None,
    )


def emit(report: BaseModel, args: argparse.Namespace, run: RunManifest) -> None:
    text = write_report(report, fmt=args.format, out=args.out, manifest=run)
    if args.out is None:
        sys.stdout.write(text)


def exit_code(report: BaseModel) -> int:
    """0 when every conclusive check passed, 1 otherwise."""
    passed = getattr(report, "passed", True)
    return 0 if passed else 1
