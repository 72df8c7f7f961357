"""Graph files and report serialization.

The canonical graph format is a plain edge list: a header ``n m`` followed by
``m`` lines ``u v`` with ``0 <= u < v < n``. graph6 is accepted read-only.
"""
from __future__ import annotations

import csv
import json
import io
import logging
from pathlib import Path
from typing import List, Optional, Set, Tuple, Union

import networkx as nx
from pydantic import BaseModel

from ddt.errors import EdgeListError
from ddt.models.graph import Graph
from ddt.models.reports import HistogramReport, RatioReport, RatioRow, RunManifest

logger = logging.getLogger(__name__)

GRAPH6_SUFFIXES = {".g6", ".graph6"}
HISTOGRAM_COLUMNS = ["degree", "predicted", "observed_mean", "observed_std", "z"]


def _parse_int(token: bytes, line: int, kind: str) -> int:
    if not token.isdigit():
        raise EdgeListError(kind, line, f"expected a non-negative decimal integer, got {token!r}")
    return int(token)


def parse_edge_list(data: bytes) -> Graph:
    """Parse an edge-list file; every diagnostic names its line and kind."""
    lines = data.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListError("malformed-header", 1, "empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListError("malformed-header", 1, f"expected 'n m', got {lines[0]!r}")
    n = _parse_int(header[0], 1, "malformed-header")
    m = _parse_int(header[1], 1, "malformed-header")
    if len(lines) - 1 != m:
        raise EdgeListError("count-mismatch", None, f"header announces {m} edges, found {len(lines) - 1} lines")

    seen: Set[Tuple[int, int]] = set()
    edges: List[Tuple[int, int]] = []
    for number, raw in enumerate(lines[1:], start=2):
        fields = raw.split()
        if len(fields) != 2:
            raise EdgeListError("malformed-line", number, f"expected 'u v', got {raw!r}")
        u = _parse_int(fields[0], number, "malformed-line")
        v = _parse_int(fields[1], number, "malformed-line")
        if u >= n or v >= n:
            raise EdgeListError("out-of-range", number, f"vertex outside [0, {n}) in {u} {v}")
        if u == v:
            raise EdgeListError("self-loop", number, f"loop at vertex {u}")
        if u > v:
            raise EdgeListError("non-canonical", number, f"pair {u} {v} must be written as {v} {u}")
        pair = (u, v)
        if pair in seen:
            raise EdgeListError("duplicate", number, f"edge {pair[0]} {pair[1]} listed twice")
        seen.add(pair)
        edges.append(pair)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> bytes:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return ("\n".join(out) + "\n").encode("ascii")


def parse_graph6(data: bytes) -> Graph:
    """First graph of a graph6 file, vertices in networkx order."""
    first = data.strip().splitlines()[0] if data.strip() else b""
    if not first:
        raise EdgeListError("malformed-header", 1, "empty graph6 input")
    try:
        nx_graph = nx.from_graph6_bytes(first)
    except (ValueError, nx.NetworkXError) as exc:
        raise EdgeListError("malformed-line", 1, f"invalid graph6: {exc}") from exc
    return Graph.from_networkx(nx_graph)


def load_graph(path: Union[str, Path], fmt: str = "auto") -> Graph:
    """Read an edge-list or graph6 file; ``auto`` picks graph6 by suffix."""
    path = Path(path)
    data = path.read_bytes()
    if fmt == "graph6" or (fmt == "auto" and path.suffix.lower() in GRAPH6_SUFFIXES):
        g = parse_graph6(data)
    else:
        g = parse_edge_list(data)
    logger.debug(f"loaded {path}: n={g.n}")
    return g


def write_edge_list(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_bytes(serialize_edge_list(g))


def report_json(report: BaseModel, manifest: Optional[RunManifest] = None) -> str:
    """Sorted keys, two-space indent, trailing newline; the manifest, when given, wraps the report."""
    payload = report.model_dump(mode="json")
    if manifest is not None:
        payload = {"manifest": manifest.model_dump(mode="json"), "report": payload}
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_csv(report: BaseModel) -> str:
    buffer = io.StringIO()
    if isinstance(report, HistogramReport):
        writer = csv.DictWriter(buffer, fieldnames=HISTOGRAM_COLUMNS, lineterminator="\r\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow({column: getattr(row, column) for column in HISTOGRAM_COLUMNS})
    elif isinstance(report, RatioReport):
        columns = list(RatioRow.model_fields)
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\r\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow(row.model_dump())
    else:
        writer = csv.writer(buffer, lineterminator="\r\n")
        writer.writerow(["claim", "passed", "lhs", "relation", "rhs", "tolerance", "exact", "note"])
        for check in getattr(report, "checks", []):
            writer.writerow([check.claim, check.passed, check.lhs, check.relation, check.rhs,
                             check.tolerance or "", check.exact, check.note])
    return buffer.getvalue()


def write_report(
    report: BaseModel,
    fmt: str = "json",
    out: Optional[Union[str, Path]] = None,
    manifest: Optional[RunManifest] = None,
) -> str:
    """Render ``report`` as JSON or CSV, writing to ``out`` when given; returns the text."""
    text = report_json(report, manifest) if fmt == "json" else report_csv(report)
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    return text
