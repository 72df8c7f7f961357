"""Recalibrate data/witness_floor.json from a pilot run on G(256, 1/2)."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from ddt.constants import WITNESS_FLOOR_FILE
from ddt.services.constructions import random_graph
from ddt.services.degree_diversity import randomized_witness
from ddt.utils.logging_setup import configure_logging


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pilot-seed", type=int, default=1000, help="first graph seed of the pilot run")
    parser.add_argument("--graphs", type=int, default=20)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--margin", type=float, default=0.8, help="floor = margin * smallest pilot count")
    args = parser.parse_args()
    configure_logging("INFO")

    counts = []
    for offset in range(args.graphs):
        seed = args.pilot_seed + offset
        g = random_graph(256, 0.5, seed)
        counts.append(randomized_witness(g, args.trials, seed).distinct_count)
    floor = max(1, int(args.margin * min(counts)))
    record = {
        "floor": floor,
        "graph": "random_graph(n=256, p=0.5)",
        "seeds": f"{args.pilot_seed}..{args.pilot_seed + args.graphs - 1}",
        "trials": args.trials,
        "method": f"pilot run: counts {min(counts)}..{max(counts)}, floor = int(margin * smallest count)",
        "smallest_count": min(counts),
        "margin": args.margin,
    }
    WITNESS_FLOOR_FILE.write_text(json.dumps(record, indent=2) + "\n")
    print(f"Witness floor {floor} written to {WITNESS_FLOOR_FILE}")


if __name__ == "__main__":
    main()
