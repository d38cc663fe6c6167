"""Run u = 2x + 3y at every vertex of every small graph and tally outcomes.

Each found split is re-verified; hypothesis failures and undecided searches
are counted separately.

    python3 scripts/monoid_sweep.py --max-vertices 2 --eq-depth 8
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from leavitt.exhaustive import small_graphs
from leavitt.monoid import HypothesisFailure, MonoidVector, decompose_2x_3y, verify_2x_3y


@dataclass(frozen=True)
class MonoidSweepConfig:
    max_vertices: int = 2
    max_parallel: int = 2
    eq_depth: int = 8
    search_cap: int = 5_000


def sweep(cfg: MonoidSweepConfig) -> dict:
    t0 = time.perf_counter()
    tally: Counter = Counter()
    unverified = []
    for g in small_graphs(cfg.max_vertices, cfg.max_parallel):
        for v in g.vertices:
            u = MonoidVector({v: 1})
            try:
                r = decompose_2x_3y(g, u, cfg.eq_depth, cfg.search_cap)
            except HypothesisFailure:
                tally["hypothesis_failed"] += 1
                continue
            tally[r.outcome] += 1
            if r.found and not verify_2x_3y(g, u, r.witness):
                unverified.append({"graph": g.name, "vertex": v})
    return {"config": asdict(cfg), "outcomes": dict(tally), "unverified": unverified,
            "seconds": round(time.perf_counter() - t0, 2)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=2)
    ap.add_argument("--max-parallel", type=int, default=2)
    ap.add_argument("--eq-depth", type=int, default=8)
    ap.add_argument("--search-cap", type=int, default=5_000)
    a = ap.parse_args()
    out = sweep(MonoidSweepConfig(a.max_vertices, a.max_parallel, a.eq_depth, a.search_cap))
    print(json.dumps(out, indent=2))
    return 1 if out["unverified"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
