"""Build and verify a properly infinite witness for every vertex of every
proper quotient of each purely infinite small graph.

    python3 scripts/witness_sweep.py --max-vertices 2
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from leavitt.classify import is_purely_infinite
from leavitt.exhaustive import small_graphs
from leavitt.graph import all_hereditary_saturated, csp_at_least_two, quotient_graph
from leavitt.kernel import (Element, constructive_properly_infinite, diag, scalar,
                            vertex_properly_infinite_witness, verify_precsim)


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 3
    max_parallel: int = 2


def sweep(cfg: SweepConfig) -> dict:
    t0 = time.perf_counter()
    routes: Counter = Counter()
    failures = []
    for g in small_graphs(cfg.max_vertices, cfg.max_parallel):
        if not is_purely_infinite(g).value:
            continue
        for h in all_hereditary_saturated(g):
            if len(h) == len(g.vertices):
                continue
            q = quotient_graph(g, h)
            for v in q.vertices:
                a = Element.vertex(q, v)
                if csp_at_least_two(q, v):
                    route, w = "two closed paths", vertex_properly_infinite_witness(q, v)
                else:
                    route, w = "constructive", constructive_properly_infinite(q, a)
                routes[route] += 1
                if w is None or not verify_precsim(q, diag(q, [a, a]), scalar(a), w):
                    failures.append({"graph": g.name, "H": sorted(h), "vertex": v})
    return {"config": asdict(cfg), "routes": dict(routes), "failures": failures,
            "seconds": round(time.perf_counter() - t0, 2)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=3)
    ap.add_argument("--max-parallel", type=int, default=2)
    a = ap.parse_args()
    out = sweep(SweepConfig(a.max_vertices, a.max_parallel))
    print(json.dumps(out, indent=2))
    return 1 if out["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
