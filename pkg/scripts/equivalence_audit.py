"""Compare the tail/exit criterion with Condition (K) on every small graph.

    python3 scripts/equivalence_audit.py --max-vertices 3 --max-parallel 2
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from leavitt.classify import condition_k_criterion, tail_exit_criterion
from leavitt.exhaustive import corpus_size, small_graphs


@dataclass(frozen=True)
class AuditConfig:
    max_vertices: int = 3
    max_parallel: int = 2
    show: int = 10          # disagreements to print


def audit(cfg: AuditConfig) -> dict:
    t0 = time.perf_counter()
    total = pi = 0
    bad = []
    for g in small_graphs(cfg.max_vertices, cfg.max_parallel):
        total += 1
        vi = tail_exit_criterion(g).holds
        pi += vi
        if vi != condition_k_criterion(g).holds:
            bad.append(g.name)
    return {"config": asdict(cfg), "graphs": total, "purely_infinite": pi,
            "disagreements": len(bad), "examples": bad[:cfg.show],
            "seconds": round(time.perf_counter() - t0, 2)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=3)
    ap.add_argument("--max-parallel", type=int, default=2)
    ap.add_argument("--show", type=int, default=10)
    a = ap.parse_args()
    cfg = AuditConfig(a.max_vertices, a.max_parallel, a.show)
    print(f"enumerating {corpus_size(cfg.max_vertices, cfg.max_parallel)} graphs", flush=True)
    out = audit(cfg)
    print(json.dumps(out, indent=2))
    return 1 if out["disagreements"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
