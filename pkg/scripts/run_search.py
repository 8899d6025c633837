"""Seeded searches over several fields; records go to a JSON-lines file and are re-verified.

    python3 scripts/run_search.py --out runs/search.jsonl --jobs 4
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from dp1.search import SearchConfig, load_records, reverify, search


@dataclass
class Plan:
    field: str
    mode: str
    trials: int
    target: int
    unramified: bool = False


PLANS = [
    Plan("gf:2:x^5+x^2+1", "family", 2000, 12),
    Plan("gf:3:x^3+2x+1", "family", 3000, 10),
    Plan("gf:3:x^3+2x+1", "key2", 3000, 12, unramified=True),
    Plan("gf:7:x^2+6x+3", "family", 2000, 10),
    Plan("gf:7:x^2+6x+3", "key2", 1000, 9, unramified=True),
]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="runs/search.jsonl")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every trial count")
    args = ap.parse_args()
    summary = []
    for plan in PLANS:
        cfg = SearchConfig(
            plan.field,
            trials=max(1, int(plan.trials * args.scale)),
            target=plan.target,
            seed=args.seed,
            mode=plan.mode,
            output=args.out,
            require_unramified=plan.unramified,
        )
        t = time.time()
        res = search(cfg, jobs=args.jobs)
        summary.append(asdict(plan) | res.to_json() | {"seconds": round(time.time() - t, 1)})
        print(json.dumps(summary[-1]), flush=True)
    recs = load_records(args.out)
    bad = [r for r in recs if not reverify(r)]
    critical = [r for r in recs if r.critical]
    print(json.dumps({"records": len(recs), "reverify_failures": len(bad), "critical": len(critical)}))
    return 1 if bad or critical else 0


if __name__ == "__main__":
    raise SystemExit(main())
