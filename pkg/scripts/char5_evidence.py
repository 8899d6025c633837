"""Best unramified counts found in characteristic 5, where no sharp bound is known.

Only count <= 10 is asserted; the maxima are printed as evidence.
"""
from __future__ import annotations

import argparse
import json

from dp1.search import SearchConfig, search

FIELDS = ["gf:5:x^2+4x+2", "gf:5:x^3+3x+3"]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()
    worst = 0
    for desc in FIELDS:
        for mode in ("family", "key2"):
            cfg = SearchConfig(desc, trials=args.trials, target=9, seed=args.seed, mode=mode,
                               output=args.out, require_unramified=True)
            res = search(cfg, jobs=args.jobs)
            print(json.dumps({"field": desc, "mode": mode} | res.to_json()), flush=True)
            worst = max(worst, res.best_unramified)
    return 0 if worst <= 10 else 1


if __name__ == "__main__":
    raise SystemExit(main())
