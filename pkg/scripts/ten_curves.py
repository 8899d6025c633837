"""Sampled non-concurrency of the ten curves L1, L2, C1..C4, D1..D4.

In characteristic 3 the ten curves can meet in a point, so GF(27) is run
as a contrast and is expected to report events.
"""
from __future__ import annotations

import argparse
import json
import time

from dp1.search import ten_curve_trials

FIELDS = ["gf:2:x^5+x^2+1", "gf:7:x^2+6x+3", "gf:11:x^2+7x+2"]
CONTRAST = "gf:3:x^3+2x+1"


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--configs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--contrast", action="store_true", help="also sample GF(27)")
    args = ap.parse_args()
    rc = 0
    fields = FIELDS + ([CONTRAST] if args.contrast else [])
    for desc in fields:
        for mode in ("random", "key2"):
            t = time.time()
            rep = ten_curve_trials(desc, configs=args.configs, seed=args.seed, mode=mode)
            out = rep.to_json()
            out["events"] = len(out["events"])
            out["seconds"] = round(time.time() - t, 1)
            print(json.dumps(out), flush=True)
            if desc != CONTRAST and not rep.ok:
                rc = 1
    return rc


if __name__ == "__main__":
    raise SystemExit(main())
