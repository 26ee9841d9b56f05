"""Run every claim check at the default (or overridden) bounds and save the reports.

    python scripts/verify_all.py --out reports.json --jobs 4
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, fields

from isolationlab.verify import CLAIM_IDS, Bounds, run_claim


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None, help="write JSON reports here")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--only", nargs="*", choices=CLAIM_IDS, default=list(CLAIM_IDS))
    for f in fields(Bounds):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    args = ap.parse_args()

    bounds = Bounds(**{f.name: getattr(args, f.name) for f in fields(Bounds)})
    print("bounds:", asdict(bounds))
    reports = []
    for cid in args.only:
        t0 = time.perf_counter()
        rep = run_claim(cid, bounds, args.jobs, args.seed)
        print(f"{rep.table_row()}  ({time.perf_counter() - t0:.1f}s)", flush=True)
        reports.append(rep.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(reports, fh, indent=2)
    return 0 if all(r["verdict"] == "pass" for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
