#!/usr/bin/env python3
"""Run the 4-vertex multigraph census and print its findings.

The scan walks every assignment of layer sets to the six vertex pairs,
counts the pattern-free ones, and keeps the maximum size with a witness.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
from pathlib import Path

from fano_l2.search import k4_census


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=5, help="layer count (default 5)")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--json-out", help="also dump the full report as JSON")
    args = parser.parse_args()

    rep = k4_census(args.m, workers=args.workers)
    print(f"states scanned:      {rep.states}")
    print(f"pattern-free:        {rep.k4_free}")
    print(f"maximum size:        {rep.max_size}")
    print(f"maximizers:          {rep.max_count}")
    if args.m == 5:
        print(
            "clause violations:   "
            f"i={rep.clause_i_violations} iii={rep.clause_iii_violations} "
            f"iv={rep.clause_iv_violations} v={rep.clause_v_violations}"
        )
    tail = {s: c for s, c in enumerate(rep.size_histogram) if c and s >= rep.max_size - 4}
    print(f"histogram tail:      {tail}")
    print(f"elapsed:             {rep.elapsed:.1f}s on {rep.workers} worker(s)")
    print("witness:")
    print(rep.witness, end="")

    if args.json_out:
        payload = dataclasses.asdict(rep)
        Path(args.json_out).write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        print(f"wrote {args.json_out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
