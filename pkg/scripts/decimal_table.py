#!/usr/bin/env python3
"""Print the pinned decimal constants next to their recomputed values."""

from __future__ import annotations

from fano_l2.verify import DECIMAL_TOLERANCE, _decimal_checks


def main() -> int:
    rows = _decimal_checks()
    width = max(len(check_id) for check_id, _, _ in rows)
    print(f"{'constant':{width}s}  {'measured':>12s}  {'pinned':>9s}  {'dev':>8s}")
    worst = 0.0
    for check_id, measured, expected in rows:
        dev = abs(measured - expected)
        worst = max(worst, dev)
        print(f"{check_id:{width}s}  {measured:12.8f}  {expected:9.6f}  {dev:8.1e}")
    status = "ok" if worst <= DECIMAL_TOLERANCE else "FAIL"
    print(f"worst deviation {worst:.2e} against tolerance {DECIMAL_TOLERANCE:.0e}: {status}")
    return 0 if worst <= DECIMAL_TOLERANCE else 1


if __name__ == "__main__":
    raise SystemExit(main())
