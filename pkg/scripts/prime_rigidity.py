"""Exhaustive check that singularly cospectral circulants of odd prime order
are related by a multiplier.

    python3 scripts/prime_rigidity.py --max-p 19
"""

import argparse
import json
import time
from dataclasses import dataclass

from circspec.prime import is_prime, verify_sc_implies_iso


@dataclass
class RigidityConfig:
    max_p: int = 17
    max_sets: int = 1 << 16


def main(cfg: RigidityConfig) -> int:
    bad = 0
    for p in range(3, cfg.max_p + 1):
        if not is_prime(p):
            continue
        t0 = time.perf_counter()
        report = verify_sc_implies_iso(p, cfg.max_sets)
        row = report.to_dict() | {"seconds": round(time.perf_counter() - t0, 2)}
        print(json.dumps(row))
        bad += len(report.violations)
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="prime-order rigidity check")
    ap.add_argument("--max-p", type=int, default=17)
    ap.add_argument("--max-sets", type=int, default=1 << 16)
    raise SystemExit(main(RigidityConfig(**vars(ap.parse_args()))))
