"""Run every verification suite and write a JSON report.

    python3 scripts/run_all_checks.py --out results/checks.json
"""

import argparse
import json
import os
import time
from dataclasses import asdict, dataclass

from circspec.verify import run_suite


@dataclass
class ChecksConfig:
    max_k: int = 60
    max_p: int = 13
    max_alpha: int = 8
    max_s: int = 30
    out: str = "results/checks.json"


def main(cfg: ChecksConfig) -> int:
    t0 = time.perf_counter()
    checks = run_suite("all", cfg.max_k, cfg.max_p, cfg.max_alpha, cfg.max_s)
    report = {"config": asdict(cfg), "seconds": round(time.perf_counter() - t0, 1),
              "checks": [c.to_dict() for c in checks]}
    os.makedirs(os.path.dirname(cfg.out) or ".", exist_ok=True)
    with open(cfg.out, "w") as fh:
        json.dump(report, fh, indent=2)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.cases} cases)")
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="run all verification suites")
    for name, value in asdict(ChecksConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    raise SystemExit(main(ChecksConfig(**vars(ap.parse_args()))))
