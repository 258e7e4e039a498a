"""Count NCSC pairs among small circulants, order by order.

    python3 scripts/ncsc_census.py --min-n 6 --max-n 24 --max-s 2 --workers 4
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from circspec.cospectral import search_ncsc


@dataclass
class CensusConfig:
    min_n: int = 6
    max_n: int = 24
    max_s: int = 2
    workers: int = 1
    records: str | None = None  # NDJSON file for the pairs themselves


def run(cfg: CensusConfig):
    sink = open(cfg.records, "w") if cfg.records else None
    rows = []
    try:
        for n in range(cfg.min_n, cfg.max_n + 1):
            t0 = time.perf_counter()
            res = search_ncsc(n, cfg.max_s, workers=cfg.workers)
            if sink:
                for rec in res.records:
                    sink.write(json.dumps(rec, separators=(",", ":")) + "\n")
            same = sum(r["same_inertia"] for r in res.records)
            rows.append({"n": n, "sets": res.num_sets, "ncsc": len(res.records),
                         "ncsc_same_inertia": same, "seconds": round(time.perf_counter() - t0, 2)})
            print(f"n={n:3d}  sets={res.num_sets:5d}  ncsc={len(res.records):4d}  "
                  f"same inertia={same:4d}")
    finally:
        if sink:
            sink.close()
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(CensusConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value) if value is not None else str,
                        default=value)
    run(CensusConfig(**vars(ap.parse_args())))
