"""Positive/negative/zero counts among the odd-index eigenvalues of C_2k(1, 2),
next to the closed forms, plus both inertias of the {1,2} vs {k-2,k-1} pair.

    python3 scripts/sign_table.py --max-k 40 --csv signs.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from circspec.cospectral import distinct_inertia_pair, odd_index_sign_counts, pk_nk_closed_form
from circspec.spectra import inertia


@dataclass
class TableConfig:
    min_k: int = 6
    max_k: int = 40
    csv: str | None = None


def rows(cfg: TableConfig):
    for k in range(cfg.min_k, cfg.max_k + 1):
        p, nk = pk_nk_closed_form(k)
        cp, cn, cz = odd_index_sign_counts(k)
        g1, g2 = distinct_inertia_pair(k)
        yield {"k": k, "P_k": p, "N_k": nk, "counted_pos": cp, "counted_neg": cn,
               "counted_zero": cz, "inertia1": str(inertia(g1)), "inertia2": str(inertia(g2))}


def main(cfg: TableConfig):
    out = open(cfg.csv, "w", newline="") if cfg.csv else sys.stdout
    try:
        w = None
        for row in rows(cfg):
            if w is None:
                w = csv.DictWriter(out, fieldnames=list(row))
                w.writeheader()
            w.writerow(row)
    finally:
        if cfg.csv:
            out.close()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="odd-index sign counts")
    ap.add_argument("--min-k", type=int, default=6)
    ap.add_argument("--max-k", type=int, default=40)
    ap.add_argument("--csv")
    main(TableConfig(**vars(ap.parse_args())))
