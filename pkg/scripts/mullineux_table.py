"""Tabulate the Mullineux involution on restricted partitions, checking both algorithms agree."""

import argparse
import csv
import sys
from dataclasses import dataclass

from klr_workbench.mullineux import mullineux_crystal, mullineux_xu
from klr_workbench.partitions import format_partition, restricted_partitions


@dataclass(frozen=True)
class TableConfig:
    p: int = 3
    n_max: int = 8


def rows(cfg: TableConfig):
    for n in range(1, cfg.n_max + 1):
        for mu in restricted_partitions(cfg.p, n):
            xu, cr = mullineux_xu(cfg.p, mu), mullineux_crystal(cfg.p, mu)
            yield n, format_partition(mu), format_partition(xu), xu == cr, xu == mu


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=TableConfig.p)
    ap.add_argument("--n-max", type=int, default=TableConfig.n_max)
    args = ap.parse_args()
    cfg = TableConfig(args.p, args.n_max)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "mu", "M(mu)", "algorithms_agree", "fixed_point"])
    ok = True
    for row in rows(cfg):
        out.writerow(row)
        ok &= row[3]
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
