"""Graded dimensions of the blocks of the symmetric group in each size, with the n! check."""

import argparse
import sys
from dataclasses import dataclass
from math import factorial

from klr_workbench.dims import block_contents, block_graded_dim


@dataclass(frozen=True)
class BlockConfig:
    p: int = 3
    n_max: int = 7


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=BlockConfig.p)
    ap.add_argument("--n-max", type=int, default=BlockConfig.n_max)
    args = ap.parse_args()
    cfg = BlockConfig(args.p, args.n_max)
    ok = True
    for n in range(1, cfg.n_max + 1):
        total = 0
        for alpha in block_contents(cfg.p, n):
            dim = block_graded_dim(cfg.p, alpha)
            total += dim.at_one()
            print(f"n={n} alpha={alpha} dim_q={dim}")
        ok &= total == factorial(n)
        print(f"n={n} total={total} n!={factorial(n)}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
