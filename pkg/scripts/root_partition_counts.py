"""Count root partitions of every content up to a height, against the generating-function oracle."""

import argparse
import sys
from dataclasses import dataclass
from itertools import product

from klr_workbench.cartan import Content
from klr_workbench.roots import count_root_partitions_oracle, root_partitions


@dataclass(frozen=True)
class CountConfig:
    p: int = 3
    height: int = 5


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=CountConfig.p)
    ap.add_argument("--height", type=int, default=CountConfig.height)
    args = ap.parse_args()
    cfg = CountConfig(args.p, args.height)
    ok = True
    for counts in sorted(product(range(cfg.height + 1), repeat=cfg.p), key=lambda c: (sum(c), c)):
        if not 1 <= sum(counts) <= cfg.height:
            continue
        alpha = Content(counts)
        got = len(root_partitions(cfg.p, alpha))
        expected = count_root_partitions_oracle(cfg.p, alpha)
        ok &= got == expected
        print(f"{list(counts)}\t{got}\t{'ok' if got == expected else f'oracle {expected}'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
