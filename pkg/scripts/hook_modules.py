"""Build every hook module for the given p, check the relations and print characters."""

import argparse
import sys
from dataclasses import dataclass

from klr_workbench.cartan import Arith
from klr_workbench.characters import FormalCharacter
from klr_workbench.klrmod import character, check_relations, hook_module


@dataclass(frozen=True)
class HookConfig:
    p: int = 5


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=HookConfig.p)
    cfg = HookConfig(ap.parse_args().p)
    a = Arith(cfg.p)
    ok = True
    for i in range(1, cfg.p):
        m = hook_module(a, i)
        report = check_relations(m)
        ok &= report.passed
        print(f"color {i}: dim {m.dim}, relations {'pass' if report.passed else 'FAIL'} ({len(report.checks)} checks)")
        print(f"  ch = {FormalCharacter(cfg.p, character(m))}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
