"""The Mullineux involution, via crystal paths and via the p-rim deletion algorithm."""

from __future__ import annotations

import random
from typing import Callable

from .crystal import e_tilde, f_tilde, signature
from .errors import DomainError, NotRestrictedError
from .partitions import Partition, is_restricted, p_segments, partition


def _check_restricted(p: int, mu: Partition) -> None:
    if not is_restricted(p, mu):
        raise NotRestrictedError(f"partition {list(mu)} is not {p}-restricted")


def emptying_path(p: int, mu: Partition, choose: Callable[[list[int]], int] = min) -> list[int]:
    """Residues removed by successive e-tilde steps, in order of removal.

    ``choose`` picks a residue among those with epsilon > 0.
    """
    path = []
    while mu:
        options = [i for i in range(p) if signature(p, mu, i).epsilon > 0]
        i = choose(options)
        mu = e_tilde(p, mu, i)
        path.append(i)
    return path


def mullineux_crystal(p: int, mu: Partition, rng: random.Random | None = None) -> Partition:
    """Retrace an emptying path with negated residues.

    By default the smallest removable residue is used at each step; pass ``rng``
    to pick a random admissible residue instead.
    """
    _check_restricted(p, mu)
    choose = min if rng is None else rng.choice
    path = emptying_path(p, tuple(mu), choose)
    lam: Partition = ()
    for i in reversed(path):
        lam = f_tilde(p, lam, -i % p)
        if lam is None:
            raise AssertionError(f"f-tilde undefined while retracing the path of {mu}")
    return lam


def xu_step(p: int, mu: Partition) -> tuple[Partition, int]:
    """Delete p-rim row ends that are not the p-th node of their segment."""
    if not mu:
        raise DomainError("xu_step needs a nonempty partition")
    doomed = set()
    for seg in p_segments(p, mu):
        for pos, (r, c) in enumerate(seg, 1):
            is_row_end = c == mu[r - 1]
            is_pth = pos == p
            if is_row_end and not is_pth:
                doomed.add((r, c))
    parts = list(mu)
    for r, _ in doomed:
        parts[r - 1] -= 1
    try:
        J = partition(parts)
    except DomainError:
        raise AssertionError(f"p-rim deletion of {mu} produced a non-partition {parts}") from None
    return J, len(doomed)


def mullineux_xu(p: int, mu: Partition) -> Partition:
    _check_restricted(p, mu)
    parts = []
    mu = tuple(mu)
    while mu:
        mu, j = xu_step(p, mu)
        parts.append(j)
    try:
        return partition(parts)
    except DomainError:
        raise AssertionError(f"p-rim algorithm produced a non-partition {parts}") from None
