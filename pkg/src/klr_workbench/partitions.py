"""Partitions, nodes, residues and rims.

Partitions are plain tuples of positive weakly decreasing ints; nodes are
1-based ``(row, col)`` tuples. Combinatorial functions take the integer p.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable

from .cartan import Content
from .errors import DomainError

Partition = tuple
Node = tuple


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a sequence of parts (trailing zeros dropped)."""
    parts = [int(x) for x in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(x <= 0 for x in parts):
        raise DomainError(f"partition parts must be positive, got {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``3,2,2,1`` or exponent notation ``3^2,1^3``; empty string or ``0`` is the empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0", "-", "empty"):
        return ()
    parts = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "^" in item:
                base, exp = item.split("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(item))
        except ValueError:
            raise DomainError(f"bad partition entry {item!r} in {text!r}") from None
    return partition(parts)


def size(mu: Partition) -> int:
    return sum(mu)


def nodes(mu: Partition) -> list[Node]:
    return [(r, c) for r, row in enumerate(mu, 1) for c in range(1, row + 1)]


def part(mu: Partition, r: int) -> int:
    return mu[r - 1] if 1 <= r <= len(mu) else 0


def contains(mu: Partition, node: Node) -> bool:
    r, c = node
    return r >= 1 and c >= 1 and part(mu, r) >= c


def is_restricted(p: int, mu: Partition) -> bool:
    padded = list(mu) + [0]
    return all(padded[k] - padded[k + 1] < p for k in range(len(mu)))


def residue(p: int, node: Node) -> int:
    r, c = node
    return (c - r) % p


def content(p: int, mu: Partition) -> Content:
    counts = [0] * p
    for r, row in enumerate(mu, 1):
        for c in range(1, row + 1):
            counts[(c - r) % p] += 1
    return Content(tuple(counts))


def addable_nodes(mu: Partition, p: int | None = None, i: int | None = None) -> list[Node]:
    """Addable nodes left to right; with ``p`` and ``i`` only the i-nodes are kept."""
    out = []
    for r in range(len(mu) + 1, 0, -1):
        c = part(mu, r) + 1
        if r == 1 or part(mu, r - 1) >= c:
            out.append((r, c))
    if i is not None:
        out = [A for A in out if residue(p, A) == i % p]
    return out


def removable_nodes(mu: Partition, p: int | None = None, i: int | None = None) -> list[Node]:
    """Removable nodes left to right; with ``p`` and ``i`` only the i-nodes are kept."""
    out = []
    for r in range(len(mu), 0, -1):
        c = mu[r - 1]
        if part(mu, r + 1) < c:
            out.append((r, c))
    if i is not None:
        out = [A for A in out if residue(p, A) == i % p]
    return out


def remove_node(mu: Partition, node: Node) -> Partition:
    r, c = node
    if part(mu, r) != c or part(mu, r + 1) >= c:
        raise DomainError(f"node {node} is not removable from {mu}")
    parts = list(mu)
    parts[r - 1] -= 1
    return partition(parts)


def add_node(mu: Partition, node: Node) -> Partition:
    r, c = node
    if part(mu, r) != c - 1 or (r > 1 and part(mu, r - 1) < c):
        raise DomainError(f"node {node} is not addable to {mu}")
    parts = list(mu)
    if r == len(parts) + 1:
        parts.append(1)
    else:
        parts[r - 1] += 1
    return tuple(parts)


def transpose(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for x in mu if x >= c) for c in range(1, mu[0] + 1))


def rim(mu: Partition) -> list[Node]:
    """Rim nodes read along the rim from bottom-left to top-right."""
    out = []
    for r in range(len(mu), 0, -1):
        start = max(1, part(mu, r + 1))
        out.extend((r, c) for c in range(start, mu[r - 1] + 1))
    return out


def p_segments(p: int, mu: Partition) -> list[list[Node]]:
    if not mu:
        raise DomainError("p-segments need a nonempty partition")
    path = rim(mu)
    segments = []
    k = 0
    while k < len(path):
        seg = path[k:k + p]
        segments.append(seg)
        right = max(c for _, c in seg)
        k += len(seg)
        while k < len(path) and path[k][1] <= right:
            k += 1
    return segments


def hook_length(mu: Partition, node: Node) -> int:
    r, c = node
    return part(mu, r) - c + transpose(mu)[c - 1] - r + 1


def count_standard(mu: Partition) -> int:
    """Number of standard tableaux by the hook length formula."""
    n = size(mu)
    prod = 1
    conj = transpose(mu)
    for r, c in nodes(mu):
        prod *= mu[r - 1] - c + conj[c - 1] - r + 1
    return factorial(n) // prod


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def restricted_partitions(p: int, n: int) -> list[Partition]:
    return [mu for mu in partitions_of(n) if is_restricted(p, mu)]


def partitions_with_content(p: int, alpha: Content) -> list[Partition]:
    return [mu for mu in partitions_of(alpha.height) if content(p, mu) == alpha]


def format_partition(mu: Partition) -> str:
    """Exponent notation, e.g. ``(3^2,2,1^2)``; the empty partition is ``()``."""
    if not mu:
        return "()"
    out = []
    k = 0
    while k < len(mu):
        run = 1
        while k + run < len(mu) and mu[k + run] == mu[k]:
            run += 1
        out.append(str(mu[k]) if run == 1 else f"{mu[k]}^{run}")
        k += run
    return "(" + ",".join(out) + ")"

