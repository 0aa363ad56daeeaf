"""Positive affine roots, convex preorders given by slope functionals, and root partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from math import gcd
from typing import Sequence

from .cartan import Content, null_root
from .errors import ConfigurationError, DomainError
from .partitions import partitions_of


@dataclass(frozen=True)
class AffineRoot:
    """A positive root, stored by its content; real roots are m*delta plus a proper cyclic interval."""

    content: Content
    imaginary: bool = False

    @property
    def p(self) -> int:
        return self.content.p

    @property
    def height(self) -> int:
        return self.content.height

    @property
    def delta_mult(self) -> int:
        return self.content[0] if not self.imaginary else self.content.height // self.p

    @property
    def finite_part(self) -> tuple[int, ...]:
        """Signed coefficients of alpha_1..alpha_{p-1} once delta_mult * delta is removed."""
        n = self.delta_mult
        return tuple(c - n for c in self.content.counts[1:])

    def to_json(self) -> dict:
        return {"content": list(self.content.counts), "imaginary": self.imaginary}

    def __str__(self):
        if self.imaginary:
            n = self.delta_mult
            return "delta" if n == 1 else f"{n}delta"
        return str(self.content)


def imaginary_root(p: int, n: int = 1) -> AffineRoot:
    return AffineRoot(null_root(p) * n, imaginary=True)


def simple_root(p: int, i: int) -> AffineRoot:
    return AffineRoot(Content.simple(p, i))


def is_positive_root(c: Content) -> bool:
    """True for n*delta (n >= 1) and for real positive roots."""
    m = min(c.counts)
    rest = [x - m for x in c.counts]
    if not any(rest):
        return m >= 1
    if any(x not in (0, 1) for x in rest):
        return False
    # the support of rest must be a proper cyclic interval
    p = len(rest)
    starts = [i for i in range(p) if rest[i] == 1 and rest[i - 1] == 0]
    return len(starts) == 1


def real_roots_up_to(p: int, height_bound: int) -> list[AffineRoot]:
    """All positive real roots of height at most height_bound, by height then content."""
    if height_bound < 1:
        raise DomainError(f"height bound must be >= 1, got {height_bound}")
    out = []
    for m in range(height_bound // p + 1):
        for start in range(p):
            for size in range(1, p):
                if m * p + size > height_bound:
                    break
                counts = [m] * p
                for k in range(size):
                    counts[(start + k) % p] += 1
                out.append(AffineRoot(Content(tuple(counts))))
    return sorted(out, key=lambda r: (r.height, r.content.counts))


@dataclass(frozen=True)
class ConvexPreorder:
    """Compare roots by slope c1(x)/ht(x); c1 is given by weights on alpha_0..alpha_{p-1}."""

    weights: tuple[int, ...]
    height_bound: int

    @classmethod
    def default(cls, p: int, height_bound: int, base: int | None = None, reverse: bool = False) -> "ConvexPreorder":
        """c1(alpha_i) = B^i (or B^(p-i) when reversed) for i >= 1 and c1(delta) = 0."""
        B = base if base is not None else 2 * p * height_bound + 1
        w = [0] + [B ** (p - i if reverse else i) for i in range(1, p)]
        w[0] = -sum(w[1:])
        order = cls(tuple(w), height_bound)
        order.validate(p)
        return order

    def c1(self, x: Content) -> int:
        return sum(w * c for w, c in zip(self.weights, x.counts))

    def validate(self, p: int) -> None:
        """Check alpha_i > delta > alpha_0 and that non-proportional roots never share a slope."""
        if len(self.weights) != p:
            raise ConfigurationError(f"preorder needs {p} weights, got {len(self.weights)}")
        delta = imaginary_root(p)
        for i in range(1, p):
            if self.compare(simple_root(p, i), delta) != 1:
                raise ConfigurationError(f"preorder must put alpha_{i} above delta; weights {self.weights}")
        if self.compare(delta, simple_root(p, 0)) != 1:
            raise ConfigurationError(f"preorder must put delta above alpha_0; weights {self.weights}")
        seen: dict = {}
        for root in real_roots_up_to(p, self.height_bound) + [delta]:
            h = root.height
            key = _reduced_fraction(self.c1(root.content), h)
            prim = _primitive(root.content)
            if key in seen and seen[key] != prim:
                raise ConfigurationError(
                    f"slope collision between non-proportional roots {seen[key]} and {prim.counts}; "
                    f"choose different weights than {self.weights}"
                )
            seen.setdefault(key, prim)

    def compare(self, x: AffineRoot, y: AffineRoot) -> int:
        """1 if x > y, -1 if x < y, 0 if equivalent (proportional)."""
        lhs = self.c1(x.content) * y.height
        rhs = self.c1(y.content) * x.height
        if lhs != rhs:
            return 1 if lhs > rhs else -1
        if _primitive(x.content) != _primitive(y.content):
            raise ConfigurationError(f"non-proportional roots {x} and {y} share a slope under weights {self.weights}")
        return 0

    def to_json(self) -> dict:
        return {"weights": list(self.weights), "height_bound": self.height_bound}


def _reduced_fraction(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b) or 1
    return (a // g, b // g)


def _primitive(c: Content) -> Content:
    g = 0
    for x in c.counts:
        g = gcd(g, x)
    return Content(tuple(x // g for x in c.counts)) if g else c


def preorder_cmp(order: ConvexPreorder, r1: AffineRoot, r2: AffineRoot) -> str:
    return {1: "Greater", -1: "Less", 0: "Equivalent"}[order.compare(r1, r2)]


Multipartition = tuple


def multipartitions(m: int, l: int) -> list[Multipartition]:
    """All l-multipartitions of m."""
    if l == 0:
        return [()] if m == 0 else []
    out = []
    for first in range(m, -1, -1):
        for head in partitions_of(first):
            for tail in multipartitions(m - first, l - 1):
                out.append((head,) + tail)
    return out


@dataclass(frozen=True)
class RootPartition:
    """Multiplicities of real roots (in decreasing preorder) plus an (p-1)-multipartition at delta."""

    real: tuple[tuple[AffineRoot, int], ...]
    multipartition: Multipartition
    left_count: int

    @property
    def imaginary_mult(self) -> int:
        return sum(sum(mu) for mu in self.multipartition)

    def total(self, p: int) -> Content:
        acc = null_root(p) * self.imaginary_mult
        for root, m in self.real:
            acc = acc + root.content * m
        return acc

    def to_json(self) -> dict:
        def side(items):
            return [{"root": list(r.content.counts), "mult": m} for r, m in items]

        return {
            "left": side(self.real[: self.left_count]),
            "imaginary": [list(mu) for mu in self.multipartition],
            "right": side(self.real[self.left_count:]),
        }


def root_partitions(p: int, alpha: Content, order: ConvexPreorder | None = None) -> list[RootPartition]:
    """Every way of writing alpha as a sum of real roots plus m*delta with an l-multipartition of m."""
    if alpha.p != p:
        raise DomainError(f"content {alpha} has {alpha.p} residues, expected {p}")
    H = alpha.height
    if H == 0:
        return [RootPartition((), ((),) * (p - 1), 0)]
    if order is None:
        order = ConvexPreorder.default(p, H)
    elif order.height_bound < H:
        raise ConfigurationError(f"preorder height bound {order.height_bound} is below ht(alpha) = {H}")
    roots = [r for r in real_roots_up_to(p, H) if alpha.dominates(r.content)]
    roots.sort(key=cmp_to_key(order.compare), reverse=True)
    delta = imaginary_root(p)
    above = [order.compare(r, delta) > 0 for r in roots]

    found: list[tuple[tuple[int, ...], int]] = []

    def search(k: int, remaining: Content, mults: list[int]):
        if k == len(roots):
            m = remaining[0]
            if remaining == null_root(p) * m:
                found.append((tuple(mults), m))
            return
        root = roots[k]
        c = 0
        rem = remaining
        while True:
            mults.append(c)
            search(k + 1, rem, mults)
            mults.pop()
            if not rem.dominates(root.content):
                break
            rem = rem - root.content
            c += 1

    search(0, alpha, [])
    out = []
    for mults, m in sorted(found, key=lambda x: (tuple(-c for c in x[0]), x[1])):
        real = tuple((r, c) for r, c in zip(roots, mults) if c)
        left = sum(1 for (r, c), up in zip(zip(roots, mults), above) if c and up)
        for mp in multipartitions(m, p - 1):
            out.append(RootPartition(real, mp, left))
    return out


def count_root_partitions_oracle(p: int, alpha: Content) -> int:
    """Coefficient of x^alpha in prod_rho 1/(1 - x^rho) * sum_m P_l(m) x^(m delta)."""
    target = alpha.counts
    box = sorted(product(*(range(t + 1) for t in target)), key=sum)
    series = dict.fromkeys(box, 0)
    series[box[0]] = 1
    for root in real_roots_up_to(p, max(alpha.height, 1)):
        c = root.content.counts
        for e in box:
            prev = tuple(a - b for a, b in zip(e, c))
            if min(prev) >= 0:
                series[e] += series[prev]
    total = 0
    for m in range(min(target) + 1):
        rest = tuple(t - m for t in target)
        total += series[rest] * len(multipartitions(m, p - 1))
    return total


def positive_roots_up_to(p: int, height_bound: int) -> list[AffineRoot]:
    return real_roots_up_to(p, height_bound) + [imaginary_root(p, n) for n in range(1, height_bound // p + 1)]


def convexity_violations(order: ConvexPreorder, roots: Sequence[AffineRoot]) -> list[tuple[AffineRoot, AffineRoot]]:
    """Pairs beta <= gamma with beta+gamma a root but beta+gamma not between them."""
    bad = []
    for x in roots:
        for y in roots:
            s = x.content + y.content
            if not is_positive_root(s):
                continue
            m = min(s.counts)
            z = AffineRoot(s, imaginary=all(c == m for c in s.counts))
            lo, hi = (x, y) if order.compare(x, y) <= 0 else (y, x)
            if order.compare(lo, z) > 0 or order.compare(z, hi) > 0:
                bad.append((x, y))
    return bad
