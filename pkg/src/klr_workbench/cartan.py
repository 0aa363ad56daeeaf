"""Residues mod p, the affine Cartan matrix of type A_{p-1}^(1), and KLR Q-polynomials."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ConfigurationError, DomainError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _default_signs(p: int) -> dict[tuple[int, int], int]:
    if p == 2:
        return {(0, 1): 1, (1, 0): -1}
    signs = {}
    for i in range(p):
        signs[(i, (i + 1) % p)] = 1
        signs[(i, (i - 1) % p)] = -1
    return signs


@dataclass(frozen=True)
class Arith:
    """The quantum characteristic p together with a sign choice eps_ij for adjacent i, j."""

    p: int
    signs: Mapping[tuple[int, int], int] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2:
            raise DomainError(f"p must be an integer >= 2, got {self.p!r}")
        if not _is_prime(self.p):
            warnings.warn(
                f"p={self.p} is not prime: KLR combinatorics is defined but has no "
                "symmetric-group interpretation",
                stacklevel=2,
            )
        signs = dict(_default_signs(self.p) if self.signs is None else self.signs)
        for i in range(self.p):
            for j in range(self.p):
                if i != j and cartan_entry(self.p, i, j) < 0:
                    if (i, j) not in signs or (j, i) not in signs:
                        raise ConfigurationError(f"sign table misses adjacent pair ({i},{j})")
                    if signs[(i, j)] * signs[(j, i)] != -1:
                        raise ConfigurationError(
                            f"signs must satisfy eps_ij * eps_ji = -1; got eps_{i}{j}={signs[(i, j)]}, "
                            f"eps_{j}{i}={signs[(j, i)]}"
                        )
        object.__setattr__(self, "signs", signs)

    @property
    def residues(self) -> range:
        return range(self.p)

    def eps(self, i: int, j: int) -> int:
        return self.signs[(i % self.p, j % self.p)]

    def __hash__(self):
        return hash((self.p, tuple(sorted(self.signs.items()))))

    def __eq__(self, other):
        return (
            isinstance(other, Arith)
            and self.p == other.p
            and dict(self.signs) == dict(other.signs)
        )


def parse_signs(p: int, spec: str) -> dict[tuple[int, int], int] | None:
    """Parse ``default`` or ``custom:01=+1,10=-1,...`` (pairs written ``i-j=s`` also accepted)."""
    if spec == "default":
        return None
    if not spec.startswith("custom:"):
        raise ConfigurationError(f"sign convention must be 'default' or 'custom:<table>', got {spec!r}")
    table = {}
    for item in spec[len("custom:"):].split(","):
        item = item.strip()
        if not item:
            continue
        try:
            pair, value = item.split("=")
            if "-" in pair:
                i, j = (int(x) for x in pair.split("-"))
            else:
                i, j = int(pair[0]), int(pair[1:])
            table[(i % p, j % p)] = int(value)
        except ValueError:
            raise ConfigurationError(f"bad sign table entry {item!r}") from None
    return table


def cartan_entry(p: int, i: int, j: int) -> int:
    i, j = i % p, j % p
    if i == j:
        return 2
    if p == 2:
        return -2
    if (i - j) % p in (1, p - 1):
        return -1
    return 0


def cartan_matrix(p: int) -> list[list[int]]:
    return [[cartan_entry(p, i, j) for j in range(p)] for i in range(p)]


@dataclass(frozen=True)
class Content:
    """An element sum_i n_i alpha_i of Q_+ (counts indexed by residue)."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise DomainError(f"content counts must be nonnegative, got {self.counts}")

    @classmethod
    def zero(cls, p: int) -> "Content":
        return cls((0,) * p)

    @classmethod
    def simple(cls, p: int, i: int) -> "Content":
        counts = [0] * p
        counts[i % p] = 1
        return cls(tuple(counts))

    @classmethod
    def from_mapping(cls, p: int, data: Mapping[int, int]) -> "Content":
        counts = [0] * p
        for i, c in data.items():
            counts[int(i) % p] += int(c)
        return cls(tuple(counts))

    @classmethod
    def of_word(cls, p: int, word: Iterable[int]) -> "Content":
        counts = [0] * p
        for i in word:
            counts[i % p] += 1
        return cls(tuple(counts))

    @classmethod
    def parse(cls, p: int, text: str) -> "Content":
        """Parse ``i:count,...``."""
        data = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                i, c = item.split(":")
                data[int(i) % p] = data.get(int(i) % p, 0) + int(c)
            except ValueError:
                raise DomainError(f"bad content entry {item!r}; expected i:count") from None
        return cls.from_mapping(p, data)

    @property
    def p(self) -> int:
        return len(self.counts)

    @property
    def height(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i % len(self.counts)]

    def __add__(self, other: "Content") -> "Content":
        return Content(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "Content") -> "Content":
        return Content(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __mul__(self, k: int) -> "Content":
        return Content(tuple(k * a for a in self.counts))

    __rmul__ = __mul__

    def dominates(self, other: "Content") -> bool:
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def to_json(self) -> dict[str, int]:
        return {str(i): c for i, c in enumerate(self.counts) if c}

    def __str__(self):
        terms = [f"{c}a{i}" if c != 1 else f"a{i}" for i, c in enumerate(self.counts) if c]
        return " + ".join(terms) or "0"


def form(p: int, x: Content, y: Content) -> int:
    """Symmetric bilinear form with (alpha_i, alpha_j) = c_ij."""
    total = 0
    for i, xi in enumerate(x.counts):
        if not xi:
            continue
        for j, yj in enumerate(y.counts):
            if yj:
                total += xi * yj * cartan_entry(p, i, j)
    return total


def null_root(p: int) -> Content:
    return Content((1,) * p)


@dataclass(frozen=True)
class BivariatePoly:
    """A polynomial in F[u, v] with integer coefficients, as {(deg_u, deg_v): coeff}."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, data: Mapping[tuple[int, int], int]) -> "BivariatePoly":
        return cls(tuple(sorted((k, c) for k, c in data.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def swap(self) -> "BivariatePoly":
        """Exchange the roles of u and v."""
        return BivariatePoly.from_dict({(b, a): c for (a, b), c in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.as_dict().get((0, 0), 0)

    def evaluate(self, u, v):
        return sum(c * u**a * v**b for (a, b), c in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms, key=lambda t: (-t[0][0], -t[0][1])):
            mono = "".join(
                s if e == 1 else f"{s}^{e}" for s, e in (("u", a), ("v", b)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def q_poly(a: Arith, i: int, j: int) -> BivariatePoly:
    """Q_ij(u, v): 0 if i = j, 1 if c_ij = 0, eps_ij (u^-c_ij - v^-c_ji) otherwise."""
    p = a.p
    i, j = i % p, j % p
    if i == j:
        return BivariatePoly.from_dict({})
    cij = cartan_entry(p, i, j)
    if cij == 0:
        return BivariatePoly.from_dict({(0, 0): 1})
    e = a.eps(i, j)
    cji = cartan_entry(p, j, i)
    return BivariatePoly.from_dict({(-cij, 0): e, (0, -cji): -e})
