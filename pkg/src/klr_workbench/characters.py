"""Formal characters: quantum shuffles, column characters, the imaginary Jacobi-Trudi determinant
and Gelfand-Graev coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .cartan import Arith, Content, cartan_entry
from .errors import DomainError
from .klrmod import canonical_base_word, character, component_module, word_graph_component
from .partitions import Partition, transpose
from .qlaurent import ONE, LaurentPoly, quantum_factorial

Word = tuple


class FormalCharacter:
    """A finitely supported map word -> LaurentPoly, all words sharing one content."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Mapping[Word, LaurentPoly] | None = None):
        self.p = p
        clean = {}
        for w, c in (coeffs or {}).items():
            c = LaurentPoly.coerce(c)
            if not c.is_zero():
                clean[tuple(x % p for x in w)] = c
        contents = {Content.of_word(p, w) for w in clean}
        if len(contents) > 1:
            raise DomainError(f"character mixes contents {sorted(str(c) for c in contents)}")
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def word(cls, p: int, w: Sequence[int], coeff=1) -> "FormalCharacter":
        return cls(p, {tuple(w): LaurentPoly.coerce(coeff)})

    @classmethod
    def unit(cls, p: int) -> "FormalCharacter":
        return cls(p, {(): ONE})

    @property
    def content(self) -> Content | None:
        for w in self.coeffs:
            return Content.of_word(self.p, w)
        return None

    def __getitem__(self, w: Sequence[int]) -> LaurentPoly:
        return self.coeffs.get(tuple(x % self.p for x in w), LaurentPoly())

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return FormalCharacter(self.p, out)

    def __neg__(self):
        return FormalCharacter(self.p, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FormalCharacter":
        c = LaurentPoly.coerce(c)
        return FormalCharacter(self.p, {w: c * x for w, x in self.coeffs.items()})

    def at_one(self) -> dict[Word, int]:
        return {w: c.at_one() for w, c in self.coeffs.items()}

    def to_json(self) -> list[dict]:
        return [{"word": list(w), "coeff": c.to_json()} for w, c in self.coeffs.items()]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self.coeffs.items():
            label = "(" + "".join(map(str, w)) + ")" if all(x < 10 for x in w) else str(list(w))
            parts.append(label if c == 1 else f"({c}){label}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FormalCharacter({self.p}, {self.coeffs!r})"


def shuffle_words(p: int, u: Word, v: Word) -> dict[Word, LaurentPoly]:
    """Quantum shuffle of two words.

    Writing u = u'a and v = v'b:
    u o v = (u' o v) a * q^{-(alpha_a, cont v)} + (u o v') b.
    """
    u, v = tuple(u), tuple(v)

    @lru_cache(maxsize=None)
    def pairing_with_prefix(letter: int, j: int) -> int:
        return -sum(cartan_entry(p, letter, x) for x in v[:j])

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> tuple[tuple[Word, LaurentPoly], ...]:
        if i == 0:
            return ((v[:j], ONE),)
        if j == 0:
            return ((u[:i], ONE),)
        out: dict[Word, LaurentPoly] = {}
        a = u[i - 1]
        shift = pairing_with_prefix(a, j)
        for w, c in go(i - 1, j):
            key = w + (a,)
            out[key] = out.get(key, LaurentPoly()) + c.shift(shift)
        b = v[j - 1]
        for w, c in go(i, j - 1):
            key = w + (b,)
            out[key] = out.get(key, LaurentPoly()) + c
        return tuple(out.items())

    return dict(go(len(u), len(v)))


def shuffle(x: FormalCharacter, y: FormalCharacter) -> FormalCharacter:
    if x.p != y.p:
        raise DomainError(f"cannot shuffle characters for p={x.p} and p={y.p}")
    out: dict[Word, LaurentPoly] = {}
    for u, cu in x:
        for v, cv in y:
            for w, c in shuffle_words(x.p, u, v).items():
                out[w] = out.get(w, LaurentPoly()) + cu * cv * c
    return FormalCharacter(x.p, out)


def shuffle_all(p: int, chars: Iterable[FormalCharacter]) -> FormalCharacter:
    acc = FormalCharacter.unit(p)
    for ch in chars:
        acc = shuffle(acc, ch)
    return acc


def _check_color(a: Arith, i: int) -> None:
    if not 1 <= i <= a.p - 1:
        raise DomainError(f"color must satisfy 1 <= i <= p-1 = {a.p - 1}, got {i}")


def column_char(a: Arith, n: int, i: int = 1) -> FormalCharacter:
    """Character of the homogeneous module on the word-graph component of (base word)^n, in degree 0."""
    _check_color(a, i)
    if n < 0:
        raise DomainError(f"column length must be >= 0, got {n}")
    if n == 0:
        return FormalCharacter.unit(a.p)
    seed = canonical_base_word(a.p, i) * n
    module = component_module(a, word_graph_component(a, seed))
    return FormalCharacter(a.p, character(module))


def _column_entry(a: Arith, m: int, i: int, cache: dict) -> FormalCharacter:
    if m < 0:
        return FormalCharacter(a.p)
    if m not in cache:
        cache[m] = column_char(a, m, i)
    return cache[m]


def shuffle_determinant(a: Arith, lam: Partition, i: int = 1) -> FormalCharacter:
    """det(column_char(lam_r - r + s))_{r,s}, expanded along the last row."""
    size = len(lam)
    if size == 0:
        return FormalCharacter.unit(a.p)
    cache: dict = {}
    matrix = [[_column_entry(a, lam[r] - r + s, i, cache) for s in range(size)] for r in range(size)]

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> FormalCharacter:
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        last = rows[-1]
        acc = FormalCharacter(a.p)
        for k, col in enumerate(cols):
            entry = matrix[last][col]
            if entry.is_zero():
                continue
            minor = det(rows[:-1], cols[:k] + cols[k + 1:])
            term = shuffle(minor, entry)
            sign = (len(rows) - 1 + k) % 2
            acc = acc - term if sign else acc + term
        return acc

    return det(tuple(range(size)), tuple(range(size)))


def jacobi_trudi(a: Arith, mu: Partition, i: int = 1) -> FormalCharacter:
    """Shuffle determinant of column characters indexed by the transpose of mu."""
    _check_color(a, i)
    return shuffle_determinant(a, transpose(tuple(mu)), i)


def gg_word(base: Sequence[int], composition: Sequence[int]) -> Word:
    """Concatenate, for each part t, the base word with every letter repeated t times."""
    out = []
    for t in composition:
        if t < 0:
            raise DomainError(f"composition entries must be >= 0, got {list(composition)}")
        for letter in base:
            out.extend([letter] * t)
    return tuple(out)


def gg_constant(p: int, composition: Sequence[int]) -> LaurentPoly:
    """(prod [mu_k]_q!)^p."""
    c = ONE
    for t in composition:
        c = c * quantum_factorial(t)
    return c ** p


def gg_coefficient(a: Arith, V: FormalCharacter, base: Sequence[int], composition: Sequence[int]) -> LaurentPoly:
    p = a.p
    base = tuple(x % p for x in base)
    if len(base) != p:
        raise DomainError(f"base word must have length p={p}, got {list(base)}")
    cont = V.content
    n = sum(composition)
    if cont is not None and cont != Content.of_word(p, base) * n:
        raise DomainError(f"composition {list(composition)} is incompatible with the character content {cont}")
    raw = V[gg_word(base, composition)]
    c = gg_constant(p, composition)
    try:
        return raw.exact_div(c)
    except ArithmeticError:
        raise DomainError(
            f"coefficient {raw} of {list(gg_word(base, composition))} is not divisible by {c}"
        ) from None


def compositions(n: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of n into the given number of parts."""
    if parts == 0:
        return [()] if n == 0 else []
    return [(k,) + rest for k in range(n, -1, -1) for rest in compositions(n - k, parts - 1)]
