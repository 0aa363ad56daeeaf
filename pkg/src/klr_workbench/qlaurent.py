"""Exact Laurent polynomials in q with integer coefficients.

All graded dimensions and multiplicities in the package live in Z[q, q^-1].
Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An immutable element of Z[q, q^-1], stored as {exponent: coefficient}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by q^m."""
        return LaurentPoly({e + m: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, q):
        return sum(c * q**e for e, c in self._terms.items())

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division by a divisor whose top coefficient is +-1.

        Returns (quotient, remainder) with remainder of degree span smaller
        than the divisor's.
        """
        divisor = LaurentPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = divisor.max_degree()
        lead_c = divisor.coeff(lead_e)
        span = lead_e - divisor.min_degree()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - min(rem) < span:
                break
            c = rem[top]
            if c % lead_c:
                break
            qc = c // lead_c
            qe = top - lead_e
            quot[qe] = quot.get(qe, 0) + qc
            for e, dc in divisor._terms.items():
                k = e + qe
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor} in Z[q, q^-1]")
        return quot

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def shift(a: LaurentPoly, m: int) -> LaurentPoly:
    return a.shift(m)


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def quantum_int(n: int) -> LaurentPoly:
    """[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n), with [-n]_q = -[n]_q."""
    if n == 0:
        return ZERO
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_int(k)
    return result


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[int, int] = {}
    for poly in polys:
        for e, c in poly._terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)
