"""Tableaux, residue sequences, the permutations w^T, Bruhat order and tableau degrees.

Permutations are tuples in one-line notation with 1-based values:
``w[k - 1] == w(k)``. Symmetric-group elements act on tableaux through their
entries, so ``w^T`` (defined by ``w^T T^mu = T``) is the row reading word of T.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError
from .partitions import (
    Node,
    Partition,
    addable_nodes,
    partition,
    remove_node,
    removable_nodes,
    residue,
)

Permutation = tuple
Word = tuple


@dataclass(frozen=True)
class Tableau:
    """An insertion of 1..n into the nodes of a Young diagram, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        partition(len(row) for row in rows)
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError(f"tableau entries must be 1..n without repeats, got {rows}")

    @classmethod
    def from_entries(cls, shape: Partition, entries: dict[Node, int]) -> "Tableau":
        return cls(tuple(tuple(entries[(r, c)] for c in range(1, row + 1)) for r, row in enumerate(shape, 1)))

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, node: Node) -> int:
        r, c = node
        return self.rows[r - 1][c - 1]

    def position(self, k: int) -> Node:
        for r, row in enumerate(self.rows, 1):
            for c, x in enumerate(row, 1):
                if x == k:
                    return (r, c)
        raise KeyError(k)

    def positions(self) -> dict[int, Node]:
        return {x: (r, c) for r, row in enumerate(self.rows, 1) for c, x in enumerate(row, 1)}

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_row_strict(self) -> bool:
        return all(row[k] < row[k + 1] for row in self.rows for k in range(len(row) - 1))

    def is_column_strict(self) -> bool:
        return all(
            self.rows[r][c] < self.rows[r + 1][c]
            for r in range(len(self.rows) - 1)
            for c in range(len(self.rows[r + 1]))
        )

    def is_standard(self) -> bool:
        return self.is_row_strict() and self.is_column_strict()

    def act(self, w: Permutation) -> "Tableau":
        """Apply w to every entry."""
        return Tableau(tuple(tuple(w[x - 1] for x in row) for row in self.rows))

    def swap(self, r: int) -> "Tableau":
        """s_r T: exchange the entries r and r+1."""
        def f(x):
            return r + 1 if x == r else r if x == r + 1 else x
        return Tableau(tuple(tuple(f(x) for x in row) for row in self.rows))

    def restrict(self) -> "Tableau":
        """T_{<n}: remove the node holding n."""
        n = self.n
        return Tableau(tuple(row for row in (tuple(x for x in row if x != n) for row in self.rows) if row))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def leading_tableau(mu: Partition) -> Tableau:
    rows = []
    k = 1
    for row in mu:
        rows.append(tuple(range(k, k + row)))
        k += row
    return Tableau(tuple(rows))


def column_reading_tableau(mu: Partition) -> Tableau:
    """Entries 1..n filled down the columns, left to right."""
    entries = {}
    k = 1
    for c in range(1, (mu[0] if mu else 0) + 1):
        for r in range(1, len(mu) + 1):
            if mu[r - 1] >= c:
                entries[(r, c)] = k
                k += 1
    return Tableau.from_entries(mu, entries)


@lru_cache(maxsize=None)
def _standard_fillings(mu: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    if not mu:
        return ((),)
    n = sum(mu)
    out = []
    for r, c in removable_nodes(mu):
        smaller = remove_node(mu, (r, c))
        for rows in _standard_fillings(smaller):
            rows = [list(row) for row in rows]
            if r > len(rows):
                rows.append([])
            rows[r - 1].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def standard_tableaux(mu: Partition) -> list[Tableau]:
    """St(mu), sorted lexicographically by row reading word."""
    tabs = [Tableau(rows) for rows in _standard_fillings(tuple(mu))]
    return sorted(tabs, key=Tableau.reading_word)


def residue_sequence(p: int, t: Tableau) -> Word:
    pos = t.positions()
    return tuple(residue(p, pos[k]) for k in range(1, t.n + 1))


# permutations


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """(u w)(k) = u(w(k))."""
    return tuple(u[x - 1] for x in w)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for k, x in enumerate(w, 1):
        out[x - 1] = k
    return tuple(out)


def simple_transposition(n: int, r: int) -> Permutation:
    w = list(range(1, n + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def length(w: Permutation) -> int:
    """Coxeter length = number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def from_word(n: int, word: Iterable[int]) -> Permutation:
    """s_{m_1} s_{m_2} ... s_{m_l} as a permutation of 1..n."""
    w = identity(n)
    for m in word:
        w = compose(w, simple_transposition(n, m))
    return w


def reduced_word(w: Permutation) -> list[int]:
    """The lexicographically smallest reduced word of w.

    Greedy: the smallest left descent s_m (value m+1 sits before value m)
    starts a lex-minimal reduced word, then recurse on s_m w.
    """
    w = list(w)
    where = {x: k for k, x in enumerate(w)}
    word = []
    while True:
        for m in range(1, len(w)):
            if where[m + 1] < where[m]:
                break
        else:
            return word
        word.append(m)
        a, b = where[m], where[m + 1]
        w[a], w[b] = m + 1, m
        where[m], where[m + 1] = b, a


def tableau_permutation(t: Tableau) -> tuple[Permutation, list[int]]:
    """w^T with w^T T^mu = T, together with its lex-smallest reduced word."""
    w = t.reading_word()
    return w, reduced_word(w)


def bruhat_leq_perm(u: Permutation, w: Permutation) -> bool:
    """Bruhat order via the tableau criterion on sorted prefixes."""
    if len(u) != len(w):
        raise DomainError(f"permutations of different degrees {len(u)} and {len(w)}")
    for k in range(1, len(u)):
        a = sorted(u[:k])
        b = sorted(w[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def bruhat_leq(s: Tableau, t: Tableau) -> bool:
    if s.shape != t.shape:
        raise DomainError(f"Bruhat order compares tableaux of one shape, got {s.shape} and {t.shape}")
    return bruhat_leq_perm(s.reading_word(), t.reading_word())


def node_degree(p: int, mu: Partition, node: Node) -> int:
    """d_A(mu): addable minus removable i-nodes strictly left of A, i = res A."""
    if node not in removable_nodes(mu):
        raise DomainError(f"node {node} is not removable for {mu}")
    i = residue(p, node)
    col = node[1]
    add = sum(1 for A in addable_nodes(mu, p, i) if A[1] < col)
    rem = sum(1 for A in removable_nodes(mu, p, i) if A[1] < col)
    return add - rem


def tableau_degree(p: int, t: Tableau) -> int:
    if not t.is_standard():
        raise DomainError(f"tableau degree needs a standard tableau, got {t.rows}")
    deg = 0
    while t.n:
        mu = t.shape
        deg += node_degree(p, mu, t.position(t.n))
        t = t.restrict()
    return deg


def is_p_standard(p: int, t: Tableau) -> bool:
    """Standard, and along every hook of length p the arm end holds the smaller entry.

    For nodes (r, s) and (r', s') with r > r', s < s' and r - r' + s' - s + 1 = p
    we require T(r', s') < T(r, s).
    """
    if not t.is_standard():
        return False
    pos = t.positions()
    for a, (r, s) in pos.items():
        for b, (r2, s2) in pos.items():
            if r > r2 and s < s2 and r - r2 + s2 - s + 1 == p and not b < a:
                return False
    return True


def apply_word_to_residues(word: Sequence[int], letters: Sequence[int]) -> Word:
    """Act by s_{m_1} ... s_{m_l} on a residue word by place permutation (rightmost first)."""
    out = list(letters)
    for m in reversed(list(word)):
        out[m - 1], out[m] = out[m], out[m - 1]
    return tuple(out)
