"""Garnir belts, bricks, brick permutations and symbolic Garnir elements."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .cartan import cartan_entry
from .errors import DomainError
from .partitions import Node, Partition, contains, part
from .tableaux import (
    Permutation,
    Tableau,
    leading_tableau,
    length,
    reduced_word,
    residue_sequence,
    tableau_degree,
    tableau_permutation,
)


def garnir_nodes(mu: Partition) -> list[Node]:
    return [(r, s) for r in range(1, len(mu)) for s in range(1, mu[r] + 1)]


def psi_degrees(p: int, word: tuple[int, ...], letters: list[int]) -> tuple[list[int], tuple[int, ...]]:
    """Degrees of psi_{m_l}, ..., psi_{m_1} applied in turn (rightmost first) starting at ``word``.

    Returns the list of degrees in application order and the final word.
    """
    word = list(word)
    degs = []
    for m in reversed(letters):
        degs.append(-cartan_entry(p, word[m - 1], word[m]))
        word[m - 1], word[m] = word[m], word[m - 1]
    return degs, tuple(word)


@dataclass(frozen=True)
class GarnirData:
    p: int
    shape: Partition
    node: Node
    belt: tuple[Node, ...]
    u: int
    v: int
    garnir_tableau: Tableau
    bricks: tuple[tuple[Node, ...], ...]
    f: int
    d: int
    minimal_tableau: Tableau
    brick_generators: tuple[Permutation, ...]
    coset_reps: tuple[tuple[int, ...], ...]
    gar_set: tuple[Tableau, ...]

    @property
    def k(self) -> int:
        return len(self.bricks)

    def coset_rep_words(self) -> list[list[int]]:
        """Reduced words of the coset representatives in the brick generators."""
        return [reduced_word(w) for w in self.coset_reps]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "node": list(self.node),
            "belt": [list(A) for A in self.belt],
            "u": self.u,
            "v": self.v,
            "garnir_tableau": self.garnir_tableau.to_json(),
            "bricks": [[list(A) for A in brick] for brick in self.bricks],
            "k": self.k,
            "f": self.f,
            "d": self.d,
            "minimal_tableau": self.minimal_tableau.to_json(),
            "brick_generators": [list(w) for w in self.brick_generators],
            "coset_reps": self.coset_rep_words(),
            "gar_set": [t.to_json() for t in self.gar_set],
        }


def _check_garnir_node(mu: Partition, A: Node) -> None:
    r, s = A
    if not (contains(mu, A) and contains(mu, (r + 1, s))):
        raise DomainError(f"node {A} is not a Garnir node of {list(mu)}: needs ({r + 1},{s}) in the diagram")


def brick_permutation(n: int, d: int, p: int, t: int) -> Permutation:
    """w_t: the product of transpositions (a, a+p) for a = d+(t-1)p .. d+tp-1."""
    w = list(range(1, n + 1))
    for a in range(d + (t - 1) * p, d + t * p):
        w[a - 1], w[a + p - 1] = w[a + p - 1], w[a - 1]
    return tuple(w)


def _place_blocks(base: dict[Node, int], bricks, d: int, p: int, assignment) -> Tableau:
    """Put value block assignment[t] (0-based) into brick position t."""
    entries = dict(base)
    for pos, brick in enumerate(bricks):
        start = d + assignment[pos] * p
        for offset, node in enumerate(brick):
            entries[node] = start + offset
    return entries


def garnir_data(p: int, mu: Partition, A: Node) -> GarnirData:
    mu = tuple(mu)
    _check_garnir_node(mu, A)
    r, s = A
    n = sum(mu)
    tmu = leading_tableau(mu)
    top = [(r, c) for c in range(s, mu[r - 1] + 1)]
    bottom = [(r + 1, c) for c in range(1, s + 1)]
    belt = tuple(bottom + top)
    u, v = tmu.entry(A), tmu.entry((r + 1, s))

    entries = {(rr, cc): tmu.entry((rr, cc)) for rr in range(1, len(mu) + 1) for cc in range(1, part(mu, rr) + 1)}
    for value, node in enumerate(belt, u):
        entries[node] = value
    garnir = Tableau.from_entries(mu, entries)

    bottom_bricks = []
    c = s
    while c - p + 1 >= 1:
        bottom_bricks.append(tuple((r + 1, x) for x in range(c - p + 1, c + 1)))
        c -= p
    bottom_bricks.reverse()
    top_bricks = []
    c = s
    while c + p - 1 <= mu[r - 1]:
        top_bricks.append(tuple((r, x) for x in range(c, c + p)))
        c += p
    bricks = tuple(bottom_bricks + top_bricks)
    k, f = len(bricks), len(top_bricks)
    d = min(garnir.entry(node) for node in bricks[0]) if bricks else u

    base = {node: garnir.entry(node) for node in entries}
    # T^A: the f smallest value blocks sit in the top-row bricks
    t_assign = list(range(f, k)) + list(range(f))
    minimal = Tableau.from_entries(mu, _place_blocks(base, bricks, d, p, t_assign))

    best: dict[frozenset, tuple[int, tuple[int, ...]]] = {}
    for w in permutations(range(1, k + 1)):
        bottom_blocks = frozenset(w[t_assign[pos]] for pos in range(k - f))
        key = (length(w), w)
        if bottom_blocks not in best or key < best[bottom_blocks]:
            best[bottom_blocks] = key
    reps = sorted((w for _, w in best.values()), key=lambda w: (length(w), w))
    gar = tuple(
        Tableau.from_entries(mu, _place_blocks(base, bricks, d, p, [w[t_assign[pos]] - 1 for pos in range(k)]))
        for w in reps
    )
    gens = tuple(brick_permutation(n, d, p, t) for t in range(1, k))
    return GarnirData(p, mu, A, belt, u, v, garnir, bricks, f, d, minimal, gens, tuple(reps), gar)


@dataclass(frozen=True)
class GarnirTerm:
    tau_factors: tuple[int, ...]
    tau_degrees: tuple[int, ...]
    psi_word: tuple[int, ...]
    psi_degrees: tuple[int, ...]
    idempotent: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "tau_factors": list(self.tau_factors),
            "tau_degrees": list(self.tau_degrees),
            "psi_word": list(self.psi_word),
            "psi_degrees": list(self.psi_degrees),
            "idempotent": list(self.idempotent),
        }


@dataclass(frozen=True)
class GarnirElementSymbolic:
    node: Node
    terms: tuple[GarnirTerm, ...]

    def to_json(self) -> dict:
        return {"node": list(self.node), "terms": [t.to_json() for t in self.terms]}


def garnir_element_symbolic(p: int, mu: Partition, A: Node) -> GarnirElementSymbolic:
    """One term per coset representative: tau factors, the psi word of T^A and i^mu.

    Each tau factor (psi_{w_t} + 1) gets the degree of psi_{w_t} on the word it meets.
    """
    data = garnir_data(p, mu, A)
    idem = residue_sequence(p, leading_tableau(tuple(mu)))
    _, psi_word = tableau_permutation(data.minimal_tableau)
    psi_degs, word = psi_degrees(p, idem, psi_word)
    terms = []
    for rep_word in data.coset_rep_words():
        current = word
        tau_degs = []
        for t in reversed(rep_word):
            gen_word = reduced_word(data.brick_generators[t - 1])
            degs, current = psi_degrees(p, current, gen_word)
            tau_degs.append(sum(degs))
        terms.append(GarnirTerm(tuple(rep_word), tuple(reversed(tau_degs)), tuple(psi_word), tuple(psi_degs), idem))
    return GarnirElementSymbolic(A, tuple(terms))


@dataclass(frozen=True)
class SpechtPresentation:
    shape: Partition
    generator_degree: int
    idempotent: tuple[int, ...]
    y_generators: tuple[int, ...]
    row_psi: tuple[int, ...]
    garnir: tuple[GarnirElementSymbolic, ...]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "generator_degree": self.generator_degree,
            "idempotent": list(self.idempotent),
            "y_generators": list(self.y_generators),
            "row_psi": list(self.row_psi),
            "garnir": [g.to_json() for g in self.garnir],
        }


def specht_presentation(p: int, mu: Partition) -> SpechtPresentation:
    mu = tuple(mu)
    tmu = leading_tableau(mu)
    n = sum(mu)
    pos = tmu.positions()
    row_psi = tuple(r for r in range(1, n) if pos[r][0] == pos[r + 1][0])
    return SpechtPresentation(
        mu,
        tableau_degree(p, tmu),
        residue_sequence(p, tmu),
        tuple(range(1, n + 1)),
        row_psi,
        tuple(garnir_element_symbolic(p, mu, A) for A in garnir_nodes(mu)),
    )


def expected_gar_size(data: GarnirData) -> int:
    return comb(data.k, data.f)
