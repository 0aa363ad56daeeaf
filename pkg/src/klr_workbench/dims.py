"""Graded dimensions of Specht modules and blocks, and graded branching tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .cartan import Content
from .crystal import e_tilde, f_tilde, signature
from .errors import DomainError, NotRestrictedError
from .mullineux import mullineux_xu
from .partitions import (
    Partition,
    add_node,
    addable_nodes,
    content,
    is_restricted,
    partitions_with_content,
    partitions_of,
    remove_node,
    removable_nodes,
)
from .qlaurent import ONE, ZERO, LaurentPoly, lsum, quantum_int
from .tableaux import node_degree, standard_tableaux, tableau_degree


@lru_cache(maxsize=None)
def _specht_dim(p: int, mu: Partition) -> LaurentPoly:
    if not mu:
        return ONE
    return lsum(
        _specht_dim(p, remove_node(mu, A)).shift(node_degree(p, mu, A))
        for A in removable_nodes(mu)
    )


def specht_graded_dim(p: int, mu: Partition) -> LaurentPoly:
    """Sum of q^deg(T) over standard mu-tableaux, by recursion on the node holding n."""
    return _specht_dim(p, tuple(mu))


def specht_graded_dim_enumerated(p: int, mu: Partition) -> LaurentPoly:
    """Same quantity by listing every standard tableau."""
    return lsum(LaurentPoly.monomial(tableau_degree(p, t)) for t in standard_tableaux(mu))


def _word_dim(p: int, mu: Partition, word: Sequence[int]) -> LaurentPoly:
    """Sum of q^deg(T) over standard mu-tableaux with residue sequence ``word``."""
    # forward DP over shapes, adding the node holding k with residue word[k-1]
    layer = {(): ONE}
    for letter in word:
        nxt: dict[Partition, LaurentPoly] = {}
        for shape, poly in layer.items():
            for A in addable_nodes(shape, p, letter):
                if A[1] > (mu[A[0] - 1] if A[0] <= len(mu) else 0):
                    continue
                bigger = add_node(shape, A)
                nxt[bigger] = nxt.get(bigger, ZERO) + poly.shift(node_degree(p, bigger, A))
        layer = nxt
    return layer.get(tuple(mu), ZERO)


def idempotent_graded_dim(p: int, alpha: Content, i: Sequence[int], j: Sequence[int]) -> LaurentPoly:
    i = tuple(x % p for x in i)
    j = tuple(x % p for x in j)
    for w in (i, j):
        if Content.of_word(p, w) != alpha:
            raise DomainError(f"word {list(w)} does not have content {alpha}")
    return lsum(_word_dim(p, mu, i) * _word_dim(p, mu, j) for mu in partitions_with_content(p, alpha))


def block_graded_dim(p: int, alpha: Content) -> LaurentPoly:
    total = ZERO
    for mu in partitions_with_content(p, alpha):
        d = specht_graded_dim(p, mu)
        total = total + d * d
    return total


def block_contents(p: int, n: int) -> list[Content]:
    return sorted({content(p, mu) for mu in partitions_of(n)}, key=lambda c: c.counts)


@dataclass(frozen=True)
class BranchEntry:
    target: Partition
    multiplicity: LaurentPoly
    provenance: str

    def to_json(self) -> dict:
        return {"target": list(self.target), "multiplicity": self.multiplicity.to_json(), "provenance": self.provenance}


@dataclass(frozen=True)
class HomEntry:
    target: Partition
    dimension: LaurentPoly
    specht_only: bool

    def to_json(self) -> dict:
        return {"target": list(self.target), "hom_dim": self.dimension.to_json(), "specht_only": self.specht_only}


@dataclass
class BranchTable:
    source: Partition
    i: int
    direction: str
    epsilon: int
    phi: int
    entries: list[BranchEntry] = field(default_factory=list)
    hom_entries: list[HomEntry] = field(default_factory=list)

    @property
    def vanishes(self) -> bool:
        return (self.epsilon if self.direction == "e" else self.phi) == 0

    def ungraded_total(self) -> int:
        return sum(e.multiplicity.at_one() for e in self.entries)

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "i": self.i,
            "direction": self.direction,
            "epsilon": self.epsilon,
            "phi": self.phi,
            "vanishes": self.vanishes,
            "label": "known factors (lower bound)",
            "entries": [e.to_json() for e in self.entries],
            "hom": [h.to_json() for h in self.hom_entries],
        }


def _change(mu: Partition, A, direction: str) -> Partition:
    return remove_node(mu, A) if direction == "e" else add_node(mu, A)


def _marked_nodes(p: int, mu: Partition, i: int, direction: str):
    """Normal nodes left to right, or conormal nodes right to left; the m-th carries [m]_q."""
    sig = signature(p, mu, i)
    return sig.normal_nodes() if direction == "e" else sig.conormal_nodes()[::-1]


def branch_table(p: int, mu: Partition, i: int, direction: str = "e") -> BranchTable:
    """Known composition factors of e_i D^mu (or f_i D^mu) with graded multiplicities.

    Normal-node entries: the m-th normal node from the left (conormal from the right) gives [m]_q.
    Twisted entries: the same rule applied to M(mu) at residue -i, then mapped back by M.
    """
    if direction not in ("e", "f"):
        raise DomainError(f"direction must be 'e' or 'f', got {direction!r}")
    mu = tuple(mu)
    if not is_restricted(p, mu):
        raise NotRestrictedError(f"partition {list(mu)} is not {p}-restricted")
    i %= p
    sig = signature(p, mu, i)
    table = BranchTable(mu, i, direction, sig.epsilon, sig.phi)

    found: dict[Partition, BranchEntry] = {}
    for m, A in enumerate(_marked_nodes(p, mu, i, direction), 1):
        target = _change(mu, A, direction)
        table.hom_entries.append(HomEntry(target, LaurentPoly.monomial(m - 1), not is_restricted(p, target)))
        if is_restricted(p, target):
            found[target] = BranchEntry(target, quantum_int(m), "normal-node")

    twisted = mullineux_xu(p, mu)
    for m, A in enumerate(_marked_nodes(p, twisted, -i % p, direction), 1):
        nu = _change(twisted, A, direction)
        if not is_restricted(p, nu):
            continue
        target = mullineux_xu(p, nu)
        mult = quantum_int(m)
        if target in found:
            if found[target].multiplicity != mult:
                raise AssertionError(
                    f"branching predictions disagree on {list(target)}: "
                    f"{found[target].multiplicity} vs {mult}"
                )
            continue
        found[target] = BranchEntry(target, mult, "mullineux-twist")

    table.entries = sorted(found.values(), key=lambda e: (e.provenance != "normal-node", [-x for x in e.target]))
    return table


@dataclass(frozen=True)
class SocleRecord:
    target: Partition
    socle_shift: int
    head_shift: int
    top_multiplicity: LaurentPoly
    endomorphism_dim: int
    irreducible: bool

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "socle_shift": self.socle_shift,
            "head_shift": self.head_shift,
            "top_multiplicity": self.top_multiplicity.to_json(),
            "endomorphism_dim": self.endomorphism_dim,
            "irreducible": self.irreducible,
        }


def socle_prediction(p: int, mu: Partition, i: int, direction: str = "e") -> SocleRecord | None:
    """Socle/head data of e_i D^mu (or f_i D^mu); None when the functor kills D^mu."""
    mu = tuple(mu)
    if not is_restricted(p, mu):
        raise NotRestrictedError(f"partition {list(mu)} is not {p}-restricted")
    sig = signature(p, mu, i)
    if direction == "e":
        m, target = sig.epsilon, e_tilde(p, mu, i)
    elif direction == "f":
        m, target = sig.phi, f_tilde(p, mu, i)
    else:
        raise DomainError(f"direction must be 'e' or 'f', got {direction!r}")
    if m == 0:
        return None
    return SocleRecord(target, m - 1, 1 - m, quantum_int(m), m, m == 1)
