"""Finite-dimensional KLR modules as integer matrices, and a checker for the defining relations.

Matrices act on column vectors: column j of a generator matrix is the image of basis vector j.
Entries are Python ints in numpy object arrays, so the checks are exact over Z.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .cartan import Arith, BivariatePoly, cartan_entry, q_poly
from .errors import DomainError
from .partitions import Partition, is_restricted
from .qlaurent import LaurentPoly
from .tableaux import Tableau, is_p_standard, leading_tableau, residue_sequence, standard_tableaux

Word = tuple


def _zeros(d: int) -> np.ndarray:
    return np.zeros((d, d), dtype=object)


def _identity(d: int) -> np.ndarray:
    m = _zeros(d)
    for k in range(d):
        m[k, k] = 1
    return m


def _power(m: np.ndarray, k: int) -> np.ndarray:
    out = _identity(m.shape[0])
    for _ in range(k):
        out = out @ m
    return out


def _eval_poly(poly: BivariatePoly, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = _zeros(u.shape[0])
    for (a, b), c in poly.terms:
        out = out + c * (_power(u, a) @ _power(v, b))
    return out


@dataclass
class GradedModule:
    """Basis vectors labelled by (label, word, degree), with matrices for y_1..y_n and psi_1..psi_{n-1}."""

    arith: Arith
    n: int
    basis: list[tuple[str, Word, int]]
    y: list[np.ndarray]
    psi: list[np.ndarray]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def words(self) -> list[Word]:
        return sorted({w for _, w, _ in self.basis})

    def projector(self, word: Word) -> np.ndarray:
        m = _zeros(self.dim)
        for k, (_, w, _) in enumerate(self.basis):
            if w == word:
                m[k, k] = 1
        return m

    def to_json(self) -> dict:
        def sparse(m):
            return [[int(r), int(c), int(m[r, c])] for r, c in zip(*np.nonzero(m))]

        return {
            "p": self.arith.p,
            "n": self.n,
            "basis": [{"label": lab, "word": list(w), "degree": deg} for lab, w, deg in self.basis],
            "y": [sparse(m) for m in self.y],
            "psi": [sparse(m) for m in self.psi],
        }


def character(m: GradedModule) -> dict[Word, LaurentPoly]:
    """Word-indexed graded dimensions."""
    out: dict[Word, LaurentPoly] = {}
    for _, w, deg in m.basis:
        out[w] = out.get(w, LaurentPoly()) + LaurentPoly.monomial(deg)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    detail: str
    word: Word
    passed: bool

    def to_json(self) -> dict:
        return {"relation": self.relation, "detail": self.detail, "word": list(self.word), "passed": self.passed}


@dataclass
class RelationReport:
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, relation: str, detail: str, word: Word, ok: bool) -> None:
        self.checks.append(RelationCheck(relation, detail, tuple(word), bool(ok)))

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": len(self.checks),
            "failures": [c.to_json() for c in self.failures],
        }


def _same(a: np.ndarray, b: np.ndarray) -> bool:
    return not np.any(a - b)


def _braid_correction(q: BivariatePoly, y_r, y_mid, y_r2) -> np.ndarray:
    """(Q(y_{r+2}, y_{r+1}) - Q(y_r, y_{r+1})) / (y_{r+2} - y_r), expanded monomial by monomial.

    u^a v^b contributes v^b * sum_{k<a} y_{r+2}^k y_r^(a-1-k).
    """
    out = _zeros(y_r.shape[0])
    for (a, b), c in q.terms:
        inner = _zeros(y_r.shape[0])
        for k in range(a):
            inner = inner + _power(y_r2, k) @ _power(y_r, a - 1 - k)
        out = out + c * (_power(y_mid, b) @ inner)
    return out


def _on(chain: Sequence[np.ndarray], cols: list[int]) -> np.ndarray:
    """chain[0] @ ... @ chain[-1] restricted to the given columns, multiplied right to left."""
    out = chain[-1][:, cols]
    for m in reversed(chain[:-1]):
        out = m @ out
    return out


def check_relations(m: GradedModule, cyclotomic: bool = True) -> RelationReport:
    """Check every defining relation on each word space 1_i V.

    Products are evaluated on the columns of 1_i only, which is the same as
    multiplying by the projector on the right.
    """
    a = m.arith
    p = a.p
    n = m.n
    d = m.dim
    report = RelationReport()
    Y, Psi = m.y, m.psi
    words = m.words()
    cols = {w: [k for k, (_, x, _) in enumerate(m.basis) if x == w] for w in words}
    proj = {w: m.projector(w) for w in words}
    total = _zeros(d)
    for P in proj.values():
        total = total + P
    degree = [deg for _, _, deg in m.basis]
    word_of = [w for _, w, _ in m.basis]

    report.add("R1", "sum of idempotents is 1", (), _same(total, _identity(d)))
    for w in words:
        report.add("R1", "word length", w, len(w) == n)

    for w in words:
        P, c = proj[w], cols[w]
        eye = _identity(d)[:, c]
        zero = _zeros(d)[:, c]
        for t in range(n):
            report.add("R1", f"y_{t + 1} commutes with 1_i", w, _same(_on([Y[t]], c), _on([P, Y[t]], c)))
            for u in range(t + 1, n):
                report.add("R1", f"y_{t + 1} y_{u + 1} = y_{u + 1} y_{t + 1}", w,
                           _same(_on([Y[t], Y[u]], c), _on([Y[u], Y[t]], c)))
        for r in range(1, n):
            sw = list(w)
            sw[r - 1], sw[r] = sw[r], sw[r - 1]
            sw = tuple(sw)
            psi_c = _on([Psi[r - 1]], c)
            target = proj.get(sw, _zeros(d))
            report.add("R2PsiE", f"psi_{r} 1_i = 1_(s_r i) psi_{r}", w, _same(psi_c, target @ psi_c))

            ir, ir1 = w[r - 1], w[r]
            for t in range(1, n + 1):
                st = r + 1 if t == r else r if t == r + 1 else t
                lhs = Y[t - 1] @ psi_c - _on([Psi[r - 1], Y[st - 1]], c)
                rhs = zero
                if ir == ir1 and t in (r, r + 1):
                    rhs = (1 if t == r + 1 else -1) * eye
                report.add("R6", f"y_{t} psi_{r} - psi_{r} y_{st}", w, _same(lhs, rhs))

            q = q_poly(a, ir, ir1)
            lhs = Psi[r - 1] @ psi_c
            rhs = _eval_poly(q, Y[r - 1], Y[r])[:, c]
            report.add("R4", f"psi_{r}^2 = Q_{ir}{ir1}(y_{r}, y_{r + 1})", w, _same(lhs, rhs))

            for s_ in range(r + 2, n):
                report.add("R3Psi", f"psi_{r} psi_{s_} = psi_{s_} psi_{r}", w,
                           _same(Psi[r - 1] @ _on([Psi[s_ - 1]], c), Psi[s_ - 1] @ psi_c))

        for r in range(1, n - 1):
            A, B = Psi[r - 1], Psi[r]
            lhs = _on([B, A, B], c) - _on([A, B, A], c)
            rhs = zero
            if w[r - 1] == w[r + 1]:
                q = q_poly(a, w[r - 1], w[r])
                rhs = _braid_correction(q, Y[r - 1], Y[r], Y[r + 1])[:, c]
            report.add("R7", f"braid at {r}", w, _same(lhs, rhs))

        if cyclotomic:
            if w[0] % p != 0:
                report.add("Cyclo", "1_i = 0 when i_1 != 0", w, not c)
            else:
                report.add("Cyclo", "y_1 1_i = 0 when i_1 = 0", w, _same(_on([Y[0]], c), zero))

    for t in range(n):
        ok = all(
            degree[row] - degree[col] == 2
            for row, col in zip(*np.nonzero(Y[t]))
        )
        report.add("Grading", f"deg y_{t + 1} = 2", (), ok)
    for r in range(1, n):
        ok = all(
            degree[row] - degree[col] == -cartan_entry(p, word_of[col][r - 1], word_of[col][r])
            for row, col in zip(*np.nonzero(Psi[r - 1]))
        )
        report.add("Grading", f"deg psi_{r} = -c", (), ok)
    return report


def _permutation_module(a: Arith, labelled: Sequence[tuple[str, Word]], swap) -> GradedModule:
    """Degree-zero module with y = 0 and psi_r v_k = v_{swap(k, r)} (or 0 when swap gives None)."""
    d = len(labelled)
    n = len(labelled[0][1]) if labelled else 0
    psi = []
    for r in range(1, n):
        mat = _zeros(d)
        for k in range(d):
            target = swap(k, r)
            if target is not None:
                mat[target, k] = 1
        psi.append(mat)
    basis = [(lab, tuple(w), 0) for lab, w in labelled]
    return GradedModule(a, n, basis, [_zeros(d) for _ in range(n)], psi)


def hook_partition(p: int, i: int) -> Partition:
    """chi^i = (i, 1^(p-i))."""
    return (i,) + (1,) * (p - i)


def homogeneity_number(mu: Partition) -> int:
    """mu_1 + (number of parts) - (last row of length mu_1): the hook length at the foot of the first column block."""
    if not mu:
        return 0
    last = max(t for t in range(1, len(mu) + 1) if mu[t - 1] == mu[0])
    return mu[0] + len(mu) - last


def p_standard_tableaux(p: int, mu: Partition) -> list[Tableau]:
    return [t for t in standard_tableaux(mu) if is_p_standard(p, t)]


def homogeneous_module(a: Arith, mu: Partition) -> GradedModule:
    p = a.p
    mu = tuple(mu)
    if not is_restricted(p, mu):
        raise DomainError(f"partition {list(mu)} is not {p}-restricted")
    chi = homogeneity_number(mu)
    if chi > p:
        raise DomainError(f"partition {list(mu)} is not homogeneous: hook number {chi} exceeds p={p}")
    tabs = p_standard_tableaux(p, mu)
    index = {t: k for k, t in enumerate(tabs)}

    def swap(k, r):
        return index.get(tabs[k].swap(r))

    labelled = [(str(t.reading_word()), residue_sequence(p, t)) for t in tabs]
    return _permutation_module(a, labelled, swap)


def hook_module(a: Arith, i: int) -> GradedModule:
    if not 1 <= i <= a.p - 1:
        raise DomainError(f"hook color must satisfy 1 <= i <= p-1 = {a.p - 1}, got {i}")
    return homogeneous_module(a, hook_partition(a.p, i))


def canonical_base_word(p: int, i: int) -> Word:
    """Residue word of the leading tableau of chi^i: (0, 1, ..., i-1, p-1, p-2, ..., i)."""
    return residue_sequence(p, leading_tableau(hook_partition(p, i)))


def admissible(p: int, x: int, y: int) -> bool:
    return cartan_entry(p, x, y) == 0


def word_graph_component(a: Arith, seed: Iterable[int]) -> set[Word]:
    p = a.p
    seed = tuple(x % p for x in seed)
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        for r in range(1, len(w)):
            if admissible(p, w[r - 1], w[r]):
                sw = list(w)
                sw[r - 1], sw[r] = sw[r], sw[r - 1]
                sw = tuple(sw)
                if sw not in seen:
                    seen.add(sw)
                    queue.append(sw)
    return seen


def component_module(a: Arith, component: Iterable[Word], cyclotomic: bool = False) -> GradedModule:
    """Candidate homogeneous module on a word-graph component; raises unless every relation holds."""
    words = sorted({tuple(w) for w in component})
    if not words:
        raise DomainError("component must be nonempty")
    index = {w: k for k, w in enumerate(words)}
    for w in words:
        for r in range(1, len(w)):
            if admissible(a.p, w[r - 1], w[r]):
                sw = list(w)
                sw[r - 1], sw[r] = sw[r], sw[r - 1]
                if tuple(sw) not in index:
                    raise DomainError(f"component is not closed: {list(sw)} missing, reached from {list(w)}")

    def swap(k, r):
        w = words[k]
        if not admissible(a.p, w[r - 1], w[r]):
            return None
        sw = list(w)
        sw[r - 1], sw[r] = sw[r], sw[r - 1]
        return index[tuple(sw)]

    module = _permutation_module(a, [(str(list(w)), w) for w in words], swap)
    report = check_relations(module, cyclotomic=cyclotomic)
    if not report.passed:
        first = report.failures[0]
        raise DomainError(
            f"non-homogeneous component: relation {first.relation} ({first.detail}) fails on word {list(first.word)}"
        )
    return module


def nilhecke_polynomial_module(n: int):
    """The polynomial representation of the nilHecke algebra is infinite-dimensional and not modelled."""
    raise NotImplementedError("the nilHecke polynomial representation is outside this package")
