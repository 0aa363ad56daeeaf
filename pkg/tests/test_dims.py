from itertools import product
from math import factorial

import pytest

from klr_workbench.cartan import Content
from klr_workbench.crystal import e_tilde, epsilon, f_tilde, phi
from klr_workbench.dims import (
    block_contents,
    block_graded_dim,
    branch_table,
    idempotent_graded_dim,
    socle_prediction,
    specht_graded_dim,
    specht_graded_dim_enumerated,
)
from klr_workbench.errors import DomainError, NotRestrictedError
from klr_workbench.partitions import content, count_standard, partitions_of, removable_nodes, restricted_partitions
from klr_workbench.qlaurent import LaurentPoly, quantum_int
from klr_workbench.tableaux import residue_sequence, standard_tableaux, tableau_degree


def test_specht_examples():
    assert specht_graded_dim(3, (1,)) == 1
    assert specht_graded_dim(3, (2, 1)) == LaurentPoly({0: 1, 1: 1})


@pytest.mark.parametrize("p", [2, 3, 5])
def test_specht_dim_at_one_is_hook_count(p):
    for n in range(1, 9):
        for mu in partitions_of(n):
            d = specht_graded_dim(p, mu)
            assert d.at_one() == count_standard(mu)


def test_specht_recursion_matches_enumeration():
    for n in range(1, 8):
        for mu in partitions_of(n):
            for p in (2, 3):
                assert specht_graded_dim(p, mu) == specht_graded_dim_enumerated(p, mu)


def test_idempotent_examples():
    a1 = Content.simple(3, 0)
    assert idempotent_graded_dim(3, a1, (0,), (0,)) == 1
    alpha = content(3, (2, 1))
    assert idempotent_graded_dim(3, alpha, (1, 0, 2), (0, 1, 2)).is_zero()
    with pytest.raises(DomainError):
        idempotent_graded_dim(3, alpha, (0, 0, 0), (0, 1, 2))


def block_oracle(p, alpha):
    """Sum over partitions of the block, pairs of standard tableaux, q^(deg S + deg T)."""
    total = LaurentPoly()
    n = alpha.height
    for mu in partitions_of(n):
        if content(p, mu) != alpha:
            continue
        degs = [tableau_degree(p, t) for t in standard_tableaux(mu)]
        for a in degs:
            for b in degs:
                total = total + LaurentPoly.monomial(a + b)
    return total


@pytest.mark.parametrize("p", [2, 3])
def test_block_dim_matches_oracle_and_idempotent_sum(p):
    for n in range(1, 6):
        for alpha in block_contents(p, n):
            block = block_graded_dim(p, alpha)
            assert block == block_oracle(p, alpha)
            words = {w for w in product(range(p), repeat=n) if Content.of_word(p, w) == alpha}
            total = LaurentPoly()
            for i in words:
                for j in words:
                    total = total + idempotent_graded_dim(p, alpha, i, j)
            assert total == block


def test_idempotent_symmetric():
    alpha = content(3, (2, 1, 1))
    words = sorted({residue_sequence(3, t) for mu in partitions_of(4) for t in standard_tableaux(mu) if content(3, mu) == alpha})
    for i in words:
        for j in words:
            assert idempotent_graded_dim(3, alpha, i, j) == idempotent_graded_dim(3, alpha, j, i)


@pytest.mark.parametrize("p", [2, 3])
def test_block_dims_sum_to_factorial(p):
    for n in range(1, 9):
        assert sum(block_graded_dim(p, a).at_one() for a in block_contents(p, n)) == factorial(n)


def test_block_single_box():
    assert block_graded_dim(2, Content.simple(2, 0)) == 1


def test_block_p2_content_of_two():
    alpha = content(2, (2,))
    # (2) and (1,1) share this content; each has one tableau of degree 0 and 1 respectively
    assert tableau_degree(2, standard_tableaux((2,))[0]) == 1
    assert tableau_degree(2, standard_tableaux((1, 1))[0]) == 0
    assert block_graded_dim(2, alpha) == LaurentPoly({0: 1, 2: 1})


def test_branch_3_3_2_1_1_residue_2():
    mu = (3, 3, 2, 1, 1)
    t = branch_table(3, mu, 2, "e")
    got = {e.target: (e.multiplicity, e.provenance) for e in t.entries}
    assert got[(3, 3, 2, 1)] == (quantum_int(1), "normal-node")
    assert got[(3, 3, 1, 1, 1)] == (LaurentPoly({-1: 1, 1: 1}), "normal-node")
    assert got[(3, 2, 1, 1, 1, 1)] == (quantum_int(1), "mullineux-twist")
    assert len(got) == 3
    for i in (0, 1):
        table = branch_table(3, mu, i, "e")
        assert table.vanishes and table.entries == []
    assert t.to_json()["label"] == "known factors (lower bound)"


def test_branch_errors():
    with pytest.raises(NotRestrictedError):
        branch_table(3, (3,), 0)
    with pytest.raises(DomainError):
        branch_table(3, (1,), 0, "x")


def is_quantum_int(x):
    return any(x == quantum_int(m) for m in range(1, 12))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_branch_invariants(p):
    for n in range(1, 8):
        for mu in restricted_partitions(p, n):
            total_eps = 0
            for i in range(p):
                total_eps += epsilon(p, mu, i)
                for direction in ("e", "f"):
                    t = branch_table(p, mu, i, direction)
                    size = n - 1 if direction == "e" else n + 1
                    for e in t.entries:
                        assert sum(e.target) == size
                        assert is_quantum_int(e.multiplicity)
                    for h in t.hom_entries:
                        assert len(h.dimension.terms) == 1 and h.dimension.coeff(h.dimension.max_degree()) == 1
                    rec = socle_prediction(p, mu, i, direction)
                    m = epsilon(p, mu, i) if direction == "e" else phi(p, mu, i)
                    assert t.vanishes == (m == 0) == (rec is None)
                    if rec is None:
                        assert t.entries == []
                        continue
                    top = e_tilde(p, mu, i) if direction == "e" else f_tilde(p, mu, i)
                    assert rec.target == top
                    assert rec.top_multiplicity == quantum_int(m)
                    assert rec.irreducible == (m == 1)
                    named = {e.target: e.multiplicity for e in t.entries}
                    assert named[top] == quantum_int(m)
            assert total_eps <= len(removable_nodes(mu))


def test_socle_3_3_2_1_1_residue_2():
    rec = socle_prediction(3, (3, 3, 2, 1, 1), 2)
    assert rec.top_multiplicity == LaurentPoly({-1: 1, 1: 1})
    assert rec.socle_shift == 1 and rec.head_shift == -1
    assert rec.target == (3, 3, 1, 1, 1)
    assert socle_prediction(3, (3, 3, 2, 1, 1), 0) is None
