import numpy as np
import pytest

from klr_workbench.cartan import Arith, BivariatePoly
from klr_workbench.errors import DomainError
from klr_workbench.golden import hook_character_expected
from klr_workbench.klrmod import (
    GradedModule,
    _braid_correction,
    canonical_base_word,
    character,
    check_relations,
    component_module,
    homogeneity_number,
    homogeneous_module,
    hook_module,
    hook_partition,
    nilhecke_polynomial_module,
    p_standard_tableaux,
    word_graph_component,
)
from klr_workbench.partitions import content, restricted_partitions
from klr_workbench.qlaurent import LaurentPoly
from klr_workbench.tableaux import leading_tableau, residue_sequence


def mat(rows):
    return np.array(rows, dtype=object)


def coinvariant_module(p=3):
    """Word (0,0): span{1, y_1} in F[y_1,y_2]/(y_1+y_2, y_1 y_2), psi = (f - s f)/(y_2 - y_1)."""
    y1 = mat([[0, 0], [1, 0]])
    y2 = mat([[0, 0], [-1, 0]])
    psi = mat([[0, -1], [0, 0]])
    basis = [("1", (0, 0), 0), ("y1", (0, 0), 2)]
    return GradedModule(Arith(p), 2, basis, [y1, y2], [psi])


def test_coinvariant_module_passes_affine_relations():
    m = coinvariant_module()
    report = check_relations(m, cyclotomic=False)
    assert report.passed, report.to_json()
    assert {c.relation for c in report.checks} >= {"R1", "R2PsiE", "R4", "R6", "Grading"}


def test_coinvariant_module_fails_cyclotomic():
    report = check_relations(coinvariant_module(), cyclotomic=True)
    assert {c.relation for c in report.failures} == {"Cyclo"}


def test_coinvariant_module_sign_flip_breaks_r6():
    m = coinvariant_module()
    m.psi[0] = -m.psi[0]
    assert {c.relation for c in check_relations(m, cyclotomic=False).failures} == {"R6"}


def test_grading_mutation_detected():
    m = coinvariant_module()
    m.basis[1] = ("y1", (0, 0), 4)
    assert {c.relation for c in check_relations(m, cyclotomic=False).failures} == {"Grading"}


def test_braid_correction_values():
    y = [np.diag(np.array(v, dtype=object)) for v in ([2, 5], [3, -1], [7, 4])]
    for poly in (
        BivariatePoly.from_dict({(1, 0): 1, (0, 1): -1}),
        BivariatePoly.from_dict({(2, 0): 1, (0, 2): -1}),
        BivariatePoly.from_dict({(3, 1): 2, (1, 0): -1, (0, 0): 5}),
    ):
        corr = _braid_correction(poly, y[0], y[1], y[2])
        for k in range(2):
            u1, v, u3 = y[0][k, k], y[1][k, k], y[2][k, k]
            expected = (poly.evaluate(u3, v) - poly.evaluate(u1, v)) // (u3 - u1)
            assert corr[k, k] == expected
            assert corr[1 - k, k] == 0


def test_braid_correction_is_applied_for_adjacent_residues():
    # word (0,1,0) at p=3: Q_01 = u - v has correction 1, so a psi=0 module fails R7
    a = Arith(3)
    zero = np.zeros((1, 1), dtype=object)
    m = GradedModule(a, 3, [("w", (0, 1, 0), 0)], [zero] * 3, [zero] * 2)
    failed = {c.relation for c in check_relations(m, cyclotomic=False).failures}
    assert "R7" in failed


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_hook_modules_pass(p):
    for i in range(1, p):
        m = hook_module(Arith(p), i)
        report = check_relations(m, cyclotomic=True)
        assert report.passed, report.to_json()
        ch = character(m)
        assert all(w[0] == 0 and w[1] != 0 for w in ch)
        assert len({content(p, hook_partition(p, i))}) == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hook_characters(p):
    a = Arith(p)
    assert character(hook_module(a, 1)) == hook_character_expected(p, 1)
    assert character(hook_module(a, p - 1)) == hook_character_expected(p, p - 1)
    assert hook_module(a, 1).dim == hook_module(a, p - 1).dim == 1
    if p > 3:
        assert character(hook_module(a, p - 2)) == hook_character_expected(p, p - 2)
        assert hook_module(a, p - 2).dim == p - 2


def test_hook_character_p3_literal():
    assert character(hook_module(Arith(3), 1)) == {(0, 2, 1): LaurentPoly({0: 1})}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cross_construction(p):
    a = Arith(p)
    for i in range(1, p):
        base = canonical_base_word(p, i)
        assert base == residue_sequence(p, leading_tableau(hook_partition(p, i)))
        comp = component_module(a, word_graph_component(a, base), cyclotomic=True)
        assert character(comp) == character(hook_module(a, i))


def test_homogeneous_examples():
    for p in (2, 3, 5):
        m = homogeneous_module(Arith(p), (1,))
        assert m.dim == 1 and m.words() == [(0,)]
    m = homogeneous_module(Arith(5), (2, 1, 1, 1))
    assert m.dim == len(p_standard_tableaux(5, (2, 1, 1, 1)))
    seed = m.words()[0]
    assert set(m.words()) == word_graph_component(Arith(5), seed)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_homogeneous_modules_pass(p):
    a = Arith(p)
    for n in range(1, 8):
        for mu in restricted_partitions(p, n):
            if homogeneity_number(mu) > p:
                with pytest.raises(DomainError, match="not homogeneous"):
                    homogeneous_module(a, mu)
                continue
            m = homogeneous_module(a, mu)
            assert m.dim > 0
            assert check_relations(m, cyclotomic=True).passed, mu
            words = m.words()
            assert len(words) == m.dim
            assert set(words) == word_graph_component(a, words[0])
            assert all(w[0] == 0 and (n == 1 or w[1] != 0) for w in words)


def test_homogeneity_number():
    assert homogeneity_number((3, 1, 1)) == 5
    assert homogeneity_number((2, 2, 1)) == 3
    assert homogeneity_number((1, 1, 1)) == 1
    assert homogeneity_number((2, 1, 1)) == 4
    assert homogeneity_number(()) == 0


def test_module_errors():
    with pytest.raises(DomainError):
        hook_module(Arith(3), 0)
    with pytest.raises(DomainError):
        hook_module(Arith(3), 3)
    with pytest.raises(DomainError):
        homogeneous_module(Arith(3), (3,))
    with pytest.raises(NotImplementedError):
        nilhecke_polynomial_module(2)


def test_word_graph_examples():
    assert word_graph_component(Arith(2), (0, 1, 0, 1)) == {(0, 1, 0, 1)}
    assert word_graph_component(Arith(5), (3,)) == {(3,)}
    assert word_graph_component(Arith(5), (0, 4, 0, 4)) == {(0, 4, 0, 4)}
    assert word_graph_component(Arith(5), (0, 2)) == {(0, 2), (2, 0)}


def test_component_examples():
    m = component_module(Arith(2), {(0, 1, 0, 1)})
    assert m.dim == 1 and all(not np.any(x) for x in m.psi)
    with pytest.raises(DomainError, match="non-homogeneous component"):
        component_module(Arith(3), {(0, 0)})
    with pytest.raises(DomainError, match="not closed"):
        component_module(Arith(5), {(0, 2)})
    with pytest.raises(DomainError):
        component_module(Arith(5), set())


def test_cyclotomic_rejects_nonzero_first_letter():
    zero = np.zeros((1, 1), dtype=object)
    m = GradedModule(Arith(3), 2, [("w", (1, 0), 0)], [zero] * 2, [zero])
    assert {c.relation for c in check_relations(m, cyclotomic=True).failures} == {"Cyclo"}
    assert check_relations(m, cyclotomic=False).passed


def test_hook_psi_mutation_detected():
    m = hook_module(Arith(5), 2)
    m.psi[2] = m.psi[2] + np.diag(np.ones(m.dim, dtype=object))
    assert not check_relations(m).passed


def test_zero_module_character():
    m = GradedModule(Arith(3), 2, [], [np.zeros((0, 0), dtype=object)] * 2, [np.zeros((0, 0), dtype=object)])
    assert character(m) == {}


def test_module_json():
    js = hook_module(Arith(5), 3).to_json()
    assert js["p"] == 5 and js["n"] == 5
    assert all(b["degree"] == 0 for b in js["basis"])


def literal_p_standard(p, t):
    """The opposite orientation: the entry at the leg end must be the smaller one."""
    pos = t.positions()
    return t.is_standard() and not any(
        r > r2 and s < s2 and r - r2 + s2 - s + 1 == p and a > b
        for a, (r, s) in pos.items()
        for b, (r2, s2) in pos.items()
    )


def test_opposite_orientation_of_p_standard_breaks_relations():
    from klr_workbench.klrmod import _permutation_module
    from klr_workbench.tableaux import standard_tableaux

    p, mu = 3, (2, 2, 1)
    tabs = [t for t in standard_tableaux(mu) if literal_p_standard(p, t)]
    index = {t: k for k, t in enumerate(tabs)}
    m = _permutation_module(
        Arith(p), [(str(k), residue_sequence(p, t)) for k, t in enumerate(tabs)], lambda k, r: index.get(tabs[k].swap(r))
    )
    assert not check_relations(m).passed
    assert check_relations(homogeneous_module(Arith(p), mu)).passed
