import warnings

import pytest

from klr_workbench.cartan import (
    Arith,
    BivariatePoly,
    Content,
    cartan_entry,
    cartan_matrix,
    form,
    null_root,
    parse_signs,
    q_poly,
)
from klr_workbench.errors import ConfigurationError, DomainError


def test_cartan_examples():
    assert cartan_entry(5, 2, 2) == 2
    assert cartan_entry(2, 0, 1) == -2
    assert cartan_entry(5, 0, 2) == 0


def test_cartan_cyclic_adjacency():
    assert cartan_entry(5, 0, 4) == -1
    assert cartan_entry(3, 0, 2) == -1


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_cartan_symmetric_rows_sum_to_zero(p):
    m = cartan_matrix(p)
    for i in range(p):
        assert sum(m[i]) == 0
        for j in range(p):
            assert m[i][j] == m[j][i]


def test_form_examples():
    for i in range(3):
        assert form(3, Content.simple(3, i), Content.simple(3, i)) == 2
    for p in (2, 3, 5):
        assert form(p, null_root(p), null_root(p)) == 0
    assert form(3, Content((1, 1, 0)), Content.simple(3, 1)) == 1


def test_q_poly_examples():
    a = Arith(5)
    assert q_poly(a, 3, 3).is_zero()
    assert q_poly(a, 0, 2).as_dict() == {(0, 0): 1}
    assert a.eps(1, 2) == 1
    assert q_poly(a, 1, 2).as_dict() == {(1, 0): 1, (0, 1): -1}
    assert str(q_poly(a, 1, 2)) == "u - v"


def test_q_poly_p2_uses_exponent_two():
    assert q_poly(Arith(2), 0, 1).as_dict() == {(2, 0): 1, (0, 2): -1}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_q_poly_swap_identity(p):
    # with eps_ij eps_ji = -1 the concrete identity is Q_ij(u,v) = Q_ji(v,u)
    a = Arith(p)
    for i in range(p):
        for j in range(p):
            assert q_poly(a, i, j) == q_poly(a, j, i).swap()


def test_default_signs():
    a = Arith(3)
    assert a.eps(0, 1) == 1 and a.eps(1, 0) == -1
    assert a.eps(2, 0) == 1 and a.eps(0, 2) == -1
    b = Arith(2)
    assert b.eps(0, 1) == 1 and b.eps(1, 0) == -1


def test_custom_signs():
    a = Arith(2, parse_signs(2, "custom:01=-1,10=1"))
    assert a.eps(0, 1) == -1
    assert parse_signs(3, "default") is None
    with pytest.raises(ConfigurationError):
        Arith(2, {(0, 1): 1, (1, 0): 1})
    with pytest.raises(ConfigurationError):
        parse_signs(2, "bogus")


def test_arith_validation():
    with pytest.raises(DomainError):
        Arith(1)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        Arith(4)
    assert any("not prime" in str(w.message) for w in caught)


def test_null_root():
    assert null_root(2).counts == (1, 1)
    assert null_root(3).counts == (1, 1, 1)
    assert null_root(7).height == 7


def test_content_parse_and_ops():
    c = Content.parse(3, "0:2,2:1")
    assert c.counts == (2, 0, 1)
    assert (c + Content.simple(3, 1)).counts == (2, 1, 1)
    assert c.to_json() == {"0": 2, "2": 1}
    with pytest.raises(DomainError):
        Content.parse(3, "0-2")
    with pytest.raises(DomainError):
        c - Content.simple(3, 1)


def test_bivariate_evaluate():
    poly = BivariatePoly.from_dict({(2, 0): 1, (0, 2): -1})
    assert poly.evaluate(3, 2) == 5
    assert poly.constant_term() == 0
