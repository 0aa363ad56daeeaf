import random

import pytest

from klr_workbench.errors import DomainError, NotRestrictedError
from klr_workbench.mullineux import emptying_path, mullineux_crystal, mullineux_xu, xu_step
from klr_workbench.partitions import content, is_restricted, restricted_partitions

RANGES = [(2, 12), (3, 12), (5, 10)]


def restricted_upto(p, n):
    return [mu for m in range(n + 1) for mu in restricted_partitions(p, m)]


def test_reference_values():
    assert mullineux_crystal(3, (3, 2, 2, 1)) == (2, 1, 1, 1, 1, 1, 1)
    assert mullineux_xu(3, (3, 2, 2, 1)) == (2, 1, 1, 1, 1, 1, 1)
    assert mullineux_xu(3, (3, 3, 1, 1, 1)) == (3, 2, 1, 1, 1, 1)
    assert mullineux_xu(3, (3, 3, 2, 1, 1)) == (3, 3, 1, 1, 1, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_trivial_cases(p):
    assert mullineux_crystal(p, ()) == ()
    assert mullineux_crystal(p, (1,)) == (1,)
    assert mullineux_xu(p, ()) == ()
    assert xu_step(p, (1,)) == ((), 1)


def test_xu_step_small():
    assert xu_step(2, (2, 1)) == ((1,), 2)
    assert mullineux_xu(2, (2, 1)) == mullineux_crystal(2, (2, 1))


def test_xu_iteration_parts():
    mu = (3, 2, 2, 1)
    parts = []
    while mu:
        mu, j = xu_step(3, mu)
        parts.append(j)
    assert parts == [2, 1, 1, 1, 1, 1, 1]


def test_errors():
    with pytest.raises(NotRestrictedError):
        mullineux_xu(3, (3,))
    with pytest.raises(NotRestrictedError):
        mullineux_crystal(2, (2,))
    with pytest.raises(DomainError):
        xu_step(3, ())


@pytest.mark.parametrize("p, n", RANGES)
def test_two_algorithms_agree_and_involution(p, n):
    for mu in restricted_upto(p, n):
        m = mullineux_xu(p, mu)
        assert mullineux_crystal(p, mu) == m
        assert is_restricted(p, m)
        assert mullineux_xu(p, m) == mu
        c, cm = content(p, mu).counts, content(p, m).counts
        assert all(cm[i] == c[-i % p] for i in range(p))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_random_paths_agree(p):
    rng = random.Random(p)
    for mu in restricted_upto(p, 9):
        assert mullineux_crystal(p, mu, rng) == mullineux_crystal(p, mu)


def test_emptying_path_length():
    assert len(emptying_path(3, (3, 2, 2, 1))) == 8
    assert emptying_path(3, (1,)) == [0]
