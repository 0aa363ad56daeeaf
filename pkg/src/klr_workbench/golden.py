"""Reference values checked by ``klr-workbench selftest``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cartan import Arith, Content, cartan_entry, form, null_root, q_poly
from .characters import FormalCharacter, column_char, jacobi_trudi, shuffle
from .crystal import signature
from .dims import branch_table
from .garnir import garnir_data, garnir_nodes
from .klrmod import character, hook_module, word_graph_component
from .mullineux import mullineux_crystal, mullineux_xu
from .partitions import content, p_segments, removable_nodes, residue
from .qlaurent import LaurentPoly, quantum_int
from .roots import ConvexPreorder, imaginary_root, preorder_cmp, simple_root
from .tableaux import (
    bruhat_leq,
    column_reading_tableau,
    leading_tableau,
    residue_sequence,
    standard_tableaux,
)


@dataclass(frozen=True)
class GoldenItem:
    name: str
    check: Callable[[], bool]

    def run(self) -> tuple[bool, str]:
        try:
            return bool(self.check()), ""
        except Exception as exc:  # a crash is a failure, reported with its message
            return False, f"{type(exc).__name__}: {exc}"


def _q(terms: dict[int, int]) -> LaurentPoly:
    return LaurentPoly(terms)


def hook_character_expected(p: int, i: int) -> dict[tuple, LaurentPoly]:
    """Closed-form characters of the hook modules for colors 1, p-1 and p-2."""
    one = LaurentPoly.constant(1)
    if i == 1:
        return {(0,) + tuple(range(p - 1, 0, -1)): one}
    if i == p - 1:
        return {tuple(range(p)): one}
    if i == p - 2 and p > 3:
        words = {}
        for r in range(p - 2):
            w = tuple(range(r + 1)) + (p - 1,) + tuple(range(r + 1, p - 1))
            words[w] = one
        return words
    raise ValueError(f"no closed form for color {i} at p={p}")


def _hook_ok(p: int) -> bool:
    a = Arith(p)
    colors = {1, p - 1} | ({p - 2} if p > 3 else set())
    return all(character(hook_module(a, i)) == hook_character_expected(p, i) for i in colors)


def _branch_ok() -> bool:
    mu = (3, 3, 2, 1, 1)
    t2 = branch_table(3, mu, 2, "e")
    got = {e.target: e.multiplicity for e in t2.entries}
    expected = {(3, 3, 2, 1): quantum_int(1), (3, 3, 1, 1, 1): quantum_int(2), (3, 2, 1, 1, 1, 1): quantum_int(1)}
    vanish = branch_table(3, mu, 0, "e").vanishes and branch_table(3, mu, 1, "e").vanishes
    return got == expected and vanish and t2.ungraded_total() == 4


def _garnir_ok() -> bool:
    g = garnir_data(2, (7, 7, 4, 1), (2, 3))
    rows_ok = [len({r for r, _ in b}) == 1 and b[0][0] for b in g.bricks] == [3, 2, 2]
    return (
        (g.u, g.v, g.k, g.f, g.d) == (10, 17, 3, 2, 11)
        and rows_ok
        and g.coset_rep_words() == [[], [2], [1, 2]]
        and g.gar_set[-1] == g.garnir_tableau
        and g.gar_set[0] == g.minimal_tableau
    )


def _jt_ok() -> bool:
    expected = FormalCharacter(2, {(0, 1, 0, 1): 1, (0, 0, 1, 1): quantum_int(2) * quantum_int(2)})
    # the p=2 identity is bar-invariant, so also pin the direction of the q-power
    pin = shuffle(FormalCharacter.word(3, (0,)), FormalCharacter.word(3, (1,)))
    expected_pin = FormalCharacter(3, {(0, 1): 1, (1, 0): LaurentPoly.monomial(1)})
    return jacobi_trudi(Arith(2), (2,)) == expected and pin == expected_pin


def _signature_ok() -> bool:
    mu = (3, 3, 2, 1, 1)
    s2, s1, s0 = (signature(3, mu, i) for i in (2, 1, 0))
    removable1 = removable_nodes(mu, 3, 1)
    return s2.epsilon == 2 and s0.epsilon == 0 and removable1 and not (set(removable1) & set(s1.normal_nodes()))


def _preorder_ok() -> bool:
    o = ConvexPreorder.default(3, 6)
    return (
        preorder_cmp(o, simple_root(3, 1), imaginary_root(3)) == "Greater"
        and preorder_cmp(o, simple_root(3, 0), imaginary_root(3)) == "Less"
        and preorder_cmp(o, imaginary_root(3), imaginary_root(3, 2)) == "Equivalent"
    )


GOLDEN: list[GoldenItem] = [
    GoldenItem("quantum_int(2) = q^-1 + q", lambda: quantum_int(2) == _q({-1: 1, 1: 1})),
    GoldenItem("cartan entries", lambda: (cartan_entry(5, 2, 2), cartan_entry(2, 0, 1), cartan_entry(5, 0, 2)) == (2, -2, 0)),
    GoldenItem("form (a_i, a_i) = 2", lambda: form(3, Content.simple(3, 1), Content.simple(3, 1)) == 2),
    GoldenItem("Q polynomials", lambda: (
        q_poly(Arith(5), 1, 1).is_zero()
        and q_poly(Arith(5), 0, 2).as_dict() == {(0, 0): 1}
        and q_poly(Arith(5), 1, 2).as_dict() == {(1, 0): 1, (0, 1): -1}
    )),
    GoldenItem("residue of (5,1) at p=5", lambda: residue(5, (5, 1)) == 1),
    GoldenItem("content of (2,1,1,1) at p=5 is delta", lambda: content(5, (2, 1, 1, 1)) == null_root(5)),
    GoldenItem("removable 2-nodes of (3^2,2,1^2)", lambda: removable_nodes((3, 3, 2, 1, 1), 3, 2) == [(5, 1), (3, 2)]),
    GoldenItem("3-segments of (3,2,2,1)", lambda: p_segments(3, (3, 2, 2, 1)) == [[(4, 1), (3, 1), (3, 2)], [(1, 3)]]),
    GoldenItem("leading tableaux", lambda: (
        leading_tableau((3, 2, 2, 1)).rows == ((1, 2, 3), (4, 5), (6, 7), (8,))
        and leading_tableau((7, 7, 4, 1)).rows[2] == (15, 16, 17, 18)
    )),
    GoldenItem("column word of (1^5) at p=5", lambda: residue_sequence(5, column_reading_tableau((1,) * 5)) == (0, 4, 3, 2, 1)),
    GoldenItem("leading tableau is Bruhat-minimal", lambda: all(
        bruhat_leq(leading_tableau((3, 2, 1)), t) for t in standard_tableaux((3, 2, 1))
    )),
    GoldenItem("(2,3) is a Garnir node of (7,7,4,1)", lambda: (2, 3) in garnir_nodes((7, 7, 4, 1))),
    GoldenItem("signatures of (3^2,2,1^2) at p=3", _signature_ok),
    GoldenItem("Mullineux of (3,2,2,1) at p=3", lambda: (
        mullineux_xu(3, (3, 2, 2, 1)) == mullineux_crystal(3, (3, 2, 2, 1)) == (2, 1, 1, 1, 1, 1, 1)
    )),
    GoldenItem("Mullineux of (3^2,1^3) and (3^2,2,1^2) at p=3", lambda: (
        mullineux_xu(3, (3, 3, 1, 1, 1)) == (3, 2, 1, 1, 1, 1)
        and mullineux_xu(3, (3, 3, 2, 1, 1)) == (3, 3, 1, 1, 1, 1)
    )),
    GoldenItem("branching of (3^2,2,1^2) at p=3", _branch_ok),
    GoldenItem("Garnir data of (7,7,4,1) at (2,3), p=2", _garnir_ok),
    GoldenItem("hook characters p=3", lambda: _hook_ok(3)),
    GoldenItem("hook characters p=5", lambda: _hook_ok(5)),
    GoldenItem("hook characters p=7", lambda: _hook_ok(7)),
    GoldenItem("word graph of (0,1,0,1) at p=2", lambda: word_graph_component(Arith(2), (0, 1, 0, 1)) == {(0, 1, 0, 1)}),
    GoldenItem("column characters at p=2", lambda: all(
        column_char(Arith(2), n) == FormalCharacter.word(2, (0, 1) * n) for n in range(1, 5)
    )),
    GoldenItem("Jacobi-Trudi at p=2 for (2)", _jt_ok),
    GoldenItem("convex preorder anchors", _preorder_ok),
]


def run_golden() -> list[tuple[str, bool, str]]:
    return [(item.name, *item.run()) for item in GOLDEN]
