from itertools import product

import pytest

from dlnl.errors import TooManyAtoms
from dlnl.semantics import (
    LATTICES,
    all_valuations,
    co_imp,
    eval_formula,
    get_lattice,
    holds,
    refute,
)
from dlnl.syntax import Bot, JOf, LAtom, Minus, NLAtom, Plus, Zero, seq_c, seq_l

A, B = NLAtom("a"), NLAtom("b")


def test_adjunction_everywhere():
    for lat in LATTICES.values():
        for a, b, c in product(lat.elements, repeat=3):
            assert lat.leq(c, lat.join(a, b)) == lat.leq(co_imp(lat, c, b), a)


def test_co_imp_examples():
    for lat in LATTICES.values():
        for a in lat.elements:
            assert co_imp(lat, a, a) == lat.bottom
    c2 = get_lattice("chain2")
    assert co_imp(c2, 1, 0) == 1
    p2 = get_lattice("pow2")
    ab = frozenset({0, 1})
    assert co_imp(p2, ab, frozenset({0})) == frozenset({1})


def test_eval_basics():
    lat = get_lattice("chain3")
    v = {"a": 2, "b": 1}
    assert eval_formula(Zero(), v, lat) == 0
    assert eval_formula(JOf(A), v, lat) == 2
    assert eval_formula(Plus(A, B), v, lat) == 2
    assert eval_formula(Minus(A, B), v, lat) == 2  # least x with 2 <= x v 1


def test_holds():
    lat = get_lattice("chain2")
    assert holds(seq_c(Zero(), ()), {}, lat)
    assert not holds(seq_c(A, (B,)), {"a": 1, "b": 0}, lat)
    assert holds(seq_l(Bot(), (), ()), {}, lat)


def test_refute():
    c2 = get_lattice("chain2")
    v = refute(seq_c(A, (B,)), c2)
    assert v == {"a": 1, "b": 0}
    assert refute(seq_c(A, (A,)), c2) is None
    for lat in LATTICES.values():
        assert refute(seq_c(A, (Plus(A, B),)), lat) is None


def test_refute_atom_bound():
    s = seq_c(NLAtom("a"), (NLAtom("b"), NLAtom("c"), NLAtom("d"), NLAtom("e")))
    with pytest.raises(TooManyAtoms):
        refute(s, get_lattice("chain2"))


def test_eval_monotone_in_valuation():
    lat = get_lattice("chain3")
    f = Plus(Minus(A, B), JOf(B))
    vals = list(all_valuations({"a", "b"}, lat))
    for v1 in vals:
        for v2 in vals:
            if all(lat.leq(v1[k], v2[k]) for k in v1):
                # monotone: co_imp is monotone in its left argument and
                # antitone in the right, so only joint-monotone formulas
                # qualify; Plus/JOf of atoms is monotone, Minus(A,B) is
                # monotone in a for fixed b
                if v1["b"] == v2["b"]:
                    assert lat.leq(
                        eval_formula(f, v1, lat), eval_formula(f, v2, lat)
                    )
