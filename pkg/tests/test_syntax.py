import random

import pytest

from dlnl.errors import ParseError, SortError
from dlnl.syntax import (
    Bot,
    CoImp,
    HOf,
    JOf,
    LAtom,
    Minus,
    NLAtom,
    Par,
    Plus,
    Signature,
    Zero,
    context_shape,
    parse_formula,
    parse_sequent,
    print_formula,
    rank,
    seq_c,
    seq_l,
)


def test_parse_constructors():
    assert parse_formula("(J 0)", "linear") == JOf(Zero())
    assert parse_formula("(- (+ 0 0) 0)", "nonlinear") == Minus(
        Plus(Zero(), Zero()), Zero()
    )
    assert parse_formula("(par bot (sub bot bot))", "linear") == Par(
        Bot(), CoImp(Bot(), Bot())
    )


def test_print_forms():
    assert print_formula(Zero()) == "0"
    assert print_formula(HOf(Bot())) == "(H bot)"
    assert print_formula(JOf(Plus(Zero(), Zero()))) == "(J (+ 0 0))"


def test_rank():
    assert rank(Zero()) == 1
    assert rank(Plus(Zero(), Zero())) == 3
    assert rank(CoImp(Bot(), JOf(Zero()))) == 4
    assert rank(NLAtom("a")) == 0
    assert rank(Plus(NLAtom("a"), NLAtom("b"))) == 1


def test_context_shape():
    a, b = NLAtom("a"), NLAtom("b")
    assert context_shape(()) == ()
    assert context_shape((a, b)) == (a, b)
    assert context_shape((a, b)) != context_shape((b, a))


def test_sort_errors():
    with pytest.raises(SortError):
        parse_formula("(+ bot 0)", "nonlinear")
    with pytest.raises(SortError):
        parse_formula("(par 0 bot)", "linear")
    with pytest.raises(SortError):
        parse_formula("0", "linear")
    with pytest.raises(ParseError):
        parse_formula("(+ 0)", "nonlinear")
    with pytest.raises(ParseError):
        parse_formula("(+ 0 0", "nonlinear")


def test_signature_disjoint():
    with pytest.raises(SortError):
        Signature.make(["a"], ["a"])
    sig = Signature.make(["a"], ["p"])
    sig.check_formula(Plus(NLAtom("a"), HOf(LAtom("p"))))
    with pytest.raises(SortError):
        sig.check_formula(NLAtom("zz"))


def random_nl(rng, depth):
    if depth == 0:
        return rng.choice([Zero(), NLAtom("a"), NLAtom("b")])
    k = rng.randrange(5)
    if k == 0:
        return Zero()
    if k == 1:
        return Plus(random_nl(rng, depth - 1), random_nl(rng, depth - 1))
    if k == 2:
        return Minus(random_nl(rng, depth - 1), random_nl(rng, depth - 1))
    if k == 3:
        return HOf(random_l(rng, depth - 1))
    return rng.choice([NLAtom("a"), NLAtom("b")])


def random_l(rng, depth):
    if depth == 0:
        return rng.choice([Bot(), LAtom("p"), LAtom("q")])
    k = rng.randrange(5)
    if k == 0:
        return Bot()
    if k == 1:
        return Par(random_l(rng, depth - 1), random_l(rng, depth - 1))
    if k == 2:
        return CoImp(random_l(rng, depth - 1), random_l(rng, depth - 1))
    if k == 3:
        return JOf(random_nl(rng, depth - 1))
    return rng.choice([LAtom("p"), LAtom("q")])


def test_round_trip_random():
    rng = random.Random(20240817)
    for _ in range(300):
        f = random_nl(rng, rng.randrange(9))
        assert parse_formula(print_formula(f), "nonlinear") == f
        g = random_l(rng, rng.randrange(9))
        assert parse_formula(print_formula(g), "linear") == g


def test_rank_additive_random():
    rng = random.Random(7)
    for _ in range(200):
        f = random_nl(rng, rng.randrange(7))
        if isinstance(f, (Plus, Minus)):
            assert rank(f) == 1 + rank(f.left) + rank(f.right)
        elif isinstance(f, HOf):
            assert rank(f) == 1 + rank(f.body)
        elif isinstance(f, NLAtom):
            assert rank(f) == 0
        else:
            assert rank(f) >= 1


def test_sequent_round_trip():
    s = seq_c(NLAtom("a"), (Plus(Zero(), NLAtom("b")), Zero()))
    assert parse_sequent(str(s)) == s
    t = seq_l(LAtom("p"), (Bot(), JOf(Zero())), (NLAtom("a"),))
    assert parse_sequent(str(t)) == t


def test_sequent_sort_safety():
    with pytest.raises(SortError):
        seq_c(NLAtom("a"), (Bot(),))
    with pytest.raises(SortError):
        seq_l(LAtom("p"), (Zero(),), ())
