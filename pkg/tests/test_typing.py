import pytest

from dlnl.errors import BinderError, RuleMismatch, ShapeMismatch
from dlnl.nd import check_nd
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
    Zero,
)
from dlnl.terms import (
    App,
    Case,
    Dot,
    Eps,
    LetH,
    LetJ,
    Mkc,
    ParPair,
    Postp,
    Var,
)
from dlnl.typing import (
    TypingDerivation,
    check_typing,
    erase,
    jud_c,
    jud_l,
    parse_typing,
    pslot,
    t_bot_e,
    t_bot_i,
    t_contr,
    t_h_e_c,
    t_h_e_l,
    t_h_i,
    t_id_c,
    t_id_l,
    t_j_e,
    t_j_i,
    t_minus_e,
    t_minus_i,
    t_par_e,
    t_par_i,
    t_plus_e,
    t_plus_i1,
    t_sub_e,
    t_sub_i,
    t_weak,
    t_zero_i,
    typed,
    typing_to_sexpr_str,
)

A, B, C = NLAtom("a"), NLAtom("b"), NLAtom("c")
P, Q = LAtom("p"), LAtom("q")


def test_tl_id():
    d = t_id_l("x", P)
    assert check_typing(d) == jud_l("x", P, (typed(Var("x"), P),), ())


def test_tc_sub_i_display():
    # x:a |- t:a, psi1  and  y:b |- psi2  gives
    # x:a |- psi1, mkc(t,y): a-b, [y(t)/y]psi2
    p1 = t_weak(t_id_c("x", A), C)  # x:a |- x:a, eps:c
    p2 = t_weak(t_id_c("y", B), C)  # y:b |- y:b, eps:c
    d = t_minus_i(p1, p2, pos=0)
    j = check_typing(d)
    assert j.succ[0] == typed(Eps(), C)
    assert j.succ[1] == typed(Mkc(Var("x"), "y"), Minus(A, B))
    # the free y of the minor became the bound occurrence y(x)
    assert j.succ[2] == typed(App("y", Var("x")), B)
    assert j.succ[3] == typed(Eps(), C)


def test_tl_sub_i_shape_condition():
    p1 = t_weak(t_id_l("x", P), A)  # x:p |- x:p ; eps:a
    p2 = t_id_l("y", Q)  # y:q |- y:q ; .
    with pytest.raises(ShapeMismatch):
        t_sub_i(p1, p2)
    d = t_sub_i(t_id_l("x", P), t_id_l("y", Q))
    j = check_typing(d)
    assert j.lsucc[0] == typed(Mkc(Var("x"), "y"), CoImp(P, Q))
    assert j.lsucc[1] == typed(App("y", Var("x")), Q)


def test_tl_sub_e_postp_slot():
    major = t_sub_i(t_id_l("x", P), t_id_l("y", Q))  # x:p |- mkc: p-q, y(x):q
    minor = t_id_l("z", P)
    # minor must be z:p |- e2:q, ... : p alone cannot prove q; use the
    # canonical witness shape from sub-i on fresh variables
    minor = t_sub_i(t_id_l("z", P), t_id_l("w", Q))  # z:p |- mkc(z,w):p-q, w(z):q
    d = t_sub_e(major, minor, pos=0, cpos=1)
    j = check_typing(d)
    assert j.lsucc[0].type is None  # the postponed computation is untyped
    assert isinstance(j.lsucc[0].term, Postp)


def test_zero_i():
    major = t_weak(t_id_c("x", Zero()), A, at=0)  # x:0 |- eps:a, x:0
    minors = (t_id_c("y", A),)
    d = t_zero_i(major, minors, zpos=1)
    j = check_typing(d)
    # [false x / y] replaces the minor's subject occurrence
    assert j.succ[1].term == __import__("dlnl.terms", fromlist=["FalseOf"]).FalseOf(Var("x"))


def test_plus_e_case_context():
    # minors share the slot shape (a, b), additive reading
    major = t_plus_i1(t_id_c("x", A), B)  # x:a |- inl x : a+b
    m2 = t_weak(t_id_c("y", A), B)  # y:a |- y:a, eps:b
    m3 = t_weak(t_id_c("z", B), A, at=0)  # z:b |- eps:a, z:b
    d = t_plus_e(major, m2, m3)
    j = check_typing(d)
    assert all(isinstance(s.term, Case) for s in j.succ)
    assert [s.type for s in j.succ] == [A, B]
    with pytest.raises(ShapeMismatch):
        t_plus_e(major, m2, t_id_c("z", B))


def test_j_e_merge():
    major = t_j_i(t_weak(t_id_l("x", P), A), 0)  # x:p |- x:p, j(eps):Ja ; .
    major = t_weak(major, B)  # ... ; eps:b
    minor = t_weak(t_id_c("y", A), B)  # y:a |- y:a, eps:b : shape (a, b)
    # major nl shape must equal minor shape: (b,) vs (a, b): mismatch
    with pytest.raises(ShapeMismatch):
        t_j_e(major, minor)
    minor2 = t_id_c("y", B)  # y:b |- y:b : shape (b,)
    # J T slot is J a; minor subject must be a; so re-make the major with Jb
    major2 = t_weak(t_j_i(t_weak(t_id_l("x", P), B), 0), B)
    d = t_j_e(major2, t_id_c("y", B))
    j = check_typing(d)
    assert len(j.lsucc) == 1
    got = j.nlsucc[0].term
    assert isinstance(got, Dot)
    assert isinstance(got.right, LetJ)
    del minor2


def test_h_rules():
    d = t_h_i(t_id_l("x", P))
    j = check_typing(d)
    assert j.nlsucc[0].type == HOf(P)
    major = t_weak(t_h_i(t_id_l("x", P)), HOf(P))
    # h-e-l: major x:p |- . ; h(x):Hp, eps:Hp ; minor y:p |- . ; psi2
    minor = t_h_i(t_id_l("y", P))  # y:p |- . ; h(y):Hp
    d2 = t_h_e_l(major, minor, pos=0)
    j2 = check_typing(d2)
    assert len(j2.nlsucc) == 1
    assert isinstance(j2.nlsucc[0].term, Dot)
    assert isinstance(j2.nlsucc[0].term.right, LetH)


def test_par_rules():
    d = t_par_i(t_bot_i(t_id_l("x", P), Var("x")))
    j = check_typing(d)
    assert isinstance(j.lsucc[0].term, ParPair)
    major = t_par_i(t_bot_i(t_id_l("x", P), Var("x")))  # x:p |- par(x, connect): p par bot
    m2 = t_id_l("u", P)
    m3 = t_id_l("v", Bot())
    d2 = t_par_e(major, m2, m3)
    j2 = check_typing(d2)
    from dlnl.terms import Casel, Caser

    assert any(isinstance(s.term, Casel) for s in j2.lsucc)
    assert any(isinstance(s.term, Caser) for s in j2.lsucc)


def test_bot_rules():
    d = t_bot_i(t_id_l("x", P), Var("x"))
    j = check_typing(d)
    assert j.lsucc[1].type == Bot()
    d2 = t_bot_e(d)
    j2 = check_typing(d2)
    assert j2.lsucc[1].type is None


def test_ctx_merge():
    from dlnl.typing import ctx_merge

    assert ctx_merge((), ()) == ()
    s1 = (typed(Var("t1"), A),)
    s2 = (typed(Var("t2"), A),)
    assert ctx_merge(s1, s2) == (typed(Dot(Var("t1"), Var("t2")), A),)
    with pytest.raises(ShapeMismatch):
        ctx_merge(s1, (typed(Var("t2"), B),))


def test_p_normality_enforced():
    bad = TypingDerivation(
        "id",
        jud_c("x", A, (typed(Dot(Postp("y", Var("x"), Var("x")), Var("x")), A),)),
        (),
    )
    with pytest.raises(RuleMismatch):
        check_typing(bad)


def test_binder_freshness():
    p1 = t_id_c("x", A)
    p2 = t_id_c("x", B)  # subject clashes with the major's subject/free var
    with pytest.raises(BinderError):
        t_minus_i(p1, p2, 0)


def test_erasure_checks():
    d = t_minus_i(t_weak(t_id_c("x", A), C), t_weak(t_id_c("y", B), C))
    nd = erase(d)
    assert check_nd(nd)
    assert nd.conclusion.succ == tuple(s.type for s in d.conclusion.succ)


def test_typing_file_round_trip():
    d = t_minus_i(t_id_c("x", A), t_id_c("y", B))
    txt = typing_to_sexpr_str(d)
    d2 = parse_typing(txt)
    assert d2 == d
    check_typing(d2)
