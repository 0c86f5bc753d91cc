"""One concrete golden per reduction box, plus the case-of-case conversion."""

import pytest

from dlnl.errors import FuelExhausted, NotARedex
from dlnl.reduction import (
    RedexLocator,
    beta_step,
    commute_case_of_case,
    commute_step,
    find_redexes,
    normalize,
)
from dlnl.syntax import Bot, HOf, JOf, LAtom, Minus, NLAtom, Par, Plus
from dlnl.terms import (
    App,
    Case,
    Casel,
    Caser,
    ConnectBot,
    Dot,
    Eps,
    HWrap,
    Inl,
    Inr,
    JWrap,
    LetH,
    LetJ,
    Mkc,
    ParPair,
    Postp,
    PostpBot,
    Var,
)
from dlnl.typing import check_typing, jud_c, jud_l, pslot, typed

A, B, C = NLAtom("a"), NLAtom("b"), NLAtom("c")
P, Q = LAtom("p"), LAtom("q")
x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")


def test_bottom_box():
    j = jud_l("x", P, (pslot(PostpBot(ConnectBot(x))), typed(x, P)), ())
    out = beta_step(j, RedexLocator("bottom", "l", 0))
    assert out == jud_l("x", P, (typed(x, P),), ())


def test_lin_h_box():
    slot = typed(Dot(Eps(), LetH("y", HWrap(Var("w")), Inl(y))), A)
    j = jud_l("x", Q, (typed(x, Q),), (slot,))
    out = beta_step(j, RedexLocator("lin-h", "n", 0))
    assert out.nlsucc == (typed(Dot(Eps(), Inl(Var("w"))), A),)
    assert out.lsucc == j.lsucc


def test_lin_j_box():
    slot = typed(Dot(Eps(), LetJ("y", JWrap(Var("t0")), Dot(y, y))), A)
    j = jud_l("x", Q, (typed(x, Q),), (slot,))
    out = beta_step(j, RedexLocator("lin-j", "n", 0))
    assert out.nlsucc == (typed(Dot(Eps(), Dot(Var("t0"), Var("t0"))), A),)


def test_lin_sub_box():
    mk = Mkc(x, "y")
    e2 = Casel(z)  # mentions the postp binder z
    j = jud_l(
        "x",
        Q,
        (
            typed(x, Q),
            pslot(Postp("z", e2, mk)),
            typed(App("y", x), Q),  # [y(e1)/y] occurrence
            typed(Caser(App("z", mk)), Q),  # [z(mkc(e1,y))/z] occurrence
        ),
        (typed(Eps(), A),),
    )
    out = beta_step(j, RedexLocator("lin-sub", "l", 1))
    assert out.lsucc == (
        typed(x, Q),
        typed(Casel(x), Q),  # [e1/z]e2
        typed(Caser(x), Q),  # e1 for the z occurrence
    )
    assert out.nlsucc == j.nlsucc


def test_lin_par_box():
    pair = ParPair(x, ConnectBot(x))
    j = jud_l(
        "x",
        P,
        (typed(Casel(pair), P), typed(Caser(pair), Bot()), typed(x, P)),
        (),
    )
    out = beta_step(j, RedexLocator("lin-par", "l", 0))
    assert out.lsucc == (typed(x, P), typed(ConnectBot(x), Bot()), typed(x, P))


def test_nl_sub_box():
    mk = Mkc(x, "y")
    j = jud_c(
        "x",
        A,
        (
            typed(Eps(), C),
            pslot(Postp("z", Dot(z, Eps()), mk)),
            typed(App("y", x), B),
            typed(Inl(App("z", mk)), Plus(A, B)),
        ),
    )
    out = beta_step(j, RedexLocator("nl-sub", "c", 1))
    assert out.succ == (
        typed(Eps(), C),
        typed(Dot(x, Eps()), B),  # [[t1/z]t2/y]
        typed(Inl(x), Plus(A, B)),  # [t1/z]
    )


def test_coprod_l_box():
    grp = lambda l, r: Case(Inl(x), "y", l, "z", r)
    j = jud_c(
        "x",
        A,
        (typed(Eps(), C), typed(grp(Dot(y, Eps()), z), A), typed(grp(Eps(), z), B)),
    )
    out = beta_step(j, RedexLocator("coprod-l", "c", 1))
    assert out.succ == (
        typed(Eps(), C),
        typed(Dot(x, Eps()), A),
        typed(Eps(), B),
    )


def test_coprod_r_box():
    grp = lambda l, r: Case(Inr(x), "y", l, "z", r)
    j = jud_c("x", A, (typed(grp(y, Dot(z, z)), A),))
    out = beta_step(j, RedexLocator("coprod-r", "c", 0))
    assert out.succ == (typed(Dot(x, x), A),)


def test_nl_h_box():
    payload = LetH("x0", Var("t0"), HWrap(Var("e0")))
    j = jud_c("x", HOf(P), (typed(LetH("z", payload, Dot(z, Eps())), A),))
    out = beta_step(j, RedexLocator("nl-h", "c", 0))
    assert out.succ == (
        typed(LetH("x0", Var("t0"), Dot(Var("e0"), Eps())), A),
    )


def test_contr_d_e_box():
    grp = Case(Dot(Var("t1"), Var("t2")), "y", y, "z", Eps())
    j = jud_c("x", A, (typed(Eps(), C), typed(grp, A)))
    out = beta_step(j, RedexLocator("contr-d-e", "c", 1))
    a = Case(Var("t1"), "y", y, "z", Eps())
    b = Case(Var("t2"), "y", y, "z", Eps())
    assert out.succ == (typed(Eps(), C), typed(Dot(a, b), A))


def test_contr_d_i_boxes():
    j = jud_c("x", A, (typed(Inl(Dot(Var("t1"), Var("t2"))), Plus(A, B)),))
    out = beta_step(j, RedexLocator("contr-d-i1", "c", 0))
    assert out.succ == (typed(Dot(Inl(Var("t1")), Inl(Var("t2"))), Plus(A, B)),)
    j2 = jud_c("x", A, (typed(Inr(Dot(Var("t1"), Var("t2"))), Plus(B, A)),))
    out2 = beta_step(j2, RedexLocator("contr-d-i2", "c", 0))
    assert out2.succ == (typed(Dot(Inr(Var("t1")), Inr(Var("t2"))), Plus(B, A)),)


def test_contr_sub_i_box():
    d = Dot(Var("t1"), Var("t2"))
    j = jud_c(
        "x",
        A,
        (typed(Mkc(d, "y"), Minus(A, B)), typed(Inr(App("y", d)), Plus(C, B))),
    )
    out = beta_step(j, RedexLocator("contr-sub-i", "c", 0))
    assert out.succ[0] == typed(
        Dot(Mkc(Var("t1"), "y"), Mkc(Var("t2"), "y")), Minus(A, B)
    )
    assert out.succ[1] == typed(
        Dot(Inr(App("y", Var("t1"))), Inr(App("y", Var("t2")))), Plus(C, B)
    )


def test_contr_sub_e_box():
    d = Dot(Var("t1"), Var("t2"))
    j = jud_c(
        "x",
        A,
        (typed(Eps(), C), pslot(Postp("y", Var("s"), d)), typed(App("y", d), B)),
    )
    out = beta_step(j, RedexLocator("contr-sub-e", "c", 1))
    # the whole succedent doubles pointwise; the p-slot splits in two
    assert out.succ == (
        typed(Dot(Eps(), Eps()), C),
        pslot(Postp("y", Var("s"), Var("t1"))),
        pslot(Postp("y", Var("s"), Var("t2"))),
        typed(Dot(App("y", Var("t1")), App("y", Var("t2"))), B),
    )


def test_contr_h_e_box():
    d = Dot(Var("t1"), Var("t2"))
    j = jud_c("x", A, (typed(Eps(), C), typed(LetH("y", d, Inl(y)), Plus(A, B))))
    out = beta_step(j, RedexLocator("contr-h-e", "c", 1))
    assert out.succ[1] == typed(
        Dot(LetH("y", Var("t1"), Inl(y)), LetH("y", Var("t2"), Inl(y))), Plus(A, B)
    )


def test_weak_d_e_box():
    grp = lambda l, r: Case(Eps(), "y", l, "z", r)
    j = jud_c("x", A, (typed(Eps(), C), typed(grp(y, z), A), typed(grp(Eps(), z), B)))
    out = beta_step(j, RedexLocator("weak-d-e", "c", 1))
    assert out.succ == (typed(Eps(), C), typed(Eps(), A), typed(Eps(), B))


def test_weak_d_i_boxes():
    j = jud_c("x", A, (typed(Inl(Eps()), Plus(A, B)),))
    out = beta_step(j, RedexLocator("weak-d-i1", "c", 0))
    assert out.succ == (typed(Eps(), Plus(A, B)),)
    j2 = jud_c("x", A, (typed(Inr(Eps()), Plus(A, B)),))
    out2 = beta_step(j2, RedexLocator("weak-d-i2", "c", 0))
    assert out2.succ == (typed(Eps(), Plus(A, B)),)


def test_weak_sub_i_box():
    j = jud_c(
        "x",
        A,
        (typed(Mkc(Eps(), "y"), Minus(A, B)), typed(Dot(App("y", Eps()), x), B)),
    )
    out = beta_step(j, RedexLocator("weak-sub-i", "c", 0))
    assert out.succ == (
        typed(Eps(), Minus(A, B)),
        typed(Dot(Eps(), x), B),
    )


def test_weak_sub_e_box():
    j = jud_c(
        "x",
        A,
        (typed(Eps(), C), pslot(Postp("y", Var("s"), Eps())), typed(App("y", Eps()), B)),
    )
    out = beta_step(j, RedexLocator("weak-sub-e", "c", 1))
    assert out.succ == (typed(Eps(), C), typed(Eps(), B))


def test_weak_h_e_box():
    j = jud_c("x", A, (typed(LetH("y", Eps(), Dot(y, Eps())), B),))
    out = beta_step(j, RedexLocator("weak-h-e", "c", 0))
    assert out.succ == (typed(Dot(Eps(), Eps()), B),)


def test_not_a_redex():
    j = jud_c("x", A, (typed(x, A),))
    with pytest.raises(NotARedex):
        beta_step(j, RedexLocator("coprod-l", "c", 0))
    assert find_redexes(j) == []


def test_normalize_fuel():
    j = jud_c("x", A, (typed(Inl(Eps()), Plus(A, B)),))
    with pytest.raises(FuelExhausted):
        normalize(j, 0)
    out, steps = normalize(j, 10)
    assert steps == 1
    assert out.succ == (typed(Eps(), Plus(A, B)),)


def test_normalize_already_normal():
    j = jud_c("x", A, (typed(x, A),))
    out, steps = normalize(j, 5)
    assert out == j and steps == 0


def test_normalize_deterministic():
    j = jud_c(
        "x",
        A,
        (
            typed(Inl(Dot(Var("t1"), Var("t2"))), Plus(A, B)),
            typed(Case(Inl(x), "y", y, "z", z), A),
        ),
    )
    assert normalize(j, 50) == normalize(j, 50)


# ---------------------------------------------------------------------------
# the case-of-case conversion and its beta follow-ups


def case_of_case_derivation():
    from dlnl.typing import t_id_c, t_plus_e, t_plus_i1, t_plus_i2, t_weak

    maj0 = t_plus_i1(t_id_c("x", A), B)  # x:a |- inl x : a+b
    n1 = t_plus_i1(t_id_c("y", A), B)  # y:a |- inl y : a+b
    n2 = t_plus_i2(t_id_c("z", B), A)  # z:b |- inr z : a+b
    inner = t_plus_e(maj0, n1, n2, 0)
    m4 = t_weak(t_id_c("v1", A), B)  # v1:a |- v1:a, eps:b
    m5 = t_weak(t_id_c("v2", B), A, at=0)  # v2:b |- eps:a, v2:b
    outer = t_plus_e(inner, m4, m5, 0)
    return outer, (maj0, n1, n2, m4, m5)


def test_case_of_case_commute_and_betas():
    outer, (maj0, n1, n2, m4, m5) = case_of_case_derivation()
    check_typing(outer)
    # the outer scrutinee is itself a case
    assert isinstance(outer.conclusion.succ[0].term.scrut, Case)
    converted = commute_step(outer)
    check_typing(converted)
    # commuted shape: the new root eliminates the inner sum directly
    assert converted.rule == "plus-e"
    assert converted.premises[0] is maj0
    pi1, pi2 = converted.premises[1], converted.premises[2]
    # each branch now holds  case (inl/inr _) of v1..., v2...
    j1 = pi1.conclusion
    assert isinstance(j1.succ[0].term, Case) and isinstance(
        j1.succ[0].term.scrut, Inl
    )
    # beta follow-up on the left branch: case (inl y) of v1... -> [y/v1]
    locs = [r for r in find_redexes(j1) if r.tag == "coprod-l"]
    out1 = beta_step(j1, locs[0])
    assert out1.succ == (typed(Var("y"), A), typed(Eps(), B))
    j2 = pi2.conclusion
    locs = [r for r in find_redexes(j2) if r.tag == "coprod-r"]
    out2 = beta_step(j2, locs[0])
    assert out2.succ == (typed(Eps(), A), typed(Var("z"), B))


def test_judgment_level_case_of_case():
    inner = Case(x, "y", Inl(y), "z", Inr(z))
    j = jud_c("x", Plus(A, B), (typed(Case(inner, "v1", Var("v1"), "v2", Eps()), A),))
    out = commute_case_of_case(j)
    got = out.succ[0].term
    assert got == Case(
        x,
        "y",
        Case(Inl(y), "v1", Var("v1"), "v2", Eps()),
        "z",
        Case(Inr(z), "v1", Var("v1"), "v2", Eps()),
    )
