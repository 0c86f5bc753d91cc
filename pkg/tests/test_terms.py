import random

from dlnl.terms import (
    App,
    Case,
    Caser,
    Casel,
    ConnectBot,
    Dot,
    Eps,
    FalseOf,
    FreshNames,
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
    dot_of,
    free_vars,
    is_p_normal,
    parse_term,
    print_term,
    rename_binder,
    substitute,
    substitute_multiset,
    subterms,
)

x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")


def test_fv_equations():
    assert free_vars(Eps()) == frozenset()
    assert free_vars(Mkc(x, "y")) == {"x"}
    assert free_vars(Postp("x", ParPair(x, y), z)) == {"y", "z"}
    assert free_vars(PostpBot(ParPair(x, y))) == {"x", "y"}
    assert free_vars(App("y", x)) == {"x"}
    assert free_vars(Case(x, "a", Var("a"), "b", y)) == {"x", "y"}
    assert free_vars(LetJ("y", x, Dot(y, z))) == {"x", "z"}
    assert free_vars(LetH("y", x, Dot(y, z))) == {"x", "z"}
    assert free_vars(ConnectBot(x)) == {"x"}
    assert free_vars(JWrap(Inl(x))) == {"x"}
    assert free_vars(HWrap(Caser(x))) == {"x"}


def test_substitute_basics():
    assert substitute(Dot(y, z), "x", x) == Dot(y, z)
    assert substitute(y, "x", z) == z
    assert substitute(y, "x", FalseOf(x)) == FalseOf(y)
    # shadowing: the binder blocks substitution in the body, not the payload
    t = LetJ("x", x, Dot(x, z))
    assert substitute(w, "x", t) == LetJ("x", w, Dot(x, z))


def test_substitute_capture_avoiding():
    # [y/x] (letj y = z in (dot x y)) must rename the binder
    t = LetJ("y", z, Dot(x, y))
    out = substitute(y, "x", t)
    assert isinstance(out, LetJ)
    assert out.var != "y"
    assert out.body == Dot(y, Var(out.var))
    # mkc binders are judgment-scoped: [y/x] mkc(x, y) keeps the binder slot
    m = substitute(y, "x", Mkc(x, "y"))
    assert m == Mkc(y, "y")
    assert free_vars(m) == {"y"}


def test_fv_of_substitution_bound():
    rng = random.Random(11)
    for _ in range(500):
        t = random_term(rng, 4)
        s = random_term(rng, 3)
        out = substitute(s, "x", t)
        assert free_vars(out) <= (free_vars(t) - {"x"}) | free_vars(s)


def test_multiset_substitution_equations():
    s = Dot(x, App("k", x))
    parts = [y, z, w]
    out = substitute_multiset(parts, "x", s)
    expect = dot_of([substitute(p, "x", s) for p in parts])
    assert out == expect
    # p-term targets split into parallel copies
    p = Postp("q", x, x)
    outs = substitute_multiset([y, z], "x", p)
    assert outs == [substitute(y, "x", p), substitute(z, "x", p)]


def test_p_normality():
    assert is_p_normal(x)
    assert not is_p_normal(Dot(PostpBot(y), x))
    top = Postp("a", x, y)
    assert is_p_normal(top)  # only proper subterms disqualify
    assert not is_p_normal(Inl(top))


def test_rename_binder():
    ts = [Mkc(x, "y"), App("y", z), App("w", z)]
    out = rename_binder(ts, "y", "y2")
    assert out == [Mkc(x, "y2"), App("y2", z), App("w", z)]


def random_term(rng, depth):
    if depth == 0:
        return rng.choice([x, y, z, w, Eps()])
    k = rng.randrange(14)
    sub = lambda: random_term(rng, depth - 1)
    if k == 0:
        return Dot(sub(), sub())
    if k == 1:
        return FalseOf(sub())
    if k == 2:
        return App(rng.choice("xyzk"), sub())
    if k == 3:
        return Mkc(sub(), rng.choice("xyk"))
    if k == 4:
        return Inl(sub())
    if k == 5:
        return Case(sub(), rng.choice("xy"), sub(), rng.choice("zw"), sub())
    if k == 6:
        return HWrap(sub())
    if k == 7:
        return LetJ(rng.choice("xyk"), sub(), sub())
    if k == 8:
        return LetH(rng.choice("xyk"), sub(), sub())
    if k == 9:
        return Postp(rng.choice("xyk"), sub(), sub())
    if k == 10:
        return ParPair(sub(), sub())
    if k == 11:
        return Casel(sub())
    if k == 12:
        return JWrap(sub())
    return Inr(sub())


def test_round_trip_random_terms():
    rng = random.Random(23)
    for _ in range(400):
        t = random_term(rng, rng.randrange(5))
        assert parse_term(print_term(t)) == t


def test_fresh_names_deterministic():
    f1 = FreshNames({"v'1"})
    assert f1.fresh() == "v'2"
    f2 = FreshNames()
    assert f2.fresh("y") == "y'1"
    assert f2.fresh("y") == "y'2"


def test_subterm_count():
    t = Dot(Inl(x), Case(y, "a", Var("a"), "b", z))
    assert len(list(subterms(t))) == 7
