import pytest

from dlnl.errors import RuleMismatch
from dlnl.sequent import (
    Proof,
    c_cr_r,
    c_cut,
    c_ex,
    c_h_l,
    c_id,
    c_mcut,
    c_minus_l,
    c_minus_r,
    c_plus_l,
    c_plus_r1,
    c_wk_r,
    c_zero_l,
    check_proof,
    contract_trailing_block,
    cut_rank,
    depth,
    is_cut_free,
    l_c_cut,
    l_coimp_l,
    l_coimp_r,
    l_cut,
    l_h_r,
    l_id,
    l_j_l,
    l_j_r,
    l_wk,
    parse_proof,
    proof_to_sexpr_str,
    reorder_c,
    weaken_many_c,
)
from dlnl.syntax import (
    Bot,
    CoImp,
    LAtom,
    Minus,
    NLAtom,
    Plus,
    Signature,
    Zero,
    seq_c,
    seq_l,
)

A, B = NLAtom("a"), NLAtom("b")
P, Q = LAtom("p"), LAtom("q")
SIG = Signature.make(["a", "b"], ["p", "q"])


def test_id_leaf():
    p = c_id(A)
    assert check_proof(p, SIG) == seq_c(A, (A,))
    assert depth(p) == 1
    assert cut_rank(p) == 0


def test_one_rule_over_two_leaves_depth():
    p = c_plus_l(c_id(A), c_id(B))
    assert check_proof(p) == seq_c(Plus(A, B), (A, B))
    assert depth(p) == 2


def test_plus_l_schema_violation():
    bad = Proof("plus-l", seq_c(Plus(A, B), (A, A)), (c_id(A), c_id(A)))
    with pytest.raises(RuleMismatch):
        check_proof(bad)


def test_minus_rules():
    # a |- a  and  b |- b  give  a |- a-b, b  by minus-r
    p = c_minus_r(c_id(A), c_id(B))
    assert check_proof(p) == seq_c(A, (Minus(A, B), B))
    # a |- b, psi gives a-b |- psi
    q = c_minus_l(c_wk_r(c_id(A), A))  # a |- a, a -> wrong principal on purpose?
    assert check_proof(q) == seq_c(Minus(A, A), (A,))


def test_cut_and_rank():
    # cut on a: (b |- b, a is not derivable; use wk) b |- b then wk a; a |- a
    p1 = c_wk_r(c_id(B), A)  # b |- b, a
    p2 = c_id(A)
    p = c_cut(p1, p2)
    assert check_proof(p) == seq_c(B, (B, A))
    assert cut_rank(p) == 1  # atom cut formula has rank 0
    assert not is_cut_free(p)


def test_cut_rank_examples():
    # single cut on (sub bot bot): rank 3, cut rank 4
    f = CoImp(Bot(), Bot())
    p1 = l_wk(l_id(P), NLAtom("a"))
    del p1
    lhs = l_coimp_r(l_id(Bot()), l_bot := l_id(Bot()))  # bot |- (sub bot bot), bot
    del l_bot
    rhs = l_coimp_l(l_id(Bot()))  # (sub bot bot) |- . ; .  from bot |- bot
    from dlnl.sequent import reorder_l

    lhs2 = reorder_l(lhs, (lhs.conclusion.lsucc[1], lhs.conclusion.lsucc[0]), None)
    p = l_cut(lhs2, rhs)
    assert check_proof(p).subject == Bot()
    assert cut_rank(p) == 1 + 3
    assert f == CoImp(Bot(), Bot())


def test_two_cuts_max_rank():
    # cuts on formulas of rank 0 (atom) and 3 -> cut rank 4
    inner = c_cut(c_wk_r(c_id(B), A), c_id(A))  # rank-0 cut
    f = Plus(Zero(), Zero())  # rank 3
    left = c_wk_r(inner, f)  # b |- b, a, f
    right = weaken_many_c(c_plus_l(c_zero_l(), c_zero_l()), ())  # f |-
    p = c_cut(left, right)
    assert check_proof(p) == seq_c(B, (B, A))
    assert cut_rank(p) == 4


def test_mcut_n0_n2():
    p1 = c_id(B)  # b |- b
    p2 = c_id(A)  # a |- a
    m0 = c_mcut(p1, p2, 0)
    assert check_proof(m0) == seq_c(B, (B, A))
    stacked = c_wk_r(c_wk_r(c_id(B), A), A)  # b |- b, a, a
    m2 = c_mcut(stacked, p2, 2)
    assert check_proof(m2) == seq_c(B, (B, A))


def test_h_j_bridges():
    from dlnl.syntax import HOf, JOf

    # p |-L p ; .  --h-r-->  p |-L . ; H p  --h-l-->  H p |-C H p
    hr = l_h_r(l_id(P))
    assert check_proof(hr) == seq_l(P, (), (HOf(P),))
    hl = c_h_l(hr)
    assert check_proof(hl) == seq_c(HOf(P), (HOf(P),))
    # a |-C a  --j-l-->  J a |-L . ; a  --j-r-->  J a |-L J a ; .
    jl = l_j_l(c_id(A))
    assert check_proof(jl) == seq_l(JOf(A), (), (A,))
    jr = l_j_r(jl)
    assert check_proof(jr) == seq_l(JOf(A), (JOf(A),), ())


def test_subtraction_cut_depth():
    # the subtraction cut over axiom premises: one rule above each leaf
    # and the cut at the root, longest non-exchange path 3
    from dlnl.sequent import l_coimp_r, l_coimp_l, l_cut, reorder_l, strip_exchanges
    from dlnl.syntax import CoImp

    pi1, pi2, pi3 = l_id(P), l_id(P), l_id(P)
    sr = l_coimp_r(pi1, pi2)  # p |- (p sub p), p ; .
    sl = l_coimp_l(pi3)  # (p sub p) |- . ; .
    arranged = reorder_l(sr, (P, CoImp(P, P)), None)
    cut = l_cut(arranged, sl)
    check_proof(cut)
    assert depth(strip_exchanges(cut)) == 3


def test_exchange_closure():
    p = c_wk_r(c_wk_r(c_id(A), B), Zero())  # a |- a, b, 0
    q = c_ex(p, 0)
    assert check_proof(q) == seq_c(A, (B, A, Zero()))
    r = reorder_c(p, (Zero(), B, A))
    assert check_proof(r) == seq_c(A, (Zero(), B, A))


def test_contract_trailing_block():
    base = weaken_many_c(c_id(A), (B, Zero(), B, Zero()))  # a |- a, b, 0, b, 0
    p = contract_trailing_block(base, 2)
    assert check_proof(p) == seq_c(A, (A, B, Zero()))


def test_ccut():
    # p |-L p ; a  via wk; a |-C a: c-cut gives p |-L p ; a
    p1 = l_wk(l_id(P), A)
    p = l_c_cut(p1, c_id(A))
    assert check_proof(p) == seq_l(P, (P,), (A,))


def test_file_round_trip():
    p = c_cut(c_wk_r(c_id(B), A), c_id(A))
    txt = proof_to_sexpr_str(p)
    q = parse_proof(txt)
    assert q == p
    assert check_proof(q) == p.conclusion


def test_corrupted_file_fails_check():
    p = c_plus_r1(c_id(A), B)
    txt = proof_to_sexpr_str(p).replace("(+ a b)", "(+ b b)", 1)
    q = parse_proof(txt)
    with pytest.raises(RuleMismatch):
        check_proof(q)
