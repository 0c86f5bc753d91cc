"""Cut reduction and elimination, including the four golden reducts."""

import pytest

from dlnl.cutelim import eliminate, expand_mcut, lower_rank, reduce_cut
from dlnl.errors import PreconditionViolated
from dlnl.sequent import (
    c_cr_r,
    c_cut,
    c_h_l,
    c_id,
    c_mcut,
    c_minus_l,
    c_minus_r,
    c_plus_l,
    c_plus_r1,
    c_plus_r2,
    c_wk_r,
    c_zero_l,
    check_proof,
    cut_rank,
    depth,
    is_cut_free,
    iter_nodes,
    l_c_cut,
    l_coimp_l,
    l_coimp_r,
    l_cut,
    l_h_r,
    l_id,
    l_j_l,
    l_j_r,
    l_par_l,
    l_par_r,
    l_wk,
    reorder_c,
    reorder_l,
    weaken_many_c,
)
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
    rank,
    same_up_to_exchange,
    seq_c,
    seq_l,
)

A, B = NLAtom("a"), NLAtom("b")
P, Q, R = LAtom("p"), LAtom("q"), LAtom("r")


def assert_reduct(out, wanted, bound):
    assert check_proof(out) == out.conclusion
    assert same_up_to_exchange(out.conclusion, wanted)
    assert cut_rank(out) <= bound


# ---------------------------------------------------------------------------
# the golden subtraction case:
#   pi1: A |- Delta1, B1 ; Psi1     pi2: B2 |- Delta2 ; Psi2
#   ----------------------------------------------------- coimp-r
#   A |- B1 sub B2, Delta1, Delta2 ; Psi1, Psi2
#                                     pi3: B1 |- B2, Delta ; Psi
#                                     -------------------------- coimp-l
#                                     B1 sub B2 |- Delta ; Psi
#   cut => A |- Delta1, Delta2, Delta ; Psi1, Psi2, Psi


def test_golden_sub_reduction():
    """Golden case: coimp-r over coimp-l reduces to the expected two cuts."""
    from dlnl.sequent import l_bot_r

    b1 = P
    b2 = Q
    s = CoImp(b1, b2)
    # pi1: p |-L bot, p ; a          (A = p, Delta1 = bot, B1 = p, Psi1 = a)
    pi1 = l_wk(reorder_l(l_bot_r(l_id(P)), (Bot(), P), None), A)
    # pi2: q |-L q, bot ; b          (B2 = q, Delta2 = q?? no: Delta2 = bot)
    pi2 = l_wk(l_bot_r(l_id(Q)), B)  # q |-L q, bot ; b
    # pi3: p |-L q, (q sub p), bot... keep it small: p |-L q, (p sub q)?? we
    # need  B1 |- B2, Delta ; Psi  =  p |-L q, Delta ; Psi.  From coimp-r:
    # p |-L (p sub q), q ; .  then exchange to  q, (p sub q).
    pi3 = reorder_l(l_coimp_r(l_id(P), l_id(Q)), (Q, CoImp(P, Q)), None)
    lhs = l_coimp_r(pi1, pi2)  # p |-L (p sub q), bot, q, bot ; a, b
    assert lhs.conclusion.lsucc[0] == s
    rhs = l_coimp_l(pi3)  # (p sub q) |-L (p sub q) ; .
    # arrange the cut: cut formula must be last in the linear zone
    lhs2 = reorder_l(lhs, lhs.conclusion.lsucc[1:] + (s,), None)
    cut = l_cut(lhs2, rhs)
    check_proof(cut)
    out = reduce_cut(lhs, rhs, s, kind=3)
    assert_reduct(out, cut.conclusion, rank(s))
    # the reduct is the expected two-cut tree: exactly two cuts, on B1, B2
    cuts = [n for n in iter_nodes(out) if n.rule in ("cut", "c-cut", "c-mcut", "mcut")]
    assert len(cuts) == 2
    from dlnl.cutelim import cut_formula_of_node

    assert sorted(str(cut_formula_of_node(c)) for c in cuts) == ["p", "q"]


def test_golden_j_case():
    """Golden case: j-r over j-l ends in a c-cut then contractions."""
    t = A
    s = JOf(t)
    # pi1: J a |-L . ; a, b   from  a |-C a, b?? subject must be linear.
    # Use  J a |-L . ; a  (j-l of id) weakened:  J a |-L . ; a, b
    pi1 = l_wk(l_j_l(c_id(t)), B)
    lhs = l_j_r(pi1)  # J a |-L J a ; b        (n = 0 other copies)
    rhs = l_j_l(c_wk_r(c_id(t), B))  # J a |-L . ; a, b
    out = reduce_cut(lhs, rhs, s, kind=3)
    want = seq_l(JOf(t), (), (B, A, B))
    assert_reduct(out, want, rank(s))
    # expected shape: a c-cut on t somewhere above contractions
    kinds = {n.rule for n in iter_nodes(out) if n.rule in ("cut", "c-cut")}
    assert kinds == {"c-cut"}


def test_golden_h_case():
    """Golden case: h-r over h-l ends in a linear cut then contractions."""
    s = HOf(P)
    # pi1: p |-L p ; b   =>  h-r gives  p |-L . ; H p, b
    pi1 = l_wk(l_id(P), B)
    lhs = l_h_r(pi1)
    rhs = c_h_l(l_h_r(l_id(P)))  # H p |-C H p
    # cut formula H p must be trailing in the non-linear zone of lhs
    lhs_arranged = reorder_l(lhs, None, (B, s))
    cut = l_c_cut(lhs_arranged, rhs)
    check_proof(cut)
    out = reduce_cut(lhs, rhs, s, kind=2)
    assert_reduct(out, cut.conclusion, rank(s))
    cuts = [n for n in iter_nodes(out) if n.rule in ("cut", "c-cut")]
    assert any(n.rule == "cut" for n in cuts)  # the linear cut on p


def test_golden_plus_case_n0():
    """+ right1 / + left with no substitute copies: cut then weakenings."""
    s = Plus(A, B)
    pi1 = c_wk_r(c_id(A), Zero())  # a |- a, 0
    lhs = c_plus_r1(pi1, B)  # a |- a+b, 0
    rhs = c_plus_l(c_id(A), c_id(B))  # a+b |- a, b
    out = reduce_cut(lhs, rhs, s, kind=1)
    want = seq_c(A, (Zero(), A, B))
    assert_reduct(out, want, rank(s))
    # expected: exactly one cut (on a), with weakenings below
    cuts = [n for n in iter_nodes(out) if n.rule == "cut"]
    assert len(cuts) == 1
    wks = [n for n in iter_nodes(out) if n.rule == "wk-r"]
    assert wks, "the n=0 reduct ends in weakenings"


def test_golden_plus_case_n_positive():
    """+ right1 / + left with one more copy: recurse, cut, contract."""
    s = Plus(A, B)
    pi1 = c_wk_r(c_wk_r(c_id(A), s), Zero())
    pi1 = reorder_c(pi1, (A, Zero(), s))  # a |- a, 0, (a+b)
    pi1 = reorder_c(pi1, (A, s, Zero()))
    lhs0 = reorder_c(pi1, (A, Zero(), s))
    # premise of plus-r1 must start with the injected part: a |- a, 0, s ->
    # we want conclusion a |- (a+b), 0, (a+b): premise a |- a, 0, (a+b)
    lhs = c_plus_r1(reorder_c(pi1, (A, Zero(), s)), B)
    del lhs0
    rhs = c_plus_l(c_id(A), c_id(B))  # a+b |- a, b
    out = reduce_cut(lhs, rhs, s, kind=1, n=2)
    want = seq_c(A, (Zero(), A, B))
    assert_reduct(out, want, rank(s))
    assert any(n.rule == "cr-r" for n in iter_nodes(out))


def test_reduce_cut_precondition():
    s = Plus(A, B)
    big = Minus(Plus(A, B), Plus(A, B))  # rank 3 > rank(s) = 1
    inner = c_cut(c_wk_r(c_id(A), big), c_minus_l(c_id(Plus(A, B))))  # a |- a
    noisy = c_wk_r(inner, s)  # a |- a, a+b with an embedded rank-4 cut
    assert cut_rank(noisy) > rank(s)
    rhs = c_plus_l(c_id(A), c_id(B))
    with pytest.raises(PreconditionViolated):
        reduce_cut(noisy, rhs, s, kind=1)


def test_expand_mcut():
    p2 = c_id(A)
    base = c_id(B)
    m0 = c_mcut(base, p2, 0)
    e0 = expand_mcut(m0)
    assert check_proof(e0) == m0.conclusion
    assert all(n.rule not in ("mcut", "c-mcut") for n in iter_nodes(e0))
    m1 = c_mcut(c_wk_r(base, A), p2, 1)
    e1 = expand_mcut(m1)
    assert check_proof(e1) == m1.conclusion
    # n = 1 yields the identical tree with a plain cut label
    assert e1.rule == "cut" and e1.premises == m1.premises
    stacked = c_wk_r(c_wk_r(base, A), A)
    m2 = c_mcut(stacked, p2, 2)
    e2 = expand_mcut(m2)
    assert check_proof(e2) == m2.conclusion
    assert all(n.rule != "mcut" for n in iter_nodes(e2))
    assert any(n.rule == "cut" for n in iter_nodes(e2))
    assert any(n.rule == "cr-r" for n in iter_nodes(e2))


def test_lower_rank_and_eliminate_simple():
    s = Plus(A, B)
    lhs = c_plus_r1(c_id(A), B)
    rhs = c_plus_l(c_id(A), c_id(B))
    p = c_cut(lhs, rhs)
    assert cut_rank(p) == rank(s) + 1
    q = lower_rank(p)
    assert cut_rank(q) < cut_rank(p)
    assert same_up_to_exchange(q.conclusion, p.conclusion)
    r = eliminate(p)
    assert is_cut_free(r)
    assert check_proof(r) == p.conclusion


def test_eliminate_cut_free_input_unchanged():
    p = c_plus_r1(c_id(A), B)
    assert eliminate(p) is p


def test_lower_rank_requires_cuts():
    with pytest.raises(PreconditionViolated):
        lower_rank(c_id(A))


def test_corpus_elimination_properties():
    """Random cut-bearing proofs: elimination preserves the endsequent, the
    per-pass rank strictly decreases, and the cut-free result agrees with
    bounded search and the lattice oracle."""
    from dlnl.gen import proof_corpus
    from dlnl.search import Exhausted, search
    from dlnl.semantics import LATTICES, refute
    from dlnl.syntax import sequent_atoms

    corpus = proof_corpus(seed=20250808, count=60, max_depth=7)
    assert len(corpus) >= 50
    for p in corpus:
        ranks = [cut_rank(p)]
        q = p
        while cut_rank(q) > 0:
            q = lower_rank(q)
            ranks.append(cut_rank(q))
        assert all(x > y for x, y in zip(ranks, ranks[1:]))
        assert is_cut_free(q)
        assert check_proof(q) == p.conclusion
        if len(sequent_atoms(p.conclusion)) <= 3:
            for name in ("chain2", "pow2"):
                assert refute(p.conclusion, LATTICES[name]) is None
        c = p.conclusion
        width = len(c.succ) if p.is_c() else len(c.lsucc) + len(c.nlsucc)
        if depth(q) <= 5 and width <= 4:
            found = search(p.conclusion, depth(q))
            assert not isinstance(found, Exhausted)


def test_eliminate_sub_case():
    """End-to-end: the subtraction golden case eliminates to cut rank 0."""
    from dlnl.sequent import l_bot_r

    s = CoImp(P, Q)
    pi1 = l_wk(reorder_l(l_bot_r(l_id(P)), (Bot(), P), None), A)
    pi2 = l_wk(l_bot_r(l_id(Q)), B)
    pi3 = reorder_l(l_coimp_r(l_id(P), l_id(Q)), (Q, CoImp(P, Q)), None)
    lhs = l_coimp_r(pi1, pi2)
    rhs = l_coimp_l(pi3)
    lhs2 = reorder_l(lhs, lhs.conclusion.lsucc[1:] + (s,), None)
    p = l_cut(lhs2, rhs)
    out = eliminate(p)
    assert is_cut_free(out)
    assert same_up_to_exchange(out.conclusion, p.conclusion)
