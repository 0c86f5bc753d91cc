import pytest

from dlnl.cutelim import eliminate
from dlnl.errors import AdditiveContextError, RuleMismatch
from dlnl.nd import (
    NDProof,
    admissible_cut,
    check_nd,
    nd_bot_e,
    nd_bot_i,
    nd_contr,
    nd_from_sexpr,
    nd_h_e_c,
    nd_h_i,
    nd_id,
    nd_j_e,
    nd_j_i,
    nd_minus_e,
    nd_minus_i,
    nd_par_e,
    nd_par_i,
    nd_plus_e,
    nd_plus_i1,
    nd_plus_i2,
    nd_sub_e,
    nd_sub_i,
    nd_to_seq,
    nd_to_sexpr_str,
    nd_weak,
    nd_zero_e,
    parse_nd_proof,
    seq_to_nd,
)
from dlnl.sequent import check_proof, is_cut_free
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
    same_up_to_exchange,
    seq_c,
    seq_l,
)

A, B, C = NLAtom("a"), NLAtom("b"), NLAtom("c")
P, Q = LAtom("p"), LAtom("q")


def test_id_leaf():
    p = nd_id(A)
    assert check_nd(p) == seq_c(A, (A,))


def test_minus_i():
    p = nd_minus_i(nd_id(A), nd_id(B))
    assert check_nd(p) == seq_c(A, (Minus(A, B), B))


def test_plus_e_additive_enforced():
    major = nd_id(Plus(A, B))
    m2 = nd_weak(nd_id(A), C)  # a |- a, c
    m3 = nd_id(B)  # b |- b : different shape
    with pytest.raises(AdditiveContextError):
        check_nd(NDProof("plus-e", seq_c(Plus(A, B), (A, C)), (major, m2, m3)))


def test_plus_e_ok():
    # minors share the succedent shape (a, b): the additive reading
    major = nd_id(Plus(A, B))
    m2 = nd_weak(nd_id(A), B)  # a |- a, b
    m3 = nd_weak(nd_id(B), A, at=0)  # b |- a, b
    p = nd_plus_e(major, m2, m3)
    assert check_nd(p) == seq_c(Plus(A, B), (A, B))


def test_h_bridge_round():
    # h-e merges the minor's zone with the major's remaining zone pointwise
    hi = nd_h_i(nd_id(P))  # p |-L . ; H p
    major = nd_weak(nd_id(HOf(P)), HOf(P))  # H p |- H p, H p
    p = nd_h_e_c(major, hi)
    assert check_nd(p) == seq_c(HOf(P), (HOf(P),))


def test_j_bridge():
    ji = nd_j_i(nd_weak(nd_id(P), A))  # p |-L p, J a?? no: needs T in nl zone
    del ji
    q = nd_j_i(nd_weak(nd_id(P), A), 0)  # p |-L p, J a ; .
    assert check_nd(q) == seq_l(P, (P, JOf(A)), ())


def test_weak_insert_positions():
    p = nd_weak(nd_id(A), B, at=0)
    assert check_nd(p) == seq_c(A, (B, A))
    q = nd_weak(nd_id(A), B)
    assert check_nd(q) == seq_c(A, (A, B))


def test_contr_nonadjacent():
    p = nd_weak(nd_weak(nd_id(A), B), A)  # a |- a, b, a
    q = nd_contr(p, 0, 2)
    assert check_nd(q) == seq_c(A, (A, B))


def test_bad_nd_rejected():
    bad = NDProof("minus-i", seq_c(A, (Minus(A, B), A)), (nd_id(A), nd_id(B)))
    with pytest.raises(RuleMismatch):
        check_nd(bad)


def test_zero_e():
    major = nd_weak(nd_id(Zero()), A, at=0)  # 0 |- a, 0
    p = nd_zero_e(major, (nd_id(A), nd_id(B)))
    assert check_nd(p) == seq_c(Zero(), (A, A, B))


def test_translation_intro_label_for_label():
    p = nd_plus_i1(nd_id(A), B)
    s = nd_to_seq(p)
    assert s.rule == "plus-r1"
    assert check_proof(s) == p.conclusion


def test_translation_round_trip_id():
    p = nd_id(A)
    assert seq_to_nd(nd_to_seq(p)) == p


def test_translations_preserve_endsequents():
    cases = [
        nd_minus_i(nd_id(A), nd_id(B)),
        nd_plus_i2(nd_weak(nd_id(A), B), C, 0),
        nd_bot_i(nd_id(P)),
        nd_par_i(nd_bot_i(nd_id(P))),
        nd_h_i(nd_id(P)),
        nd_j_i(nd_weak(nd_id(P), A), 0),
        nd_h_e_c(nd_weak(nd_id(HOf(P)), HOf(P)), nd_h_i(nd_id(P))),
        nd_minus_e(nd_id(Minus(A, B)), nd_minus_i(nd_id(A), nd_id(B)), tpos=1),
        nd_zero_e(nd_weak(nd_id(Zero()), A, at=0), (nd_id(A),)),
        nd_plus_e(nd_id(Plus(A, B)), nd_weak(nd_id(A), B), nd_weak(nd_id(B), A, at=0)),
        nd_sub_i(nd_bot_i(nd_id(P)), nd_id(Q)),
        nd_sub_e(nd_id(CoImp(P, Q)), nd_sub_i_minor(), cpos=1),
        nd_par_e(nd_id(Par(P, Q)), nd_id(P), nd_id(Q)),
        nd_bot_e(nd_bot_i(nd_id(P))),
        nd_j_e(nd_weak(nd_j_i(nd_weak(nd_id(P), A), 0), A), nd_id(A)),
    ]
    for p in cases:
        check_nd(p)
        s = nd_to_seq(p)
        assert check_proof(s) == p.conclusion, p.rule
        back = seq_to_nd(eliminate(s))
        assert check_nd(back)
        assert same_up_to_exchange(back.conclusion, p.conclusion), p.rule


def nd_sub_i_minor():
    # p |-L (p sub q), q ; .  from sub-i over identities
    return nd_sub_i(nd_id(P), nd_id(Q))


def test_admissible_cut_cc():
    p1 = nd_weak(nd_id(A), B)  # a |- a, b
    p2 = nd_plus_i1(nd_id(B), C)  # b |- b+c
    out = admissible_cut(p1, p2, "CC")
    assert check_nd(out)
    assert same_up_to_exchange(out.conclusion, seq_c(A, (A, Plus(B, C))))


def test_admissible_cut_against_id():
    p1 = nd_weak(nd_id(A), B)
    out = admissible_cut(p1, nd_id(B), "CC")
    assert check_nd(out)
    assert same_up_to_exchange(out.conclusion, p1.conclusion)


def test_admissible_cut_ll():
    p1 = nd_bot_i(nd_id(P))  # p |-L p, bot ; .
    p2 = nd_par_i(nd_bot_i(nd_id(Bot())))  # bot |-L bot par bot ; .
    out = admissible_cut(p1, p2, "LL")
    assert check_nd(out)
    assert same_up_to_exchange(
        out.conclusion, seq_l(P, (P, Par(Bot(), Bot())), ())
    )


def test_admissible_cut_lc():
    p1 = nd_weak(nd_id(P), A)  # p |-L p ; a
    p2 = nd_plus_i1(nd_id(A), B)  # a |- a+b
    out = admissible_cut(p1, p2, "LC")
    assert check_nd(out)
    assert same_up_to_exchange(out.conclusion, seq_l(P, (P,), (Plus(A, B),)))


def test_zero_e_translation_shape():
    """nd_to_seq maps zero-e to the iterated-cut spine."""
    from dlnl.sequent import iter_nodes

    for n in (1, 2, 3):
        minors = tuple(nd_id(NLAtom(x)) for x in ("a", "b", "c")[:n])
        major = nd_weak(nd_id(Zero()), A, at=0)  # 0 |- a, 0
        p = nd_zero_e(major, minors)
        s = nd_to_seq(p)
        assert check_proof(s) == p.conclusion
        cuts = [x for x in iter_nodes(s) if x.rule == "cut"]
        assert len(cuts) == n + 1  # one cut on 0, then n cuts on the minors
        formulas = sorted(str(c.premises[1].conclusion.subject) for c in cuts)
        assert "0" in formulas
        assert any(x.rule == "zero-l" for x in iter_nodes(s))


def test_translation_corpus_round_trips():
    from dlnl.gen import proof_corpus
    from dlnl.sequent import proof_size

    corpus = proof_corpus(seed=77, count=40, max_depth=6)
    done = 0
    for p in corpus:
        if proof_size(p) > 40:
            continue
        nd1 = seq_to_nd(eliminate(p))  # cut-free route
        check_nd(nd1)
        assert same_up_to_exchange(nd1.conclusion, p.conclusion)
        s = nd_to_seq(nd1)
        assert check_proof(s) == nd1.conclusion
        assert is_cut_free(eliminate(s))
        back = seq_to_nd(eliminate(s))
        check_nd(back)
        assert same_up_to_exchange(back.conclusion, nd1.conclusion)
        done += 1
    assert done >= 25


def test_seq_to_nd_handles_cuts():
    from dlnl.gen import proof_corpus
    from dlnl.sequent import proof_size

    corpus = [p for p in proof_corpus(seed=5, count=25, max_depth=5) if proof_size(p) <= 14]
    done = 0
    for p in corpus[:8]:
        ndp = seq_to_nd(p)  # exercises admissible_cut
        check_nd(ndp)
        assert same_up_to_exchange(ndp.conclusion, p.conclusion)
        done += 1
    assert done >= 4


def test_nd_file_round_trip():
    p = nd_minus_i(nd_id(A), nd_id(B))
    txt = nd_to_sexpr_str(p)
    q = parse_nd_proof(txt)
    assert q == p
    assert check_nd(q)
