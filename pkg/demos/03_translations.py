"""Natural deduction and the two translations.

Introductions match right rules one for one; eliminations translate to the
matching left rule under a cut, so nd_to_seq can create cuts and a round
trip through eliminate yields cut-free sequent proofs.  The admissible cut
composes two ND derivations by cutting in the sequent calculus and
translating back.
"""

from dlnl.cutelim import eliminate
from dlnl.nd import (
    admissible_cut,
    check_nd,
    nd_id,
    nd_minus_i,
    nd_plus_e,
    nd_plus_i1,
    nd_to_seq,
    nd_weak,
    nd_zero_e,
    seq_to_nd,
)
from dlnl.sequent import check_proof, cut_rank, iter_nodes
from dlnl.syntax import NLAtom, Plus, Zero

a, b, c = NLAtom("a"), NLAtom("b"), NLAtom("c")

# coproduct elimination is additive: both minors share the succedent shape
major = nd_id(Plus(a, b))
m2 = nd_weak(nd_id(a), b)
m3 = nd_weak(nd_id(b), a, at=0)
nd = nd_plus_e(major, m2, m3)
print("ND checked:", check_nd(nd))

s = nd_to_seq(nd)
print("sequent image checked:", check_proof(s))
print("cut rank of the image:", cut_rank(s))
back = seq_to_nd(eliminate(s))
print("round trip checked:", check_nd(back))

# the zero elimination elaborates to one zero-l axiom and a spine of cuts
zero = nd_zero_e(nd_weak(nd_id(Zero()), a, at=0), (nd_id(a), nd_id(b)))
spine = nd_to_seq(zero)
cuts = [n.premises[1].conclusion.subject for n in iter_nodes(spine) if n.rule == "cut"]
print("\nzero-elim spine cut formulas:", [str(f) for f in cuts])

# substitution of derivations through the admissible cut
p1 = nd_weak(nd_id(a), b)  # a |- a, b
p2 = nd_plus_i1(nd_id(b), c)  # b |- b+c
print("\nadmissible cut:", check_nd(admissible_cut(p1, p2, "CC")))
