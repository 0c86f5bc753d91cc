"""Build a few sequent proofs by hand and run them through the checker.

The non-linear judgment  S |-C Psi  has one subject and a multiset of
conclusions; the linear judgment  A |-L Delta ; Psi  splits its conclusions
into a linear and a non-linear zone.  Proof objects store every node's
conclusion, and check_proof re-derives each one from the rule schema.
"""

from dlnl.sequent import (
    c_cut,
    c_id,
    c_minus_r,
    c_plus_l,
    c_plus_r1,
    c_wk_r,
    check_proof,
    cut_rank,
    depth,
    l_h_r,
    l_id,
    l_j_l,
    l_j_r,
    proof_to_sexpr_str,
    c_h_l,
)
from dlnl.syntax import NLAtom, LAtom

a, b = NLAtom("a"), NLAtom("b")
p = LAtom("p")

# the subtraction axiom shape: a |- (a - b), b
witness = c_minus_r(c_id(a), c_id(b))
print("checked:", check_proof(witness))

# a cut on a + b, the kind cut elimination removes
lhs = c_plus_r1(c_id(a), b)  # a |- a+b
rhs = c_plus_l(c_id(a), c_id(b))  # a+b |- a, b
cut = c_cut(lhs, rhs)
print("checked:", check_proof(cut))
print("depth:", depth(cut), " cut rank:", cut_rank(cut))

# the two shifts compose into the why-not monad unit and counit
unit = l_j_r(l_h_r(l_id(p)))  # p |-L J (H p) ; .
print("checked:", check_proof(unit))
counit = c_h_l(l_j_l(c_id(a)))  # H (J a) |-C a
print("checked:", check_proof(counit))

print()
print(proof_to_sexpr_str(cut))
