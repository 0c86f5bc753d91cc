"""Cut elimination, from a single reduction step to the full fixpoint.

reduce_cut performs one application of the cut reduction procedure: given
the two premises of a cut on s, both with cut rank at most rank(s), it
builds a proof of the cut's conclusion whose cut rank stays below rank(s).
lower_rank applies it wherever a maximal-rank cut occurs, and eliminate
iterates until the proof is cut-free.
"""

from dlnl.cutelim import eliminate, lower_rank, reduce_cut
from dlnl.gen import proof_corpus
from dlnl.sequent import check_proof, cut_rank, depth, proof_size
from dlnl.sequent import c_id, c_plus_l, c_plus_r1, c_cut
from dlnl.syntax import NLAtom, Plus, rank

a, b = NLAtom("a"), NLAtom("b")

s = Plus(a, b)
lhs = c_plus_r1(c_id(a), b)
rhs = c_plus_l(c_id(a), c_id(b))
out = reduce_cut(lhs, rhs, s, kind=1)
print("reduct endsequent:", out.conclusion)
print("rank bound:", cut_rank(out), "<=", rank(s))

proof = c_cut(lhs, rhs)
print("\nrank trajectory under lower_rank:")
q = proof
while cut_rank(q) > 0:
    print("  cut rank", cut_rank(q))
    q = lower_rank(q)
print("  cut rank", cut_rank(q), "(cut-free)")
assert check_proof(q) == proof.conclusion

print("\na generated corpus, eliminated:")
for p in proof_corpus(seed=3, count=5, max_depth=6):
    e = eliminate(p)
    assert check_proof(e) == p.conclusion
    print(
        f"  rank {cut_rank(p)} depth {depth(p)} size {proof_size(p):3d}"
        f"  ->  cut-free size {proof_size(e)}"
    )
