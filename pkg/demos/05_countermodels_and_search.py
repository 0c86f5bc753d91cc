"""The two oracles: finite co-Heyting lattices and bounded proof search.

The lattice model collapses both sorts into one distributive lattice where
subtraction is the co-implication (least x with a <= x v b), so it is
sound but deliberately incomplete - good for refuting, never for proving.
Search is the converse oracle: anything it returns is a checked cut-free
proof.
"""

from dlnl.search import Exhausted, Searcher, search
from dlnl.semantics import LATTICES, co_imp, get_lattice, refute
from dlnl.sequent import check_proof, proof_to_sexpr_str
from dlnl.syntax import CoImp, LAtom, Minus, NLAtom, Par, Plus, seq_c, seq_l

a, b = NLAtom("a"), NLAtom("b")
p, q = LAtom("p"), LAtom("q")

c2 = get_lattice("chain2")
print("chain2:  1 - 0 =", co_imp(c2, 1, 0), "   a - a =", co_imp(c2, 1, 1))
pw = get_lattice("pow2")
ab = frozenset({0, 1})
print("pow2:  {0,1} - {0} =", set(co_imp(pw, ab, frozenset({0}))))

goals = [
    seq_c(a, (Minus(a, b), b)),     # the subtraction witness: provable
    seq_c(a, (Minus(a, b),)),       # dropping the witness: refutable
    seq_l(q, (CoImp(q, p), p), ()),  # linear witness: provable
    seq_l(p, (Par(p, p),), ()),     # needs linear contraction: refutable? no -
                                    # lattice-valid but search-exhausted
    seq_c(Plus(a, a), (a,)),        # needs non-linear contraction: provable
]
shared = Searcher()
for g in goals:
    found = search(g, 8, shared)
    verdicts = [name for name, lat in LATTICES.items() if refute(g, lat) is not None]
    tag = "PROVED " if not isinstance(found, Exhausted) else "exhausted"
    print(f"{tag}  refuted-in={verdicts or 'nothing'}  {g}")
    if not isinstance(found, Exhausted):
        assert check_proof(found) == g

print("\nthe proof found for the last goal:")
print(proof_to_sexpr_str(search(seq_c(Plus(a, a), (a,)), 8, shared)))
