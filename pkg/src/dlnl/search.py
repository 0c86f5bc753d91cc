"""Bounded backward cut-free proof search.

Search works on sequents normalized up to exchange (each zone sorted by a
stable key), applies rules multiset-wise, and reconstructs a positionally
correct proof tree by inserting exchange chains, so every returned proof
passes check_proof and is cut-free.  The depth bound counts non-exchange
inferences (the inserted exchange chains are bookkeeping, not search
steps).

Loop control: backward weakening and contraction draw on one per-branch
structural budget of width + 2, width measured on the original goal.  Under
that budget the move system is well founded - logical moves strictly shrink
the total rank and structural moves strictly shrink the budget - so the
minimal proof depth of every (sequent, budget) state is computed by a
memoized min-max recursion with no revisiting.  Exhausted is therefore an
exact answer relative to the budget: no cut-free proof of depth <= bound
exists whose structural rules fit the budget; with bound None, none of any
depth.

Rule order is axioms, then invertible logical rules, then the context
splitting ones, then structural; ties in depth resolve to the first move,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sequent as sq
from .syntax import (
    Bot,
    CoImp,
    CSequent,
    HOf,
    JOf,
    LSequent,
    Minus,
    Par,
    Plus,
    Sequent,
    Zero,
    seq_c,
    seq_l,
)


@dataclass(frozen=True)
class Exhausted:
    bound: object

    def __bool__(self):
        return False


def _key(f):
    return f.key


def _norm(items):
    return tuple(sorted(items, key=_key))


def _norm_seq(s: Sequent) -> Sequent:
    if isinstance(s, CSequent):
        return seq_c(s.subject, _norm(s.succ))
    return seq_l(s.subject, _norm(s.lsucc), _norm(s.nlsucc))



def _splits(items):
    """All ways to split a tuple into two subsequences, distinct as
    multiset pairs (duplicate formulas would otherwise repeat splits)."""
    n = len(items)
    seen = set()
    for mask in range(1 << n):
        left = tuple(items[i] for i in range(n) if mask >> i & 1)
        key = tuple(sorted(f.key for f in left))
        if key in seen:
            continue
        seen.add(key)
        right = tuple(items[i] for i in range(n) if not mask >> i & 1)
        yield left, right


def _width(goal: Sequent) -> int:
    if isinstance(goal, CSequent):
        return len(goal.succ)
    return len(goal.lsucc) + len(goal.nlsucc)


INF = float("inf")


def search(goal: Sequent, bound=None, searcher=None):
    """A cut-free proof of goal with depth <= bound, or Exhausted.

    bound=None asks for a proof of any depth.  Pass a Searcher to share
    its memo table across many queries."""
    if bound is not None and bound < 1:
        raise ValueError("bound must be >= 1")
    s = searcher or Searcher()
    budget = _width(goal) + 2
    depth, proof = s.solve(_norm_seq(goal), budget, INF if bound is None else bound)
    if proof is None:
        return Exhausted(bound)
    return sq.reorder(proof, goal)


def provable(goal: Sequent, bound=None, searcher=None) -> bool:
    return not isinstance(search(goal, bound, searcher), Exhausted)


class Searcher:
    """Minimal proof depth per (normalized goal, structural budget).

    The recursion is well founded: every logical move strictly decreases
    the total formula rank of the goal and every structural move strictly
    decreases the budget, so memoization on (goal, budget) suffices and a
    finite answer is always the exact minimum.  A depth cutoff (fuel)
    prunes bounded queries; an entry that failed under some cutoff records
    the largest cutoff tried, and a finite answer found under any cutoff
    is exact (a cheaper proof would have fit the cutoff too)."""

    def __init__(self):
        self.memo = {}

    def solve(self, goal, budget, fuel):
        """Returns (min proof depth, proof) with depth <= fuel, or
        (inf, None) when no such proof exists."""
        key = (goal, budget)
        hit = self.memo.get(key)
        if hit is not None:
            d, proof, checked = hit
            if d is not None:
                return (d, proof) if d <= fuel else (INF, None)
            if fuel <= checked:
                return INF, None
        if fuel < 1:
            return INF, None
        best, best_proof = INF, None
        gen = _c_moves(goal, budget) if isinstance(goal, CSequent) else _l_moves(
            goal, budget
        )
        for premises, build, cost in gen:
            depth = 1
            subs = []
            for p in premises:
                d, sub = self.solve(
                    _norm_seq(p), budget - cost, min(best, fuel) - 1
                )
                if sub is None:
                    depth = INF
                    break
                depth = max(depth, d + 1)
                subs.append(sq.reorder(sub, p))
            if depth < best:
                best, best_proof = depth, build(*subs)
        if best_proof is not None:
            self.memo[key] = (best, best_proof, 0)
        else:
            checked = hit[2] if hit is not None else 0
            self.memo[key] = (None, None, max(checked, fuel))
        return best, best_proof


def _c_moves(goal, budget):
    subj, succ = goal.subject, goal.succ

    # axioms
    if succ == (subj,):
        yield (), lambda: sq.c_id(subj), 0
    if isinstance(subj, Zero) and succ == ():
        yield (), lambda: sq.c_zero_l(), 0

    # left rules (subject principal)
    if isinstance(subj, Minus):
        p = seq_c(subj.left, (subj.right,) + succ)
        yield (p,), sq.c_minus_l, 0
    if isinstance(subj, HOf):
        p = seq_l(subj.body, (), succ)
        yield (p,), sq.c_h_l, 0
    if isinstance(subj, Plus):
        for s1, s2 in _splits(succ):
            p1, p2 = seq_c(subj.left, s1), seq_c(subj.right, s2)
            yield (p1, p2), sq.c_plus_l, 0

    # right rules
    for i, f in enumerate(succ):
        rest = succ[:i] + succ[i + 1 :]
        if isinstance(f, Plus):
            p1 = seq_c(subj, (f.left,) + rest)
            yield (p1,), (lambda q, f=f: sq.c_plus_r1(q, f.right)), 0
            p2 = seq_c(subj, (f.right,) + rest)
            yield (p2,), (lambda q, f=f: sq.c_plus_r2(q, f.left)), 0
        if isinstance(f, Minus):
            for s1, s2 in _splits(rest):
                pa = seq_c(subj, (f.left,) + s1)
                pb = seq_c(f.right, s2)
                yield (pa, pb), sq.c_minus_r, 0

    # structural: weakening drops a formula, contraction duplicates one;
    # both draw on the same per-branch budget
    if budget > 0:
        for i in range(len(succ)):
            rest = succ[:i] + succ[i + 1 :]
            yield (seq_c(subj, rest),), (
                lambda q, f=succ[i]: sq.c_wk_r(q, f)
            ), 1
    if budget > 0:
        for i, f in enumerate(succ):
            p = seq_c(subj, succ + (f,))
            yield (p,), (
                lambda q, f=f: sq.c_cr_r(sq.reorder_c(q, _move_last_pair(q.conclusion.succ, f)))
            ), 1


def _move_last_pair(succ, f):
    """Reorder target putting two copies of f last (for a contraction)."""
    rest = list(succ)
    rest.remove(f)
    rest.remove(f)
    return tuple(rest) + (f, f)


def _l_moves(goal, budget):
    subj, lsucc, nlsucc = goal.subject, goal.lsucc, goal.nlsucc

    # axioms
    if lsucc == (subj,) and nlsucc == ():
        yield (), lambda: sq.l_id(subj), 0
    if isinstance(subj, Bot) and lsucc == () and nlsucc == ():
        yield (), lambda: sq.l_bot_l(), 0

    # left rules
    if isinstance(subj, CoImp):
        p = seq_l(subj.left, (subj.right,) + lsucc, nlsucc)
        yield (p,), sq.l_coimp_l, 0
    if isinstance(subj, JOf) and lsucc == ():
        p = seq_c(subj.body, nlsucc)
        yield (p,), sq.l_j_l, 0
    if isinstance(subj, Par):
        for d1, d2 in _splits(lsucc):
            for s1, s2 in _splits(nlsucc):
                p1 = seq_l(subj.left, d1, s1)
                p2 = seq_l(subj.right, d2, s2)
                yield (p1, p2), sq.l_par_l, 0

    # right rules, linear zone
    for i, f in enumerate(lsucc):
        rest = lsucc[:i] + lsucc[i + 1 :]
        if isinstance(f, Bot):
            yield (seq_l(subj, rest, nlsucc),), sq.l_bot_r, 0
        if isinstance(f, Par):
            p = seq_l(subj, rest + (f.left, f.right), nlsucc)
            yield (p,), sq.l_par_r, 0
        if isinstance(f, CoImp):
            for d1, d2 in _splits(rest):
                for s1, s2 in _splits(nlsucc):
                    pa = seq_l(subj, d1 + (f.left,), s1)
                    pb = seq_l(f.right, d2, s2)
                    yield (pa, pb), sq.l_coimp_r, 0
        if isinstance(f, JOf):
            p = seq_l(subj, rest, (f.body,) + nlsucc)
            yield (p,), sq.l_j_r, 0

    # right rules, non-linear zone
    for i, f in enumerate(nlsucc):
        rest = nlsucc[:i] + nlsucc[i + 1 :]
        if isinstance(f, HOf):
            p = seq_l(subj, lsucc + (f.body,), rest)
            yield (p,), sq.l_h_r, 0
        if isinstance(f, Plus):
            p1 = seq_l(subj, lsucc, (f.left,) + rest)
            yield (p1,), (lambda q, f=f: sq.l_plus_r1(q, f.right)), 0
            p2 = seq_l(subj, lsucc, (f.right,) + rest)
            yield (p2,), (lambda q, f=f: sq.l_plus_r2(q, f.left)), 0
        if isinstance(f, Minus):
            for s1, s2 in _splits(rest):
                pa = seq_l(subj, lsucc, (f.left,) + s1)
                pb = seq_c(f.right, s2)
                yield (pa, pb), sq.l_c_sub_r, 0

    # structural on the non-linear zone; weakening and contraction share
    # the per-branch budget
    if budget > 0:
        for i in range(len(nlsucc)):
            rest = nlsucc[:i] + nlsucc[i + 1 :]
            yield (seq_l(subj, lsucc, rest),), (
                lambda q, f=nlsucc[i]: sq.l_wk(q, f)
            ), 1
    if budget > 0:
        for i, f in enumerate(nlsucc):
            p = seq_l(subj, lsucc, nlsucc + (f,))
            yield (p,), (
                lambda q, f=f: sq.l_ctr(
                    sq.reorder_l(q, None, _move_last_pair(q.conclusion.nlsucc, f))
                )
            ), 1
