"""Random generation of checked proofs, for fuzzing and corpus tests.

Proofs are grown forward from axioms by repeatedly applying applicable
rules, so everything produced passes check_proof by construction.  The
generator deliberately seeks out cut opportunities: whenever one proof's
succedent mentions another proof's subject, a cut (or an n-ary cut) can be
placed, which is what the cut elimination suite needs.
"""

from __future__ import annotations

import random

from . import sequent as sq
from .terms import Var
from .syntax import (
    Bot,
    CoImp,
    CSequent,
    HOf,
    JOf,
    LAtom,
    Minus,
    NLAtom,
    Par,
    Plus,
    Zero,
    rank,
)


def small_nl_formulas(atoms=("a", "b")):
    base = [Zero()] + [NLAtom(x) for x in atoms]
    out = list(base)
    for x in base:
        for y in base:
            out.append(Plus(x, y))
            out.append(Minus(x, y))
    return out


def small_l_formulas(atoms=("p", "q")):
    base = [Bot()] + [LAtom(x) for x in atoms]
    out = list(base)
    for x in base:
        for y in base:
            out.append(Par(x, y))
            out.append(CoImp(x, y))
    return out


class ProofGenerator:
    def __init__(self, rng: random.Random, nl_atoms=("a", "b"), l_atoms=("p", "q")):
        self.rng = rng
        self.nl = [f for f in small_nl_formulas(nl_atoms) if rank(f) <= 3]
        self.li = [f for f in small_l_formulas(l_atoms) if rank(f) <= 3]
        self.c_pool = [sq.c_id(f) for f in self.nl] + [sq.c_zero_l()]
        self.l_pool = [sq.l_id(f) for f in self.li] + [sq.l_bot_l()]

    def _pick_c(self):
        return self.rng.choice(self.c_pool)

    def _pick_l(self):
        return self.rng.choice(self.l_pool)

    def grow_once(self, max_depth=7, max_width=6):
        """Apply one random rule; returns the new proof or None."""
        rng = self.rng
        moves = []
        p = self._pick_c() if rng.random() < 0.5 else self._pick_l()
        if sq.depth(p) >= max_depth:
            return None
        if p.is_c():
            succ = p.conclusion.succ
            if len(succ) < max_width:
                moves.append(lambda: sq.c_wk_r(p, rng.choice(self.nl)))
            if len(succ) >= 2:
                moves.append(lambda: sq.c_ex(p, rng.randrange(len(succ) - 1)))
                dup = [f for f in set(succ) if succ.count(f) >= 2]
                if dup:
                    f = rng.choice(dup)
                    rest = list(succ)
                    rest.remove(f)
                    rest.remove(f)

                    def contract(f=f, rest=tuple(rest)):
                        return sq.c_cr_r(sq.reorder_c(p, rest + (f, f)))

                    moves.append(contract)
            if succ:
                i = rng.randrange(len(succ))
                front = succ[:i] + succ[i + 1 :]

                def plus_r(i=i, front=front):
                    q = sq.reorder_c(p, (succ[i],) + front)
                    other = rng.choice(self.nl)
                    fn = sq.c_plus_r1 if rng.random() < 0.5 else sq.c_plus_r2
                    return fn(q, other)

                moves.append(plus_r)

                def minus_l(i=i, front=front):
                    q = sq.reorder_c(p, (succ[i],) + front)
                    return sq.c_minus_l(q)

                moves.append(minus_l)
            q2 = self._pick_c()
            if sq.depth(q2) < max_depth and len(succ) + len(q2.conclusion.succ) <= max_width:
                moves.append(lambda q2=q2: sq.c_plus_l(p, q2))
                if succ:

                    def minus_r(q2=q2):
                        i = rng.randrange(len(succ))
                        q = sq.reorder_c(p, (succ[i],) + succ[:i] + succ[i + 1 :])
                        return sq.c_minus_r(q, q2)

                    moves.append(minus_r)
                targets = [f for f in succ if f == q2.conclusion.subject]
                if targets:

                    def cut(q2=q2):
                        f = q2.conclusion.subject
                        k = succ.count(f)
                        n = rng.randint(1, k)
                        rest = list(succ)
                        for _ in range(n):
                            rest.remove(f)
                        q = sq.reorder_c(p, tuple(rest) + (f,) * n)
                        if n == 1 and rng.random() < 0.7:
                            return sq.c_cut(q, q2)
                        return sq.c_mcut(q, q2, n)

                    moves.append(cut)
                    moves.append(cut)
        else:
            lsucc, nlsucc = p.conclusion.lsucc, p.conclusion.nlsucc
            width = len(lsucc) + len(nlsucc)
            if width < max_width:
                moves.append(lambda: sq.l_wk(p, rng.choice(self.nl)))
                moves.append(lambda: sq.l_bot_r(p))
            if len(lsucc) >= 2:
                moves.append(lambda: sq.l_ex(p, rng.randrange(len(lsucc) - 1)))

                def par_r():
                    i = rng.randrange(len(lsucc) - 1)
                    want = lsucc[:i] + lsucc[i + 2 :] + (lsucc[i], lsucc[i + 1])
                    return sq.l_par_r(sq.reorder_l(p, want, None))

                moves.append(par_r)
            if len(nlsucc) >= 2:
                moves.append(lambda: sq.l_c_ex(p, rng.randrange(len(nlsucc) - 1)))
                dup = [f for f in set(nlsucc) if nlsucc.count(f) >= 2]
                if dup:
                    f = rng.choice(dup)
                    rest = list(nlsucc)
                    rest.remove(f)
                    rest.remove(f)

                    def contract(f=f, rest=tuple(rest)):
                        return sq.l_ctr(sq.reorder_l(p, None, rest + (f, f)))

                    moves.append(contract)
            if lsucc:

                def coimp_l():
                    i = rng.randrange(len(lsucc))
                    q = sq.reorder_l(p, (lsucc[i],) + lsucc[:i] + lsucc[i + 1 :], None)
                    return sq.l_coimp_l(q)

                moves.append(coimp_l)

                def h_r():
                    i = rng.randrange(len(lsucc))
                    q = sq.reorder_l(p, lsucc[:i] + lsucc[i + 1 :] + (lsucc[i],), None)
                    return sq.l_h_r(q)

                moves.append(h_r)
            if nlsucc:

                def plus_r():
                    i = rng.randrange(len(nlsucc))
                    q = sq.reorder_l(p, None, (nlsucc[i],) + nlsucc[:i] + nlsucc[i + 1 :])
                    fn = sq.l_plus_r1 if rng.random() < 0.5 else sq.l_plus_r2
                    return fn(q, rng.choice(self.nl))

                moves.append(plus_r)

                def j_r():
                    i = rng.randrange(len(nlsucc))
                    q = sq.reorder_l(p, None, (nlsucc[i],) + nlsucc[:i] + nlsucc[i + 1 :])
                    return sq.l_j_r(q)

                moves.append(j_r)
            if lsucc == ():
                moves.append(lambda: sq.c_h_l(p))
            qc = self._pick_c()
            if nlsucc and sq.depth(qc) < max_depth:
                if width + len(qc.conclusion.succ) <= max_width:

                    def c_sub_r(qc=qc):
                        i = rng.randrange(len(nlsucc))
                        q = sq.reorder_l(
                            p, None, (nlsucc[i],) + nlsucc[:i] + nlsucc[i + 1 :]
                        )
                        return sq.l_c_sub_r(q, qc)

                    moves.append(c_sub_r)
                targets = [f for f in nlsucc if f == qc.conclusion.subject]
                if targets:

                    def ccut(qc=qc):
                        f = qc.conclusion.subject
                        k = nlsucc.count(f)
                        n = rng.randint(1, k)
                        rest = list(nlsucc)
                        for _ in range(n):
                            rest.remove(f)
                        q = sq.reorder_l(p, None, tuple(rest) + (f,) * n)
                        if n == 1 and rng.random() < 0.7:
                            return sq.l_c_cut(q, qc)
                        return sq.l_c_mcut(q, qc, n)

                    moves.append(ccut)
                    moves.append(ccut)
            ql = self._pick_l()
            if sq.depth(ql) < max_depth and width + len(ql.conclusion.lsucc) + len(
                ql.conclusion.nlsucc
            ) <= max_width:
                moves.append(lambda ql=ql: sq.l_par_l(p, ql))
                if lsucc:

                    def coimp_r(ql=ql):
                        i = rng.randrange(len(lsucc))
                        q = sq.reorder_l(
                            p, lsucc[:i] + lsucc[i + 1 :] + (lsucc[i],), None
                        )
                        return sq.l_coimp_r(q, ql)

                    moves.append(coimp_r)
                targets = [f for f in lsucc if f == ql.conclusion.subject]
                if targets:

                    def lcut(ql=ql):
                        f = ql.conclusion.subject
                        rest = list(lsucc)
                        rest.remove(f)
                        q = sq.reorder_l(p, tuple(rest) + (f,), None)
                        return sq.l_cut(q, ql)

                    moves.append(lcut)
                    moves.append(lcut)
        if not moves:
            return None
        try:
            new = rng.choice(moves)()
        except (ValueError, IndexError):
            return None
        if new is None or sq.depth(new) > max_depth:
            return None
        (self.c_pool if new.is_c() else self.l_pool).append(new)
        return new

    def corpus(self, count, require_cut=True, max_depth=7, steps=20000):
        """Grow until `count` distinct cut-bearing proofs have been seen."""
        out = []
        seen = set()
        for _ in range(steps):
            p = self.grow_once(max_depth=max_depth)
            if p is None:
                continue
            if require_cut and sq.cut_rank(p) == 0:
                continue
            key = sq.proof_to_sexpr_str(p)
            if key in seen:
                continue
            seen.add(key)
            out.append(p)
            if len(out) >= count:
                break
        return out


def proof_corpus(seed, count, require_cut=True, max_depth=7):
    g = ProofGenerator(random.Random(seed))
    return g.corpus(count, require_cut=require_cut, max_depth=max_depth)


# ---------------------------------------------------------------------------
# typed judgment generation


class TypingGenerator:
    """Random well-typed derivations, biased toward judgments with redexes:
    eliminations are applied to majors whose principal slot was just built
    by the matching introduction."""

    def __init__(self, rng: random.Random):
        from . import typing as ty

        self.ty = ty
        self.rng = rng
        self._n = 0
        self.nl_types = [NLAtom("a"), NLAtom("b"), Zero(), HOf(LAtom("p"))]
        self.l_types = [LAtom("p"), LAtom("q"), Bot(), JOf(NLAtom("a"))]
        self.c_pool = [ty.t_id_c(self.var(), t) for t in self.nl_types]
        self.l_pool = [ty.t_id_l(self.var(), t) for t in self.l_types]

    def var(self):
        self._n += 1
        return f"v{self._n}"

    def _pad_to(self, d, shape):
        """Weaken d's non-linear zone so its type shape becomes `shape`
        (which must contain the current shape as a subsequence)."""
        ty = self.ty
        cur = [s.type for s in ty._nl_slots(d.conclusion)]
        at = 0
        for t in shape:
            if at < len(cur) and cur[at] == t:
                at += 1
                continue
            d = ty.t_weak(d, t, at)
            cur.insert(at, t)
            at += 1
        return d

    def step(self):
        ty, rng = self.ty, self.rng
        moves = []
        d = rng.choice(self.c_pool + self.l_pool)
        c = d.conclusion
        is_c = d.is_c()
        nl = ty._nl_slots(c)

        moves.append(lambda: ty.t_weak(d, rng.choice(self.nl_types), rng.randrange(len(nl) + 1)))
        typed_pairs = [
            (i, k)
            for i in range(len(nl))
            for k in range(i + 1, len(nl))
            if nl[i].type is not None and nl[i].type == nl[k].type
        ]
        if typed_pairs:
            moves.append(lambda: ty.t_contr(d, *rng.choice(typed_pairs)))
        typed_idx = [i for i, s in enumerate(nl) if s.type is not None]
        if is_c:
            if typed_idx:
                moves.append(
                    lambda: ty.t_plus_i1(
                        d, rng.choice(self.nl_types), rng.choice(typed_idx)
                    )
                )
                moves.append(
                    lambda: ty.t_plus_i2(
                        d, rng.choice(self.nl_types), rng.choice(typed_idx)
                    )
                )

                def minus_i():
                    minor = ty.t_id_c(self.var(), rng.choice(self.nl_types))
                    return ty.t_minus_i(d, minor, rng.choice(typed_idx))

                moves.append(minus_i)
            zero_idx = [i for i, s in enumerate(nl) if s.type == Zero()]
            if zero_idx:

                def zero_i():
                    minors = tuple(
                        ty.t_id_c(self.var(), rng.choice(self.nl_types))
                        for _ in range(rng.randrange(3))
                    )
                    return ty.t_zero_i(d, minors, rng.choice(zero_idx))

                moves.append(zero_i)
            plus_idx = [i for i, s in enumerate(nl) if isinstance(s.type, Plus)]
            if plus_idx:

                def plus_e():
                    pos = rng.choice(plus_idx)
                    g = nl[pos].type
                    m2 = ty.t_weak(ty.t_id_c(self.var(), g.left), g.right)
                    m3 = ty.t_weak(ty.t_id_c(self.var(), g.right), g.left, at=0)
                    return ty.t_plus_e(d, m2, m3, pos)

                moves.append(plus_e)
            minus_idx = [i for i, s in enumerate(nl) if isinstance(s.type, Minus)]
            if minus_idx:

                def minus_e():
                    pos = rng.choice(minus_idx)
                    g = nl[pos].type
                    minor = ty.t_weak(ty.t_id_c(self.var(), g.left), g.right, at=0)
                    return ty.t_minus_e(d, minor, pos, 0)

                moves.append(minus_e)
            h_idx = [i for i, s in enumerate(nl) if isinstance(s.type, HOf)]
            if h_idx:

                def h_e():
                    pos = rng.choice(h_idx)
                    g = nl[pos].type
                    rest_shape = [s.type for k, s in enumerate(nl) if k != pos]
                    minor = ty.t_h_i(ty.t_id_l(self.var(), g.body))
                    minor = self._pad_to(minor, [HOf(g.body)] + rest_shape)
                    major = ty.t_weak(d, HOf(g.body), at=len(nl))
                    return ty.t_h_e_c(major, minor, pos)

                moves.append(h_e)
        else:
            ls = c.lsucc
            typed_l = [i for i, s in enumerate(ls) if s.type is not None]
            moves.append(lambda: ty.t_bot_i(d, Var(c.var)))
            bot_idx = [i for i, s in enumerate(ls) if s.type == Bot()]
            if bot_idx:
                moves.append(lambda: ty.t_bot_e(d, rng.choice(bot_idx)))
            if len(typed_l) >= 2:

                def par_i():
                    i, k = rng.sample(typed_l, 2)
                    return ty.t_par_i(d, i, k)

                moves.append(par_i)
            par_idx = [i for i, s in enumerate(ls) if isinstance(s.type, Par)]
            if par_idx:

                def par_e():
                    pos = rng.choice(par_idx)
                    g = ls[pos].type
                    return ty.t_par_e(
                        d,
                        ty.t_id_l(self.var(), g.left),
                        ty.t_id_l(self.var(), g.right),
                        pos,
                    )

                moves.append(par_e)
            if typed_l:

                def sub_i():
                    minor = ty.t_id_l(self.var(), rng.choice(self.l_types))
                    minor = self._pad_to(minor, [s.type for s in c.nlsucc])
                    return ty.t_sub_i(d, minor, rng.choice(typed_l))

                moves.append(sub_i)
            if typed_idx:

                def j_i():
                    return ty.t_j_i(d, rng.choice(typed_idx))

                moves.append(j_i)

                def j_e():
                    t = nl[rng.choice(typed_idx)].type
                    major = ty.t_j_i(d, typed_idx[0])
                    major = ty.t_weak(major, t)
                    minor = ty.t_id_c(self.var(), t)
                    minor = self._pad_to(
                        minor, [s.type for s in major.conclusion.nlsucc]
                    )
                    pos = len(major.conclusion.lsucc) - 1
                    return ty.t_j_e(major, minor, pos)

                moves.append(j_e)
            if typed_l:

                def h_i():
                    return ty.t_h_i(d, rng.choice(typed_l))

                moves.append(h_i)
        try:
            new = self.rng.choice(moves)()
        except Exception:
            return None
        if len(self.all_slots_of(new)) > 7:
            return None
        (self.c_pool if new.is_c() else self.l_pool).append(new)
        return new

    def all_slots_of(self, d):
        from .typing import all_slots

        return all_slots(d.conclusion)

    def corpus(self, count, steps=8000):
        out = []
        seen = set()
        for _ in range(steps):
            d = self.step()
            if d is None:
                continue
            key = repr(d.conclusion)
            if key in seen:
                continue
            seen.add(key)
            out.append(d)
            if len(out) >= count:
                break
        return out


def typing_corpus(seed, count):
    from . import typing as ty

    g = TypingGenerator(random.Random(seed))
    return g.corpus(count)
