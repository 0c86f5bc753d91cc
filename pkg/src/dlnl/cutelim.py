"""Cut elimination for the two-zone sequent calculi.

Three layers:

  expand_mcut   rewrites every n-ary cut into 1-ary cuts, realizing n = 0 by
                right weakenings and n >= 2 by iterated cuts followed by
                contractions of the duplicated context block;
  reduce_cut    the cut reduction procedure: given proofs of the two cut
                premises whose cut ranks are at most rank(s), builds a proof
                of the cut's conclusion with cut rank at most rank(s), by
                recursion on the combined depth;
  lower_rank    given a proof with positive cut rank, returns one of the same
                endsequent with strictly smaller cut rank;
  eliminate     iterates lower_rank to a cut-free proof.

reduce_cut distinguishes three kinds of cut, mirroring the two n-ary cut
rules plus the linear cut:

  kind 1:  T |-C Psi, S^n     and  S |-C Psi'      non-linear cut formula
  kind 2:  A |-L D ; Psi, T^n and  T |-C Psi'      non-linear cut formula
  kind 3:  B |-L D, A^n ; Psi and  A |-L D' ; Psi' linear cut formula

Principal-versus-principal pairs have bespoke reducts: the
subtraction pair becomes two lower-rank cuts; the J/H pairs and the +
pairs first clear the remaining copies by the inductive hypothesis, then
cut once and contract the duplicated block (for + with no remaining copies,
one cut followed by weakenings).  Every other configuration permutes the
cut above the last non-principal inference, recursing into whichever
premise carries copies and contracting the duplicated Psi' block when both
do; the permutation order is deterministic (always into the first proof
before the second).  Multi-copy linear cuts arise only inside the J
reduction, where the second proof ends in j-l and so has an empty linear
zone; a duplicated non-empty linear context is therefore unreachable and
raises if ever hit.
"""

from __future__ import annotations

from . import sequent as sq
from .errors import PreconditionViolated
from .sequent import Proof, cut_rank, is_cut_rule
from .syntax import (
    Bot,
    CoImp,
    CSequent,
    HOf,
    JOf,
    LSequent,
    Minus,
    Plus,
    rank,
    seq_c,
    seq_l,
)

# rules whose conclusion subject differs from the premise subject; at the
# root of the right cut premise these are exactly the principal left rules
_SUBJECT_TRANSFORMING = frozenset(
    {"id", "zero-l", "plus-l", "minus-l", "h-l", "bot-l", "par-l", "coimp-l", "j-l"}
)


def _count(items, s):
    return sum(1 for x in items if x == s)


def _del_right(items, s, n):
    """Remove the n rightmost occurrences of s."""
    out = list(items)
    removed = 0
    for i in range(len(out) - 1, -1, -1):
        if removed == n:
            break
        if out[i] == s:
            del out[i]
            removed += 1
    if removed < n:
        raise PreconditionViolated(f"fewer than {n} occurrences of {s} to cut")
    return tuple(out)


def _zone(kind, p: Proof):
    c = p.conclusion
    if kind == 1:
        return c.succ
    if kind == 2:
        return c.nlsucc
    return c.lsucc


def _target(kind, p1, p2, s, n):
    c1, c2 = p1.conclusion, p2.conclusion
    if kind == 1:
        return seq_c(c1.subject, _del_right(c1.succ, s, n) + c2.succ)
    if kind == 2:
        return seq_l(c1.subject, c1.lsucc, _del_right(c1.nlsucc, s, n) + c2.succ)
    return seq_l(
        c1.subject,
        _del_right(c1.lsucc, s, n) + c2.lsucc,
        c1.nlsucc + c2.nlsucc,
    )


def _finish(kind, q, target):
    return sq.reorder(q, target)


def _weaken_ext(kind, p1, p2):
    """The n = 0 case: extend p1 by p2's zones using right weakening."""
    c2 = p2.conclusion
    if kind == 1:
        return sq.weaken_many_c(p1, c2.succ)
    if kind == 2:
        return sq.weaken_many_l(p1, c2.succ)
    if c2.lsucc:
        raise PreconditionViolated(
            "0-ary linear cut with a non-empty linear context is not derivable"
        )
    return sq.weaken_many_l(p1, c2.nlsucc)


def _principal_formula(kind, p: Proof):
    """The formula p's root rule introduces into the cut-carrying zone, or None."""
    r = p.rule
    c = p.conclusion
    if kind == 1:
        if r in ("plus-r1", "plus-r2", "minus-r"):
            return c.succ[0]
        if r == "wk-r":
            return c.succ[-1]
        if r == "cr-r":
            return c.succ[-1]
    elif kind == 2:
        if r in ("plus-r1", "plus-r2", "c-sub-r", "h-r"):
            return c.nlsucc[0]
        if r == "wk":
            return c.nlsucc[-1]
        if r == "ctr":
            return c.nlsucc[-1]
    else:
        if r in ("par-r", "bot-r", "j-r"):
            return c.lsucc[-1]
        if r == "coimp-r":
            return c.lsucc[0]
    return None


def reduce_cut(p1: Proof, p2: Proof, s, kind: int, n=None) -> Proof:
    """Part `kind` of the cut reduction procedure.

    p1 and p2 prove the two premises of an n-ary cut on s; both must have
    cut rank at most rank(s).  Returns a proof of the cut's conclusion with
    cut rank at most rank(s).  When n is omitted, every occurrence of s in
    the carrying zone of p1 is cut.
    """
    if kind not in (1, 2, 3):
        raise PreconditionViolated(f"kind must be 1, 2 or 3, got {kind}")
    _validate_shapes(kind, p1, p2, s)
    if n is None:
        n = _count(_zone(kind, p1), s)
    bound = rank(s)
    if cut_rank(p1) > bound or cut_rank(p2) > bound:
        raise PreconditionViolated(
            f"premise cut ranks must be at most rank(s) = {bound}"
        )
    out = _reduce(kind, p1, p2, s, n)
    assert cut_rank(out) <= bound, "cut reduction exceeded its rank bound"
    return out


def _validate_shapes(kind, p1, p2, s):
    c1, c2 = p1.conclusion, p2.conclusion
    if kind == 1 and not (isinstance(c1, CSequent) and isinstance(c2, CSequent)):
        raise PreconditionViolated("kind 1 needs two C-sequents")
    if kind == 2 and not (isinstance(c1, LSequent) and isinstance(c2, CSequent)):
        raise PreconditionViolated("kind 2 needs an L-sequent and a C-sequent")
    if kind == 3 and not (isinstance(c1, LSequent) and isinstance(c2, LSequent)):
        raise PreconditionViolated("kind 3 needs two L-sequents")
    if c2.subject != s:
        raise PreconditionViolated("second premise must have the cut formula as subject")


def _reduce(kind, p1, p2, s, n):
    target = _target(kind, p1, p2, s, n)
    if n == 0:
        return _finish(kind, _weaken_ext(kind, p1, p2), target)

    r1 = p1.rule

    if r1 == "id":
        # p1 proves s |- s (or s |- s ; .), n is forcibly 1
        return _finish(kind, p2, target)

    princ = _principal_formula(kind, p1)

    if r1 in ("wk-r", "wk") and princ == s:
        return _reduce(kind, p1.premises[0], p2, s, n - 1)
    if r1 in ("cr-r", "ctr") and princ == s:
        return _reduce(kind, p1.premises[0], p2, s, n + 1)
    if r1 in ("wk-r", "wk", "cr-r", "ctr"):
        princ = None  # structural on another formula: plain permutation

    if princ == s:
        return _principal(kind, p1, p2, s, n, target)
    return _permute_p1(kind, p1, p2, s, n, target)


# ---------------------------------------------------------------------------
# principal cases


def _left_rule_for(kind, s):
    if kind in (1, 2):
        return {"Plus": "plus-l", "Minus": "minus-l", "HOf": "h-l"}[type(s).__name__]
    return {"Par": "par-l", "CoImp": "coimp-l", "Bot": "bot-l", "JOf": "j-l"}[
        type(s).__name__
    ]


def _principal(kind, p1, p2, s, n, target):
    r2 = p2.rule
    if r2 not in _SUBJECT_TRANSFORMING:
        return _permute_p2(kind, p1, p2, s, n, target)
    if r2 == "id":
        return _contract_copies(kind, p1, p2, s, n, target)
    if r2 != _left_rule_for(kind, s):  # pragma: no cover - shapes forbid it
        raise PreconditionViolated(f"rule {r2} cannot conclude subject {s}")
    builder = {
        "Plus": _beta_plus,
        "Minus": _beta_minus,
        "HOf": _beta_h,
        "Par": _beta_par,
        "CoImp": _beta_coimp,
        "Bot": _beta_bot,
        "JOf": _beta_j,
    }[type(s).__name__]
    return builder(kind, p1, p2, s, n, target)


def _contract_copies(kind, p1, p2, s, n, target):
    # p2 = id on s: the conclusion keeps one copy of s
    if kind == 3:
        if n != 1:
            raise PreconditionViolated("multi-copy linear cut against id")
        return _finish(kind, p1, target)
    base = _del_right(_zone(kind, p1), s, n)
    q = _reorder_zone(kind, p1, base + (s,) * n)
    for _ in range(n - 1):
        q = sq.c_cr_r(q) if kind == 1 else sq.l_ctr(q)
    return _finish(kind, q, target)


def _reorder_zone(kind, p, zone):
    if kind == 1:
        return sq.reorder_c(p, zone)
    if kind == 2:
        return sq.reorder_l(p, None, zone)
    return sq.reorder_l(p, zone, None)


def _cut_nl(kind, p, q):
    """Cut a trailing non-linear formula of p against the C-proof q."""
    return sq.c_cut(p, q) if kind == 1 else sq.l_c_cut(p, q)


def _wk_nl(kind, p, formulas):
    return sq.weaken_many_c(p, formulas) if kind == 1 else sq.weaken_many_l(p, formulas)


def _nl_zone_of(kind, p):
    return _zone(kind, p) if kind != 3 else p.conclusion.nlsucc


def _del_multiset(zone, block):
    """Remove one occurrence of each formula in block (rightmost first)."""
    out = tuple(zone)
    for f in block:
        out = _del_right(out, f, 1)
    return out


def _contract_extra(zk, q, block, extra):
    """Contract `extra` surplus copies of `block` in the non-linear zone."""
    if extra <= 0 or not block:
        return q
    keep = _nl_zone_of(zk, q)
    for _ in range(extra + 1):
        keep = _del_multiset(keep, block)
    q = _reorder_zone(zk, q, keep + block * (extra + 1))
    for _ in range(extra):
        q = sq.contract_trailing_block(q, len(block))
    return q


def _beta_plus(kind, p1, p2, s, n, target):
    # p1 ends in plus-r1 or plus-r2; p2 = plus-l(rho1, rho2)
    pi1 = p1.premises[0]
    rho1, rho2 = p2.premises
    first = p1.rule == "plus-r1"
    rho = rho1 if first else rho2
    other_succ = rho2.conclusion.succ if first else rho1.conclusion.succ
    part = s.left if first else s.right
    m = n - 1
    if m == 0:
        base = _del_right(_zone(kind, pi1), part, 1)
        q = _reorder_zone(kind, pi1, base + (part,))
        q = _cut_nl(kind, q, rho)
        # weaken the other branch's context on: the cut-then-weaken shape
        q = _wk_nl(kind, q, other_succ)
        return _finish(kind, q, target)
    q = _reduce(kind, pi1, p2, s, m)
    # zone: part, rest-without-copies, Psi1, Psi2   (part survives at front)
    base = _del_right(_nl_zone_of(kind, q), part, 1)
    q = _reorder_zone(kind, q, base + (part,))
    q = _cut_nl(kind, q, rho)
    q = _contract_extra(kind, q, rho.conclusion.succ, 1)
    return _finish(kind, q, target)


def _beta_minus(kind, p1, p2, s, n, target):
    # p1 = minus-r(pi1, pi2) or c-sub-r(pi1, pi2); p2 = minus-l(rho)
    pi1, pi2 = p1.premises
    rho = p2.premises[0]
    e = p2.conclusion.succ
    zb = pi2.conclusion.succ
    k2 = min(n - 1, _count(zb, s))
    k1 = n - 1 - k2
    extra = 0
    if k1 > 0:
        pi1 = _reduce(kind, pi1, p2, s, k1)
        extra += 1
    if k2 > 0:
        pi2 = _reduce(1, pi2, p2, s, k2)
        extra += 1
    # first cut: on s.left against rho (rho proves s.left |- s.right, psi)
    base1 = _del_right(_nl_zone_of(kind, pi1), s.left, 1)
    q = _reorder_zone(kind, pi1, base1 + (s.left,))
    q = _cut_nl(kind, q, rho)
    # second cut: on s.right against pi2
    base2 = _del_right(_nl_zone_of(kind, q), s.right, 1)
    q = _reorder_zone(kind, q, base2 + (s.right,))
    q = _cut_nl(kind, q, pi2)
    q = _contract_extra(kind, q, e, extra)
    return _finish(kind, q, target)


def _beta_h(kind, p1, p2, s, n, target):
    # kind 2: p1 = h-r(pi1), p2 = h-l(rho) with rho: A |-L . ; Psi'
    pi1 = p1.premises[0]
    rho = p2.premises[0]
    q = _reduce(2, pi1, p2, s, n - 1)
    # q: B |-L Delta, A ; rest ++ e ; cut the trailing A against rho
    q = sq.l_cut(q, rho)
    q = _contract_extra(2, q, p2.conclusion.succ, 1)
    return _finish(kind, q, target)


def _beta_j(kind, p1, p2, s, n, target):
    # kind 3: p1 = j-r(pi1), p2 = j-l(rho) with rho: T |-C Psi'
    pi1 = p1.premises[0]
    rho = p2.premises[0]
    q = _reduce(3, pi1, p2, s, n - 1)
    # q: A |-L Delta' ; T, rest ++ e ; c-cut the T against rho
    base = _del_right(q.conclusion.nlsucc, s.body, 1)
    q = sq.reorder_l(q, None, base + (s.body,))
    q = sq.l_c_cut(q, rho)
    q = _contract_extra(2, q, p2.conclusion.nlsucc, 1)
    return _finish(kind, q, target)


def _beta_bot(kind, p1, p2, s, n, target):
    return _finish(kind, _reduce(3, p1.premises[0], p2, s, n - 1), target)


def _beta_coimp(kind, p1, p2, s, n, target):
    # kind 3, n = 1: the two-lower-cuts reduct
    if n != 1:
        raise PreconditionViolated("multi-copy linear subtraction cut is unreachable")
    pi1, pi2 = p1.premises
    rho = p2.premises[0]
    # pi1: A |- Delta1, B1 ; Psi1 and rho: B1 |- B2, Delta ; Psi
    q = sq.l_cut(pi1, rho)
    base = _del_right(q.conclusion.lsucc, s.right, 1)
    q = sq.reorder_l(q, base + (s.right,), None)
    q = sq.l_cut(q, pi2)
    return _finish(kind, q, target)


def _beta_par(kind, p1, p2, s, n, target):
    if n != 1:
        raise PreconditionViolated("multi-copy linear par cut is unreachable")
    pi1 = p1.premises[0]
    rho1, rho2 = p2.premises
    base = _del_right(pi1.conclusion.lsucc, s.left, 1)
    base = _del_right(base, s.right, 1)
    q = sq.reorder_l(pi1, base + (s.right, s.left), None)
    q = sq.l_cut(q, rho1)
    base = _del_right(q.conclusion.lsucc, s.right, 1)
    q = sq.reorder_l(q, base + (s.right,), None)
    q = sq.l_cut(q, rho2)
    return _finish(kind, q, target)


# ---------------------------------------------------------------------------
# permutation cases

# for each rule: which premises inherit parts of the cut-carrying zone.
# kinds listed by the zone the copies live in; "C" marks premises that are
# C-sequents (the recursion switches to kind 1 there, or kind 2 under h-l).


def _permute_p1(kind, p1, p2, s, n, target):
    r = p1.rule
    prems = p1.premises

    if r in ("ex", "c-ex"):
        q = _reduce(kind, prems[0], p2, s, n)
        return _finish(kind, q, target)

    if r in ("wk-r", "wk"):
        q = _reduce(kind, prems[0], p2, s, n)
        w = _principal_formula(1 if kind == 1 else 2, p1)
        q = sq.c_wk_r(q, w) if kind == 1 else sq.l_wk(q, w)
        return _finish(kind, q, target)

    if r in ("cr-r", "ctr"):
        c = p1.conclusion
        dup = c.succ[-1] if kind == 1 else c.nlsucc[-1]
        q = _reduce(kind, prems[0], p2, s, n)
        zone = _nl_zone_of(kind, q)
        keep = _del_right(_del_right(zone, dup, 1), dup, 1)
        q = _reorder_zone(1 if kind == 1 else 2, q, keep + (dup, dup))
        q = sq.c_cr_r(q) if kind == 1 else sq.l_ctr(q)
        return _finish(kind, q, target)

    # single-premise logical rules: recurse into the lone premise, reorder it
    # back into the rule's required shape, reapply
    single = {
        "plus-r1": _redo_plus_r,
        "plus-r2": _redo_plus_r,
        "minus-l": _redo_minus_l,
        "h-l": _redo_h_l,
        "j-l": _redo_j_l,
        "j-r": _redo_j_r,
        "h-r": _redo_h_r,
        "par-r": _redo_par_r,
        "coimp-l": _redo_coimp_l,
        "bot-r": _redo_bot_r,
    }
    if r in single:
        return _finish(kind, single[r](kind, p1, p2, s, n), target)

    if r in ("plus-l", "minus-r", "par-l", "coimp-r", "c-sub-r"):
        return _finish(kind, _redo_split2(kind, p1, p2, s, n), target)
    if r in ("cut", "mcut", "c-cut", "c-mcut"):
        return _finish(kind, _redo_cut_root(kind, p1, p2, s, n), target)

    raise PreconditionViolated(f"cannot permute cut past rule {r}")  # pragma: no cover


def _sub_kind(kind, premise):
    """Kind of the recursive cut when descending into `premise`."""
    if isinstance(premise.conclusion, CSequent):
        return 1
    return kind if kind != 1 else 2


def _redo_plus_r(kind, p1, p2, s, n):
    pi = p1.premises[0]
    f = p1.conclusion.succ[0] if kind == 1 else p1.conclusion.nlsucc[0]
    part = pi.conclusion.succ[0] if kind == 1 else pi.conclusion.nlsucc[0]
    q = _reduce(kind, pi, p2, s, n)
    zone = _nl_zone_of(kind, q)
    base = _del_right(zone, part, 1)
    zk = 1 if kind == 1 else 2
    q = _reorder_zone(zk, q, (part,) + base)
    if p1.rule == "plus-r1":
        return (sq.c_plus_r1 if kind == 1 else sq.l_plus_r1)(q, f.right)
    return (sq.c_plus_r2 if kind == 1 else sq.l_plus_r2)(q, f.left)


def _redo_minus_l(kind, p1, p2, s, n):
    pi = p1.premises[0]
    t2 = pi.conclusion.succ[0]
    q = _reduce(1, pi, p2, s, n)
    base = _del_right(q.conclusion.succ, t2, 1)
    q = sq.reorder_c(q, (t2,) + base)
    return sq.c_minus_l(q)


def _redo_h_l(kind, p1, p2, s, n):
    q = _reduce(2, p1.premises[0], p2, s, n)
    return sq.c_h_l(q)


def _redo_j_l(kind, p1, p2, s, n):
    q = _reduce(1, p1.premises[0], p2, s, n)
    return sq.l_j_l(q)


def _redo_j_r(kind, p1, p2, s, n):
    pi = p1.premises[0]
    t = pi.conclusion.nlsucc[0]
    q = _reduce(kind, pi, p2, s, n)
    if kind == 2:
        base = _del_right(q.conclusion.nlsucc, t, 1)
        q = sq.reorder_l(q, None, (t,) + base)
    return sq.l_j_r(q)


def _redo_h_r(kind, p1, p2, s, n):
    pi = p1.premises[0]
    b = pi.conclusion.lsucc[-1]
    q = _reduce(kind, pi, p2, s, n)
    if kind == 3:
        base = _del_right(q.conclusion.lsucc, b, 1)
        q = sq.reorder_l(q, base + (b,), None)
    return sq.l_h_r(q)


def _redo_par_r(kind, p1, p2, s, n):
    pi = p1.premises[0]
    b1, b2 = pi.conclusion.lsucc[-2], pi.conclusion.lsucc[-1]
    q = _reduce(kind, pi, p2, s, n)
    if kind == 3:
        base = _del_right(_del_right(q.conclusion.lsucc, b2, 1), b1, 1)
        q = sq.reorder_l(q, base + (b1, b2), None)
    return sq.l_par_r(q)


def _redo_coimp_l(kind, p1, p2, s, n):
    pi = p1.premises[0]
    b2 = pi.conclusion.lsucc[0]
    q = _reduce(kind, pi, p2, s, n)
    if kind == 3:
        base = _del_right(q.conclusion.lsucc, b2, 1)
        q = sq.reorder_l(q, (b2,) + base, None)
    return sq.l_coimp_l(q)


def _redo_bot_r(kind, p1, p2, s, n):
    q = _reduce(kind, p1.premises[0], p2, s, n)
    return sq.l_bot_r(q)


_REBUILDERS = {
    "plus-l": sq.c_plus_l,
    "minus-r": sq.c_minus_r,
    "par-l": sq.l_par_l,
    "coimp-r": sq.l_coimp_r,
    "c-sub-r": sq.l_c_sub_r,
}


def _redo_split2(kind, p1, p2, s, n):
    """Two-premise context-joining rules: split the copies between premises."""
    pa, pb = p1.premises
    za = _zone(_sub_kind(kind, pa), pa)
    zb = _zone(_sub_kind(kind, pb), pb)
    avail_a = _count(za, s) - _anchor_count(kind, p1, s)
    avail_b = _count(zb, s)
    kb = min(n, max(avail_b, 0))
    ka = n - kb
    if ka > max(avail_a, 0):  # pragma: no cover - entry count check prevents it
        raise PreconditionViolated("cut copies exceed premise occurrences")
    dup = 0
    if ka > 0:
        pa = _reduce(_sub_kind(kind, pa), pa, p2, s, ka)
        dup += 1
    if kb > 0:
        pb = _reduce(_sub_kind(kind, pb), pb, p2, s, kb)
        dup += 1
    if kind == 3 and dup > 1 and p2.conclusion.lsucc:
        raise PreconditionViolated(
            "duplicated linear context in a split permutation is unreachable"
        )
    pa, pb = _restore_anchors(kind, p1.rule, pa, pb, p1)
    q = _REBUILDERS[p1.rule](pa, pb)
    e_nl = p2.conclusion.succ if kind != 3 else p2.conclusion.nlsucc
    q = _contract_extra(kind if kind != 3 else 2, q, e_nl, dup - 1)
    return q


def _anchor_count(kind, p1, s):
    """Copies in the first premise zone that the rule itself consumes."""
    rule, pa = p1.rule, p1.premises[0]
    if rule == "minus-r" and kind == 1 and pa.conclusion.succ[0] == s:
        return 1
    if rule == "coimp-r" and kind == 3 and pa.conclusion.lsucc[-1] == s:
        return 1
    if rule == "c-sub-r" and kind == 2 and pa.conclusion.nlsucc[0] == s:
        return 1
    return 0


def _restore_anchors(kind, rule, pa, pb, p1):
    """Reorder reduced premises so the rule's anchor formulas sit in place."""
    if rule == "minus-r":
        t1 = p1.premises[0].conclusion.succ[0]
        base = _del_right(pa.conclusion.succ, t1, 1)
        pa = sq.reorder_c(pa, (t1,) + base)
    elif rule == "coimp-r":
        b1 = p1.premises[0].conclusion.lsucc[-1]
        base = _del_right(pa.conclusion.lsucc, b1, 1)
        pa = sq.reorder_l(pa, base + (b1,), None)
    elif rule == "c-sub-r":
        t1 = p1.premises[0].conclusion.nlsucc[0]
        base = _del_right(pa.conclusion.nlsucc, t1, 1)
        pa = sq.reorder_l(pa, None, (t1,) + base)
    return pa, pb


def _rebuild_cut(p1, pa, pb):
    """Reapply a root cut/mcut after reducing inside its premises."""
    r = p1.rule
    u = cut_formula_of_node(p1)
    if r == "cut" and p1.is_c():
        base = _del_right(pa.conclusion.succ, u, 1)
        pa = sq.reorder_c(pa, base + (u,))
        return sq.c_cut(pa, pb)
    if r == "mcut":
        m = _mcut_arity(p1)
        base = _del_right(pa.conclusion.succ, u, m)
        pa = sq.reorder_c(pa, base + (u,) * m)
        return sq.c_mcut(pa, pb, m)
    if r == "cut":
        base = _del_right(pa.conclusion.lsucc, u, 1)
        pa = sq.reorder_l(pa, base + (u,), None)
        return sq.l_cut(pa, pb)
    if r == "c-cut":
        base = _del_right(pa.conclusion.nlsucc, u, 1)
        pa = sq.reorder_l(pa, None, base + (u,))
        return sq.l_c_cut(pa, pb)
    m = _mcut_arity(p1)
    base = _del_right(pa.conclusion.nlsucc, u, m)
    pa = sq.reorder_l(pa, None, base + (u,) * m)
    return sq.l_c_mcut(pa, pb, m)


def _redo_cut_root(kind, p1, p2, s, n):
    """p1's root is itself a (smaller-rank) cut: split the copies between the
    subject-side premise and the cut partner, then reapply the root cut."""
    pa, pb = p1.premises
    u = cut_formula_of_node(p1)
    m = 1 if p1.rule in ("cut", "c-cut") else _mcut_arity(p1)
    ka_kind = _sub_kind(kind, pa)
    kb_kind = _sub_kind(kind, pb)
    za = _zone(ka_kind, pa)
    zb = _zone(kb_kind, pb)
    # the root cut consumes m trailing copies of u from pa's zone; if u == s
    # those copies are not available to the outer cut
    avail_a = _count(za, s) - (m if u == s and _same_zone_cut(kind, p1) else 0)
    avail_b = _count(zb, s)
    kb = min(n, max(avail_b, 0))
    ka = n - kb
    if ka > max(avail_a, 0):  # pragma: no cover
        raise PreconditionViolated("cut copies exceed premise occurrences")
    dup = 0
    if ka > 0:
        pa = _reduce(ka_kind, pa, p2, s, ka)
        dup += 1
    if kb > 0:
        pb = _reduce(kb_kind, pb, p2, s, kb)
        dup += 1
    if kind == 3 and dup > 1 and p2.conclusion.lsucc:
        raise PreconditionViolated(
            "duplicated linear context in a split permutation is unreachable"
        )
    q = _rebuild_cut(p1, pa, pb)
    e_nl = p2.conclusion.succ if kind != 3 else p2.conclusion.nlsucc
    return _contract_extra(kind if kind != 3 else 2, q, e_nl, dup - 1)


def _same_zone_cut(kind, p1):
    """True when p1's root cut consumes formulas from the outer cut's zone."""
    r = p1.rule
    if kind == 1:
        return r in ("cut", "mcut")
    if kind == 2:
        return r in ("c-cut", "c-mcut")
    return r == "cut"


def cut_formula_of_node(p: Proof):
    return p.premises[1].conclusion.subject


def _mcut_arity(p: Proof) -> int:
    q1, q2 = p.premises[0].conclusion, p.premises[1].conclusion
    if p.is_c():
        return len(q1.succ) - (len(p.conclusion.succ) - len(q2.succ))
    return len(q1.nlsucc) - (len(p.conclusion.nlsucc) - len(q2.succ))


def _permute_p2(kind, p1, p2, s, n, target):
    """p1 is principal but p2's root does not act on its subject: push the
    cut above p2's first premise and reapply p2's rule."""
    r = p2.rule
    prems = p2.premises
    sub = prems[0]
    q = _reduce(kind, p1, sub, s, n)
    # reapply r below q; q's zones end with sub's zones
    if r in ("wk-r", "wk"):
        w = p2.conclusion.succ[-1] if isinstance(p2.conclusion, CSequent) else p2.conclusion.nlsucc[-1]
        q = sq.c_wk_r(q, w) if q.is_c() else sq.l_wk(q, w)
    elif r in ("cr-r", "ctr"):
        dup = (
            p2.conclusion.succ[-1]
            if isinstance(p2.conclusion, CSequent)
            else p2.conclusion.nlsucc[-1]
        )
        zone = _nl_zone_of(1 if q.is_c() else 2, q)
        keep = _del_right(_del_right(zone, dup, 1), dup, 1)
        q = _reorder_zone(1 if q.is_c() else 2, q, keep + (dup, dup))
        q = sq.c_cr_r(q) if q.is_c() else sq.l_ctr(q)
    elif r in ("ex", "c-ex"):
        pass  # the final reorder absorbs the exchange
    elif r == "plus-r1" or r == "plus-r2":
        czone = sub.conclusion.succ if isinstance(sub.conclusion, CSequent) else sub.conclusion.nlsucc
        part = czone[0]
        zk = 1 if q.is_c() else 2
        base = _del_right(_nl_zone_of(zk, q), part, 1)
        q = _reorder_zone(zk, q, (part,) + base)
        f = p2.conclusion.succ[0] if isinstance(p2.conclusion, CSequent) else p2.conclusion.nlsucc[0]
        if r == "plus-r1":
            q = (sq.c_plus_r1 if q.is_c() else sq.l_plus_r1)(q, f.right)
        else:
            q = (sq.c_plus_r2 if q.is_c() else sq.l_plus_r2)(q, f.left)
    elif r == "minus-r":
        # reapplied in whichever world the cut result lives in: the same
        # step is minus-r on a C-sequent and c-sub-r on an L-sequent
        t1 = sub.conclusion.succ[0]
        if q.is_c():
            base = _del_right(q.conclusion.succ, t1, 1)
            q = sq.reorder_c(q, (t1,) + base)
            q = sq.c_minus_r(q, prems[1])
        else:
            base = _del_right(q.conclusion.nlsucc, t1, 1)
            q = sq.reorder_l(q, None, (t1,) + base)
            q = sq.l_c_sub_r(q, prems[1])
    elif r == "c-sub-r":
        t1 = sub.conclusion.nlsucc[0]
        base = _del_right(q.conclusion.nlsucc, t1, 1)
        q = sq.reorder_l(q, None, (t1,) + base)
        q = sq.l_c_sub_r(q, prems[1])
    elif r == "bot-r":
        q = sq.l_bot_r(q)
    elif r == "par-r":
        b1, b2 = sub.conclusion.lsucc[-2], sub.conclusion.lsucc[-1]
        base = _del_right(_del_right(q.conclusion.lsucc, b2, 1), b1, 1)
        q = sq.reorder_l(q, base + (b1, b2), None)
        q = sq.l_par_r(q)
    elif r == "coimp-r":
        b1 = sub.conclusion.lsucc[-1]
        base = _del_right(q.conclusion.lsucc, b1, 1)
        q = sq.reorder_l(q, base + (b1,), None)
        q = sq.l_coimp_r(q, prems[1])
    elif r == "j-r":
        t = sub.conclusion.nlsucc[0]
        base = _del_right(q.conclusion.nlsucc, t, 1)
        q = sq.reorder_l(q, None, (t,) + base)
        q = sq.l_j_r(q)
    elif r == "h-r":
        b = sub.conclusion.lsucc[-1]
        base = _del_right(q.conclusion.lsucc, b, 1)
        q = sq.reorder_l(q, base + (b,), None)
        q = sq.l_h_r(q)
    elif r in ("cut", "mcut", "c-cut", "c-mcut"):
        q = _reapply_cut_below(p2, q, prems[1])
    else:  # pragma: no cover
        raise PreconditionViolated(f"cannot permute cut past rule {r} on the right")
    return _finish(kind, q, target)


def _reapply_cut_below(p2, q, partner):
    """Reapply p2's root cut under the permuted cut result q; when a C cut
    travels into the non-linear zone of an L-sequent it becomes a c-cut."""
    if q.is_c() == p2.is_c():
        return _rebuild_cut(p2, q, partner)
    # p2 is a C proof whose cut now acts on q's non-linear zone
    u = cut_formula_of_node(p2)
    m = 1 if p2.rule == "cut" else _mcut_arity(p2)
    base = _del_right(q.conclusion.nlsucc, u, m)
    q = sq.reorder_l(q, None, base + (u,) * m)
    if m == 1 and p2.rule == "cut":
        return sq.l_c_cut(q, partner)
    return sq.l_c_mcut(q, partner, m)


# ---------------------------------------------------------------------------
# n-ary cut expansion, rank lowering, elimination


def expand_mcut(p: Proof) -> Proof:
    """Rewrite every mcut / c-mcut into 1-ary cuts, weakenings, contractions."""
    prems = tuple(expand_mcut(q) for q in p.premises)
    p = Proof(p.rule, p.conclusion, prems, pos=p.pos)
    if p.rule not in ("mcut", "c-mcut"):
        return p
    n = _mcut_arity(p)
    q1, q2 = p.premises
    s = q2.conclusion.subject
    e = q2.conclusion.succ
    is_c = p.is_c()
    zk = 1 if is_c else 2
    if n == 0:
        out = _wk_nl(zk, q1, e)
        return sq.reorder(out, p.conclusion)
    cur = q1
    for _ in range(n):
        base = _del_right(_nl_zone_of(zk, cur), s, 1)
        cur = _reorder_zone(zk, cur, base + (s,))
        cur = _cut_nl(zk, cur, q2)
    if n > 1:
        keep = _nl_zone_of(zk, cur)
        for f in e * n:
            keep = _del_right(keep, f, 1)
        cur = _reorder_zone(zk, cur, keep + e * n)
        for _ in range(n - 1):
            cur = sq.contract_trailing_block(cur, len(e))
    return sq.reorder(cur, p.conclusion)


def _cut_kind_and_count(p: Proof):
    if p.is_c():
        return 1, (1 if p.rule == "cut" else _mcut_arity(p))
    if p.rule == "cut":
        return 3, 1
    if p.rule == "c-cut":
        return 2, 1
    return 2, _mcut_arity(p)


def lower_rank(p: Proof) -> Proof:
    """Same endsequent, strictly smaller cut rank."""
    r = cut_rank(p)
    if r == 0:
        raise PreconditionViolated("proof is already cut-free")
    out = _lower_to(p, r - 1)
    assert cut_rank(out) < r
    return out


def _lower_to(p: Proof, bound: int) -> Proof:
    if cut_rank(p) <= bound:
        return p
    prems = tuple(_lower_to(q, bound) for q in p.premises)
    node = Proof(p.rule, p.conclusion, prems, pos=p.pos)
    if not is_cut_rule(node):
        return node
    a = cut_formula_of_node(node)
    if rank(a) + 1 <= bound:
        return node
    kind, n = _cut_kind_and_count(node)
    q = _reduce(kind, prems[0], prems[1], a, n)
    return sq.reorder(q, p.conclusion)


def eliminate(p: Proof) -> Proof:
    """A cut-free proof of the same endsequent."""
    while cut_rank(p) > 0:
        p = lower_rank(p)
    return p
