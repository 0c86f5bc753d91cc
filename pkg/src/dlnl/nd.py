"""Sequent-style natural deduction: checking, admissible cuts, translations.

Unlike the sequent calculi, the natural deduction systems carry no exchange
rule, so check_nd matches each stored conclusion against the rule's derived
conclusion up to permutation inside each zone.  Weakening may insert its
formula at any position and contraction may merge any duplicated pair; the
other rules locate their principal formulas wherever they occur.  Builders
take explicit principal positions and produce a canonical conclusion order.

The coproduct elimination is additive: both minor premises must carry
succedents of pointwise equal shape (AdditiveContextError otherwise); its
multiplicative form is simulated with weakening and contraction, which is
exactly what the translation from the sequent calculus does.  The J/H
eliminations merge the minor's non-linear zone into the major's pointwise,
so they too demand aligned shapes.

Translations: to_sequent maps introductions to right rules label for label
and eliminations to the matching left rule below a cut, preserving the
endsequent exactly (exchange blocks bridge the positional conventions).
to_nd maps right rules to introductions, left rules to eliminations fed by
an identity major weakened into alignment, cuts to the admissible cuts, and
drops exchange nodes, so it preserves endsequents up to exchange.

admissible_cut composes two checked ND proofs by translating to the sequent
calculus, cutting there, eliminating, and translating back; the result is a
genuine DND proof of the composite sequent.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sequent as sq
from .cutelim import eliminate
from .errors import AdditiveContextError, ParseError, RuleMismatch, ShapeMismatch
from .sexpr import Sym, parse_sexpr, sexpr_to_str
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
    frozen_multiset,
    same_up_to_exchange,
    seq_c,
    seq_l,
    sequent_from_sexpr,
)

NC_RULES = frozenset(
    "id weak contr zero-e plus-i1 plus-i2 plus-e minus-i minus-e h-e".split()
)
NL_RULES = frozenset(
    "id weak contr bot-i bot-e par-i par-e sub-i sub-e j-i j-e h-i h-e".split()
)


@dataclass(frozen=True)
class NDProof:
    rule: str
    conclusion: Sequent
    premises: tuple

    def is_c(self) -> bool:
        return isinstance(self.conclusion, CSequent)


# ---------------------------------------------------------------------------
# builders (canonical conclusion orders; positions select principals)


def nd_id(f):
    from .syntax import is_nonlinear

    if is_nonlinear(f):
        return NDProof("id", seq_c(f, (f,)), ())
    return NDProof("id", seq_l(f, (f,), ()), ())


def _nl_zone(s: Sequent):
    return s.succ if isinstance(s, CSequent) else s.nlsucc


def _with_nl(s: Sequent, zone):
    if isinstance(s, CSequent):
        return seq_c(s.subject, zone)
    return seq_l(s.subject, s.lsucc, zone)


def nd_weak(p: NDProof, f, at=None):
    z = _nl_zone(p.conclusion)
    at = len(z) if at is None else at
    zone = z[:at] + (f,) + z[at:]
    return NDProof("weak", _with_nl(p.conclusion, zone), (p,))


def nd_contr(p: NDProof, i=None, j=None):
    z = _nl_zone(p.conclusion)
    if i is None:
        i, j = len(z) - 2, len(z) - 1
    if not (0 <= i < j < len(z)) or z[i] != z[j]:
        raise ShapeMismatch("contraction needs a duplicated pair")
    zone = z[:j] + z[j + 1 :]
    return NDProof("contr", _with_nl(p.conclusion, zone), (p,))


def nd_zero_e(major: NDProof, minors=(), zpos=None):
    z = major.conclusion.succ
    zpos = z.index(Zero()) if zpos is None else zpos
    if z[zpos] != Zero():
        raise ShapeMismatch("zero-e needs a 0 at the chosen position")
    rest = z[:zpos] + z[zpos + 1 :]
    for m in minors:
        rest = rest + m.conclusion.succ
    return NDProof("zero-e", seq_c(major.conclusion.subject, rest), (major,) + tuple(minors))


def nd_plus_i1(p: NDProof, other, pos=0):
    z = _nl_zone(p.conclusion)
    zone = z[:pos] + (Plus(z[pos], other),) + z[pos + 1 :]
    return NDProof("plus-i1", _with_nl(p.conclusion, zone), (p,))


def nd_plus_i2(p: NDProof, other, pos=0):
    z = _nl_zone(p.conclusion)
    zone = z[:pos] + (Plus(other, z[pos]),) + z[pos + 1 :]
    return NDProof("plus-i2", _with_nl(p.conclusion, zone), (p,))


def nd_plus_e(major: NDProof, m2: NDProof, m3: NDProof, pos=None):
    z = major.conclusion.succ
    want = Plus(m2.conclusion.subject, m3.conclusion.subject)
    pos = z.index(want) if pos is None else pos
    if z[pos] != want:
        raise ShapeMismatch("plus-e major does not carry the sum at that position")
    if m2.conclusion.succ != m3.conclusion.succ:
        raise AdditiveContextError((), "minor premises must have equal succedent shapes")
    zone = z[:pos] + z[pos + 1 :] + m2.conclusion.succ
    return NDProof("plus-e", seq_c(major.conclusion.subject, zone), (major, m2, m3))


def nd_minus_i(p1: NDProof, p2: NDProof, pos=0):
    z = p1.conclusion.succ
    m = Minus(z[pos], p2.conclusion.subject)
    zone = z[:pos] + z[pos + 1 :] + (m,) + p2.conclusion.succ
    return NDProof("minus-i", seq_c(p1.conclusion.subject, zone), (p1, p2))


def nd_minus_e(major: NDProof, minor: NDProof, pos=None, tpos=0):
    z = major.conclusion.succ
    zm = minor.conclusion.succ
    if pos is None:
        pos = next(
            i
            for i, f in enumerate(z)
            if isinstance(f, Minus) and f.left == minor.conclusion.subject and f.right == zm[tpos]
        )
    m = z[pos]
    if not isinstance(m, Minus) or m.left != minor.conclusion.subject or m.right != zm[tpos]:
        raise ShapeMismatch("minus-e premises do not fit")
    zone = z[:pos] + z[pos + 1 :] + zm[:tpos] + zm[tpos + 1 :]
    return NDProof("minus-e", seq_c(major.conclusion.subject, zone), (major, minor))


def nd_h_e_c(major: NDProof, minor: NDProof, pos=None):
    z = major.conclusion.succ
    want = HOf(minor.conclusion.subject)
    pos = z.index(want) if pos is None else pos
    rest = z[:pos] + z[pos + 1 :]
    if minor.conclusion.lsucc != ():
        raise ShapeMismatch("h-e minor premise must have an empty linear zone")
    if rest != minor.conclusion.nlsucc:
        raise ShapeMismatch("h-e zones must have equal shapes for the merge")
    return NDProof("h-e", seq_c(major.conclusion.subject, rest), (major, minor))


def nd_bot_i(p: NDProof):
    c = p.conclusion
    return NDProof("bot-i", seq_l(c.subject, c.lsucc + (Bot(),), c.nlsucc), (p,))


def nd_bot_e(p: NDProof, pos=None):
    c = p.conclusion
    pos = c.lsucc.index(Bot()) if pos is None else pos
    if c.lsucc[pos] != Bot():
        raise ShapeMismatch("bot-e needs bot at the chosen position")
    return NDProof(
        "bot-e", seq_l(c.subject, c.lsucc[:pos] + c.lsucc[pos + 1 :], c.nlsucc), (p,)
    )


def nd_par_i(p: NDProof, i=None, j=None):
    """Pair the linear slots i (left component) and j (right component)."""
    c = p.conclusion
    if i is None:
        i, j = len(c.lsucc) - 2, len(c.lsucc) - 1
    if i == j:
        raise ShapeMismatch("par-i needs two distinct slots")
    g = Par(c.lsucc[i], c.lsucc[j])
    at = min(i, j)
    ls = tuple(f for k, f in enumerate(c.lsucc) if k not in (i, j))
    ls = ls[:at] + (g,) + ls[at:]
    return NDProof("par-i", seq_l(c.subject, ls, c.nlsucc), (p,))


def nd_par_e(major: NDProof, m2: NDProof, m3: NDProof, pos=None):
    c = major.conclusion
    want = Par(m2.conclusion.subject, m3.conclusion.subject)
    pos = c.lsucc.index(want) if pos is None else pos
    if c.lsucc[pos] != want:
        raise ShapeMismatch("par-e major does not carry the par at that position")
    ls = c.lsucc[:pos] + c.lsucc[pos + 1 :] + m2.conclusion.lsucc + m3.conclusion.lsucc
    nl = c.nlsucc + m2.conclusion.nlsucc + m3.conclusion.nlsucc
    return NDProof("par-e", seq_l(c.subject, ls, nl), (major, m2, m3))


def nd_sub_i(p1: NDProof, p2: NDProof, pos=None):
    c1, c2 = p1.conclusion, p2.conclusion
    if c1.nlsucc != c2.nlsucc:
        raise ShapeMismatch("sub-i needs equal non-linear shapes")
    pos = len(c1.lsucc) - 1 if pos is None else pos
    m = CoImp(c1.lsucc[pos], c2.subject)
    ls = c1.lsucc[:pos] + c1.lsucc[pos + 1 :] + (m,) + c2.lsucc
    return NDProof("sub-i", seq_l(c1.subject, ls, c1.nlsucc + c2.nlsucc), (p1, p2))


def nd_sub_e(major: NDProof, minor: NDProof, pos=None, cpos=0):
    cm, cn = major.conclusion, minor.conclusion
    if cm.nlsucc != cn.nlsucc:
        raise ShapeMismatch("sub-e needs equal non-linear shapes")
    want = CoImp(cn.subject, cn.lsucc[cpos])
    pos = cm.lsucc.index(want) if pos is None else pos
    if cm.lsucc[pos] != want:
        raise ShapeMismatch("sub-e premises do not fit")
    ls = cm.lsucc[:pos] + cm.lsucc[pos + 1 :] + cn.lsucc[:cpos] + cn.lsucc[cpos + 1 :]
    return NDProof("sub-e", seq_l(cm.subject, ls, cm.nlsucc + cn.nlsucc), (major, minor))


def nd_j_i(p: NDProof, pos=0):
    c = p.conclusion
    t = c.nlsucc[pos]
    return NDProof(
        "j-i",
        seq_l(c.subject, c.lsucc + (JOf(t),), c.nlsucc[:pos] + c.nlsucc[pos + 1 :]),
        (p,),
    )


def nd_j_e(major: NDProof, minor: NDProof, pos=None):
    c = major.conclusion
    want = JOf(minor.conclusion.subject)
    pos = c.lsucc.index(want) if pos is None else pos
    if c.lsucc[pos] != want:
        raise ShapeMismatch("j-e major does not carry J T at that position")
    if c.nlsucc != minor.conclusion.succ:
        raise ShapeMismatch("j-e zones must have equal shapes for the merge")
    return NDProof(
        "j-e", seq_l(c.subject, c.lsucc[:pos] + c.lsucc[pos + 1 :], c.nlsucc), (major, minor)
    )


def nd_h_i(p: NDProof, pos=None):
    c = p.conclusion
    pos = len(c.lsucc) - 1 if pos is None else pos
    b = c.lsucc[pos]
    return NDProof(
        "h-i",
        seq_l(c.subject, c.lsucc[:pos] + c.lsucc[pos + 1 :], (HOf(b),) + c.nlsucc),
        (p,),
    )


def nd_h_e_l(major: NDProof, minor: NDProof, pos=None):
    c = major.conclusion
    want = HOf(minor.conclusion.subject)
    pos = c.nlsucc.index(want) if pos is None else pos
    rest = c.nlsucc[:pos] + c.nlsucc[pos + 1 :]
    if minor.conclusion.lsucc != ():
        raise ShapeMismatch("h-e minor premise must have an empty linear zone")
    if rest != minor.conclusion.nlsucc:
        raise ShapeMismatch("h-e zones must have equal shapes for the merge")
    return NDProof("h-e", seq_l(c.subject, c.lsucc, rest), (major, minor))


# ---------------------------------------------------------------------------
# checking: derived conclusion must match the stored one up to exchange


def check_nd(p: NDProof, sig=None) -> Sequent:
    _check_nd_node(p, sig, ())
    return p.conclusion


def _check_nd_node(p, sig, path):
    for i, q in enumerate(p.premises):
        _check_nd_node(q, sig, path + (i,))
    if sig is not None:
        from .syntax import sequent_atoms

        for name in sequent_atoms(p.conclusion):
            if name not in sig.nl_atoms and name not in sig.l_atoms:
                raise RuleMismatch(path, f"atom {name!r} not in signature")
    rules = NC_RULES if p.is_c() else NL_RULES
    if p.rule not in rules:
        raise RuleMismatch(path, f"unknown ND rule {p.rule!r}")
    try:
        ok = _nd_matches(p)
    except AdditiveContextError:
        raise AdditiveContextError(path, "minor premises must have equal succedent shapes")
    except (ShapeMismatch, IndexError, StopIteration, ValueError):
        ok = False
    if not ok:
        raise RuleMismatch(path, f"rule {p.rule} does not derive the stated conclusion")


def _zone_candidates(fn, zone):
    return [i for i, f in enumerate(zone) if fn(f)]


def _nd_matches(p: NDProof) -> bool:
    """Does some principal configuration derive p.conclusion up to exchange?"""
    r, c, prems = p.rule, p.conclusion, p.premises

    def ok(derived):
        return same_up_to_exchange(derived.conclusion, c) and derived.conclusion.subject == c.subject

    if r == "id":
        return len(prems) == 0 and ok(nd_id(c.subject))
    if r == "weak":
        (q,) = prems
        zq = frozen_multiset(_nl_zone(q.conclusion))
        zc = list(_nl_zone(c))
        for i, f in enumerate(zc):
            if frozen_multiset(zc[:i] + zc[i + 1 :]) == zq:
                return ok(nd_weak(q, f))
        return False
    if r == "contr":
        (q,) = prems
        z = _nl_zone(q.conclusion)
        for i in range(len(z)):
            for j in range(i + 1, len(z)):
                if z[i] == z[j] and same_up_to_exchange(
                    nd_contr(q, i, j).conclusion, c
                ):
                    return True
        return False
    if r == "zero-e":
        major, minors = prems[0], prems[1:]
        if not isinstance(major.conclusion, CSequent):
            return False
        for zpos in _zone_candidates(lambda f: f == Zero(), major.conclusion.succ):
            if ok(nd_zero_e(major, minors, zpos)):
                return True
        return False
    if r in ("plus-i1", "plus-i2"):
        (q,) = prems
        z = _nl_zone(q.conclusion)
        for g in _nl_zone(c):
            if not isinstance(g, Plus):
                continue
            part = g.left if r == "plus-i1" else g.right
            other = g.right if r == "plus-i1" else g.left
            fn = nd_plus_i1 if r == "plus-i1" else nd_plus_i2
            for pos in _zone_candidates(lambda f: f == part, z):
                if ok(fn(q, other, pos)):
                    return True
        return False
    if r == "plus-e":
        major, m2, m3 = prems
        if m2.conclusion.succ != m3.conclusion.succ:
            raise AdditiveContextError((), "additive")
        want = Plus(m2.conclusion.subject, m3.conclusion.subject)
        for pos in _zone_candidates(lambda f: f == want, major.conclusion.succ):
            if ok(nd_plus_e(major, m2, m3, pos)):
                return True
        return False
    if r == "minus-i":
        p1, p2 = prems
        for pos in range(len(p1.conclusion.succ)):
            if ok(nd_minus_i(p1, p2, pos)):
                return True
        return False
    if r == "minus-e":
        major, minor = prems
        for pos in range(len(major.conclusion.succ)):
            for tpos in range(len(minor.conclusion.succ)):
                try:
                    if ok(nd_minus_e(major, minor, pos, tpos)):
                        return True
                except ShapeMismatch:
                    continue
        return False
    if r == "h-e" and p.is_c():
        major, minor = prems
        want = HOf(minor.conclusion.subject)
        for pos in _zone_candidates(lambda f: f == want, major.conclusion.succ):
            try:
                if ok(nd_h_e_c(major, minor, pos)):
                    return True
            except ShapeMismatch:
                continue
        return False
    if r == "bot-i":
        return ok(nd_bot_i(prems[0]))
    if r == "bot-e":
        q = prems[0]
        for pos in _zone_candidates(lambda f: f == Bot(), q.conclusion.lsucc):
            if ok(nd_bot_e(q, pos)):
                return True
        return False
    if r == "par-i":
        q = prems[0]
        nl = len(q.conclusion.lsucc)
        for i in range(nl):
            for j in range(nl):
                if i != j and ok(nd_par_i(q, i, j)):
                    return True
        return False
    if r == "par-e":
        major, m2, m3 = prems
        want = Par(m2.conclusion.subject, m3.conclusion.subject)
        for pos in _zone_candidates(lambda f: f == want, major.conclusion.lsucc):
            if ok(nd_par_e(major, m2, m3, pos)):
                return True
        return False
    if r == "sub-i":
        p1, p2 = prems
        for pos in range(len(p1.conclusion.lsucc)):
            try:
                if ok(nd_sub_i(p1, p2, pos)):
                    return True
            except ShapeMismatch:
                return False
        return False
    if r == "sub-e":
        major, minor = prems
        for pos in range(len(major.conclusion.lsucc)):
            for cpos in range(len(minor.conclusion.lsucc)):
                try:
                    if ok(nd_sub_e(major, minor, pos, cpos)):
                        return True
                except ShapeMismatch:
                    continue
        return False
    if r == "j-i":
        q = prems[0]
        for pos in range(len(q.conclusion.nlsucc)):
            if ok(nd_j_i(q, pos)):
                return True
        return False
    if r == "j-e":
        major, minor = prems
        want = JOf(minor.conclusion.subject)
        for pos in _zone_candidates(lambda f: f == want, major.conclusion.lsucc):
            try:
                if ok(nd_j_e(major, minor, pos)):
                    return True
            except ShapeMismatch:
                continue
        return False
    if r == "h-i":
        q = prems[0]
        for pos in range(len(q.conclusion.lsucc)):
            if ok(nd_h_i(q, pos)):
                return True
        return False
    if r == "h-e":
        major, minor = prems
        want = HOf(minor.conclusion.subject)
        for pos in _zone_candidates(lambda f: f == want, major.conclusion.nlsucc):
            try:
                if ok(nd_h_e_l(major, minor, pos)):
                    return True
            except ShapeMismatch:
                continue
        return False
    return False  # pragma: no cover


# ---------------------------------------------------------------------------
# translation into the sequent calculus (endsequent-exact)


def nd_to_seq(p: NDProof) -> sq.Proof:
    """The derivation-to-sequent-calculus translation; may introduce cuts."""
    out = _s_node(p)
    return sq.reorder(out, p.conclusion)


def _s_node(p: NDProof) -> sq.Proof:
    r = p.rule
    prems = [nd_to_seq(q) for q in p.premises]
    c = p.conclusion
    if r == "id":
        return sq.c_id(c.subject) if p.is_c() else sq.l_id(c.subject)
    if r == "weak":
        (q,) = prems
        zq = list(_nl_zone(q.conclusion))
        zc = list(_nl_zone(c))
        for i, f in enumerate(zc):
            if sorted(map(repr, zc[:i] + zc[i + 1 :])) == sorted(map(repr, zq)):
                return (sq.c_wk_r if p.is_c() else sq.l_wk)(q, f)
        raise ShapeMismatch("weakening does not fit")  # pragma: no cover
    if r == "contr":
        (q,) = prems
        z = _nl_zone(q.conclusion)
        zc = frozen_multiset(_nl_zone(c))
        for i in range(len(z)):
            for j in range(i + 1, len(z)):
                if z[i] == z[j] and frozen_multiset(z[:j] + z[j + 1 :]) == zc:
                    base = z[:i] + z[i + 1 : j] + z[j + 1 :]
                    q2 = _reorder_sq(p, q, base + (z[i], z[i]))
                    return (sq.c_cr_r if p.is_c() else sq.l_ctr)(q2)
        raise ShapeMismatch("contraction does not fit")  # pragma: no cover
    if r == "zero-e":
        major, minors = prems[0], prems[1:]
        zpos = _find_config_zero(p)
        mz = major.conclusion.succ
        rest = mz[:zpos] + mz[zpos + 1 :]
        subjects = tuple(m.conclusion.subject for m in p.premises[1:])
        zaxiom = sq.weaken_many_c(sq.c_zero_l(), subjects)
        cur = sq.c_cut(sq.reorder_c(major, rest + (Zero(),)), zaxiom)
        done = ()
        for k, m in enumerate(minors):
            sk = subjects[k]
            remaining = subjects[k + 1 :]
            cur = sq.reorder_c(cur, rest + done + remaining + (sk,))
            cur = sq.c_cut(cur, m)
            done = done + m.conclusion.succ
            cur = sq.reorder_c(cur, rest + done + remaining)
        return cur
    if r in ("plus-i1", "plus-i2"):
        (q,) = prems
        other, pos = _find_config_plus_i(p)
        z = _nl_zone(q.conclusion)
        q2 = _reorder_sq(p, q, (z[pos],) + z[:pos] + z[pos + 1 :])
        if p.is_c():
            fn = sq.c_plus_r1 if r == "plus-i1" else sq.c_plus_r2
        else:
            fn = sq.l_plus_r1 if r == "plus-i1" else sq.l_plus_r2
        return fn(q2, other)
    if r == "plus-e":
        major, m2, m3 = prems
        want = Plus(p.premises[1].conclusion.subject, p.premises[2].conclusion.subject)
        z = major.conclusion.succ
        pos = z.index(want)
        major2 = sq.reorder_c(major, z[:pos] + z[pos + 1 :] + (want,))
        cut = sq.c_cut(major2, sq.c_plus_l(m2, m3))
        return sq.contract_trailing_block(cut, len(m2.conclusion.succ))
    if r == "minus-i":
        p1, p2 = prems
        pos = _find_config_minus_i(p)
        z = p1.conclusion.succ
        q = sq.reorder_c(p1, (z[pos],) + z[:pos] + z[pos + 1 :])
        return sq.c_minus_r(q, p2)
    if r == "minus-e":
        major, minor = prems
        pos, tpos = _find_config_minus_e(p)
        z = major.conclusion.succ
        zm = minor.conclusion.succ
        major2 = sq.reorder_c(major, z[:pos] + z[pos + 1 :] + (z[pos],))
        minor2 = sq.reorder_c(minor, (zm[tpos],) + zm[:tpos] + zm[tpos + 1 :])
        return sq.c_cut(major2, sq.c_minus_l(minor2))
    if r == "h-e" and p.is_c():
        major, minor = prems
        want = HOf(p.premises[1].conclusion.subject)
        z = major.conclusion.succ
        pos = _aligned_pos(z, want, minor.conclusion.nlsucc)
        major2 = sq.reorder_c(major, z[:pos] + z[pos + 1 :] + (want,))
        cut = sq.c_cut(major2, sq.c_h_l(minor))
        return sq.contract_trailing_block(cut, len(minor.conclusion.nlsucc))
    if r == "bot-i":
        return sq.l_bot_r(prems[0])
    if r == "bot-e":
        q = prems[0]
        z = q.conclusion.lsucc
        pos = z.index(Bot())
        q2 = sq.reorder_l(q, z[:pos] + z[pos + 1 :] + (Bot(),), None)
        return sq.l_cut(q2, sq.l_bot_l())
    if r == "par-i":
        q = prems[0]
        i, j = _find_config_par_i(p)
        z = q.conclusion.lsucc
        rest = tuple(f for k, f in enumerate(z) if k not in (i, j))
        q2 = sq.reorder_l(q, rest + (z[i], z[j]), None)
        return sq.l_par_r(q2)
    if r == "par-e":
        major, m2, m3 = prems
        want = Par(p.premises[1].conclusion.subject, p.premises[2].conclusion.subject)
        z = major.conclusion.lsucc
        pos = z.index(want)
        major2 = sq.reorder_l(major, z[:pos] + z[pos + 1 :] + (want,), None)
        return sq.l_cut(major2, sq.l_par_l(m2, m3))
    if r == "sub-i":
        p1, p2 = prems
        pos = _find_config_sub_i(p)
        z = p1.conclusion.lsucc
        q = sq.reorder_l(p1, z[:pos] + z[pos + 1 :] + (z[pos],), None)
        return sq.l_coimp_r(q, p2)
    if r == "sub-e":
        major, minor = prems
        pos, cpos = _find_config_sub_e(p)
        z = major.conclusion.lsucc
        zm = minor.conclusion.lsucc
        major2 = sq.reorder_l(major, z[:pos] + z[pos + 1 :] + (z[pos],), None)
        minor2 = sq.reorder_l(minor, (zm[cpos],) + zm[:cpos] + zm[cpos + 1 :], None)
        return sq.l_cut(major2, sq.l_coimp_l(minor2))
    if r == "j-i":
        q = prems[0]
        pos = _find_config_j_i(p)
        z = q.conclusion.nlsucc
        q2 = sq.reorder_l(q, None, (z[pos],) + z[:pos] + z[pos + 1 :])
        return sq.l_j_r(q2)
    if r == "j-e":
        major, minor = prems
        want = JOf(p.premises[1].conclusion.subject)
        z = major.conclusion.lsucc
        pos = z.index(want)
        if major.conclusion.nlsucc != minor.conclusion.succ:
            raise ShapeMismatch("j-e zones must align")  # pragma: no cover
        major2 = sq.reorder_l(major, z[:pos] + z[pos + 1 :] + (want,), None)
        cut = sq.l_cut(major2, sq.l_j_l(minor))
        return sq.contract_trailing_block(cut, len(minor.conclusion.succ))
    if r == "h-i":
        q = prems[0]
        pos = _find_config_h_i(p)
        z = q.conclusion.lsucc
        q2 = sq.reorder_l(q, z[:pos] + z[pos + 1 :] + (z[pos],), None)
        return sq.l_h_r(q2)
    if r == "h-e":
        major, minor = prems
        want = HOf(p.premises[1].conclusion.subject)
        z = major.conclusion.nlsucc
        pos = _aligned_pos(z, want, minor.conclusion.nlsucc)
        major2 = sq.reorder_l(major, None, z[:pos] + z[pos + 1 :] + (want,))
        cut = sq.l_c_cut(major2, sq.c_h_l(minor))
        return sq.contract_trailing_block(cut, len(minor.conclusion.nlsucc))
    raise RuleMismatch((), f"untranslatable rule {r}")  # pragma: no cover


def _aligned_pos(zone, want, minor_zone):
    """The occurrence of `want` whose removal leaves exactly minor_zone."""
    for pos, f in enumerate(zone):
        if f == want and zone[:pos] + zone[pos + 1 :] == minor_zone:
            return pos
    raise ShapeMismatch("merge zones do not align")


def _reorder_sq(p, q, zone):
    if p.is_c():
        return sq.reorder_c(q, zone)
    return sq.reorder_l(q, None, zone)


def _find_config_zero(p):
    major = p.premises[0].conclusion
    minors = p.premises[1:]
    for zpos in range(len(major.succ)):
        if major.succ[zpos] != Zero():
            continue
        if same_up_to_exchange(nd_zero_e(p.premises[0], minors, zpos).conclusion, p.conclusion):
            return zpos
    raise ShapeMismatch("zero-e configuration not found")


def _find_config_plus_i(p):
    q = p.premises[0]
    z = _nl_zone(q.conclusion)
    fn = nd_plus_i1 if p.rule == "plus-i1" else nd_plus_i2
    for g in _nl_zone(p.conclusion):
        if not isinstance(g, Plus):
            continue
        part = g.left if p.rule == "plus-i1" else g.right
        other = g.right if p.rule == "plus-i1" else g.left
        for pos, f in enumerate(z):
            if f == part and same_up_to_exchange(fn(q, other, pos).conclusion, p.conclusion):
                return other, pos
    raise ShapeMismatch("plus-i configuration not found")


def _find_config_minus_i(p):
    p1, p2 = p.premises
    for pos in range(len(p1.conclusion.succ)):
        if same_up_to_exchange(nd_minus_i(p1, p2, pos).conclusion, p.conclusion):
            return pos
    raise ShapeMismatch("minus-i configuration not found")


def _find_config_minus_e(p):
    major, minor = p.premises
    for pos in range(len(major.conclusion.succ)):
        for tpos in range(len(minor.conclusion.succ)):
            try:
                if same_up_to_exchange(
                    nd_minus_e(major, minor, pos, tpos).conclusion, p.conclusion
                ):
                    return pos, tpos
            except (ShapeMismatch, StopIteration):
                continue
    raise ShapeMismatch("minus-e configuration not found")


def _find_config_par_i(p):
    q = p.premises[0]
    nl = len(q.conclusion.lsucc)
    for i in range(nl):
        for j in range(nl):
            if i != j and same_up_to_exchange(
                nd_par_i(q, i, j).conclusion, p.conclusion
            ):
                return i, j
    raise ShapeMismatch("par-i configuration not found")


def _find_config_sub_i(p):
    p1, p2 = p.premises
    for pos in range(len(p1.conclusion.lsucc)):
        if same_up_to_exchange(nd_sub_i(p1, p2, pos).conclusion, p.conclusion):
            return pos
    raise ShapeMismatch("sub-i configuration not found")


def _find_config_sub_e(p):
    major, minor = p.premises
    for pos in range(len(major.conclusion.lsucc)):
        for cpos in range(len(minor.conclusion.lsucc)):
            try:
                if same_up_to_exchange(
                    nd_sub_e(major, minor, pos, cpos).conclusion, p.conclusion
                ):
                    return pos, cpos
            except ShapeMismatch:
                continue
    raise ShapeMismatch("sub-e configuration not found")


def _find_config_j_i(p):
    q = p.premises[0]
    for pos in range(len(q.conclusion.nlsucc)):
        if same_up_to_exchange(nd_j_i(q, pos).conclusion, p.conclusion):
            return pos
    raise ShapeMismatch("j-i configuration not found")


def _find_config_h_i(p):
    q = p.premises[0]
    for pos in range(len(q.conclusion.lsucc)):
        if same_up_to_exchange(nd_h_i(q, pos).conclusion, p.conclusion):
            return pos
    raise ShapeMismatch("h-i configuration not found")


# ---------------------------------------------------------------------------
# translation out of the sequent calculus (endsequent-exact up to exchange)


def seq_to_nd(p: sq.Proof) -> NDProof:
    """Right rules become introductions, left rules become eliminations with
    an identity major, cuts become the admissible cuts."""
    r = p.rule
    c = p.conclusion
    if r in ("ex", "c-ex"):
        return seq_to_nd(p.premises[0])
    if r == "id":
        return nd_id(c.subject)
    if p.is_c():
        return _n_node_c(p)
    return _n_node_l(p)


def _pad_weak(nd: NDProof, shapes):
    for f in shapes:
        nd = nd_weak(nd, f)
    return nd


def _pad_weak_front(nd: NDProof, shapes):
    for f in reversed(shapes):
        nd = nd_weak(nd, f, at=0)
    return nd


def _n_node_c(p):
    r = p.rule
    prems = p.premises
    if r == "zero-l":
        return nd_zero_e(nd_id(Zero()), ())
    if r == "wk-r":
        return nd_weak(seq_to_nd(prems[0]), p.conclusion.succ[-1])
    if r == "cr-r":
        q = seq_to_nd(prems[0])
        z = _nl_zone(q.conclusion)
        f = p.premises[0].conclusion.succ[-1]
        i = z.index(f)
        j = next(k for k in range(len(z) - 1, i, -1) if z[k] == f)
        return nd_contr(q, i, j)
    if r == "plus-l":
        q1, q2 = seq_to_nd(prems[0]), seq_to_nd(prems[1])
        s1 = q1.conclusion.succ
        s2 = q2.conclusion.succ
        m2 = _pad_weak(q1, s2)
        m3 = _pad_weak_front(q2, s1)
        want = Plus(q1.conclusion.subject, q2.conclusion.subject)
        return nd_plus_e(nd_id(want), m2, m3, pos=0)
    if r in ("plus-r1", "plus-r2"):
        q = seq_to_nd(prems[0])
        g = p.conclusion.succ[0]
        part = g.left if r == "plus-r1" else g.right
        other = g.right if r == "plus-r1" else g.left
        pos = _nl_zone(q.conclusion).index(part)
        return (nd_plus_i1 if r == "plus-r1" else nd_plus_i2)(q, other, pos)
    if r == "minus-l":
        q = seq_to_nd(prems[0])
        m = p.conclusion.subject
        tpos = q.conclusion.succ.index(m.right)
        return nd_minus_e(nd_id(m), q, pos=0, tpos=tpos)
    if r == "minus-r":
        q1, q2 = seq_to_nd(prems[0]), seq_to_nd(prems[1])
        t1 = prems[0].conclusion.succ[0]
        pos = q1.conclusion.succ.index(t1)
        return nd_minus_i(q1, q2, pos)
    if r == "h-l":
        q = seq_to_nd(prems[0])
        major = _pad_weak(nd_id(p.conclusion.subject), q.conclusion.nlsucc)
        return nd_h_e_c(major, q, pos=0)
    if r in ("cut", "mcut"):
        return _n_cut(p)
    raise RuleMismatch((), f"untranslatable sequent rule {r}")  # pragma: no cover


def _n_node_l(p):
    r = p.rule
    prems = p.premises
    if r == "bot-l":
        return nd_bot_e(nd_id(Bot()), 0)
    if r == "wk":
        return nd_weak(seq_to_nd(prems[0]), p.conclusion.nlsucc[-1])
    if r == "ctr":
        q = seq_to_nd(prems[0])
        z = q.conclusion.nlsucc
        f = p.premises[0].conclusion.nlsucc[-1]
        i = z.index(f)
        j = next(k for k in range(len(z) - 1, i, -1) if z[k] == f)
        return nd_contr(q, i, j)
    if r == "bot-r":
        return nd_bot_i(seq_to_nd(prems[0]))
    if r == "par-l":
        q1, q2 = seq_to_nd(prems[0]), seq_to_nd(prems[1])
        want = Par(q1.conclusion.subject, q2.conclusion.subject)
        return nd_par_e(nd_id(want), q1, q2, pos=0)
    if r == "par-r":
        q = seq_to_nd(prems[0])
        b1, b2 = prems[0].conclusion.lsucc[-2], prems[0].conclusion.lsucc[-1]
        z = q.conclusion.lsucc
        i = z.index(b1)
        j = z.index(b2) if b2 != b1 else z.index(b2, i + 1)
        return nd_par_i(q, i, j)
    if r == "coimp-l":
        q = seq_to_nd(prems[0])
        m = p.conclusion.subject
        major = _pad_weak(nd_id(m), q.conclusion.nlsucc)
        cpos = q.conclusion.lsucc.index(m.right)
        out = nd_sub_e(major, q, pos=0, cpos=cpos)
        return _nd_contract_block(out, q.conclusion.nlsucc)
    if r == "coimp-r":
        # the linear rule has no shape side condition, so pad both premises
        # to the common shape, introduce, and contract the doubled zone
        q1, q2 = seq_to_nd(prems[0]), seq_to_nd(prems[1])
        b1 = prems[0].conclusion.lsucc[-1]
        s1, s2 = q1.conclusion.nlsucc, q2.conclusion.nlsucc
        q1p = _pad_weak(q1, s2)
        q2p = _pad_weak_front(q2, s1)
        pos = q1p.conclusion.lsucc.index(b1)
        out = nd_sub_i(q1p, q2p, pos)
        return _nd_contract_block(out, s1 + s2)
    if r in ("plus-r1", "plus-r2"):
        # the linear ND fragment has no + introduction, so route the
        # non-linear step through the J shift: introduce J T1, then
        # eliminate it against a C-derivation of the sum
        q = seq_to_nd(prems[0])
        g = p.conclusion.nlsucc[0]
        part = g.left if r == "plus-r1" else g.right
        other = g.right if r == "plus-r1" else g.left
        fn = nd_plus_i1 if r == "plus-r1" else nd_plus_i2
        minor = fn(nd_id(part), other, 0)  # part |-C g
        return _sandwich_j(q, part, minor)
    if r == "c-sub-r":
        ql, qc = seq_to_nd(prems[0]), seq_to_nd(prems[1])
        t1 = prems[0].conclusion.nlsucc[0]
        minor = nd_minus_i(nd_id(t1), qc, pos=0)  # t1 |-C t1 - t2, psi2
        return _sandwich_j(ql, t1, minor)
    if r == "j-l":
        q = seq_to_nd(prems[0])
        major = _pad_weak(nd_id(p.conclusion.subject), q.conclusion.succ)
        return nd_j_e(major, q, pos=0)
    if r == "j-r":
        q = seq_to_nd(prems[0])
        t = prems[0].conclusion.nlsucc[0]
        return nd_j_i(q, q.conclusion.nlsucc.index(t))
    if r == "h-r":
        q = seq_to_nd(prems[0])
        b = prems[0].conclusion.lsucc[-1]
        return nd_h_i(q, q.conclusion.lsucc.index(b))
    if r in ("cut", "c-cut", "c-mcut"):
        return _n_cut(p)
    raise RuleMismatch((), f"untranslatable sequent rule {r}")  # pragma: no cover


def _sandwich_j(major_l: NDProof, t, minor_c: NDProof) -> NDProof:
    """Replace the non-linear t in major_l's zone by minor_c's succedent,
    using j-i then j-e; minor_c proves t |-C Psi."""
    jq = nd_j_i(major_l, major_l.conclusion.nlsucc.index(t))
    major = jq
    for f in minor_c.conclusion.succ:
        major = nd_weak(major, f)
    aligned_minor = _pad_weak_front(minor_c, jq.conclusion.nlsucc)
    return nd_j_e(major, aligned_minor)


def _n_cut(p: sq.Proof) -> NDProof:
    kind = _nd_cut_kind(p)
    n1 = seq_to_nd(p.premises[0])
    n2 = seq_to_nd(p.premises[1])
    if p.rule in ("mcut", "c-mcut"):
        from .cutelim import _mcut_arity

        n = _mcut_arity(p)
        out = n1
        for _ in range(n):
            out = admissible_cut(out, n2, kind)
        if n == 0:
            for f in p.premises[1].conclusion.succ:
                out = nd_weak(out, f)
        else:
            e = p.premises[1].conclusion.succ
            for _ in range(n - 1):
                out = _nd_contract_block(out, e)
        return out
    return admissible_cut(n1, n2, kind)


def _nd_contract_block(nd: NDProof, block):
    """Contract a duplicated multiset block in the non-linear zone."""
    for f in block:
        z = _nl_zone(nd.conclusion)
        i = z.index(f)
        j = next(k for k in range(len(z) - 1, i, -1) if z[k] == f)
        nd = nd_contr(nd, i, j)
    return nd


def _nd_cut_kind(p: sq.Proof) -> str:
    if p.is_c():
        return "CC"
    return "LL" if p.rule == "cut" else "LC"


def admissible_cut(p1: NDProof, p2: NDProof, kind: str) -> NDProof:
    """The admissible composition of ND derivations: the cut-formula
    occurrence of p1's succedent is replaced by p2's succedent.

    kind is CC (both non-linear), LC (linear major, non-linear cut formula)
    or LL (both linear).  Implemented by translating to the sequent
    calculus, cutting, eliminating, and translating back, which yields an
    honest DND proof of the composite sequent.
    """
    s1 = nd_to_seq(p1)
    s2 = nd_to_seq(p2)
    t = s2.conclusion.subject
    if kind == "CC":
        z = s1.conclusion.succ
        if t not in z:
            raise ShapeMismatch("cut formula absent from the first premise")
        base = list(z)
        base.remove(t)
        cut = sq.c_cut(sq.reorder_c(s1, tuple(base) + (t,)), s2)
    elif kind == "LC":
        z = s1.conclusion.nlsucc
        if t not in z:
            raise ShapeMismatch("cut formula absent from the first premise")
        base = list(z)
        base.remove(t)
        cut = sq.l_c_cut(sq.reorder_l(s1, None, tuple(base) + (t,)), s2)
    elif kind == "LL":
        z = s1.conclusion.lsucc
        if t not in z:
            raise ShapeMismatch("cut formula absent from the first premise")
        base = list(z)
        base.remove(t)
        cut = sq.l_cut(sq.reorder_l(s1, tuple(base) + (t,), None), s2)
    else:
        raise ValueError(f"unknown cut kind {kind!r}")
    return seq_to_nd(eliminate(cut))


# ---------------------------------------------------------------------------
# file format: (ndproof RULE CONCLUSION PREMISE*)


def nd_to_sexpr_str(p: NDProof, indent=0) -> str:
    pad = "  " * indent
    head = f"{pad}(ndproof {p.rule} {p.conclusion}"
    if not p.premises:
        return head + ")"
    inner = "\n".join(nd_to_sexpr_str(q, indent + 1) for q in p.premises)
    return head + "\n" + inner + ")"


def nd_from_sexpr(node) -> NDProof:
    if (
        not isinstance(node, list)
        or len(node) < 3
        or node[0] != Sym("ndproof")
        or not isinstance(node[1], Sym)
    ):
        raise ParseError(f"expected (ndproof RULE CONCLUSION ...), got {sexpr_to_str(node)}")
    return NDProof(
        node[1].name,
        sequent_from_sexpr(node[2]),
        tuple(nd_from_sexpr(x) for x in node[3:]),
    )


def parse_nd_proof(src: str) -> NDProof:
    return nd_from_sexpr(parse_sexpr(src))
