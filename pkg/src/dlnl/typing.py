"""Typed judgments and the term assignment rules.

A judgment types a single subject variable and a succedent of slots, each
slot holding a term and its type; slots holding a postponed computation
(a p-term) carry no type at all, which both enforces and reflects the
p-normality discipline: the checker rejects any p-term occurring as a
proper subterm and any typed slot whose term is a p-term.

Binding discipline: when a rule binds the minor premise's subject y (the
subtraction rules), y must be fresh for the major premise - not free in it
and not already used as a binder key there - so that the y(...) occurrences
written into the conclusion are unambiguous.  The checker also verifies
that every application head in a judgment is bound by some mkc or postp
in that same judgment.

Erasing the terms of a typing derivation yields a natural deduction proof
(zero-i erases to zero-e; every other rule keeps its name), and check_typing
re-checks that erasure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import BinderError, ParseError, RuleMismatch, ShapeMismatch, SortError
from .nd import NDProof, check_nd
from .sexpr import Sym, parse_sexpr, sexpr_to_str
from .syntax import (
    Bot,
    CoImp,
    CSequent,
    Formula,
    HOf,
    JOf,
    LSequent,
    Minus,
    NLFormula,
    Par,
    Plus,
    Zero,
    is_linear,
    is_nonlinear,
    seq_c,
    seq_l,
)
from .terms import (
    App,
    Case,
    Casel,
    Caser,
    ConnectBot,
    Dot,
    Eps,
    FalseOf,
    HWrap,
    Inl,
    Inr,
    JWrap,
    LetH,
    LetJ,
    Mkc,
    ParPair,
    Postp,
    PostpBot,
    Term,
    Var,
    binder_names,
    free_vars,
    is_p_normal,
    is_p_term,
    substitute,
    term_from_sexpr,
)


@dataclass(frozen=True)
class Slot:
    term: Term
    type: Optional[Formula]  # None marks an untyped p-term slot

    def __str__(self):
        if self.type is None:
            return f"(pslot {self.term})"
        return f"(slot {self.term} {self.type})"


def typed(term, type_):
    return Slot(term, type_)


def pslot(term):
    return Slot(term, None)


def slot_shape(slots):
    """The type sequence of a slot list (None for p-slots)."""
    return tuple(s.type for s in slots)


@dataclass(frozen=True)
class CTermJudgment:
    var: str
    type: NLFormula
    succ: tuple

    def __str__(self):
        inner = " ".join(str(s) for s in self.succ)
        return f"(judC {self.var} {self.type} (tctx{' ' + inner if inner else ''}))"


@dataclass(frozen=True)
class LTermJudgment:
    var: str
    type: Formula
    lsucc: tuple
    nlsucc: tuple

    def __str__(self):
        li = " ".join(str(s) for s in self.lsucc)
        ni = " ".join(str(s) for s in self.nlsucc)
        return (
            f"(judL {self.var} {self.type} (tctx{' ' + li if li else ''})"
            f" (tctx{' ' + ni if ni else ''}))"
        )


TermJudgment = Union[CTermJudgment, LTermJudgment]


def jud_c(var, type_, succ=()):
    return CTermJudgment(var, type_, tuple(succ))


def jud_l(var, type_, lsucc=(), nlsucc=()):
    return LTermJudgment(var, type_, tuple(lsucc), tuple(nlsucc))


def all_slots(j: TermJudgment):
    if isinstance(j, CTermJudgment):
        return j.succ
    return j.lsucc + j.nlsucc


def erase_judgment(j: TermJudgment):
    """Drop terms and p-slots, leaving a plain sequent."""
    if isinstance(j, CTermJudgment):
        return seq_c(j.type, tuple(s.type for s in j.succ if s.type is not None))
    return seq_l(
        j.type,
        tuple(s.type for s in j.lsucc if s.type is not None),
        tuple(s.type for s in j.nlsucc if s.type is not None),
    )


# ---------------------------------------------------------------------------
# context operations


def ctx_merge(s1, s2):
    """Pointwise contraction Psi1 . Psi2 of equal-shape typed contexts."""
    if slot_shape(s1) != slot_shape(s2):
        raise ShapeMismatch("contexts to merge must have equal shapes")
    out = []
    for a, b in zip(s1, s2):
        if a.type is None:
            raise ShapeMismatch("cannot merge p-term slots pointwise")
        out.append(Slot(Dot(a.term, b.term), a.type))
    return tuple(out)


def ctx_subst(payload: Term, var: str, slots):
    """Substitute into every slot term."""
    return tuple(Slot(substitute(payload, var, s.term), s.type) for s in slots)


def let_extend(kind: str, var: str, payload: Term, slots):
    """let J/H var = payload in Psi, extended pointwise over the context."""
    ctor = LetJ if kind == "J" else LetH
    out = []
    for s in slots:
        if s.type is None:
            raise ShapeMismatch("let over a p-term slot is not defined")
        out.append(Slot(ctor(var, payload, s.term), s.type))
    return tuple(out)


def case_extend(scrut: Term, xv: str, s2, yv: str, s3):
    """case scrut of xv.Psi2, yv.Psi3, extended pointwise."""
    if slot_shape(s2) != slot_shape(s3):
        raise ShapeMismatch("case branches must have equal context shapes")
    out = []
    for a, b in zip(s2, s3):
        if a.type is None:
            raise ShapeMismatch("case over a p-term slot is not defined")
        out.append(Slot(Case(scrut, xv, a.term, yv, b.term), a.type))
    return tuple(out)


# ---------------------------------------------------------------------------
# typing derivations


TC_RULES = frozenset(
    "id weak contr zero-i plus-i1 plus-i2 plus-e minus-i minus-e h-e".split()
)
TL_RULES = frozenset(
    "id weak contr bot-i bot-e par-i par-e sub-i sub-e j-i j-e h-i h-e".split()
)


@dataclass(frozen=True)
class TypingDerivation:
    rule: str
    conclusion: TermJudgment
    premises: tuple

    def is_c(self) -> bool:
        return isinstance(self.conclusion, CTermJudgment)


def _fresh_binder_for(y: str, *majors: TermJudgment):
    for j in majors:
        if y == j.var:
            raise BinderError(f"binder {y!r} collides with the subject variable")
        for s in all_slots(j):
            if y in free_vars(s.term) or y in binder_names(s.term):
                raise BinderError(f"binder {y!r} is not fresh for the major premise")


def _nl_slots(j: TermJudgment):
    return j.succ if isinstance(j, CTermJudgment) else j.nlsucc


def _with_nl(j: TermJudgment, slots):
    if isinstance(j, CTermJudgment):
        return jud_c(j.var, j.type, slots)
    return jud_l(j.var, j.type, j.lsucc, slots)


def t_id_c(x: str, s: NLFormula) -> TypingDerivation:
    if not is_nonlinear(s):
        raise SortError("non-linear identity needs a non-linear type")
    return TypingDerivation("id", jud_c(x, s, (typed(Var(x), s),)), ())


def t_id_l(x: str, a) -> TypingDerivation:
    if not is_linear(a):
        raise SortError("linear identity needs a linear type")
    return TypingDerivation("id", jud_l(x, a, (typed(Var(x), a),), ()), ())


def t_weak(d: TypingDerivation, t, at=None) -> TypingDerivation:
    z = _nl_slots(d.conclusion)
    at = len(z) if at is None else at
    zone = z[:at] + (typed(Eps(), t),) + z[at:]
    return TypingDerivation("weak", _with_nl(d.conclusion, zone), (d,))


def t_contr(d: TypingDerivation, i=None, j=None) -> TypingDerivation:
    z = _nl_slots(d.conclusion)
    if i is None:
        i, j = len(z) - 2, len(z) - 1
    a, b = z[i], z[j]
    if a.type is None or a.type != b.type:
        raise ShapeMismatch("contraction needs two slots of one type")
    zone = z[:i] + (typed(Dot(a.term, b.term), a.type),) + z[i + 1 : j] + z[j + 1 :]
    return TypingDerivation("contr", _with_nl(d.conclusion, zone), (d,))


def t_zero_i(major: TypingDerivation, minors=(), zpos=None) -> TypingDerivation:
    z = major.conclusion.succ
    if zpos is None:
        zpos = next(i for i, s in enumerate(z) if s.type == Zero())
    s0 = z[zpos]
    if s0.type != Zero():
        raise ShapeMismatch("zero-i needs a 0-typed slot")
    payload = FalseOf(s0.term)
    out = z[:zpos] + z[zpos + 1 :]
    for m in minors:
        _fresh_binder_for(m.conclusion.var, major.conclusion)
        out = out + ctx_subst(payload, m.conclusion.var, m.conclusion.succ)
    return TypingDerivation(
        "zero-i", jud_c(major.conclusion.var, major.conclusion.type, out), (major,) + tuple(minors)
    )


def t_plus_i1(d: TypingDerivation, other, pos=0) -> TypingDerivation:
    z = _nl_slots(d.conclusion)
    s = z[pos]
    zone = z[:pos] + (typed(Inl(s.term), Plus(s.type, other)),) + z[pos + 1 :]
    return TypingDerivation("plus-i1", _with_nl(d.conclusion, zone), (d,))


def t_plus_i2(d: TypingDerivation, other, pos=0) -> TypingDerivation:
    z = _nl_slots(d.conclusion)
    s = z[pos]
    zone = z[:pos] + (typed(Inr(s.term), Plus(other, s.type)),) + z[pos + 1 :]
    return TypingDerivation("plus-i2", _with_nl(d.conclusion, zone), (d,))


def t_plus_e(major, m2, m3, pos=None) -> TypingDerivation:
    cm, c2, c3 = major.conclusion, m2.conclusion, m3.conclusion
    want = Plus(c2.type, c3.type)
    z = cm.succ
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("plus-e major slot must have the sum type")
    _fresh_binder_for(c2.var, cm)
    _fresh_binder_for(c3.var, cm)
    if c2.var == c3.var:
        raise BinderError("plus-e branch variables must differ")
    ctx = case_extend(s.term, c2.var, c2.succ, c3.var, c3.succ)
    zone = z[:pos] + z[pos + 1 :] + ctx
    return TypingDerivation("plus-e", jud_c(cm.var, cm.type, zone), (major, m2, m3))


def t_minus_i(p1, p2, pos=0) -> TypingDerivation:
    c1, c2 = p1.conclusion, p2.conclusion
    s = c1.succ[pos]
    y = c2.var
    _fresh_binder_for(y, c1)
    m = typed(Mkc(s.term, y), Minus(s.type, c2.type))
    marked = ctx_subst(App(y, s.term), y, c2.succ)
    zone = c1.succ[:pos] + c1.succ[pos + 1 :] + (m,) + marked
    return TypingDerivation("minus-i", jud_c(c1.var, c1.type, zone), (p1, p2))


def t_minus_e(major, minor, pos=None, cpos=0) -> TypingDerivation:
    cm, cn = major.conclusion, minor.conclusion
    t2slot = cn.succ[cpos]
    want = Minus(cn.type, t2slot.type)
    z = cm.succ
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("minus-e premises do not fit")
    y = cn.var
    _fresh_binder_for(y, cm)
    p = pslot(Postp(y, t2slot.term, s.term))
    rest = cn.succ[:cpos] + cn.succ[cpos + 1 :]
    marked = ctx_subst(App(y, s.term), y, rest)
    zone = z[:pos] + z[pos + 1 :] + (p,) + marked
    return TypingDerivation("minus-e", jud_c(cm.var, cm.type, zone), (major, minor))


def t_h_e_c(major, minor, pos=None) -> TypingDerivation:
    cm, cn = major.conclusion, minor.conclusion
    if not isinstance(cn, LTermJudgment) or cn.lsucc != ():
        raise ShapeMismatch("h-e minor must be an L-judgment with empty linear zone")
    want = HOf(cn.type)
    z = cm.succ
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("h-e major slot must have type H A")
    _fresh_binder_for(cn.var, cm)
    rest = z[:pos] + z[pos + 1 :]
    merged = ctx_merge(rest, let_extend("H", cn.var, s.term, cn.nlsucc))
    return TypingDerivation("h-e", jud_c(cm.var, cm.type, merged), (major, minor))


def t_bot_i(d: TypingDerivation, wire: Term) -> TypingDerivation:
    c = d.conclusion
    ok = wire == Var(c.var) or any(wire == s.term for s in all_slots(c))
    if not ok:
        raise BinderError("connect-bot must wire to the subject or a context term")
    zone = c.lsucc + (typed(ConnectBot(wire), Bot()),)
    return TypingDerivation("bot-i", jud_l(c.var, c.type, zone, c.nlsucc), (d,))


def t_bot_e(d: TypingDerivation, pos=None) -> TypingDerivation:
    c = d.conclusion
    if pos is None:
        pos = next(i for i, s in enumerate(c.lsucc) if s.type == Bot())
    s = c.lsucc[pos]
    if s.type != Bot():
        raise ShapeMismatch("bot-e needs a bot-typed slot")
    zone = c.lsucc[:pos] + (pslot(PostpBot(s.term)),) + c.lsucc[pos + 1 :]
    return TypingDerivation("bot-e", jud_l(c.var, c.type, zone, c.nlsucc), (d,))


def t_par_i(d: TypingDerivation, i=None, j=None) -> TypingDerivation:
    c = d.conclusion
    if i is None:
        i, j = len(c.lsucc) - 2, len(c.lsucc) - 1
    if i == j:
        raise ShapeMismatch("par-i needs two distinct slots")
    a, b = c.lsucc[i], c.lsucc[j]
    if a.type is None or b.type is None:
        raise ShapeMismatch("par-i needs typed slots")
    g = typed(ParPair(a.term, b.term), Par(a.type, b.type))
    at = min(i, j)
    ls = tuple(s for k, s in enumerate(c.lsucc) if k not in (i, j))
    ls = ls[:at] + (g,) + ls[at:]
    return TypingDerivation("par-i", jud_l(c.var, c.type, ls, c.nlsucc), (d,))


def t_par_e(major, m2, m3, pos=None) -> TypingDerivation:
    cm, c2, c3 = major.conclusion, m2.conclusion, m3.conclusion
    want = Par(c2.type, c3.type)
    z = cm.lsucc
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("par-e major slot must have the par type")
    _fresh_binder_for(c2.var, cm)
    _fresh_binder_for(c3.var, cm)
    if c2.var == c3.var:
        raise BinderError("par-e branch variables must differ")
    el, er = Casel(s.term), Caser(s.term)
    ls = (
        z[:pos]
        + z[pos + 1 :]
        + ctx_subst(el, c2.var, c2.lsucc)
        + ctx_subst(er, c3.var, c3.lsucc)
    )
    nl = cm.nlsucc + ctx_subst(el, c2.var, c2.nlsucc) + ctx_subst(er, c3.var, c3.nlsucc)
    return TypingDerivation("par-e", jud_l(cm.var, cm.type, ls, nl), (major, m2, m3))


def t_sub_i(p1, p2, pos=None) -> TypingDerivation:
    c1, c2 = p1.conclusion, p2.conclusion
    if slot_shape(c1.nlsucc) != slot_shape(c2.nlsucc):
        raise ShapeMismatch("sub-i needs equal non-linear shapes")
    pos = len(c1.lsucc) - 1 if pos is None else pos
    s = c1.lsucc[pos]
    y = c2.var
    _fresh_binder_for(y, c1)
    mark = App(y, s.term)
    m = typed(Mkc(s.term, y), CoImp(s.type, c2.type))
    ls = c1.lsucc[:pos] + c1.lsucc[pos + 1 :] + (m,) + ctx_subst(mark, y, c2.lsucc)
    nl = c1.nlsucc + ctx_subst(mark, y, c2.nlsucc)
    return TypingDerivation("sub-i", jud_l(c1.var, c1.type, ls, nl), (p1, p2))


def t_sub_e(major, minor, pos=None, cpos=0) -> TypingDerivation:
    cm, cn = major.conclusion, minor.conclusion
    if slot_shape(cm.nlsucc) != slot_shape(cn.nlsucc):
        raise ShapeMismatch("sub-e needs equal non-linear shapes")
    cslot = cn.lsucc[cpos]
    want = CoImp(cn.type, cslot.type)
    z = cm.lsucc
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("sub-e premises do not fit")
    y = cn.var
    _fresh_binder_for(y, cm)
    mark = App(y, s.term)
    p = pslot(Postp(y, cslot.term, s.term))
    rest = cn.lsucc[:cpos] + cn.lsucc[cpos + 1 :]
    ls = (p,) + z[:pos] + z[pos + 1 :] + ctx_subst(mark, y, rest)
    nl = cm.nlsucc + ctx_subst(mark, y, cn.nlsucc)
    return TypingDerivation("sub-e", jud_l(cm.var, cm.type, ls, nl), (major, minor))


def t_j_i(d: TypingDerivation, pos=0) -> TypingDerivation:
    c = d.conclusion
    s = c.nlsucc[pos]
    ls = c.lsucc + (typed(JWrap(s.term), JOf(s.type)),)
    nl = c.nlsucc[:pos] + c.nlsucc[pos + 1 :]
    return TypingDerivation("j-i", jud_l(c.var, c.type, ls, nl), (d,))


def t_j_e(major, minor, pos=None) -> TypingDerivation:
    cm, cn = major.conclusion, minor.conclusion
    if not isinstance(cn, CTermJudgment):
        raise ShapeMismatch("j-e minor must be a C-judgment")
    want = JOf(cn.type)
    z = cm.lsucc
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("j-e major slot must have type J T")
    _fresh_binder_for(cn.var, cm)
    merged = ctx_merge(cm.nlsucc, let_extend("J", cn.var, s.term, cn.succ))
    ls = z[:pos] + z[pos + 1 :]
    return TypingDerivation("j-e", jud_l(cm.var, cm.type, ls, merged), (major, minor))


def t_h_i(d: TypingDerivation, pos=None) -> TypingDerivation:
    c = d.conclusion
    pos = len(c.lsucc) - 1 if pos is None else pos
    s = c.lsucc[pos]
    nl = (typed(HWrap(s.term), HOf(s.type)),) + c.nlsucc
    ls = c.lsucc[:pos] + c.lsucc[pos + 1 :]
    return TypingDerivation("h-i", jud_l(c.var, c.type, ls, nl), (d,))


def t_h_e_l(major, minor, pos=None) -> TypingDerivation:
    cm, cn = major.conclusion, minor.conclusion
    if not isinstance(cn, LTermJudgment) or cn.lsucc != ():
        raise ShapeMismatch("h-e minor must be an L-judgment with empty linear zone")
    want = HOf(cn.type)
    z = cm.nlsucc
    if pos is None:
        pos = next(i for i, s in enumerate(z) if s.type == want)
    s = z[pos]
    if s.type != want:
        raise ShapeMismatch("h-e major slot must have type H A")
    _fresh_binder_for(cn.var, cm)
    rest = z[:pos] + z[pos + 1 :]
    merged = ctx_merge(rest, let_extend("H", cn.var, s.term, cn.nlsucc))
    return TypingDerivation("h-e", jud_l(cm.var, cm.type, cm.lsucc, merged), (major, minor))


# ---------------------------------------------------------------------------
# checking


_BUILDER_SEARCH = {}


def check_typing(d: TypingDerivation, sig=None) -> TermJudgment:
    """Validate every node; returns the root judgment.

    Checks rule schemas, p-normality of every stored term, binder sanity of
    application heads, and that the term-erased tree checks as an ND proof.
    """
    _check_typing_node(d, sig, ())
    check_nd(erase(d), sig)
    return d.conclusion


def _check_typing_node(d, sig, path):
    for i, q in enumerate(d.premises):
        _check_typing_node(q, sig, path + (i,))
    rules = TC_RULES if d.is_c() else TL_RULES
    if d.rule not in rules:
        raise RuleMismatch(path, f"unknown typing rule {d.rule!r}")
    _check_judgment_wellformed(d.conclusion, path)
    try:
        ok = _typing_matches(d)
    except (ShapeMismatch, BinderError, StopIteration, IndexError) as e:
        raise RuleMismatch(path, f"rule {d.rule}: {e}")
    if not ok:
        raise RuleMismatch(path, f"rule {d.rule} does not derive the stated judgment")


def check_judgment(j: TermJudgment) -> TermJudgment:
    """Standalone well-formedness of a judgment: sort discipline, p-normality
    (typed slots hold p-normal non-p-terms, untyped slots hold p-terms), and
    every application head bound by an mkc/postp in the judgment."""
    _check_judgment_wellformed(j, ())
    return j


def _check_judgment_wellformed(j: TermJudgment, path):
    binders = set()
    for s in all_slots(j):
        if isinstance(s.term, Mkc):
            binders.add(s.term.binder)
        for sub in _iter_subterms(s.term):
            if isinstance(sub, Mkc):
                binders.add(sub.binder)
            if isinstance(sub, Postp):
                binders.add(sub.binder)
    for s in all_slots(j):
        if s.type is None:
            if not is_p_term(s.term):
                raise RuleMismatch(path, "untyped slot must hold a p-term")
        elif is_p_term(s.term):
            raise RuleMismatch(path, "p-terms are untyped")
        if not is_p_normal(s.term):
            raise RuleMismatch(path, f"term {s.term} is not p-normal")
        for sub in _iter_subterms(s.term):
            if isinstance(sub, App) and sub.head not in binders and sub.head != j.var:
                raise BinderError(
                    f"application head {sub.head!r} has no binder in the judgment"
                )
    if isinstance(j, CTermJudgment):
        for s in j.succ:
            if s.type is not None and not is_nonlinear(s.type):
                raise SortError(f"linear type {s.type} in a C-judgment")
    else:
        for s in j.lsucc:
            if s.type is not None and not is_linear(s.type):
                raise SortError(f"non-linear type {s.type} in the linear zone")
        for s in j.nlsucc:
            if s.type is not None and not is_nonlinear(s.type):
                raise SortError(f"linear type {s.type} in the non-linear zone")


def _iter_subterms(t):
    from .terms import subterms

    return subterms(t)


def _typing_matches(d: TypingDerivation) -> bool:
    r, c, prems = d.rule, d.conclusion, d.premises

    def eq(built):
        return built.conclusion == c

    if r == "id":
        if prems:
            return False
        built = t_id_c(c.var, c.type) if d.is_c() else t_id_l(c.var, c.type)
        return eq(built)
    if r == "weak":
        (q,) = prems
        z = _nl_slots(c)
        for at in range(len(z)):
            if z[at].term == Eps() and z[at].type is not None:
                if eq(t_weak(q, z[at].type, at)):
                    return True
        return False
    if r == "contr":
        (q,) = prems
        z = _nl_slots(q.conclusion)
        for i in range(len(z)):
            for j in range(i + 1, len(z)):
                try:
                    if eq(t_contr(q, i, j)):
                        return True
                except ShapeMismatch:
                    continue
        return False
    if r == "zero-i":
        major, minors = prems[0], prems[1:]
        for zpos, s in enumerate(major.conclusion.succ):
            if s.type == Zero() and eq(t_zero_i(major, minors, zpos)):
                return True
        return False
    if r in ("plus-i1", "plus-i2"):
        (q,) = prems
        z = _nl_slots(q.conclusion)
        fn = t_plus_i1 if r == "plus-i1" else t_plus_i2
        for g in _nl_slots(c):
            if not isinstance(g.type, Plus):
                continue
            other = g.type.right if r == "plus-i1" else g.type.left
            for pos in range(len(z)):
                if z[pos].type is not None and eq(fn(q, other, pos)):
                    return True
        return False
    if r == "plus-e":
        major, m2, m3 = prems
        for pos in range(len(major.conclusion.succ)):
            try:
                if eq(t_plus_e(major, m2, m3, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    if r == "minus-i":
        p1, p2 = prems
        for pos in range(len(p1.conclusion.succ)):
            if p1.conclusion.succ[pos].type is None:
                continue
            if eq(t_minus_i(p1, p2, pos)):
                return True
        return False
    if r == "minus-e":
        major, minor = prems
        for pos in range(len(major.conclusion.succ)):
            for cpos in range(len(minor.conclusion.succ)):
                try:
                    if eq(t_minus_e(major, minor, pos, cpos)):
                        return True
                except (ShapeMismatch, BinderError):
                    continue
        return False
    if r == "h-e" and d.is_c():
        major, minor = prems
        for pos in range(len(major.conclusion.succ)):
            try:
                if eq(t_h_e_c(major, minor, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    if r == "bot-i":
        (q,) = prems
        if not c.lsucc:
            return False
        wire_slot = c.lsucc[-1]
        if not isinstance(wire_slot.term, ConnectBot):
            return False
        return eq(t_bot_i(q, wire_slot.term.body))
    if r == "bot-e":
        (q,) = prems
        for pos in range(len(q.conclusion.lsucc)):
            if q.conclusion.lsucc[pos].type == Bot() and eq(t_bot_e(q, pos)):
                return True
        return False
    if r == "par-i":
        (q,) = prems
        nl = len(q.conclusion.lsucc)
        for i in range(nl):
            for j in range(nl):
                if i == j:
                    continue
                try:
                    if eq(t_par_i(q, i, j)):
                        return True
                except ShapeMismatch:
                    continue
        return False
    if r == "par-e":
        major, m2, m3 = prems
        for pos in range(len(major.conclusion.lsucc)):
            try:
                if eq(t_par_e(major, m2, m3, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    if r == "sub-i":
        p1, p2 = prems
        for pos in range(len(p1.conclusion.lsucc)):
            try:
                if eq(t_sub_i(p1, p2, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    if r == "sub-e":
        major, minor = prems
        for pos in range(len(major.conclusion.lsucc)):
            for cpos in range(len(minor.conclusion.lsucc)):
                try:
                    if eq(t_sub_e(major, minor, pos, cpos)):
                        return True
                except (ShapeMismatch, BinderError):
                    continue
        return False
    if r == "j-i":
        (q,) = prems
        for pos in range(len(q.conclusion.nlsucc)):
            if q.conclusion.nlsucc[pos].type is None:
                continue
            if eq(t_j_i(q, pos)):
                return True
        return False
    if r == "j-e":
        major, minor = prems
        for pos in range(len(major.conclusion.lsucc)):
            try:
                if eq(t_j_e(major, minor, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    if r == "h-i":
        (q,) = prems
        for pos in range(len(q.conclusion.lsucc)):
            if q.conclusion.lsucc[pos].type is None:
                continue
            if eq(t_h_i(q, pos)):
                return True
        return False
    if r == "h-e":
        major, minor = prems
        for pos in range(len(major.conclusion.nlsucc)):
            try:
                if eq(t_h_e_l(major, minor, pos)):
                    return True
            except (ShapeMismatch, BinderError):
                continue
        return False
    return False  # pragma: no cover


# ---------------------------------------------------------------------------
# erasure


_ERASE_NAME = {"zero-i": "zero-e"}


def erase(d: TypingDerivation) -> NDProof:
    """Forget the terms: a DND proof with the term-erased judgments."""
    return NDProof(
        _ERASE_NAME.get(d.rule, d.rule),
        erase_judgment(d.conclusion),
        tuple(erase(q) for q in d.premises),
    )


# ---------------------------------------------------------------------------
# file formats


def judgment_from_sexpr(node) -> TermJudgment:
    if not isinstance(node, list) or not node or not isinstance(node[0], Sym):
        raise ParseError(f"bad judgment: {sexpr_to_str(node)}")
    head = node[0].name
    from .syntax import _formula_from_sexpr

    if head == "judC":
        if len(node) != 4:
            raise ParseError("(judC VAR TYPE (tctx ...)) expected")
        return jud_c(
            _ident(node[1]),
            _formula_from_sexpr(node[2], "nonlinear"),
            _slots_from_sexpr(node[3], "nonlinear"),
        )
    if head == "judL":
        if len(node) != 5:
            raise ParseError("(judL VAR TYPE (tctx ...) (tctx ...)) expected")
        return jud_l(
            _ident(node[1]),
            _formula_from_sexpr(node[2], "linear"),
            _slots_from_sexpr(node[3], "linear"),
            _slots_from_sexpr(node[4], "nonlinear"),
        )
    raise ParseError(f"unknown judgment head {head!r}")


def _ident(node):
    if not isinstance(node, Sym):
        raise ParseError(f"expected an identifier, got {sexpr_to_str(node)}")
    return node.name


def _slots_from_sexpr(node, sort):
    from .syntax import _formula_from_sexpr

    if not isinstance(node, list) or not node or node[0] != Sym("tctx"):
        raise ParseError(f"expected (tctx ...), got {sexpr_to_str(node)}")
    out = []
    for item in node[1:]:
        if not isinstance(item, list) or not item or not isinstance(item[0], Sym):
            raise ParseError(f"bad slot: {sexpr_to_str(item)}")
        if item[0].name == "slot" and len(item) == 3:
            out.append(typed(term_from_sexpr(item[1]), _formula_from_sexpr(item[2], sort)))
        elif item[0].name == "pslot" and len(item) == 2:
            out.append(pslot(term_from_sexpr(item[1])))
        else:
            raise ParseError(f"bad slot: {sexpr_to_str(item)}")
    return tuple(out)


def parse_judgment(src: str) -> TermJudgment:
    return judgment_from_sexpr(parse_sexpr(src))


def typing_to_sexpr_str(d: TypingDerivation, indent=0) -> str:
    pad = "  " * indent
    head = f"{pad}(tnd {d.rule} {d.conclusion}"
    if not d.premises:
        return head + ")"
    inner = "\n".join(typing_to_sexpr_str(q, indent + 1) for q in d.premises)
    return head + "\n" + inner + ")"


def typing_from_sexpr(node) -> TypingDerivation:
    if (
        not isinstance(node, list)
        or len(node) < 3
        or node[0] != Sym("tnd")
        or not isinstance(node[1], Sym)
    ):
        raise ParseError(f"expected (tnd RULE JUDGMENT ...), got {sexpr_to_str(node)}")
    return TypingDerivation(
        node[1].name,
        judgment_from_sexpr(node[2]),
        tuple(typing_from_sexpr(x) for x in node[3:]),
    )


def parse_typing(src: str) -> TypingDerivation:
    return typing_from_sexpr(parse_sexpr(src))
