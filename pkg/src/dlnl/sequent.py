"""Proof trees and rule-by-rule checking for the two sequent calculi.

A proof node stores its rule name, its full conclusion sequent and its
premises; check_proof re-derives every conclusion from the rule schema and
the premises, so a stored tree is either accepted exactly as written or
rejected with the path of the offending node.

Positional conventions.  Contexts are sequences and the calculi have
explicit exchange rules (ex swaps adjacent formulas in the linear zone,
c-ex in the non-linear zone), so each schema fixes one concrete position
for its principal formulas:

  C fragment                              conclusion
    id                                    S |- S
    zero-l                                0 |-
    wk-r      S |- Psi                    S |- Psi, T           (end)
    cr-r      S |- Psi, T, T              S |- Psi, T           (end)
    ex i      S |- ..A B..                S |- ..B A..
    plus-l    T1 |- Psi1 ; T2 |- Psi2     T1+T2 |- Psi1, Psi2
    plus-r1   S |- T1, Psi                S |- T1+T2, Psi       (front)
    plus-r2   S |- T2, Psi                S |- T1+T2, Psi
    minus-l   T1 |- T2, Psi               T1-T2 |- Psi
    minus-r   S |- T1, Psi1 ; T2 |- Psi2  S |- T1-T2, Psi1, Psi2
    cut       T |- Psi, S ; S |- Psi'     T |- Psi, Psi'
    mcut      T |- Psi, S^n ; S |- Psi'   T |- Psi, Psi'        (n >= 0)
    h-l       A |-L . ; Psi               H A |- Psi

  L fragment
    id        A |- A ; .
    bot-l     bot |- . ; .
    wk        A |- D ; Psi                A |- D ; Psi, T
    ctr       A |- D ; Psi, T, T          A |- D ; Psi, T
    ex i / c-ex i                         adjacent swap in D / Psi
    bot-r     A |- D ; Psi                A |- D, bot ; Psi
    par-l     A |- D1;P1 ; B |- D2;P2     A par B |- D1, D2 ; P1, P2
    par-r     A |- D, B1, B2 ; Psi        A |- D, B1 par B2 ; Psi
    coimp-l   B1 |- B2, D ; Psi           B1 sub B2 |- D ; Psi
    coimp-r   A |- D1, B1 ; P1
              B2 |- D2 ; P2               A |- B1 sub B2, D1, D2 ; P1, P2
    plus-r1   A |- D ; T1, Psi            A |- D ; T1+T2, Psi
    c-sub-r   A |- D ; T1, P1
              T2 |-C P2                   A |- D ; T1-T2, P1, P2
    j-l       T |-C Psi                   J T |- . ; Psi
    j-r       A |- D ; T, Psi             A |- D, J T ; Psi
    h-r       A |- D, B ; Psi             A |- D ; H B, Psi
    cut       B |- D, A ; P ; A |- D';P'  B |- D, D' ; P, P'
    c-cut     A |- D ; Psi, T ; T |-C P'  A |- D ; Psi, P'
    c-mcut    A |- D ; Psi, T^n ; T |-C P'  A |- D ; Psi, P'

The n-ary cuts mcut and c-mcut exist only for non-linear cut formulas,
which are the ones with right weakening and contraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ArityError, ParseError, RuleMismatch
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
    Signature,
    Zero,
    atoms_of,
    is_linear,
    is_nonlinear,
    rank,
    sequent_atoms,
    sequent_from_sexpr,
)

C_RULES = frozenset(
    "id zero-l wk-r cr-r ex plus-l plus-r1 plus-r2 minus-l minus-r cut mcut h-l".split()
)
L_RULES = frozenset(
    "id bot-l wk ctr ex c-ex bot-r par-l par-r coimp-l coimp-r "
    "plus-r1 plus-r2 c-sub-r j-l j-r h-r cut c-cut c-mcut".split()
)
C_CUT_RULES = frozenset({"cut", "mcut"})
L_CUT_RULES = frozenset({"cut", "c-cut", "c-mcut"})


@dataclass(frozen=True)
class Proof:
    rule: str
    conclusion: Sequent
    premises: tuple
    pos: Optional[int] = None  # exchange position for ex / c-ex

    def is_c(self) -> bool:
        return isinstance(self.conclusion, CSequent)


def _swap(items, i):
    items = list(items)
    if not 0 <= i < len(items) - 1:
        raise IndexError(f"exchange position {i} out of range")
    items[i], items[i + 1] = items[i + 1], items[i]
    return tuple(items)


def is_cut_rule(p: Proof) -> bool:
    return p.rule in (C_CUT_RULES if p.is_c() else L_CUT_RULES)


def cut_formula_of(p: Proof):
    """The cut formula of a cut node: the subject of its second premise."""
    return p.premises[1].conclusion.subject


def depth(p: Proof) -> int:
    """Length of the longest path; a leaf has depth 1."""
    if not p.premises:
        return 1
    return 1 + max(depth(q) for q in p.premises)


def cut_rank(p: Proof) -> int:
    """0 for cut-free proofs, else one plus the maximal cut-formula rank."""
    best = 0
    stack = [p]
    while stack:
        node = stack.pop()
        if is_cut_rule(node):
            best = max(best, rank(cut_formula_of(node)) + 1)
        stack.extend(node.premises)
    return best


def is_cut_free(p: Proof) -> bool:
    return cut_rank(p) == 0


def proof_size(p: Proof) -> int:
    return 1 + sum(proof_size(q) for q in p.premises)


def iter_nodes(p: Proof):
    yield p
    for q in p.premises:
        yield from iter_nodes(q)


# ---------------------------------------------------------------------------
# the checker


def check_proof(p: Proof, sig: Optional[Signature] = None) -> Sequent:
    """Validate every node of p against its rule schema; return the endsequent."""
    _check_node(p, sig, ())
    return p.conclusion


def _fail(path, msg):
    raise RuleMismatch(path, msg)


def _expect_arity(p, n, path):
    if len(p.premises) != n:
        raise ArityError(path, f"rule {p.rule} expects {n} premises, got {len(p.premises)}")


def _check_node(p, sig, path):
    for i, q in enumerate(p.premises):
        _check_node(q, sig, path + (i,))
    if sig is not None:
        for name in sequent_atoms(p.conclusion):
            if name not in sig.nl_atoms and name not in sig.l_atoms:
                _fail(path, f"atom {name!r} not in signature")
    if p.is_c():
        if p.rule not in C_RULES:
            _fail(path, f"unknown C-rule {p.rule!r}")
        _check_c(p, path)
    else:
        if p.rule not in L_RULES:
            _fail(path, f"unknown L-rule {p.rule!r}")
        _check_l(p, path)


def _prem(p, i):
    return p.premises[i].conclusion


def _check_c(p, path):
    c = p.conclusion
    r = p.rule
    if r == "id":
        _expect_arity(p, 0, path)
        if c.succ != (c.subject,):
            _fail(path, f"id must conclude S |- S, got {c}")
    elif r == "zero-l":
        _expect_arity(p, 0, path)
        if c.subject != Zero() or c.succ != ():
            _fail(path, f"zero-l must conclude 0 |- , got {c}")
    elif r == "wk-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, CSequent) or q.subject != c.subject:
            _fail(path, "wk-r premise must share the subject")
        if not c.succ or c.succ[:-1] != q.succ:
            _fail(path, "wk-r appends exactly one formula at the end")
    elif r == "cr-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, CSequent) or q.subject != c.subject:
            _fail(path, "cr-r premise must share the subject")
        if not c.succ or q.succ != c.succ + (c.succ[-1],):
            _fail(path, "cr-r contracts a duplicated final formula")
    elif r == "ex":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if p.pos is None:
            _fail(path, "ex needs a position")
        if not isinstance(q, CSequent) or q.subject != c.subject:
            _fail(path, "ex premise must share the subject")
        try:
            swapped = _swap(q.succ, p.pos)
        except IndexError as e:
            _fail(path, str(e))
        if c.succ != swapped:
            _fail(path, f"ex at {p.pos} does not yield the stated conclusion")
    elif r == "plus-l":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, CSequent) and isinstance(q2, CSequent)):
            _fail(path, "plus-l premises must be C-sequents")
        if c.subject != Plus(q1.subject, q2.subject):
            _fail(path, "plus-l subject must be the + of the premise subjects")
        if c.succ != q1.succ + q2.succ:
            _fail(path, "plus-l succedent must concatenate the premise succedents")
    elif r in ("plus-r1", "plus-r2"):
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, CSequent) or q.subject != c.subject:
            _fail(path, f"{r} premise must share the subject")
        if not c.succ or not q.succ or not isinstance(c.succ[0], Plus):
            _fail(path, f"{r} introduces + at the front of the succedent")
        part = c.succ[0].left if r == "plus-r1" else c.succ[0].right
        if q.succ != (part,) + c.succ[1:]:
            _fail(path, f"{r} premise does not match the stated conclusion")
    elif r == "minus-l":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, CSequent) or not q.succ:
            _fail(path, "minus-l premise must be T1 |- T2, Psi")
        if c.subject != Minus(q.subject, q.succ[0]) or c.succ != q.succ[1:]:
            _fail(path, "minus-l conclusion does not match its premise")
    elif r == "minus-r":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, CSequent) and isinstance(q2, CSequent)):
            _fail(path, "minus-r premises must be C-sequents")
        if q1.subject != c.subject or not q1.succ:
            _fail(path, "minus-r first premise must be S |- T1, Psi1")
        want = (Minus(q1.succ[0], q2.subject),) + q1.succ[1:] + q2.succ
        if c.succ != want:
            _fail(path, "minus-r conclusion does not match its premises")
    elif r == "cut":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, CSequent) and isinstance(q2, CSequent)):
            _fail(path, "cut premises must be C-sequents")
        if q1.subject != c.subject or not q1.succ or q1.succ[-1] != q2.subject:
            _fail(path, "cut needs T |- Psi, S with S the second premise subject")
        if c.succ != q1.succ[:-1] + q2.succ:
            _fail(path, "cut conclusion does not match its premises")
    elif r == "mcut":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, CSequent) and isinstance(q2, CSequent)):
            _fail(path, "mcut premises must be C-sequents")
        if q1.subject != c.subject:
            _fail(path, "mcut first premise must share the subject")
        n = len(q1.succ) - (len(c.succ) - len(q2.succ))
        keep = len(q1.succ) - n
        if n < 0 or keep < 0 or q1.succ[keep:] != (q2.subject,) * n:
            _fail(path, "mcut first premise must end with S^n")
        if c.succ != q1.succ[:keep] + q2.succ:
            _fail(path, "mcut conclusion does not match its premises")
    elif r == "h-l":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.lsucc != ():
            _fail(path, "h-l premise must be A |-L . ; Psi")
        if c.subject != HOf(q.subject) or c.succ != q.nlsucc:
            _fail(path, "h-l conclusion does not match its premise")
    else:  # pragma: no cover
        _fail(path, f"unhandled C-rule {r}")


def _check_l(p, path):
    c = p.conclusion
    r = p.rule
    if r == "id":
        _expect_arity(p, 0, path)
        if c.lsucc != (c.subject,) or c.nlsucc != ():
            _fail(path, f"id must conclude A |- A ; ., got {c}")
    elif r == "bot-l":
        _expect_arity(p, 0, path)
        if c.subject != Bot() or c.lsucc != () or c.nlsucc != ():
            _fail(path, f"bot-l must conclude bot |- . ; ., got {c}")
    elif r == "wk":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or q.lsucc != c.lsucc:
            _fail(path, "wk changes only the non-linear zone")
        if not c.nlsucc or c.nlsucc[:-1] != q.nlsucc:
            _fail(path, "wk appends exactly one non-linear formula at the end")
    elif r == "ctr":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or q.lsucc != c.lsucc:
            _fail(path, "ctr changes only the non-linear zone")
        if not c.nlsucc or q.nlsucc != c.nlsucc + (c.nlsucc[-1],):
            _fail(path, "ctr contracts a duplicated final formula")
    elif r in ("ex", "c-ex"):
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if p.pos is None:
            _fail(path, f"{r} needs a position")
        if not isinstance(q, LSequent) or q.subject != c.subject:
            _fail(path, f"{r} premise must share the subject")
        try:
            if r == "ex":
                ok = c.lsucc == _swap(q.lsucc, p.pos) and c.nlsucc == q.nlsucc
            else:
                ok = c.nlsucc == _swap(q.nlsucc, p.pos) and c.lsucc == q.lsucc
        except IndexError as e:
            _fail(path, str(e))
        if not ok:
            _fail(path, f"{r} at {p.pos} does not yield the stated conclusion")
    elif r == "bot-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or q.nlsucc != c.nlsucc:
            _fail(path, "bot-r changes only the linear zone")
        if not c.lsucc or c.lsucc[-1] != Bot() or c.lsucc[:-1] != q.lsucc:
            _fail(path, "bot-r appends bot at the end of the linear zone")
    elif r == "par-l":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, LSequent) and isinstance(q2, LSequent)):
            _fail(path, "par-l premises must be L-sequents")
        if c.subject != Par(q1.subject, q2.subject):
            _fail(path, "par-l subject must be the par of the premise subjects")
        if c.lsucc != q1.lsucc + q2.lsucc or c.nlsucc != q1.nlsucc + q2.nlsucc:
            _fail(path, "par-l zones must concatenate the premise zones")
    elif r == "par-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or q.nlsucc != c.nlsucc:
            _fail(path, "par-r changes only the linear zone")
        if not c.lsucc or not isinstance(c.lsucc[-1], Par):
            _fail(path, "par-r introduces par at the end of the linear zone")
        pr = c.lsucc[-1]
        if q.lsucc != c.lsucc[:-1] + (pr.left, pr.right):
            _fail(path, "par-r premise does not match the stated conclusion")
    elif r == "coimp-l":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or not q.lsucc:
            _fail(path, "coimp-l premise must be B1 |- B2, Delta ; Psi")
        if c.subject != CoImp(q.subject, q.lsucc[0]):
            _fail(path, "coimp-l subject must be B1 sub B2")
        if c.lsucc != q.lsucc[1:] or c.nlsucc != q.nlsucc:
            _fail(path, "coimp-l conclusion does not match its premise")
    elif r == "coimp-r":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, LSequent) and isinstance(q2, LSequent)):
            _fail(path, "coimp-r premises must be L-sequents")
        if q1.subject != c.subject or not q1.lsucc:
            _fail(path, "coimp-r first premise must be A |- Delta1, B1 ; Psi1")
        want_l = (CoImp(q1.lsucc[-1], q2.subject),) + q1.lsucc[:-1] + q2.lsucc
        if c.lsucc != want_l or c.nlsucc != q1.nlsucc + q2.nlsucc:
            _fail(path, "coimp-r conclusion does not match its premises")
    elif r in ("plus-r1", "plus-r2"):
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or q.lsucc != c.lsucc:
            _fail(path, f"{r} changes only the non-linear zone")
        if not c.nlsucc or not q.nlsucc or not isinstance(c.nlsucc[0], Plus):
            _fail(path, f"{r} introduces + at the front of the non-linear zone")
        part = c.nlsucc[0].left if r == "plus-r1" else c.nlsucc[0].right
        if q.nlsucc != (part,) + c.nlsucc[1:]:
            _fail(path, f"{r} premise does not match the stated conclusion")
    elif r == "c-sub-r":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not isinstance(q1, LSequent) or not isinstance(q2, CSequent):
            _fail(path, "c-sub-r premises must be an L-sequent and a C-sequent")
        if q1.subject != c.subject or q1.lsucc != c.lsucc or not q1.nlsucc:
            _fail(path, "c-sub-r first premise must be A |- Delta ; T1, Psi1")
        want = (Minus(q1.nlsucc[0], q2.subject),) + q1.nlsucc[1:] + q2.succ
        if c.nlsucc != want:
            _fail(path, "c-sub-r conclusion does not match its premises")
    elif r == "j-l":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, CSequent):
            _fail(path, "j-l premise must be a C-sequent")
        if c.subject != JOf(q.subject) or c.lsucc != () or c.nlsucc != q.succ:
            _fail(path, "j-l conclusion does not match its premise")
    elif r == "j-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or not q.nlsucc:
            _fail(path, "j-r premise must be A |- Delta ; T, Psi")
        if not c.lsucc or c.lsucc != q.lsucc + (JOf(q.nlsucc[0]),):
            _fail(path, "j-r appends J T at the end of the linear zone")
        if c.nlsucc != q.nlsucc[1:]:
            _fail(path, "j-r removes T from the front of the non-linear zone")
    elif r == "h-r":
        _expect_arity(p, 1, path)
        q = _prem(p, 0)
        if not isinstance(q, LSequent) or q.subject != c.subject or not q.lsucc:
            _fail(path, "h-r premise must be A |- Delta, B ; Psi")
        if c.lsucc != q.lsucc[:-1] or c.nlsucc != (HOf(q.lsucc[-1]),) + q.nlsucc:
            _fail(path, "h-r moves the last linear formula to H B at the front")
    elif r == "cut":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not (isinstance(q1, LSequent) and isinstance(q2, LSequent)):
            _fail(path, "cut premises must be L-sequents")
        if q1.subject != c.subject or not q1.lsucc or q1.lsucc[-1] != q2.subject:
            _fail(path, "cut needs B |- Delta, A ; Psi with A the second subject")
        if c.lsucc != q1.lsucc[:-1] + q2.lsucc or c.nlsucc != q1.nlsucc + q2.nlsucc:
            _fail(path, "cut conclusion does not match its premises")
    elif r == "c-cut":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not isinstance(q1, LSequent) or not isinstance(q2, CSequent):
            _fail(path, "c-cut premises must be an L-sequent and a C-sequent")
        if q1.subject != c.subject or q1.lsucc != c.lsucc:
            _fail(path, "c-cut changes only the non-linear zone")
        if not q1.nlsucc or q1.nlsucc[-1] != q2.subject:
            _fail(path, "c-cut needs A |- Delta ; Psi, T with T the second subject")
        if c.nlsucc != q1.nlsucc[:-1] + q2.succ:
            _fail(path, "c-cut conclusion does not match its premises")
    elif r == "c-mcut":
        _expect_arity(p, 2, path)
        q1, q2 = _prem(p, 0), _prem(p, 1)
        if not isinstance(q1, LSequent) or not isinstance(q2, CSequent):
            _fail(path, "c-mcut premises must be an L-sequent and a C-sequent")
        if q1.subject != c.subject or q1.lsucc != c.lsucc:
            _fail(path, "c-mcut changes only the non-linear zone")
        n = len(q1.nlsucc) - (len(c.nlsucc) - len(q2.succ))
        keep = len(q1.nlsucc) - n
        if n < 0 or keep < 0 or q1.nlsucc[keep:] != (q2.subject,) * n:
            _fail(path, "c-mcut first premise must end with T^n")
        if c.nlsucc != q1.nlsucc[:keep] + q2.succ:
            _fail(path, "c-mcut conclusion does not match its premises")
    else:  # pragma: no cover
        _fail(path, f"unhandled L-rule {r}")


# ---------------------------------------------------------------------------
# node builders: compute the conclusion forced by a rule application

from .syntax import seq_c, seq_l  # noqa: E402


def c_id(f):
    return Proof("id", seq_c(f, (f,)), ())


def c_zero_l():
    return Proof("zero-l", seq_c(Zero(), ()), ())


def c_wk_r(p, f):
    c = p.conclusion
    return Proof("wk-r", seq_c(c.subject, c.succ + (f,)), (p,))


def c_cr_r(p):
    c = p.conclusion
    if len(c.succ) < 2 or c.succ[-1] != c.succ[-2]:
        raise ValueError("cr-r needs a duplicated final formula")
    return Proof("cr-r", seq_c(c.subject, c.succ[:-1]), (p,))


def c_ex(p, i):
    c = p.conclusion
    return Proof("ex", seq_c(c.subject, _swap(c.succ, i)), (p,), pos=i)


def c_plus_l(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    return Proof(
        "plus-l", seq_c(Plus(c1.subject, c2.subject), c1.succ + c2.succ), (p1, p2)
    )


def c_plus_r1(p, other):
    c = p.conclusion
    return Proof(
        "plus-r1", seq_c(c.subject, (Plus(c.succ[0], other),) + c.succ[1:]), (p,)
    )


def c_plus_r2(p, other):
    c = p.conclusion
    return Proof(
        "plus-r2", seq_c(c.subject, (Plus(other, c.succ[0]),) + c.succ[1:]), (p,)
    )


def c_minus_l(p):
    c = p.conclusion
    return Proof("minus-l", seq_c(Minus(c.subject, c.succ[0]), c.succ[1:]), (p,))


def c_minus_r(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    succ = (Minus(c1.succ[0], c2.subject),) + c1.succ[1:] + c2.succ
    return Proof("minus-r", seq_c(c1.subject, succ), (p1, p2))


def c_cut(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    if not c1.succ or c1.succ[-1] != c2.subject:
        raise ValueError("cut needs the cut formula at the end of the first premise")
    return Proof("cut", seq_c(c1.subject, c1.succ[:-1] + c2.succ), (p1, p2))


def c_mcut(p1, p2, n):
    c1, c2 = p1.conclusion, p2.conclusion
    keep = len(c1.succ) - n
    if keep < 0 or c1.succ[keep:] != (c2.subject,) * n:
        raise ValueError("mcut needs S^n at the end of the first premise")
    return Proof("mcut", seq_c(c1.subject, c1.succ[:keep] + c2.succ), (p1, p2))


def c_h_l(p):
    c = p.conclusion
    if c.lsucc != ():
        raise ValueError("h-l needs an empty linear zone")
    return Proof("h-l", seq_c(HOf(c.subject), c.nlsucc), (p,))


def l_id(f):
    return Proof("id", seq_l(f, (f,), ()), ())


def l_bot_l():
    return Proof("bot-l", seq_l(Bot(), (), ()), ())


def l_wk(p, f):
    c = p.conclusion
    return Proof("wk", seq_l(c.subject, c.lsucc, c.nlsucc + (f,)), (p,))


def l_ctr(p):
    c = p.conclusion
    if len(c.nlsucc) < 2 or c.nlsucc[-1] != c.nlsucc[-2]:
        raise ValueError("ctr needs a duplicated final formula")
    return Proof("ctr", seq_l(c.subject, c.lsucc, c.nlsucc[:-1]), (p,))


def l_ex(p, i):
    c = p.conclusion
    return Proof("ex", seq_l(c.subject, _swap(c.lsucc, i), c.nlsucc), (p,), pos=i)


def l_c_ex(p, i):
    c = p.conclusion
    return Proof("c-ex", seq_l(c.subject, c.lsucc, _swap(c.nlsucc, i)), (p,), pos=i)


def l_bot_r(p):
    c = p.conclusion
    return Proof("bot-r", seq_l(c.subject, c.lsucc + (Bot(),), c.nlsucc), (p,))


def l_par_l(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    return Proof(
        "par-l",
        seq_l(Par(c1.subject, c2.subject), c1.lsucc + c2.lsucc, c1.nlsucc + c2.nlsucc),
        (p1, p2),
    )


def l_par_r(p):
    c = p.conclusion
    lsucc = c.lsucc[:-2] + (Par(c.lsucc[-2], c.lsucc[-1]),)
    return Proof("par-r", seq_l(c.subject, lsucc, c.nlsucc), (p,))


def l_coimp_l(p):
    c = p.conclusion
    return Proof(
        "coimp-l",
        seq_l(CoImp(c.subject, c.lsucc[0]), c.lsucc[1:], c.nlsucc),
        (p,),
    )


def l_coimp_r(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    lsucc = (CoImp(c1.lsucc[-1], c2.subject),) + c1.lsucc[:-1] + c2.lsucc
    return Proof(
        "coimp-r", seq_l(c1.subject, lsucc, c1.nlsucc + c2.nlsucc), (p1, p2)
    )


def l_plus_r1(p, other):
    c = p.conclusion
    nl = (Plus(c.nlsucc[0], other),) + c.nlsucc[1:]
    return Proof("plus-r1", seq_l(c.subject, c.lsucc, nl), (p,))


def l_plus_r2(p, other):
    c = p.conclusion
    nl = (Plus(other, c.nlsucc[0]),) + c.nlsucc[1:]
    return Proof("plus-r2", seq_l(c.subject, c.lsucc, nl), (p,))


def l_c_sub_r(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    nl = (Minus(c1.nlsucc[0], c2.subject),) + c1.nlsucc[1:] + c2.succ
    return Proof("c-sub-r", seq_l(c1.subject, c1.lsucc, nl), (p1, p2))


def l_j_l(p):
    c = p.conclusion
    return Proof("j-l", seq_l(JOf(c.subject), (), c.succ), (p,))


def l_j_r(p):
    c = p.conclusion
    return Proof(
        "j-r",
        seq_l(c.subject, c.lsucc + (JOf(c.nlsucc[0]),), c.nlsucc[1:]),
        (p,),
    )


def l_h_r(p):
    c = p.conclusion
    return Proof(
        "h-r",
        seq_l(c.subject, c.lsucc[:-1], (HOf(c.lsucc[-1]),) + c.nlsucc),
        (p,),
    )


def l_cut(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    if not c1.lsucc or c1.lsucc[-1] != c2.subject:
        raise ValueError("cut needs the cut formula at the end of the linear zone")
    return Proof(
        "cut",
        seq_l(c1.subject, c1.lsucc[:-1] + c2.lsucc, c1.nlsucc + c2.nlsucc),
        (p1, p2),
    )


def l_c_cut(p1, p2):
    c1, c2 = p1.conclusion, p2.conclusion
    if not c1.nlsucc or c1.nlsucc[-1] != c2.subject:
        raise ValueError("c-cut needs the cut formula at the end of the non-linear zone")
    return Proof(
        "c-cut", seq_l(c1.subject, c1.lsucc, c1.nlsucc[:-1] + c2.succ), (p1, p2)
    )


def l_c_mcut(p1, p2, n):
    c1, c2 = p1.conclusion, p2.conclusion
    keep = len(c1.nlsucc) - n
    if keep < 0 or c1.nlsucc[keep:] != (c2.subject,) * n:
        raise ValueError("c-mcut needs T^n at the end of the non-linear zone")
    return Proof(
        "c-mcut", seq_l(c1.subject, c1.lsucc, c1.nlsucc[:keep] + c2.succ), (p1, p2)
    )


# ---------------------------------------------------------------------------
# exchange plumbing


def _perm_to_adjacent_swaps(current, target):
    """Adjacent-swap positions turning the sequence current into target."""
    cur = list(current)
    tgt = list(target)
    if sorted(x.key for x in cur) != sorted(x.key for x in tgt):
        raise ValueError("reorder target is not a permutation of the source")
    swaps = []
    for i, want in enumerate(tgt):
        j = next(k for k in range(i, len(cur)) if cur[k] == want)
        while j > i:
            swaps.append(j - 1)
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
    return swaps


def reorder_c(p, target):
    """Wrap p in ex nodes so its succedent becomes exactly target."""
    target = tuple(target)
    for i in _perm_to_adjacent_swaps(p.conclusion.succ, target):
        p = c_ex(p, i)
    return p


def reorder_l(p, ltarget=None, nltarget=None):
    """Wrap p in ex / c-ex nodes to reach the given zone orders."""
    c = p.conclusion
    if ltarget is not None:
        for i in _perm_to_adjacent_swaps(c.lsucc, tuple(ltarget)):
            p = l_ex(p, i)
    if nltarget is not None:
        for i in _perm_to_adjacent_swaps(p.conclusion.nlsucc, tuple(nltarget)):
            p = l_c_ex(p, i)
    return p


def reorder(p, like: Sequent):
    """Reorder p's endsequent to match the zone orders of `like`."""
    if isinstance(like, CSequent):
        return reorder_c(p, like.succ)
    return reorder_l(p, like.lsucc, like.nlsucc)


def _reorder_nl_zone(p, want):
    return reorder_c(p, want) if p.is_c() else reorder_l(p, None, want)


def contract_trailing_block(p, k):
    """From ... , B, B (|B| = k) derive ... , B using exchanges and contractions.

    Works on the non-linear zone of either sequent sort; the duplicated block
    must sit at the end.
    """
    if k == 0:
        return p
    succ = p.conclusion.succ if p.is_c() else p.conclusion.nlsucc
    if len(succ) < 2 * k or succ[-k:] != succ[-2 * k : -k]:
        raise ValueError("no duplicated trailing block to contract")
    head, block = succ[: -2 * k], succ[-k:]
    for j in range(k - 1, -1, -1):
        # zone multiset: head + 2*block[:j+1] + block[j+1:]
        pair_last = head + block[:j] + block[:j] + block[j + 1 :] + (block[j], block[j])
        p = _reorder_nl_zone(p, pair_last)
        p = c_cr_r(p) if p.is_c() else l_ctr(p)
        p = _reorder_nl_zone(p, head + block[:j] + block[:j] + block[j:])
    return p


def weaken_many_c(p, formulas):
    for f in formulas:
        p = c_wk_r(p, f)
    return p


def weaken_many_l(p, formulas):
    for f in formulas:
        p = l_wk(p, f)
    return p


def strip_exchanges(p: Proof) -> Proof:
    """Drop every ex / c-ex node; for comparing trees up to permutation."""
    while p.rule in ("ex", "c-ex"):
        p = p.premises[0]
    return Proof(
        p.rule, p.conclusion, tuple(strip_exchanges(q) for q in p.premises), pos=None
    )


def same_tree_up_to_exchange(p: Proof, q: Proof) -> bool:
    """Equal rule trees with conclusions equal up to zone permutation,
    ignoring exchange nodes on both sides."""
    from .syntax import same_up_to_exchange

    p, q = strip_exchanges(p), strip_exchanges(q)

    def go(a, b):
        if a.rule != b.rule or len(a.premises) != len(b.premises):
            return False
        if not same_up_to_exchange(a.conclusion, b.conclusion):
            return False
        return all(go(x, y) for x, y in zip(a.premises, b.premises))

    return go(p, q)


# ---------------------------------------------------------------------------
# proof file format: (proof RULE CONCLUSION PREMISE*)


def proof_to_sexpr_str(p: Proof, indent=0) -> str:
    pad = "  " * indent
    head = f"{pad}(proof {p.rule} {p.conclusion}"
    if not p.premises:
        return head + ")"
    inner = "\n".join(proof_to_sexpr_str(q, indent + 1) for q in p.premises)
    return head + "\n" + inner + ")"


def _infer_ex_pos(premise_seq, conclusion_seq):
    for i in range(len(premise_seq)):
        if premise_seq[i] != conclusion_seq[i]:
            return i
    return 0


def proof_from_sexpr(node) -> Proof:
    if (
        not isinstance(node, list)
        or len(node) < 3
        or node[0] != Sym("proof")
        or not isinstance(node[1], Sym)
    ):
        raise ParseError(f"expected (proof RULE CONCLUSION ...), got {sexpr_to_str(node)}")
    rule = node[1].name
    conclusion = sequent_from_sexpr(node[2])
    premises = tuple(proof_from_sexpr(x) for x in node[3:])
    pos = None
    if rule in ("ex", "c-ex") and premises:
        q = premises[0].conclusion
        if isinstance(conclusion, CSequent) and isinstance(q, CSequent):
            pos = _infer_ex_pos(q.succ, conclusion.succ)
        elif isinstance(conclusion, LSequent) and isinstance(q, LSequent):
            zone = (q.lsucc, conclusion.lsucc) if rule == "ex" else (q.nlsucc, conclusion.nlsucc)
            pos = _infer_ex_pos(*zone)
    return Proof(rule, conclusion, premises, pos=pos)


def parse_proof(src: str) -> Proof:
    return proof_from_sexpr(parse_sexpr(src))
