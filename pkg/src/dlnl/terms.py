"""The term language: coroutine-style witnesses for multi-conclusion proofs.

One AST covers both sorts; which constructors may appear where is enforced
by the typing rules, not the grammar.  Binding is non-standard in two spots.
mkc(t, y) and postp(y -> s, t) bind y, but the bound occurrences are not
inside those terms: they are the application forms y(t) spread through the
other terms of the same judgment, keyed by the binder name and carrying the
argument.  Consequently y is not free in y(t), and substitution never
rewrites an application head; renaming a binder is a judgment-wide
operation (rename_binder).  The remaining binders (case, let J, let H,
and the left side of postp) are ordinary and substitution fresh-renames
them to avoid capture.

Substitution extends to contraction multisets: substituting the multiset
t1 . ... . tn for z produces the contraction of the n individual results,
and for a p-term it produces the parallel composition (one slot each).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .sexpr import Sym, parse_sexpr, sexpr_to_str


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Eps(Term):
    def __str__(self):
        return "eps"


@dataclass(frozen=True)
class Dot(Term):
    left: Term
    right: Term

    def __str__(self):
        return f"(dot {self.left} {self.right})"


@dataclass(frozen=True)
class FalseOf(Term):
    body: Term

    def __str__(self):
        return f"(false {self.body})"


@dataclass(frozen=True)
class App(Term):
    """A bound-variable occurrence y(t), keyed by the binder name y."""

    head: str
    arg: Term

    def __str__(self):
        return f"(app {self.head} {self.arg})"


@dataclass(frozen=True)
class Mkc(Term):
    arg: Term
    binder: str

    def __str__(self):
        return f"(mkc {self.arg} {self.binder})"


@dataclass(frozen=True)
class Inl(Term):
    body: Term

    def __str__(self):
        return f"(inl {self.body})"


@dataclass(frozen=True)
class Inr(Term):
    body: Term

    def __str__(self):
        return f"(inr {self.body})"


@dataclass(frozen=True)
class Case(Term):
    scrut: Term
    left_var: str
    left: Term
    right_var: str
    right: Term

    def __str__(self):
        return (
            f"(case {self.scrut} ({self.left_var} {self.left})"
            f" ({self.right_var} {self.right}))"
        )


@dataclass(frozen=True)
class HWrap(Term):
    body: Term

    def __str__(self):
        return f"(h {self.body})"


@dataclass(frozen=True)
class JWrap(Term):
    body: Term

    def __str__(self):
        return f"(j {self.body})"


@dataclass(frozen=True)
class LetJ(Term):
    var: str
    payload: Term
    body: Term

    def __str__(self):
        return f"(letj {self.var} {self.payload} {self.body})"


@dataclass(frozen=True)
class LetH(Term):
    var: str
    payload: Term
    body: Term

    def __str__(self):
        return f"(leth {self.var} {self.payload} {self.body})"


@dataclass(frozen=True)
class Postp(Term):
    """postp(binder -> left, right); binds binder in left only."""

    binder: str
    left: Term
    right: Term

    def __str__(self):
        return f"(postp ({self.binder} {self.left}) {self.right})"


@dataclass(frozen=True)
class ConnectBot(Term):
    body: Term

    def __str__(self):
        return f"(connect-bot {self.body})"


@dataclass(frozen=True)
class PostpBot(Term):
    body: Term

    def __str__(self):
        return f"(postp-bot {self.body})"


@dataclass(frozen=True)
class ParPair(Term):
    left: Term
    right: Term

    def __str__(self):
        return f"(par {self.left} {self.right})"


@dataclass(frozen=True)
class Casel(Term):
    body: Term

    def __str__(self):
        return f"(casel {self.body})"


@dataclass(frozen=True)
class Caser(Term):
    body: Term

    def __str__(self):
        return f"(caser {self.body})"


def is_p_term(t: Term) -> bool:
    return isinstance(t, (Postp, PostpBot))


def subterms(t: Term):
    """All subterm occurrences of t, t itself first."""
    yield t
    for child in _children(t):
        yield from subterms(child)


def _children(t: Term):
    if isinstance(t, (Var, Eps)):
        return ()
    if isinstance(t, Dot):
        return (t.left, t.right)
    if isinstance(t, (FalseOf, Inl, Inr, HWrap, JWrap, Casel, Caser, ConnectBot, PostpBot)):
        return (t.body,)
    if isinstance(t, App):
        return (t.arg,)
    if isinstance(t, Mkc):
        return (t.arg,)
    if isinstance(t, Case):
        return (t.scrut, t.left, t.right)
    if isinstance(t, (LetJ, LetH)):
        return (t.payload, t.body)
    if isinstance(t, Postp):
        return (t.left, t.right)
    if isinstance(t, ParPair):
        return (t.left, t.right)
    raise TypeError(f"not a term: {t!r}")


def is_p_normal(t: Term) -> bool:
    """No p-term occurs as a proper subterm of t."""
    return all(not is_p_term(s) for s in subterms(t) if s is not t)


def free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset({t.name})
    if isinstance(t, Eps):
        return frozenset()
    if isinstance(t, App):
        return free_vars(t.arg)  # the head is a bound occurrence
    if isinstance(t, Mkc):
        return free_vars(t.arg)
    if isinstance(t, Case):
        return (
            free_vars(t.scrut)
            | (free_vars(t.left) - {t.left_var})
            | (free_vars(t.right) - {t.right_var})
        )
    if isinstance(t, LetJ):
        return free_vars(t.payload) | (free_vars(t.body) - {t.var})
    if isinstance(t, LetH):
        return free_vars(t.payload) | (free_vars(t.body) - {t.var})
    if isinstance(t, Postp):
        return (free_vars(t.left) - {t.binder}) | free_vars(t.right)
    return frozenset().union(*(free_vars(c) for c in _children(t))) if _children(t) else frozenset()


def binder_names(t: Term) -> frozenset:
    """Every binder name introduced anywhere inside t."""
    out = set()
    for s in subterms(t):
        if isinstance(s, Case):
            out.update({s.left_var, s.right_var})
        elif isinstance(s, (LetJ, LetH)):
            out.add(s.var)
        elif isinstance(s, Postp):
            out.add(s.binder)
        elif isinstance(s, Mkc):
            out.add(s.binder)
        elif isinstance(s, App):
            out.add(s.head)
    return frozenset(out)


class FreshNames:
    """Deterministic fresh-name supply; callers thread it explicitly."""

    def __init__(self, avoid=()):
        self._n = 0
        self._avoid = set(avoid)

    def avoid(self, names):
        self._avoid.update(names)

    def fresh(self, base="v"):
        base = base.split("'")[0]
        while True:
            self._n += 1
            cand = f"{base}'{self._n}"
            if cand not in self._avoid:
                self._avoid.add(cand)
                return cand


def _default_fresh(*terms):
    avoid = set()
    for t in terms:
        avoid |= free_vars(t) | binder_names(t)
    return FreshNames(avoid)


def substitute(payload: Term, var: str, target: Term, fresh: FreshNames | None = None) -> Term:
    """Capture-avoiding [payload/var]target.

    Application heads and mkc/postp binder slots are never renamed here;
    they are judgment-scoped and handled by rename_binder."""
    if fresh is None:
        fresh = _default_fresh(payload, target)
    pv = free_vars(payload)

    def go(t):
        if isinstance(t, Var):
            return payload if t.name == var else t
        if isinstance(t, Eps):
            return t
        if isinstance(t, Case):
            lv, left, ld = _under_binder(t.left_var, t.left, var, pv, fresh)
            rv, right, rd = _under_binder(t.right_var, t.right, var, pv, fresh)
            return Case(go(t.scrut), lv, go(left) if ld else left, rv, go(right) if rd else right)
        if isinstance(t, LetJ):
            v, body, d = _under_binder(t.var, t.body, var, pv, fresh)
            return LetJ(v, go(t.payload), go(body) if d else body)
        if isinstance(t, LetH):
            v, body, d = _under_binder(t.var, t.body, var, pv, fresh)
            return LetH(v, go(t.payload), go(body) if d else body)
        if isinstance(t, Postp):
            v, left, d = _under_binder(t.binder, t.left, var, pv, fresh)
            return Postp(v, go(left) if d else left, go(t.right))
        if isinstance(t, App):
            return App(t.head, go(t.arg))
        if isinstance(t, Mkc):
            return Mkc(go(t.arg), t.binder)
        if isinstance(t, Dot):
            return Dot(go(t.left), go(t.right))
        if isinstance(t, FalseOf):
            return FalseOf(go(t.body))
        if isinstance(t, Inl):
            return Inl(go(t.body))
        if isinstance(t, Inr):
            return Inr(go(t.body))
        if isinstance(t, HWrap):
            return HWrap(go(t.body))
        if isinstance(t, JWrap):
            return JWrap(go(t.body))
        if isinstance(t, Casel):
            return Casel(go(t.body))
        if isinstance(t, Caser):
            return Caser(go(t.body))
        if isinstance(t, ConnectBot):
            return ConnectBot(go(t.body))
        if isinstance(t, PostpBot):
            return PostpBot(go(t.body))
        if isinstance(t, ParPair):
            return ParPair(go(t.left), go(t.right))
        raise TypeError(f"not a term: {t!r}")  # pragma: no cover

    return go(target)


def _under_binder(v, body, var, payload_vars, fresh):
    """Prepare to substitute under an ordinary binder.

    Returns (binder, body, descend): descend is False when the binder
    shadows var; a binder clashing with the payload is renamed fresh."""
    if v == var:
        return v, body, False
    if v in payload_vars:
        v2 = fresh.fresh(v)
        return v2, substitute(Var(v2), v, body, fresh), True
    return v, body, True


def dot_of(parts):
    """The contraction multiset t1 . ... . tn as a left-nested term."""
    parts = list(parts)
    if not parts:
        return Eps()
    out = parts[0]
    for p in parts[1:]:
        out = Dot(out, p)
    return out


def substitute_multiset(parts, var: str, target: Term, fresh: FreshNames | None = None):
    """[t1 . ... . tn / z]s = [t1/z]s . ... . [tn/z]s for ordinary terms;
    for a p-term the copies compose in parallel, so a list is returned."""
    parts = list(parts)
    if is_p_term(target):
        return [substitute(p, var, target, fresh) for p in parts]
    return dot_of(substitute(p, var, target, fresh) for p in parts)


def rename_binder(terms, old: str, new: str):
    """Rename a judgment-scoped binder: the mkc/postp binder slots named
    old and every application head old(...) across the given terms."""

    def go(t):
        if isinstance(t, Mkc):
            b = new if t.binder == old else t.binder
            return Mkc(go(t.arg), b)
        if isinstance(t, Postp):
            b = new if t.binder == old else t.binder
            return Postp(b, go(t.left), go(t.right))
        if isinstance(t, App):
            h = new if t.head == old else t.head
            return App(h, go(t.arg))
        if isinstance(t, (Var, Eps)):
            return t
        if isinstance(t, Case):
            return Case(go(t.scrut), t.left_var, go(t.left), t.right_var, go(t.right))
        if isinstance(t, LetJ):
            return LetJ(t.var, go(t.payload), go(t.body))
        if isinstance(t, LetH):
            return LetH(t.var, go(t.payload), go(t.body))
        if isinstance(t, Dot):
            return Dot(go(t.left), go(t.right))
        if isinstance(t, FalseOf):
            return FalseOf(go(t.body))
        if isinstance(t, Inl):
            return Inl(go(t.body))
        if isinstance(t, Inr):
            return Inr(go(t.body))
        if isinstance(t, HWrap):
            return HWrap(go(t.body))
        if isinstance(t, JWrap):
            return JWrap(go(t.body))
        if isinstance(t, Casel):
            return Casel(go(t.body))
        if isinstance(t, Caser):
            return Caser(go(t.body))
        if isinstance(t, ConnectBot):
            return ConnectBot(go(t.body))
        if isinstance(t, PostpBot):
            return PostpBot(go(t.body))
        if isinstance(t, ParPair):
            return ParPair(go(t.left), go(t.right))
        raise TypeError(f"not a term: {t!r}")  # pragma: no cover

    return [go(t) for t in terms]


# ---------------------------------------------------------------------------
# text format


def parse_term(src: str) -> Term:
    return term_from_sexpr(parse_sexpr(src))


def print_term(t: Term) -> str:
    return str(t)


def term_from_sexpr(node) -> Term:
    if isinstance(node, Sym):
        if node.name == "eps":
            return Eps()
        return Var(node.name)
    if not isinstance(node, list) or not node or not isinstance(node[0], Sym):
        raise ParseError(f"bad term syntax: {sexpr_to_str(node)}")
    head, args = node[0].name, node[1:]

    def arity(n):
        if len(args) != n:
            raise ParseError(f"({head} ...) takes {n} arguments")

    if head == "dot":
        arity(2)
        return Dot(term_from_sexpr(args[0]), term_from_sexpr(args[1]))
    if head == "false":
        arity(1)
        return FalseOf(term_from_sexpr(args[0]))
    if head == "app":
        arity(2)
        return App(_ident(args[0]), term_from_sexpr(args[1]))
    if head == "mkc":
        arity(2)
        return Mkc(term_from_sexpr(args[0]), _ident(args[1]))
    if head == "inl":
        arity(1)
        return Inl(term_from_sexpr(args[0]))
    if head == "inr":
        arity(1)
        return Inr(term_from_sexpr(args[0]))
    if head == "case":
        arity(3)
        left, right = args[1], args[2]
        for arm in (left, right):
            if not isinstance(arm, list) or len(arm) != 2:
                raise ParseError("case arms have the form (x t)")
        return Case(
            term_from_sexpr(args[0]),
            _ident(left[0]),
            term_from_sexpr(left[1]),
            _ident(right[0]),
            term_from_sexpr(right[1]),
        )
    if head == "h":
        arity(1)
        return HWrap(term_from_sexpr(args[0]))
    if head == "j":
        arity(1)
        return JWrap(term_from_sexpr(args[0]))
    if head == "letj":
        arity(3)
        return LetJ(_ident(args[0]), term_from_sexpr(args[1]), term_from_sexpr(args[2]))
    if head == "leth":
        arity(3)
        return LetH(_ident(args[0]), term_from_sexpr(args[1]), term_from_sexpr(args[2]))
    if head == "postp":
        arity(2)
        first = args[0]
        if not isinstance(first, list) or len(first) != 2:
            raise ParseError("postp takes a (x e1) group then e2")
        return Postp(_ident(first[0]), term_from_sexpr(first[1]), term_from_sexpr(args[1]))
    if head == "postp-bot":
        arity(1)
        return PostpBot(term_from_sexpr(args[0]))
    if head == "connect-bot":
        arity(1)
        return ConnectBot(term_from_sexpr(args[0]))
    if head == "par":
        arity(2)
        return ParPair(term_from_sexpr(args[0]), term_from_sexpr(args[1]))
    if head == "casel":
        arity(1)
        return Casel(term_from_sexpr(args[0]))
    if head == "caser":
        arity(1)
        return Caser(term_from_sexpr(args[0]))
    raise ParseError(f"unknown term head {head!r}")


def _ident(node):
    if not isinstance(node, Sym):
        raise ParseError(f"expected an identifier, got {sexpr_to_str(node)}")
    return node.name
