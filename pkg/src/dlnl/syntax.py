"""Formulas, contexts and sequents of dual linear/non-linear cointuitionistic logic.

There are two sorts of formula.  Non-linear formulas are generated by the
constant 0, disjunction +, subtraction -, and the shift H applied to a linear
formula.  Linear formulas are generated by the unit bot, the cotensor par,
linear subtraction sub, and the shift J applied to a non-linear formula.
Atoms of either sort are declared in a signature; they are an extension of
the 0/bot-generated grammar so that countermodels and proof search are not
vacuous, and they have rank 0 so the rank of every atom-free formula is
unaffected.

Sequents have a single subject on the left.  A C-sequent is  S |-C Psi  with
Psi a sequence of non-linear formulas; an L-sequent is  A |-L Delta ; Psi
with Delta linear and Psi non-linear.  Contexts are sequences, not raw
multisets: the calculi carry explicit exchange rules, so order is significant
only up to those rules.

Text format (prefix, whitespace-insensitive):

    0   bot   (+ S T)   (- S T)   (H A)   (par A B)   (sub A B)   (J S)
    atoms are bare identifiers
    (seqC S (ctx T1 ... Tn))
    (seqL A (ctx A1 ... An) (ctx T1 ... Tm))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError, SortError
from .sexpr import Sym, parse_sexpr, sexpr_to_str


# ---------------------------------------------------------------------------
# formulas


class _Cached:
    """Frozen-dataclass mixin caching the printed form and its hash.

    Formulas and sequents are hashed and ordered constantly during search
    and cut elimination; the printed form is injective, so it doubles as a
    deterministic sort key."""

    def __post_init__(self):
        object.__setattr__(self, "_key", self._render())
        object.__setattr__(self, "_hash", hash((type(self).__name__, self._key)))

    @property
    def key(self):
        return self._key

    def __str__(self):
        return self._key

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return type(other) is type(self) and self._key == other._key


@dataclass(frozen=True, eq=False)
class NLFormula(_Cached):
    def _render(self):  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class LFormula(_Cached):
    def _render(self):  # pragma: no cover - abstract
        raise NotImplementedError


Formula = Union[NLFormula, LFormula]


@dataclass(frozen=True, eq=False)
class Zero(NLFormula):
    def _render(self):
        return "0"


@dataclass(frozen=True, eq=False)
class Plus(NLFormula):
    left: NLFormula
    right: NLFormula

    def _render(self):
        return f"(+ {self.left} {self.right})"


@dataclass(frozen=True, eq=False)
class Minus(NLFormula):
    left: NLFormula
    right: NLFormula

    def _render(self):
        return f"(- {self.left} {self.right})"


@dataclass(frozen=True, eq=False)
class HOf(NLFormula):
    body: LFormula

    def _render(self):
        return f"(H {self.body})"


@dataclass(frozen=True, eq=False)
class NLAtom(NLFormula):
    name: str

    def _render(self):
        return self.name


@dataclass(frozen=True, eq=False)
class Bot(LFormula):
    def _render(self):
        return "bot"


@dataclass(frozen=True, eq=False)
class Par(LFormula):
    left: LFormula
    right: LFormula

    def _render(self):
        return f"(par {self.left} {self.right})"


@dataclass(frozen=True, eq=False)
class CoImp(LFormula):
    left: LFormula
    right: LFormula

    def _render(self):
        return f"(sub {self.left} {self.right})"


@dataclass(frozen=True, eq=False)
class JOf(LFormula):
    body: NLFormula

    def _render(self):
        return f"(J {self.body})"


@dataclass(frozen=True, eq=False)
class LAtom(LFormula):
    name: str

    def _render(self):
        return self.name


def is_nonlinear(f) -> bool:
    return isinstance(f, NLFormula)


def is_linear(f) -> bool:
    return isinstance(f, LFormula)


def rank(f: Formula) -> int:
    """Number of logical symbols in f.

    The constants 0 and bot count as logical symbols; atoms count zero so
    that every atom-free formula keeps the rank it has in the pure grammar.
    """
    if isinstance(f, (NLAtom, LAtom)):
        return 0
    if isinstance(f, (Zero, Bot)):
        return 1
    if isinstance(f, (HOf, JOf)):
        return 1 + rank(f.body)
    return 1 + rank(f.left) + rank(f.right)


def atoms_of(f: Formula) -> set:
    """All atom names occurring in f, both sorts mixed."""
    if isinstance(f, (NLAtom, LAtom)):
        return {f.name}
    if isinstance(f, (Zero, Bot)):
        return set()
    if isinstance(f, (HOf, JOf)):
        return atoms_of(f.body)
    return atoms_of(f.left) | atoms_of(f.right)


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class Signature:
    """Declared atom names, one disjoint set per sort."""

    nl_atoms: frozenset
    l_atoms: frozenset

    def __post_init__(self):
        clash = self.nl_atoms & self.l_atoms
        if clash:
            raise SortError(f"atoms declared in both sorts: {sorted(clash)}")

    @staticmethod
    def make(nl_atoms=(), l_atoms=()):
        return Signature(frozenset(nl_atoms), frozenset(l_atoms))

    def check_formula(self, f: Formula):
        """Raise SortError if f uses an undeclared atom."""
        if isinstance(f, NLAtom):
            if f.name not in self.nl_atoms:
                raise SortError(f"undeclared non-linear atom {f.name!r}")
        elif isinstance(f, LAtom):
            if f.name not in self.l_atoms:
                raise SortError(f"undeclared linear atom {f.name!r}")
        elif isinstance(f, (HOf, JOf)):
            self.check_formula(f.body)
        elif isinstance(f, (Plus, Minus, Par, CoImp)):
            self.check_formula(f.left)
            self.check_formula(f.right)


# ---------------------------------------------------------------------------
# contexts and sequents


def context_shape(items):
    """The formula sequence of a context, as a tuple.

    Two contexts are shape-equal iff their shapes are pointwise equal; this
    is the |Psi1| = |Psi2| side condition of the additive rules.
    """
    return tuple(items)


@dataclass(frozen=True, eq=False)
class CSequent(_Cached):
    subject: NLFormula
    succ: tuple

    def __post_init__(self):
        if not is_nonlinear(self.subject):
            raise SortError("C-sequent subject must be non-linear")
        for f in self.succ:
            if not is_nonlinear(f):
                raise SortError(f"linear formula {f} in a C-succedent")
        super().__post_init__()

    def _render(self):
        return f"(seqC {self.subject} (ctx{''.join(' ' + str(f) for f in self.succ)}))"


@dataclass(frozen=True, eq=False)
class LSequent(_Cached):
    subject: LFormula
    lsucc: tuple
    nlsucc: tuple

    def __post_init__(self):
        if not is_linear(self.subject):
            raise SortError("L-sequent subject must be linear")
        for f in self.lsucc:
            if not is_linear(f):
                raise SortError(f"non-linear formula {f} in a linear zone")
        for f in self.nlsucc:
            if not is_nonlinear(f):
                raise SortError(f"linear formula {f} in a non-linear zone")
        super().__post_init__()

    def _render(self):
        ls = "".join(" " + str(f) for f in self.lsucc)
        ns = "".join(" " + str(f) for f in self.nlsucc)
        return f"(seqL {self.subject} (ctx{ls}) (ctx{ns}))"


Sequent = Union[CSequent, LSequent]


def seq_c(subject, succ=()):
    return CSequent(subject, tuple(succ))


def seq_l(subject, lsucc=(), nlsucc=()):
    return LSequent(subject, tuple(lsucc), tuple(nlsucc))


def sequent_atoms(s: Sequent) -> set:
    out = atoms_of(s.subject)
    if isinstance(s, CSequent):
        for f in s.succ:
            out |= atoms_of(f)
    else:
        for f in s.lsucc + s.nlsucc:
            out |= atoms_of(f)
    return out


def multiset_key(s: Sequent):
    """A key identifying a sequent up to exchange within each zone."""
    if isinstance(s, CSequent):
        return ("C", s.subject, frozen_multiset(s.succ))
    return ("L", s.subject, frozen_multiset(s.lsucc), frozen_multiset(s.nlsucc))


def frozen_multiset(items):
    counts = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    return frozenset(counts.items())


def same_up_to_exchange(s1: Sequent, s2: Sequent) -> bool:
    return multiset_key(s1) == multiset_key(s2)


# ---------------------------------------------------------------------------
# parsing and printing


def print_formula(f: Formula) -> str:
    return str(f)


def print_sequent(s: Sequent) -> str:
    return str(s)


_HEADS_NL = {"+": Plus, "-": Minus}
_HEADS_L = {"par": Par, "sub": CoImp}


def _formula_from_sexpr(node, sort):
    if isinstance(node, Sym):
        name = node.name
        if name == "0":
            if sort != "nonlinear":
                raise SortError("0 is a non-linear formula")
            return Zero()
        if name == "bot":
            if sort != "linear":
                raise SortError("bot is a linear formula")
            return Bot()
        if sort == "nonlinear":
            return NLAtom(name)
        return LAtom(name)
    if not isinstance(node, list) or not node or not isinstance(node[0], Sym):
        raise ParseError(f"bad formula syntax: {sexpr_to_str(node)}")
    head = node[0].name
    args = node[1:]
    if head in _HEADS_NL:
        if sort != "nonlinear":
            raise SortError(f"({head} ...) is a non-linear formula")
        if len(args) != 2:
            raise ParseError(f"({head} ...) takes two arguments")
        return _HEADS_NL[head](
            _formula_from_sexpr(args[0], "nonlinear"),
            _formula_from_sexpr(args[1], "nonlinear"),
        )
    if head in _HEADS_L:
        if sort != "linear":
            raise SortError(f"({head} ...) is a linear formula")
        if len(args) != 2:
            raise ParseError(f"({head} ...) takes two arguments")
        return _HEADS_L[head](
            _formula_from_sexpr(args[0], "linear"),
            _formula_from_sexpr(args[1], "linear"),
        )
    if head == "H":
        if sort != "nonlinear":
            raise SortError("(H ...) is a non-linear formula")
        if len(args) != 1:
            raise ParseError("(H ...) takes one argument")
        return HOf(_formula_from_sexpr(args[0], "linear"))
    if head == "J":
        if sort != "linear":
            raise SortError("(J ...) is a linear formula")
        if len(args) != 1:
            raise ParseError("(J ...) takes one argument")
        return JOf(_formula_from_sexpr(args[0], "nonlinear"))
    raise ParseError(f"unknown formula head {head!r}")


def parse_formula(src: str, sort: str) -> Formula:
    """Parse a formula of the given sort ('nonlinear' or 'linear')."""
    if sort not in ("nonlinear", "linear"):
        raise ValueError(f"bad sort {sort!r}")
    return _formula_from_sexpr(parse_sexpr(src), sort)


def _ctx_from_sexpr(node, sort):
    if not isinstance(node, list) or not node or node[0] != Sym("ctx"):
        raise ParseError(f"expected (ctx ...), got {sexpr_to_str(node)}")
    return tuple(_formula_from_sexpr(x, sort) for x in node[1:])


def sequent_from_sexpr(node) -> Sequent:
    if not isinstance(node, list) or not node or not isinstance(node[0], Sym):
        raise ParseError(f"bad sequent syntax: {sexpr_to_str(node)}")
    head = node[0].name
    if head == "seqC":
        if len(node) != 3:
            raise ParseError("(seqC SUBJECT (ctx ...)) expected")
        return CSequent(
            _formula_from_sexpr(node[1], "nonlinear"),
            _ctx_from_sexpr(node[2], "nonlinear"),
        )
    if head == "seqL":
        if len(node) != 4:
            raise ParseError("(seqL SUBJECT (ctx ...) (ctx ...)) expected")
        return LSequent(
            _formula_from_sexpr(node[1], "linear"),
            _ctx_from_sexpr(node[2], "linear"),
            _ctx_from_sexpr(node[3], "nonlinear"),
        )
    raise ParseError(f"unknown sequent head {head!r}")


def parse_sequent(src: str) -> Sequent:
    return sequent_from_sexpr(parse_sexpr(src))
