"""Finite co-Heyting lattice models, used as a soundness oracle.

A co-Heyting algebra is a bounded distributive lattice in which the
co-implication a - b (the least x with a <= x v b) exists for every a, b;
finiteness plus distributivity guarantee it.  Interpreting both sorts of
formula into one such lattice deliberately collapses the linear structure:
a single poset that is both "cartesian closed" and "cocartesian coclosed"
is forced to be degenerate, which is exactly what makes the lattice a cheap
universal soundness check.  It is never used to claim provability.

Interpretation: 0 and bot go to bottom, + and par to join, - and sub to
co-implication, H and J are identities, atoms are read off a valuation.
A sequent holds when its subject lies below the join of its succedents
(the empty join being bottom).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import TooManyAtoms, UnboundAtom
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
    sequent_atoms,
)


@dataclass(frozen=True)
class CoHeytingLattice:
    name: str
    elements: tuple
    _leq: frozenset  # set of (a, b) pairs with a <= b

    def leq(self, a, b) -> bool:
        return (a, b) in self._leq

    def join(self, a, b):
        ubs = [x for x in self.elements if self.leq(a, x) and self.leq(b, x)]
        least = [x for x in ubs if all(self.leq(x, y) for y in ubs)]
        return least[0]

    def meet(self, a, b):
        lbs = [x for x in self.elements if self.leq(x, a) and self.leq(x, b)]
        greatest = [x for x in lbs if all(self.leq(y, x) for y in lbs)]
        return greatest[0]

    @property
    def bottom(self):
        return next(x for x in self.elements if all(self.leq(x, y) for y in self.elements))

    @property
    def top(self):
        return next(x for x in self.elements if all(self.leq(y, x) for y in self.elements))

    def join_all(self, items):
        out = self.bottom
        for x in items:
            out = self.join(out, x)
        return out


def _close_order(elements, leq_pairs):
    """Reflexive-transitive closure of the given order pairs."""
    rel = {(a, a) for a in elements} | set(leq_pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(rel), list(rel)):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return frozenset(rel)


def _validate(lat: CoHeytingLattice):
    """Lattice, distributivity and the co-implication adjunction, exhaustively."""
    els = lat.elements
    for a, b in product(els, els):
        lat.join(a, b)
        lat.meet(a, b)
    for a, b, c in product(els, els, els):
        lhs = lat.meet(a, lat.join(b, c))
        rhs = lat.join(lat.meet(a, b), lat.meet(a, c))
        if lhs != rhs:
            raise ValueError(f"{lat.name}: not distributive at {a},{b},{c}")
    for a, b, c in product(els, els, els):
        if lat.leq(c, lat.join(a, b)) != lat.leq(co_imp(lat, c, b), a):
            raise ValueError(f"{lat.name}: adjunction fails at {a},{b},{c}")
    return lat


def co_imp(lat: CoHeytingLattice, a, b):
    """The least x with a <= x v b."""
    candidates = [x for x in lat.elements if lat.leq(a, lat.join(x, b))]
    least = [x for x in candidates if all(lat.leq(x, y) for y in candidates)]
    if not least:
        raise ValueError(f"{lat.name}: no least candidate for {a} - {b}")
    return least[0]


def chain(n: int) -> CoHeytingLattice:
    """The linear order 0 < 1 < ... < n-1."""
    els = tuple(range(n))
    return CoHeytingLattice(
        f"chain{n}", els, frozenset((a, b) for a in els for b in els if a <= b)
    )


def powerset(k: int) -> CoHeytingLattice:
    """Subsets of {0..k-1} ordered by inclusion."""
    els = tuple(frozenset(s) for m in range(k + 1) for s in _subsets(range(k), m))
    return CoHeytingLattice(
        f"pow{k}", els, frozenset((a, b) for a in els for b in els if a <= b)
    )


def _subsets(universe, m):
    from itertools import combinations

    return (frozenset(c) for c in combinations(universe, m))


def v_downsets() -> CoHeytingLattice:
    """Downward-closed subsets of the V poset  a > c < b  (c below both)."""
    poset = {"a": {"c"}, "b": {"c"}, "c": set()}
    els = []
    for picks in product([False, True], repeat=3):
        s = {x for x, keep in zip("abc", picks) if keep}
        if all(poset[x] <= s for x in s):
            els.append(frozenset(s))
    els = tuple(sorted(els, key=lambda s: (len(s), sorted(s))))
    return CoHeytingLattice(
        "vdown", els, frozenset((a, b) for a in els for b in els if a <= b)
    )


LATTICES = {
    "chain2": _validate(chain(2)),
    "chain3": _validate(chain(3)),
    "chain4": _validate(chain(4)),
    "pow2": _validate(powerset(2)),
    "pow3": _validate(powerset(3)),
    "vdown": _validate(v_downsets()),
}


def get_lattice(name: str) -> CoHeytingLattice:
    try:
        return LATTICES[name]
    except KeyError:
        raise KeyError(f"unknown lattice {name!r}; choose from {sorted(LATTICES)}")


# ---------------------------------------------------------------------------
# valuations and evaluation


def eval_formula(f, valuation, lat: CoHeytingLattice):
    if isinstance(f, (Zero, Bot)):
        return lat.bottom
    if isinstance(f, (NLAtom, LAtom)):
        try:
            return valuation[f.name]
        except KeyError:
            raise UnboundAtom(f"atom {f.name!r} not in valuation")
    if isinstance(f, (Plus, Par)):
        return lat.join(eval_formula(f.left, valuation, lat), eval_formula(f.right, valuation, lat))
    if isinstance(f, (Minus, CoImp)):
        return co_imp(
            lat,
            eval_formula(f.left, valuation, lat),
            eval_formula(f.right, valuation, lat),
        )
    if isinstance(f, (HOf, JOf)):
        return eval_formula(f.body, valuation, lat)
    raise TypeError(f"not a formula: {f!r}")


def holds(s, valuation, lat: CoHeytingLattice) -> bool:
    """subject <= join of all succedents (empty join = bottom)."""
    subj = eval_formula(s.subject, valuation, lat)
    if isinstance(s, CSequent):
        succ = s.succ
    else:
        succ = s.lsucc + s.nlsucc
    return lat.leq(subj, lat.join_all(eval_formula(f, valuation, lat) for f in succ))


def all_valuations(atom_names, lat: CoHeytingLattice):
    names = sorted(atom_names)
    for values in product(lat.elements, repeat=len(names)):
        yield dict(zip(names, values))


def holds_everywhere(s, lat: CoHeytingLattice, max_atoms: int = 4) -> bool:
    return refute(s, lat, max_atoms=max_atoms) is None


def refute(s, lat: CoHeytingLattice, max_atoms: int = 4):
    """A falsifying valuation over lat, or None if the sweep finds none."""
    names = sequent_atoms(s)
    if len(names) > max_atoms:
        raise TooManyAtoms(f"{len(names)} atoms exceeds the sweep bound {max_atoms}")
    for v in all_valuations(names, lat):
        if not holds(s, v, lat):
            return v
    return None
