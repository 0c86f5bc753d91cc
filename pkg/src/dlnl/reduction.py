"""The judgment-level rewrite engine.

Each reduction rule becomes one tag.  A redex locator names a
tag together with the slot that anchors it; because reducing one term can
affect others in the same judgment, a step may rewrite several slots at
once: the anchored slot fixes the binder/payload key and every slot keyed
the same way is rewritten simultaneously (the "context-wide" reading).

Tags:

  bottom        postp-bot(connect-bot e) slot deleted
  lin-h/lin-j   let H/J y = (H e | J t) in ...  ->  [e/y]... (grouped)
  lin-sub       linear postp(y -> e2, mkc(e1, y)): slot deleted, occurrences
                y(e1) -> [e1/y']e2 and y'(mkc(e1, y)) -> e1
  lin-par       casel/caser of (par e1 e2) -> e1 / e2 everywhere
  nl-sub        the non-linear subtraction box
  coprod-l/r    case (inl t | inr t) of y... -> branch substitution
  nl-h          let H z = (let H x = t0 in H e) in s -> let H x = t0 in [e/z]s
  contr-*       the six Contraction-with rows
  weak-*        the six Weakening-with rows

commute_step works on typing derivations: the seven commuting conversion
schemas, addressed by a path; ancestors of a converted node are rebuilt by
reapplying their rules, since a conversion changes the judgment it proves.

normalize is a fueled, deterministic strategy on judgments: repeatedly take
the leftmost available beta step, interleaving the case-of-case term
conversion to expose coproduct redexes; raises FuelExhausted (carrying the
partial result) when fuel runs out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FuelExhausted, NotACommute, NotARedex
from .terms import (
    App,
    Case,
    Casel,
    Caser,
    ConnectBot,
    Dot,
    Eps,
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
    free_vars,
    is_p_term,
    substitute,
    subterms,
)
from .typing import (
    CTermJudgment,
    LTermJudgment,
    Slot,
    TermJudgment,
    TypingDerivation,
    jud_c,
    jud_l,
)

BETA_TAGS = (
    "bottom",
    "lin-h",
    "lin-j",
    "lin-sub",
    "lin-par",
    "nl-sub",
    "coprod-l",
    "coprod-r",
    "nl-h",
    "contr-d-e",
    "contr-d-i1",
    "contr-d-i2",
    "contr-sub-i",
    "contr-sub-e",
    "contr-h-e",
    "weak-d-e",
    "weak-d-i1",
    "weak-d-i2",
    "weak-sub-i",
    "weak-sub-e",
    "weak-h-e",
)


@dataclass(frozen=True)
class RedexLocator:
    tag: str
    zone: str  # 'c' (C succedent), 'l' (linear zone), 'n' (non-linear zone)
    index: int


def _zones(j: TermJudgment):
    if isinstance(j, CTermJudgment):
        return {"c": j.succ}
    return {"l": j.lsucc, "n": j.nlsucc}


def _rebuild(j: TermJudgment, zones) -> TermJudgment:
    if isinstance(j, CTermJudgment):
        return jud_c(j.var, j.type, zones["c"])
    return jud_l(j.var, j.type, zones["l"], zones["n"])


def replace_occurrences(t: Term, mapping) -> Term:
    """Top-down replacement of exact subterm occurrences."""
    if t in mapping:
        return mapping[t]
    from .terms import _children

    kids = _children(t)
    if not kids:
        return t
    new = tuple(replace_occurrences(k, mapping) for k in kids)
    if new == kids:
        return t
    return _rebuild_term(t, new)


def _rebuild_term(t: Term, kids):
    if isinstance(t, Dot):
        return Dot(*kids)
    if isinstance(t, App):
        return App(t.head, kids[0])
    if isinstance(t, Mkc):
        return Mkc(kids[0], t.binder)
    if isinstance(t, Case):
        return Case(kids[0], t.left_var, kids[1], t.right_var, kids[2])
    if isinstance(t, (LetJ, LetH)):
        return type(t)(t.var, kids[0], kids[1])
    if isinstance(t, Postp):
        return Postp(t.binder, kids[0], kids[1])
    if isinstance(t, ParPair):
        return ParPair(*kids)
    return type(t)(kids[0])


def _map_slots(zones, fn):
    return {z: tuple(fn(s) for s in slots) for z, slots in zones.items()}


def beta_step(j: TermJudgment, r: RedexLocator) -> TermJudgment:
    """Apply the reduction rule named by r.tag at the anchored slot."""
    zones = _zones(j)
    if r.zone not in zones or not 0 <= r.index < len(zones[r.zone]):
        raise NotARedex(f"no slot at {r.zone}[{r.index}]")
    anchor = zones[r.zone][r.index]
    handler = _BETA_HANDLERS.get(r.tag)
    if handler is None:
        raise NotARedex(f"unknown tag {r.tag!r}")
    return handler(j, zones, r, anchor)


def _delete_slot(zones, zone, index):
    out = dict(zones)
    out[zone] = out[zone][:index] + out[zone][index + 1 :]
    return out


def _beta_bottom(j, zones, r, anchor):
    if anchor.type is not None or not isinstance(anchor.term, PostpBot) or not isinstance(
        anchor.term.body, ConnectBot
    ):
        raise NotARedex("bottom needs a postp-bot(connect-bot e) slot")
    return _rebuild(j, _delete_slot(zones, r.zone, r.index))


def _let_group(j, zones, r, anchor, let_cls, wrap_cls):
    key = anchor.term
    if isinstance(key, Dot):
        key = key.right
    if not isinstance(key, let_cls) or not isinstance(key.payload, wrap_cls):
        raise NotARedex(f"slot is not a {let_cls.__name__} redex")
    var, payload = key.var, key.payload

    def fire(t):
        if isinstance(t, let_cls) and t.var == var and t.payload == payload:
            return substitute(payload.body, var, t.body)
        return None

    def rw(s: Slot):
        t = s.term
        hit = fire(t)
        if hit is not None:
            return Slot(hit, s.type)
        if isinstance(t, Dot):
            hit = fire(t.right)
            if hit is not None:
                return Slot(Dot(t.left, hit), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_lin_h(j, zones, r, anchor):
    return _let_group(j, zones, r, anchor, LetH, HWrap)


def _beta_lin_j(j, zones, r, anchor):
    return _let_group(j, zones, r, anchor, LetJ, JWrap)


def _beta_sub(j, zones, r, anchor):
    t = anchor.term
    if anchor.type is not None or not isinstance(t, Postp) or not isinstance(t.right, Mkc):
        raise NotARedex("subtraction needs a postp(_ -> e2, mkc(e1, y)) slot")
    z, e2, mk = t.binder, t.left, t.right
    e1, y = mk.arg, mk.binder
    mapping = {
        App(y, e1): substitute(e1, z, e2),
        App(z, mk): e1,
    }
    out = _delete_slot(zones, r.zone, r.index)
    out = _map_slots(out, lambda s: Slot(replace_occurrences(s.term, mapping), s.type))
    return _rebuild(j, out)


def _beta_lin_par(j, zones, r, anchor):
    pair = None
    for sub in subterms(anchor.term):
        if isinstance(sub, (Casel, Caser)) and isinstance(sub.body, ParPair):
            pair = sub.body
            break
    if pair is None:
        raise NotARedex("no casel/caser of a par pair in the slot")
    mapping = {Casel(pair): pair.left, Caser(pair): pair.right}
    out = _map_slots(zones, lambda s: Slot(replace_occurrences(s.term, mapping), s.type))
    return _rebuild(j, out)


def _case_group(j, zones, r, anchor, scrut_pred):
    key = anchor.term
    if not isinstance(key, Case) or not scrut_pred(key.scrut):
        raise NotARedex("slot is not a matching case redex")
    ident = (key.scrut, key.left_var, key.right_var)
    return ident


def _beta_coprod(j, zones, r, anchor, left):
    want = Inl if left else Inr
    ident = _case_group(j, zones, r, anchor, lambda s: isinstance(s, want))
    scrut, lv, rv = ident
    payload = scrut.body

    def rw(slots):
        out = []
        for s in slots:
            t = s.term
            if isinstance(t, Case) and (t.scrut, t.left_var, t.right_var) == ident:
                branch = t.left if left else t.right
                var = lv if left else rv
                out.append(Slot(substitute(payload, var, branch), s.type))
            else:
                out.append(s)
        return tuple(out)

    return _rebuild(j, {z: rw(slots) for z, slots in zones.items()})


def _beta_coprod_l(j, zones, r, anchor):
    return _beta_coprod(j, zones, r, anchor, True)


def _beta_coprod_r(j, zones, r, anchor):
    return _beta_coprod(j, zones, r, anchor, False)


def _beta_nl_h(j, zones, r, anchor):
    key = anchor.term
    if isinstance(key, Dot):
        key = key.right
    if (
        not isinstance(key, LetH)
        or not isinstance(key.payload, LetH)
        or not isinstance(key.payload.body, HWrap)
    ):
        raise NotARedex("slot is not a nested let-H redex")
    z, payload = key.var, key.payload
    inner_var, inner_payload, e = payload.var, payload.payload, payload.body.body

    def fire(t):
        if isinstance(t, LetH) and t.var == z and t.payload == payload:
            return LetH(inner_var, inner_payload, substitute(e, z, t.body))
        return None

    def rw(s: Slot):
        t = s.term
        hit = fire(t)
        if hit is not None:
            return Slot(hit, s.type)
        if isinstance(t, Dot):
            hit = fire(t.right)
            if hit is not None:
                return Slot(Dot(t.left, hit), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_contr_d_e(j, zones, r, anchor):
    key = anchor.term
    if not isinstance(key, Case) or not isinstance(key.scrut, Dot):
        raise NotARedex("slot is not a case of a contraction")
    ident = (key.scrut, key.left_var, key.right_var)
    t1, t2 = key.scrut.left, key.scrut.right

    def rw(s: Slot):
        t = s.term
        if isinstance(t, Case) and (t.scrut, t.left_var, t.right_var) == ident:
            a = Case(t1, t.left_var, t.left, t.right_var, t.right)
            b = Case(t2, t.left_var, t.left, t.right_var, t.right)
            return Slot(Dot(a, b), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_contr_d_i(j, zones, r, anchor, ctor):
    t = anchor.term
    if not isinstance(t, ctor) or not isinstance(t.body, Dot):
        raise NotARedex("slot is not an injected contraction")
    d = t.body
    new = Dot(ctor(d.left), ctor(d.right))
    out = dict(zones)
    zone = list(out[r.zone])
    zone[r.index] = Slot(new, anchor.type)
    out[r.zone] = tuple(zone)
    return _rebuild(j, out)


def _beta_contr_d_i1(j, zones, r, anchor):
    return _beta_contr_d_i(j, zones, r, anchor, Inl)


def _beta_contr_d_i2(j, zones, r, anchor):
    return _beta_contr_d_i(j, zones, r, anchor, Inr)


def _beta_contr_sub_i(j, zones, r, anchor):
    t = anchor.term
    if not isinstance(t, Mkc) or not isinstance(t.arg, Dot):
        raise NotARedex("slot is not mkc of a contraction")
    d, y = t.arg, t.binder
    t1, t2 = d.left, d.right
    occ = App(y, d)

    def rw(s: Slot):
        if s is anchor or s.term == t:
            return Slot(Dot(Mkc(t1, y), Mkc(t2, y)), s.type)
        if occ in set(subterms(s.term)):
            a = replace_occurrences(s.term, {occ: App(y, t1)})
            b = replace_occurrences(s.term, {occ: App(y, t2)})
            return Slot(Dot(a, b), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_contr_sub_e(j, zones, r, anchor):
    t = anchor.term
    if anchor.type is not None or not isinstance(t, Postp) or not isinstance(t.right, Dot):
        raise NotARedex("slot is not postp of a contraction")
    y, s0, d = t.binder, t.left, t.right
    t1, t2 = d.left, d.right
    occ = App(y, d)
    out = {}
    for z, slots in zones.items():
        acc = []
        for s in slots:
            if z == r.zone and s is zones[r.zone][r.index]:
                acc.append(Slot(Postp(y, s0, t1), None))
                acc.append(Slot(Postp(y, s0, t2), None))
            elif s.type is None:
                acc.append(s)
            else:
                a = replace_occurrences(s.term, {occ: App(y, t1)})
                b = replace_occurrences(s.term, {occ: App(y, t2)})
                acc.append(Slot(Dot(a, b), s.type))
        out[z] = tuple(acc)
    return _rebuild(j, out)


def _beta_contr_h_e(j, zones, r, anchor):
    key = anchor.term
    if isinstance(key, Dot):
        key = key.right
    if not isinstance(key, LetH) or not isinstance(key.payload, Dot):
        raise NotARedex("slot is not let-H of a contraction")
    var, d = key.var, key.payload

    def fire(t):
        if isinstance(t, LetH) and t.var == var and t.payload == d:
            return Dot(LetH(var, d.left, t.body), LetH(var, d.right, t.body))
        return None

    def rw(s: Slot):
        t = s.term
        hit = fire(t)
        if hit is not None:
            return Slot(hit, s.type)
        if isinstance(t, Dot):
            hit = fire(t.right)
            if hit is not None:
                return Slot(Dot(t.left, hit), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_weak_d_e(j, zones, r, anchor):
    key = anchor.term
    if not isinstance(key, Case) or key.scrut != Eps():
        raise NotARedex("slot is not a case of a weakening")
    ident = (key.scrut, key.left_var, key.right_var)

    def rw(s: Slot):
        t = s.term
        if isinstance(t, Case) and (t.scrut, t.left_var, t.right_var) == ident:
            return Slot(Eps(), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


def _beta_weak_d_i(j, zones, r, anchor, ctor):
    t = anchor.term
    if not isinstance(t, ctor) or t.body != Eps():
        raise NotARedex("slot is not an injected weakening")
    out = dict(zones)
    zone = list(out[r.zone])
    zone[r.index] = Slot(Eps(), anchor.type)
    out[r.zone] = tuple(zone)
    return _rebuild(j, out)


def _beta_weak_d_i1(j, zones, r, anchor):
    return _beta_weak_d_i(j, zones, r, anchor, Inl)


def _beta_weak_d_i2(j, zones, r, anchor):
    return _beta_weak_d_i(j, zones, r, anchor, Inr)


def _beta_weak_sub_i(j, zones, r, anchor):
    t = anchor.term
    if not isinstance(t, Mkc) or t.arg != Eps():
        raise NotARedex("slot is not mkc of a weakening")
    occ = App(t.binder, Eps())
    out = dict(zones)
    zone = list(out[r.zone])
    zone[r.index] = Slot(Eps(), anchor.type)
    out[r.zone] = tuple(zone)
    out = _map_slots(out, lambda s: Slot(replace_occurrences(s.term, {occ: Eps()}), s.type))
    return _rebuild(j, out)


def _beta_weak_sub_e(j, zones, r, anchor):
    t = anchor.term
    if anchor.type is not None or not isinstance(t, Postp) or t.right != Eps():
        raise NotARedex("slot is not postp of a weakening")
    occ = App(t.binder, Eps())
    out = _delete_slot(zones, r.zone, r.index)
    out = _map_slots(out, lambda s: Slot(replace_occurrences(s.term, {occ: Eps()}), s.type))
    return _rebuild(j, out)


def _beta_weak_h_e(j, zones, r, anchor):
    key = anchor.term
    if isinstance(key, Dot):
        key = key.right
    if not isinstance(key, LetH) or key.payload != Eps():
        raise NotARedex("slot is not let-H of a weakening")
    var = key.var

    def fire(t):
        if isinstance(t, LetH) and t.var == var and t.payload == Eps():
            return substitute(Eps(), var, t.body)
        return None

    def rw(s: Slot):
        t = s.term
        hit = fire(t)
        if hit is not None:
            return Slot(hit, s.type)
        if isinstance(t, Dot):
            hit = fire(t.right)
            if hit is not None:
                return Slot(Dot(t.left, hit), s.type)
        return s

    return _rebuild(j, _map_slots(zones, rw))


_BETA_HANDLERS = {
    "bottom": _beta_bottom,
    "lin-h": _beta_lin_h,
    "lin-j": _beta_lin_j,
    "lin-sub": _beta_sub,
    "nl-sub": _beta_sub,
    "lin-par": _beta_lin_par,
    "coprod-l": _beta_coprod_l,
    "coprod-r": _beta_coprod_r,
    "nl-h": _beta_nl_h,
    "contr-d-e": _beta_contr_d_e,
    "contr-d-i1": _beta_contr_d_i1,
    "contr-d-i2": _beta_contr_d_i2,
    "contr-sub-i": _beta_contr_sub_i,
    "contr-sub-e": _beta_contr_sub_e,
    "contr-h-e": _beta_contr_h_e,
    "weak-d-e": _beta_weak_d_e,
    "weak-d-i1": _beta_weak_d_i1,
    "weak-d-i2": _beta_weak_d_i2,
    "weak-sub-i": _beta_weak_sub_i,
    "weak-sub-e": _beta_weak_sub_e,
    "weak-h-e": _beta_weak_h_e,
}


def find_redexes(j: TermJudgment):
    """Every locator whose beta_step applies, in deterministic order."""
    out = []
    for zone, slots in sorted(_zones(j).items()):
        for i in range(len(slots)):
            for tag in BETA_TAGS:
                loc = RedexLocator(tag, zone, i)
                try:
                    beta_step(j, loc)
                except NotARedex:
                    continue
                out.append(loc)
    return out


# ---------------------------------------------------------------------------
# commuting conversions on derivations


def _subtree_at(d: TypingDerivation, site):
    for i in site:
        d = d.premises[i]
    return d


def _replace_subtree(d: TypingDerivation, site, new):
    if not site:
        return new
    i = site[0]
    kids = list(d.premises)
    kids[i] = _replace_subtree(kids[i], site[1:], new)
    rebuilt = _reapply_rule(d, tuple(kids))
    if rebuilt is None:
        raise NotACommute("enclosing derivation cannot be rebuilt")
    return rebuilt


def _reapply_rule(old: TypingDerivation, premises):
    """First configuration of old's rule applicable to the new premises."""
    from . import typing as ty

    rule = old.rule
    try:
        if rule == "weak":
            oz = list(ty._nl_slots(old.conclusion))
            pz = list(ty._nl_slots(old.premises[0].conclusion))
            for s in pz:
                oz.remove(s)
            return ty.t_weak(premises[0], oz[0].type)
        if rule == "contr":
            z = ty._nl_slots(premises[0].conclusion)
            for i in range(len(z)):
                for k in range(i + 1, len(z)):
                    try:
                        return ty.t_contr(premises[0], i, k)
                    except Exception:
                        continue
            return None
        if rule in ("plus-i1", "plus-i2"):
            fn = ty.t_plus_i1 if rule == "plus-i1" else ty.t_plus_i2
            for g in ty._nl_slots(old.conclusion):
                if isinstance(g.type, ty.Plus):
                    other = g.type.right if rule == "plus-i1" else g.type.left
                    for pos in range(len(ty._nl_slots(premises[0].conclusion))):
                        try:
                            return fn(premises[0], other, pos)
                        except Exception:
                            continue
            return None
        table = {
            "zero-i": lambda: ty.t_zero_i(premises[0], premises[1:]),
            "plus-e": lambda: ty.t_plus_e(*premises),
            "minus-i": lambda: ty.t_minus_i(*premises),
            "minus-e": lambda: ty.t_minus_e(*premises),
            "par-i": lambda: ty.t_par_i(premises[0]),
            "par-e": lambda: ty.t_par_e(*premises),
            "sub-i": lambda: ty.t_sub_i(*premises),
            "sub-e": lambda: ty.t_sub_e(*premises),
            "j-i": lambda: ty.t_j_i(premises[0]),
            "j-e": lambda: ty.t_j_e(*premises),
            "h-i": lambda: ty.t_h_i(premises[0]),
            "h-e": lambda: (
                ty.t_h_e_c(*premises)
                if premises[0].is_c()
                else ty.t_h_e_l(*premises)
            ),
            "bot-e": lambda: ty.t_bot_e(premises[0]),
        }
        fn = table.get(rule)
        if fn is None:
            return None
        return fn()
    except Exception:
        return None


def commute_step(d: TypingDerivation, site=()) -> TypingDerivation:
    """Apply the commuting conversion whose schema matches at `site`."""
    node = _subtree_at(d, site)
    new = _convert(node)
    return _replace_subtree(d, site, new)


def _convert(node: TypingDerivation) -> TypingDerivation:
    from . import typing as ty

    r = node.rule
    # case-of-case (coproduct elimination over coproduct elimination)
    if r == "plus-e" and node.premises[0].rule == "plus-e":
        inner = node.premises[0]
        maj0, n1, n2 = inner.premises
        m4, m5 = node.premises[1], node.premises[2]
        want = ty.Plus(m4.conclusion.type, m5.conclusion.type)
        # the outer elimination must consume a slot the inner created
        for k, s in enumerate(n1.conclusion.succ):
            if s.type != want or n2.conclusion.succ[k].type != want:
                continue
            try:
                p1 = ty.t_plus_e(n1, m4, m5, k)
                p2 = ty.t_plus_e(n2, m4, m5, k)
                pos = next(
                    i
                    for i, sl in enumerate(maj0.conclusion.succ)
                    if sl.type == ty.Plus(n1.conclusion.type, n2.conclusion.type)
                )
                return ty.t_plus_e(maj0, p1, p2, pos)
            except Exception:
                continue
        raise NotACommute("case-of-case does not fit here")
    # par-elim over par-elim, justified by two substitution equations
    if r == "par-e" and node.premises[0].rule == "par-e":
        inner = node.premises[0]
        maj0, n1, n2 = inner.premises
        m4, m5 = node.premises[1], node.premises[2]
        want = ty.Par(m4.conclusion.type, m5.conclusion.type)
        for k, s in enumerate(n1.conclusion.lsucc):
            if s.type != want:
                continue
            try:
                p1 = ty.t_par_e(n1, m4, m5, k)
                pos = next(
                    i
                    for i, sl in enumerate(maj0.conclusion.lsucc)
                    if sl.type == ty.Par(n1.conclusion.type, n2.conclusion.type)
                )
                out = ty.t_par_e(maj0, p1, n2, pos)
                _assert_par_equations(node, out)
                return out
            except NotACommute:
                raise
            except Exception:
                continue
        raise NotACommute("par-elim commutation does not fit here")
    # introductions and bot-i commute upward past the last inference
    if r in ("plus-i1", "plus-i2", "minus-i", "sub-i", "bot-i", "par-i"):
        return _commute_intro_up(node)
    # eliminations of subtraction commute upward past an introduction
    if r in ("minus-e", "sub-e") and node.premises[0].rule in ("minus-i", "sub-i"):
        return _commute_sub_e_up(node)
    raise NotACommute(f"no schema matches rule {r}")


def _assert_par_equations(old: TypingDerivation, new: TypingDerivation):
    """Equations (10)/(11): the commuted judgment equals the original, up to
    the order of slots within each zone."""
    if _slots_multiset(old.conclusion) != _slots_multiset(new.conclusion):
        raise NotACommute("par-elim commutation changed the judgment")


def _slots_multiset(j: TermJudgment):
    return {z: tuple(sorted(map(repr, slots))) for z, slots in _zones(j).items()}


def _commute_intro_up(node: TypingDerivation) -> TypingDerivation:
    """Push an introduction above a weakening/contraction directly below it.

    The candidate lifted derivations are enumerated and the structural rule
    replayed; the first combination reproducing the original judgment up to
    slot exchange wins."""
    from . import typing as ty

    below = node.premises[0]
    if below.rule not in ("weak", "contr"):
        raise NotACommute("only weakening/contraction can move below here")
    grand = below.premises[0]
    rest = node.premises[1:]
    want = _slots_multiset(node.conclusion)

    for lifted in _lift_candidates(node.rule, node, grand, rest):
        for out in _replay_structural(below, lifted):
            if _slots_multiset(out.conclusion) == want:
                return out
    raise NotACommute(f"intro commutation for {node.rule} over {below.rule} fails")


def _lift_candidates(rule, node, grand, rest):
    from . import typing as ty

    if rule in ("plus-i1", "plus-i2"):
        fn = ty.t_plus_i1 if rule == "plus-i1" else ty.t_plus_i2
        for g in ty._nl_slots(node.conclusion):
            if not isinstance(g.type, ty.Plus):
                continue
            other = g.type.right if rule == "plus-i1" else g.type.left
            for pos in range(len(ty._nl_slots(grand.conclusion))):
                try:
                    yield fn(grand, other, pos)
                except Exception:
                    continue
    elif rule == "minus-i":
        for pos in range(len(grand.conclusion.succ)):
            try:
                yield ty.t_minus_i(grand, rest[0], pos)
            except Exception:
                continue
    elif rule == "sub-i":
        for pos in range(len(grand.conclusion.lsucc)):
            try:
                yield ty.t_sub_i(grand, rest[0], pos)
            except Exception:
                continue
    elif rule == "par-i":
        nl = len(grand.conclusion.lsucc)
        for i in range(nl):
            for k in range(nl):
                if i != k:
                    try:
                        yield ty.t_par_i(grand, i, k)
                    except Exception:
                        continue
    elif rule == "bot-i":
        wire = node.conclusion.lsucc[-1].term
        if isinstance(wire, ConnectBot):
            try:
                yield ty.t_bot_i(grand, wire.body)
            except Exception:
                return
    else:
        raise NotACommute(f"no intro commutation for {rule}")


def _replay_structural(old_structural: TypingDerivation, new_premise: TypingDerivation):
    from . import typing as ty

    if old_structural.rule == "weak":
        oz = [s for s in ty._nl_slots(old_structural.conclusion)]
        pz = [s for s in ty._nl_slots(old_structural.premises[0].conclusion)]
        extra = list(oz)
        for s in pz:
            extra.remove(s)
        t = extra[0].type
        for at in range(len(ty._nl_slots(new_premise.conclusion)) + 1):
            yield ty.t_weak(new_premise, t, at)
    else:
        nz = ty._nl_slots(new_premise.conclusion)
        for i in range(len(nz)):
            for k in range(i + 1, len(nz)):
                try:
                    yield ty.t_contr(new_premise, i, k)
                except Exception:
                    continue


def _commute_sub_e_up(node: TypingDerivation) -> TypingDerivation:
    """Subtraction elimination moves above a subtraction introduction when
    its principal slot comes from the introduction's minor premise."""
    from . import typing as ty

    intro = node.premises[0]
    minor = node.premises[1]
    p1, p2 = intro.premises
    if node.rule == "minus-e":
        for pos in range(len(p2.conclusion.succ)):
            for cpos in range(len(minor.conclusion.succ)):
                try:
                    moved = ty.t_minus_e(p2, minor, pos, cpos)
                except Exception:
                    continue
                for ipos in range(len(p1.conclusion.succ)):
                    try:
                        out = ty.t_minus_i(p1, moved, ipos)
                    except Exception:
                        continue
                    if out.conclusion == node.conclusion:
                        return out
        raise NotACommute("minus-e commutation does not reproduce the judgment")
    for pos in range(len(p2.conclusion.lsucc)):
        for cpos in range(len(minor.conclusion.lsucc)):
            try:
                moved = ty.t_sub_e(p2, minor, pos, cpos)
            except Exception:
                continue
            for ipos in range(len(p1.conclusion.lsucc)):
                try:
                    out = ty.t_sub_i(p1, moved, ipos)
                except Exception:
                    continue
                if out.conclusion == node.conclusion:
                    return out
    raise NotACommute("sub-e commutation does not reproduce the judgment")


# ---------------------------------------------------------------------------
# case-of-case on judgments, and the normalizer


def commute_case_of_case(j: TermJudgment) -> Optional[TermJudgment]:
    """Rewrite the first case-of-case group: case (case t of y.t1, z.t2) of
    v1.-, v2.-  becomes  case t of y.(case t1 of ...), z.(case t2 of ...)."""
    zones = _zones(j)
    for zone, slots in sorted(zones.items()):
        for i, s in enumerate(slots):
            t = s.term
            if isinstance(t, Case) and isinstance(t.scrut, Case):
                ident = (t.scrut, t.left_var, t.right_var)

                def rw(sl: Slot):
                    u = sl.term
                    if isinstance(u, Case) and (u.scrut, u.left_var, u.right_var) == ident:
                        inner = u.scrut
                        left = Case(inner.left, u.left_var, u.left, u.right_var, u.right)
                        right = Case(inner.right, u.left_var, u.left, u.right_var, u.right)
                        return Slot(
                            Case(inner.scrut, inner.left_var, left, inner.right_var, right),
                            sl.type,
                        )
                    return sl

                return _rebuild(j, _map_slots(zones, rw))
    return None


def normalize(j: TermJudgment, fuel: int):
    """Leftmost reduction with case-of-case conversions interleaved.

    Returns (judgment, steps).  Raises FuelExhausted carrying the partial
    result when the budget runs out."""
    steps = 0
    while True:
        redexes = find_redexes(j)
        if redexes:
            if fuel <= 0:
                raise FuelExhausted(j)
            j = beta_step(j, redexes[0])
            fuel -= 1
            steps += 1
            continue
        converted = commute_case_of_case(j)
        if converted is not None:
            if fuel <= 0:
                raise FuelExhausted(j)
            j = converted
            fuel -= 1
            steps += 1
            continue
        return j, steps
