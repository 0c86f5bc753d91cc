"""The term calculus: typing, coroutine-style subtraction, and reduction.

A judgment types one subject variable and many conclusions at once, and
reducing one term can rewrite its neighbours: subtraction introduction
creates a coroutine mkc(t, y) whose bound occurrences y(t) sit in other
slots, and eliminating it (a postp redex) rewires them all in one step.
"""

from dlnl.reduction import beta_step, commute_step, find_redexes, normalize
from dlnl.typing import (
    check_typing,
    erase,
    t_id_c,
    t_minus_e,
    t_minus_i,
    t_plus_e,
    t_plus_i1,
    t_plus_i2,
    t_weak,
)
from dlnl.nd import check_nd
from dlnl.syntax import NLAtom

a, b = NLAtom("a"), NLAtom("b")

# make a coroutine: x:a |- mkc(x,y) : a-b, y(x) : b
intro = t_minus_i(t_id_c("x", a), t_id_c("y", b))
print("typed:", check_typing(intro))

# eliminate it against a fresh minor: the postponed computation appears
elim = t_minus_e(intro, t_minus_i(t_id_c("z", a), t_id_c("w", b)), pos=0, cpos=1)
j = check_typing(elim)
print("with postp slot:", j)
print("erasure checks as ND:", check_nd(erase(elim)) is not None)

# fire every redex the judgment offers
for loc in find_redexes(j):
    print(f"\n{loc.tag} at {loc.zone}[{loc.index}] ->")
    print("  ", beta_step(j, loc))

# the case-of-case conversion exposes a coproduct redex, then beta fires
maj0 = t_plus_i1(t_id_c("x", a), b)
n1 = t_plus_i1(t_id_c("y", a), b)
n2 = t_plus_i2(t_id_c("z", b), a)
inner = t_plus_e(maj0, n1, n2, 0)
m4 = t_weak(t_id_c("v1", a), b)
m5 = t_weak(t_id_c("v2", b), a, at=0)
outer = t_plus_e(inner, m4, m5, 0)
print("\nbefore commuting:", check_typing(outer))
conv = commute_step(outer)
print("after commuting: ", check_typing(conv))
left = conv.premises[1].conclusion
out, steps = normalize(left, fuel=10)
print(f"left branch normalizes in {steps} steps to:", out)
