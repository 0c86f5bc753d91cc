"""Verifying kernel for dual linear/non-linear cointuitionistic logic.

Submodules: syntax (formulas, sequents), sequent (proof checking),
cutelim (cut elimination), nd (natural deduction and translations),
terms / typing (the term calculus), reduction (the rewrite engine),
semantics (co-Heyting lattice oracle), search (bounded proof search),
gen (random corpora), cli (the dlnl command).
"""

__version__ = "0.1.0"
