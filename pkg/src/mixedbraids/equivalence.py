"""Deciding equality of braid words via the left normal form ``Delta^p A_1 ... A_r``.

Two words are equal in B_n iff their normal forms coincide, so a word is
trivial iff ``p == 0`` and there are no simple factors. The step budget caps
the number of elementary rewrites; running out raises
:class:`StepBudgetExceeded` rather than returning a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from mixedbraids import kernels
from mixedbraids.braid import BraidWord, StrandMismatchError, concat, invert, permutation_of
from mixedbraids.kernels import StepBudgetExceeded
from mixedbraids.permutations import Permutation

DEFAULT_BUDGET = 10**6

__all__ = [
    "DEFAULT_BUDGET",
    "EquivalenceVerdict",
    "NormalForm",
    "StepBudgetExceeded",
    "equals",
    "is_pure",
    "is_trivial",
    "normal_form",
]


@dataclass(frozen=True)
class EquivalenceVerdict:
    equal: bool
    effort: int

    def __bool__(self):
        return self.equal


@dataclass(frozen=True)
class NormalForm:
    strand_count: int
    delta_power: int
    factors: tuple[Permutation, ...]
    effort: int

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def key(self):
        return self.delta_power, tuple(f.table for f in self.factors)


def normal_form(w: BraidWord, budget: int = DEFAULT_BUDGET) -> NormalForm:
    p, factors, steps = kernels.normal_form(w.strand_count, list(w.letters), budget)
    return NormalForm(w.strand_count, p, tuple(Permutation(f) for f in factors), steps)


def is_trivial(w: BraidWord, budget: int = DEFAULT_BUDGET) -> EquivalenceVerdict:
    nf = normal_form(w, budget)
    return EquivalenceVerdict(nf.is_identity(), nf.effort)


def equals(a: BraidWord, b: BraidWord, budget: int = DEFAULT_BUDGET) -> EquivalenceVerdict:
    if a.strand_count != b.strand_count:
        raise StrandMismatchError(f"cannot compare B_{a.strand_count} with B_{b.strand_count}")
    return is_trivial(concat(a, invert(b)), budget)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()
