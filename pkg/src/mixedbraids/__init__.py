"""Braid groups, their mixed subgroups, and topological-complexity bounds."""

from mixedbraids.bounds import BoundReport, analyze, bounds_table, tc_bounds
from mixedbraids.braid import (
    BraidWord,
    StrandMismatchError,
    alpha,
    alpha_product,
    delta,
    epsilon,
    free_reduce,
    full_twist,
    invert,
    lift,
    permutation_of,
    sigma,
)
from mixedbraids.equivalence import StepBudgetExceeded, equals, is_pure, is_trivial, normal_form
from mixedbraids.kernels import BACKEND
from mixedbraids.linking import LinkingProfile, conjugated_profile, exponents_from_linking, linking_matrix
from mixedbraids.permutations import CycleType, GroupSpec, Permutation, cycle_type, fit_into_young
from mixedbraids.torsion import TorsionReport, torsion_free, torsion_report, torsion_witness

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundReport", "BraidWord", "CycleType", "GroupSpec", "LinkingProfile", "Permutation",
    "StepBudgetExceeded", "StrandMismatchError", "TorsionReport", "alpha", "alpha_product", "analyze",
    "bounds_table", "conjugated_profile", "cycle_type", "delta", "epsilon", "equals",
    "exponents_from_linking", "fit_into_young", "free_reduce", "full_twist", "invert", "is_pure",
    "is_trivial", "lift", "linking_matrix", "normal_form", "permutation_of", "sigma", "tc_bounds",
    "torsion_free", "torsion_report", "torsion_witness",
]
