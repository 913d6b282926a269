"""
Weierstrass elliptic functions by Landen transformations

Periods, the Abel map and p, p', zeta, sigma of the lattice with given
invariants (g2, g3), computed through quadratically convergent chains of
index-2 sublattices.
"""

__version__ = "0.1.0"
__author__ = "Weierstrass Landen Development Team"

from .core import (
    CurvePoint,
    Invariants,
    QuasiPeriods,
    ReducedBasis,
    RootTriple,
    SelectedRoots,
    SubgroupRank,
    Tolerances,
    WeierstrassValues,
    classify,
    classify_roots,
    order_properly,
    solve_cubic,
)
from .landen import LandenChain, chain_invariant_deltas, iterate_optimal, landen_step, select_optimal
from .periods import rank1_generator, rank1_period, reduced_basis, smallest_period
from .functions import LatticeFunctions, abel_map, quasi_periods, reduce_argument, weierstrass_all, weierstrass_at
from .conformal import ConformalParams, curve_from_gamma, eval_Q, trace_Q

__all__ = [
    "CurvePoint",
    "Invariants",
    "QuasiPeriods",
    "ReducedBasis",
    "RootTriple",
    "SelectedRoots",
    "SubgroupRank",
    "Tolerances",
    "WeierstrassValues",
    "classify",
    "classify_roots",
    "order_properly",
    "solve_cubic",
    "LandenChain",
    "chain_invariant_deltas",
    "iterate_optimal",
    "landen_step",
    "select_optimal",
    "quasi_periods",
    "rank1_generator",
    "rank1_period",
    "reduced_basis",
    "smallest_period",
    "LatticeFunctions",
    "abel_map",
    "reduce_argument",
    "weierstrass_all",
    "weierstrass_at",
    "ConformalParams",
    "curve_from_gamma",
    "eval_Q",
    "trace_Q",
]
