"""
Value types, the cubic solver, proper ordering and rank classification.
"""

from .types import (
    EPS,
    Invariants,
    RootTriple,
    SelectedRoots,
    SubgroupRank,
    Tolerances,
    CurvePoint,
    WeierstrassValues,
    ReducedBasis,
    QuasiPeriods,
    FUNCTION_NAMES,
    sign_normalize,
)
from .cubic import (
    solve_cubic,
    order_properly,
    order_with_first,
    invariants_from_roots,
    discriminant,
    root_discriminant,
)
from .classify import classify, classify_roots

__all__ = [
    "EPS",
    "Invariants",
    "RootTriple",
    "SelectedRoots",
    "SubgroupRank",
    "Tolerances",
    "CurvePoint",
    "WeierstrassValues",
    "ReducedBasis",
    "QuasiPeriods",
    "FUNCTION_NAMES",
    "sign_normalize",
    "solve_cubic",
    "order_properly",
    "order_with_first",
    "invariants_from_roots",
    "discriminant",
    "root_discriminant",
    "classify",
    "classify_roots",
]
