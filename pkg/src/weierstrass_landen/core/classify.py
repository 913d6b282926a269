"""
Rank classification of the subgroup behind (g2, g3).
"""

import logging
from typing import Optional

from .types import Invariants, RootTriple, SubgroupRank, Tolerances, require_finite
from .cubic import discriminant, invariants_from_roots, root_discriminant
from ..utils.config import resolve_tolerances

logger = logging.getLogger(__name__)


def classify(inv: Invariants, tol: Optional[Tolerances] = None) -> SubgroupRank:
    """
    Rank0 if max(|g2|, |g3|^(2/3)) <= eps_degenerate, Rank1 if
    |Delta| <= eps_degenerate * max(|g2|^3, 27|g3|^2), Rank2 otherwise.
    """
    tol = resolve_tolerances(tol)
    require_finite("invariants", inv.g2, inv.g3)
    if max(abs(inv.g2), abs(inv.g3) ** (2.0 / 3.0)) <= tol.eps_degenerate:
        return SubgroupRank.RANK0
    scale = max(abs(inv.g2) ** 3, 27 * abs(inv.g3) ** 2)
    if abs(discriminant(inv)) <= tol.eps_degenerate * scale:
        return SubgroupRank.RANK1
    return SubgroupRank.RANK2


def classify_roots(t: RootTriple, tol: Optional[Tolerances] = None) -> SubgroupRank:
    """Same thresholds as classify, with Delta taken from the root product."""
    tol = resolve_tolerances(tol)
    inv = invariants_from_roots(t)
    if max(abs(inv.g2), abs(inv.g3) ** (2.0 / 3.0)) <= tol.eps_degenerate:
        return SubgroupRank.RANK0
    scale = max(abs(inv.g2) ** 3, 27 * abs(inv.g3) ** 2)
    if abs(root_discriminant(t)) <= tol.eps_degenerate * scale:
        return SubgroupRank.RANK1
    return SubgroupRank.RANK2
