"""
Period lattice from invariants: the shortest period and a reduced basis.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from .core.types import (
    Invariants,
    ReducedBasis,
    RootTriple,
    SelectedRoots,
    SubgroupRank,
    Tolerances,
    sign_normalize,
)
from .core.cubic import order_properly, order_with_first, solve_cubic
from .core.classify import classify, classify_roots
from .exceptions import DegenerateCurveError, InconsistentInvariantsError, NoConvergenceError
from .landen import LandenChain, iterate_optimal, landen_step
from .utils.config import resolve_tolerances
from .utils.error_handling import NumericsErrorHandler

logger = logging.getLogger(__name__)


def _require_rank2(inv: Invariants, tol: Tolerances) -> None:
    rank = classify(inv, tol)
    if rank != SubgroupRank.RANK2:
        raise DegenerateCurveError(
            f"Expected a lattice (rank2), got {rank.value}",
            context={"g2": inv.g2, "g3": inv.g3, "rank": rank.value}
        )


def _require_rank2_roots(t: RootTriple, tol: Tolerances) -> None:
    rank = classify_roots(t, tol)
    if rank != SubgroupRank.RANK2:
        raise DegenerateCurveError(
            f"Expected a lattice (rank2), got {rank.value}",
            context={"roots": [str(e) for e in t], "rank": rank.value}
        )


@NumericsErrorHandler.handle_iteration_error(logger, "smallest period")
def smallest_period(inv: Invariants, tol: Optional[Tolerances] = None) -> complex:
    """Shortest nonzero period of the lattice with invariants inv."""
    tol = resolve_tolerances(tol)
    _require_rank2(inv, tol)
    roots = order_properly(solve_cubic(inv))
    return iterate_optimal(roots, tol).omega


def _lies_between(h: SelectedRoots) -> bool:
    """Both distances from the selected root dominate the pair's own distance."""
    h1 = h.selected
    h2, h3 = h.pair
    gap = abs(h2 - h3)
    return abs(h1 - h2) >= gap and abs(h1 - h3) >= gap


def second_chain_start(roots: RootTriple, tol: Tolerances) -> RootTriple:
    """
    Walk the non-optimal branch h^(0) = L(e2, {e1, e3}) while the distinguished
    root stays isolated, then return the properly ordered triple k^(0) where
    that stops.
    """
    h = landen_step(SelectedRoots(roots.e2, (roots.e1, roots.e3)))
    steps = 0
    while _lies_between(h):
        if steps >= tol.max_iter:
            raise NoConvergenceError(
                f"Second-period search did not terminate in {tol.max_iter} steps",
                context={"max_iter": tol.max_iter}
            )
        arranged = order_with_first(h.forget())
        h = landen_step(SelectedRoots(arranged.e2, (arranged.e1, arranged.e3)))
        steps += 1
    logger.debug(f"Second-period branch left after {steps} non-optimal steps")
    return order_properly(h.forget())


def gauss_reduce(omega1: complex, omega2: complex, max_it: int = 1000) -> Tuple[complex, complex]:
    """Lagrange-Gauss reduction of a 2D basis given as complex numbers."""
    u, v = complex(omega1), complex(omega2)
    if abs(u) > abs(v):
        u, v = v, u
    for _ in range(max_it):
        x = int(np.round((v * u.conjugate()).real / abs(u) ** 2))
        v = v - x * u
        if abs(v) >= abs(u):
            return u, v
        u, v = v, u
    raise NoConvergenceError(
        f"Gaussian basis not found after {max_it} iterations",
        context={"omega1": omega1, "omega2": omega2}
    )


def orient_basis(omega1: complex, omega2: complex) -> ReducedBasis:
    """Sign-normalise omega1, then flip omega2 so that Im(omega2/omega1) > 0."""
    omega1 = sign_normalize(omega1)
    if (omega2 / omega1).imag < 0:
        omega2 = -omega2
    return ReducedBasis(omega1, omega2)


def reduced_basis_from_roots(roots: RootTriple, tol: Optional[Tolerances] = None) -> ReducedBasis:
    """Reduced basis of the lattice whose half-period values are roots."""
    tol = resolve_tolerances(tol)
    _require_rank2_roots(roots, tol)
    ordered = order_properly(roots)
    return basis_from_chain(ordered, iterate_optimal(ordered, tol), tol)


def basis_from_chain(roots: RootTriple, chain: LandenChain, tol: Tolerances) -> ReducedBasis:
    """Complete a basis from properly ordered roots and their optimal chain."""
    omega1 = chain.omega
    omega2 = iterate_optimal(second_chain_start(roots, tol), tol).omega
    if abs(omega1 - omega2) <= 1e-8 * abs(omega1) or abs(omega1 + omega2) <= 1e-8 * abs(omega1):
        raise DegenerateCurveError(
            "Period search returned dependent periods",
            context={"omega1": omega1, "omega2": omega2}
        )

    u, v = gauss_reduce(omega1, omega2, max_it=max(tol.max_iter, 64))
    basis = orient_basis(u, v)
    logger.debug(f"Reduced basis: omega1={basis.omega1}, omega2={basis.omega2}")
    return basis


@NumericsErrorHandler.handle_iteration_error(logger, "reduced basis")
def reduced_basis(inv: Invariants, tol: Optional[Tolerances] = None) -> ReducedBasis:
    """
    Two shortest independent periods.

    omega1 comes from the optimal chain, omega2 from the optimal chain of the
    lattice reached along the non-optimal branch. A final Lagrange-Gauss pass
    replaces omega2 by the shortest of omega2, omega2 +- omega1 and fixes the
    orientation.
    """
    tol = resolve_tolerances(tol)
    _require_rank2(inv, tol)
    roots = order_properly(solve_cubic(inv))
    return basis_from_chain(roots, iterate_optimal(roots, tol), tol)


def rank1_period(inv: Invariants, tol: Optional[Tolerances] = None) -> complex:
    """
    omega = (4 pi^4 / (3 g2))^(1/4) on the principal branch.

    The result is checked against g3 = 8 pi^6 / (27 omega^6).
    """
    tol = resolve_tolerances(tol)
    rank = classify(inv, tol)
    if rank != SubgroupRank.RANK1:
        raise DegenerateCurveError(
            f"Expected a rank1 subgroup, got {rank.value}",
            context={"g2": inv.g2, "g3": inv.g3, "rank": rank.value}
        )
    omega = sign_normalize(complex(np.power(np.complex128(4 * np.pi ** 4 / (3 * inv.g2)), 0.25)))
    expected_g3 = 8 * np.pi ** 6 / (27 * omega ** 6)
    if abs(inv.g3 - expected_g3) > 1e-10 * abs(inv.g3):
        raise InconsistentInvariantsError(
            "g3 does not match the period implied by g2",
            context={"g3": inv.g3, "expected_g3": expected_g3, "omega": omega}
        )
    return omega


def rank1_generator(inv: Invariants) -> complex:
    """
    Generator of a rank1 group without a branch choice: k^2 = 9 g3 / (2 g2)
    and omega = pi / k, sign-normalised.

    Unlike rank1_period this covers both signs of g3, e.g. the limit of a
    lattice whose isolated root is negative.
    """
    if inv.g2 == 0:
        raise DegenerateCurveError("The trivial group has no period", context={"rank": "rank0"})
    k_sq = 9 * inv.g3 / (2 * inv.g2)
    if k_sq == 0:
        raise DegenerateCurveError("g3 = 0 has no rank1 generator", context={"g2": inv.g2, "g3": inv.g3})
    return sign_normalize(np.pi / complex(np.sqrt(k_sq)))
