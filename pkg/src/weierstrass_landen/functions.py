"""
Weierstrass p, p', zeta and sigma via descending Landen chains, the Abel map,
the quasi-periods, the degenerate closed forms and argument reduction.
"""

import logging
from functools import cached_property
from typing import Iterable, Optional, Tuple

import numpy as np

from .core.types import (
    CurvePoint,
    Invariants,
    QuasiPeriods,
    ReducedBasis,
    RootTriple,
    SubgroupRank,
    Tolerances,
    WeierstrassValues,
    normalize_functions,
    require_finite,
)
from .core.cubic import invariants_from_roots, order_properly, solve_cubic
from .core.classify import classify, classify_roots
from .exceptions import DegenerateCurveError, OffCurveError, PoleProximityError
from .landen import LandenChain, iterate_optimal
from .periods import basis_from_chain, rank1_generator
from .utils.config import resolve_tolerances
from .utils.error_handling import NumericsErrorHandler

logger = logging.getLogger(__name__)

ON_CURVE_RTOL = 1e-10
HALF_PERIOD_Y_RTOL = 1e-12
HALF_PERIOD_X_RTOL = 1e-10


def _values(wanted, p=None, dp=None, zeta=None, sigma=None) -> WeierstrassValues:
    out = WeierstrassValues(
        p=p if "p" in wanted else None,
        dp=dp if "dp" in wanted else None,
        zeta=zeta if "zeta" in wanted else None,
        sigma=sigma if "sigma" in wanted else None,
    )
    require_finite("Weierstrass values", *out.requested().values())
    return out


def rank0_values(z: complex, functions: Optional[Iterable[str]] = None) -> WeierstrassValues:
    """p = z^-2, p' = -2 z^-3, zeta = z^-1, sigma = z."""
    wanted = normalize_functions(functions)
    z = complex(z)
    if z == 0:
        raise PoleProximityError("z is the pole of the trivial group", context={"z": z})
    return _values(wanted, p=1 / z ** 2, dp=-2 / z ** 3, zeta=1 / z, sigma=z)


def rank1_values(omega: complex, z: complex, functions: Optional[Iterable[str]] = None) -> WeierstrassValues:
    """Closed forms for the group omega * Z."""
    wanted = normalize_functions(functions)
    k = np.pi / omega
    s = np.sin(k * z)
    c = np.cos(k * z)
    return _values(
        wanted,
        p=complex(k ** 2 * (1 / s ** 2 - 1 / 3)),
        dp=complex(-2 * k ** 3 * c / s ** 3),
        zeta=complex(k ** 2 * z / 3 + k * c / s),
        sigma=complex(np.exp(k ** 2 * z ** 2 / 6) * s / k),
    )


@NumericsErrorHandler.handle_evaluation_error(logger, "Landen evaluation")
def weierstrass_from_chain(
    chain: LandenChain,
    g2: complex,
    z: complex,
    functions: Optional[Iterable[str]] = None
) -> WeierstrassValues:
    """
    Evaluate with a given (possibly truncated) optimal chain.

    Values are seeded from the rank-1 limit of the last step and carried up
    the chain with the Landen relations. When sigma is wanted the run happens
    at z/2 with sigma^2 as the carried channel and the duplication formulas
    finish at z; otherwise it runs at z and p' / zeta are tracked only as
    needed.
    """
    wanted = normalize_functions(functions)
    z = complex(z)
    halve = "sigma" in wanted
    u = z / 2 if halve else z
    track_dp = halve or bool(wanted & {"dp", "zeta"})
    track_zeta = "zeta" in wanted

    k = np.pi / chain.omega
    s = np.sin(k * u)
    c = np.cos(k * u)
    p = k ** 2 * (1 / s ** 2 - 1 / 3)
    dp = -2 * k ** 3 * c / s ** 3 if track_dp else None
    zeta = k ** 2 * u / 3 + k * c / s if track_zeta else None
    sigma_sq = (np.exp(k ** 2 * u ** 2 / 6) * s / k) ** 2 if halve else None

    # level n-1 from level n with the roots of step n
    for step in reversed(chain.steps):
        e1 = step.selected
        cn = step.pair_product()
        shifted = p - e1
        if track_zeta:
            zeta = 2 * zeta + 0.5 * dp / shifted + e1 * u
        if halve:
            sigma_sq = np.exp(e1 * u * u) * shifted * sigma_sq ** 2
        if track_dp:
            dp = dp * (1 - cn / shifted ** 2)
        p = p + cn / shifted

    if not halve:
        return _values(
            wanted,
            p=complex(p),
            dp=None if dp is None else complex(dp),
            zeta=None if zeta is None else complex(zeta),
        )

    a = (6 * p ** 2 - g2 / 2) / dp
    return _values(
        wanted,
        p=complex(-2 * p + (a / 2) ** 2),
        dp=complex(-dp + a / 4 * (12 * p - a ** 2)),
        zeta=complex(2 * zeta + a / 2) if track_zeta else None,
        sigma=complex(-dp * sigma_sq ** 2),
    )


def reduce_argument(z: complex, basis: ReducedBasis) -> Tuple[complex, int, int]:
    """
    z = z0 + m omega1 + n omega2 with both coordinates of z0 in [-1/2, 1/2).
    """
    z = complex(z)
    a, b = basis.coordinates(z)
    m = int(np.floor(a + 0.5))
    n = int(np.floor(b + 0.5))
    return z - basis.point(m, n), m, n


def _curve_scale(inv: Invariants, x: complex, y: complex) -> float:
    return max(abs(y) ** 2, 4 * abs(x) ** 3, abs(inv.g2 * x), abs(inv.g3), 1.0)


def check_on_curve(inv: Invariants, pt: CurvePoint) -> None:
    residual = inv.curve_residual(pt.x, pt.y)
    if abs(residual) > ON_CURVE_RTOL * _curve_scale(inv, pt.x, pt.y):
        raise OffCurveError(
            "Point does not satisfy y^2 = 4x^3 - g2 x - g3",
            context={"x": pt.x, "y": pt.y, "residual": residual}
        )


def _arctan_abel(omega: complex, x: complex, y: complex) -> complex:
    """-(omega/pi) arctan((6 pi omega^2 x + 2 pi^3) / (3 omega^3 y)), principal branch."""
    arg = (6 * np.pi * omega ** 2 * x + 2 * np.pi ** 3) / (3 * omega ** 3 * y)
    return complex(-(omega / np.pi) * np.arctan(np.complex128(arg)))


def _closer_quadratic_root(b: complex, c: complex, target: complex) -> complex:
    """Root of x^2 - b x + c = 0 nearest to target, without cancellation."""
    disc = complex(np.sqrt(np.complex128(b * b - 4 * c)))
    big = (b + disc) / 2 if abs(b + disc) >= abs(b - disc) else (b - disc) / 2
    if big == 0:
        return 0j
    small = c / big
    return big if abs(big - target) <= abs(small - target) else small


@NumericsErrorHandler.handle_evaluation_error(logger, "Abel map")
def abel_from_chain(chain: LandenChain, pt: CurvePoint) -> complex:
    """
    Carry (x, y) down the chain, choosing at each level the preimage closer
    to the previous x, and finish with the rank-1 Abel map.
    """
    x, y = pt.x, pt.y
    for step in chain.steps:
        e1 = step.selected
        cn = step.pair_product()
        x_next = _closer_quadratic_root(e1 + x, cn + e1 * x, x)
        y = y / (1 - cn / (x_next - e1) ** 2)
        x = x_next
    require_finite("Abel iterates", x, y)
    z = _arctan_abel(chain.omega, x, y)
    require_finite("Abel map", z)
    return z


class LatticeFunctions:
    """
    Weierstrass functions of one curve with its roots, rank, optimal chain,
    reduced basis and quasi-periods computed once and reused.
    """

    def __init__(self, inv: Invariants, tol: Optional[Tolerances] = None, roots: Optional[RootTriple] = None):
        self.tol = resolve_tolerances(tol)
        self.invariants = inv
        if roots is None:
            self.rank = classify(inv, self.tol)
            self._given_roots = None
        else:
            self.rank = classify_roots(roots, self.tol)
            self._given_roots = order_properly(roots)
        logger.debug(f"Lattice functions for g2={inv.g2}, g3={inv.g3}: {self.rank.value}")
        if self.rank != SubgroupRank.RANK2:
            logger.info(f"Degenerate subgroup ({self.rank.value}); using the elementary closed forms")

    @classmethod
    def from_roots(cls, roots: RootTriple, tol: Optional[Tolerances] = None) -> "LatticeFunctions":
        """Build from e1, e2, e3 directly; avoids solving an ill-conditioned cubic."""
        return cls(invariants_from_roots(roots), tol, roots=roots)

    @cached_property
    def roots(self) -> RootTriple:
        if self._given_roots is not None:
            return self._given_roots
        return order_properly(solve_cubic(self.invariants))

    def _require_lattice(self, what: str) -> None:
        if self.rank != SubgroupRank.RANK2:
            raise DegenerateCurveError(
                f"{what} needs a lattice, got {self.rank.value}",
                context={"rank": self.rank.value}
            )

    @cached_property
    def chain(self) -> LandenChain:
        self._require_lattice("Landen chain")
        return iterate_optimal(self.roots, self.tol)

    @cached_property
    def omega(self) -> complex:
        """Shortest period (rank2) or the generator (rank1)."""
        if self.rank == SubgroupRank.RANK2:
            return self.chain.omega
        if self.rank == SubgroupRank.RANK1:
            return rank1_generator(self.invariants)
        raise DegenerateCurveError("The trivial group has no period", context={"rank": self.rank.value})

    @cached_property
    def basis(self) -> ReducedBasis:
        self._require_lattice("Reduced basis")
        return basis_from_chain(self.roots, self.chain, self.tol)

    @cached_property
    def quasi(self) -> QuasiPeriods:
        self._require_lattice("Quasi-periods")
        return quasi_periods_from_chain(self.basis, self.chain, self.invariants.g2)

    @property
    def length_scale(self) -> float:
        """|omega1| for lattices, |omega| for rank1, 1 for the trivial group."""
        if self.rank == SubgroupRank.RANK2:
            return abs(self.basis.omega1)
        if self.rank == SubgroupRank.RANK1:
            return abs(self.omega)
        return 1.0

    def lattice_distance(self, z: complex) -> float:
        """Distance from z to the nearest point of the subgroup."""
        z = complex(z)
        if self.rank == SubgroupRank.RANK0:
            return abs(z)
        if self.rank == SubgroupRank.RANK1:
            omega = self.omega
            return abs(z - np.round((z / omega).real) * omega)
        z0, _, _ = reduce_argument(z, self.basis)
        return abs(z0)

    def _check_pole(self, z: complex) -> None:
        if self.rank == SubgroupRank.RANK0:
            if z == 0:
                raise PoleProximityError("z is the pole of the trivial group", context={"z": z})
            return
        distance = self.lattice_distance(z)
        if distance <= self.tol.eps_pole * self.length_scale:
            raise PoleProximityError(
                f"z is within {distance:.3e} of a lattice point",
                context={"z": z, "distance": distance}
            )

    def values(self, z: complex, functions: Optional[Iterable[str]] = None) -> WeierstrassValues:
        """Evaluate at z as given, without argument reduction."""
        z = complex(z)
        require_finite("z", z)
        self._check_pole(z)
        if self.rank == SubgroupRank.RANK0:
            return rank0_values(z, functions)
        if self.rank == SubgroupRank.RANK1:
            return rank1_values(self.omega, z, functions)
        return weierstrass_from_chain(self.chain, self.invariants.g2, z, functions)

    def reduced_values(self, z: complex, functions: Optional[Iterable[str]] = None) -> WeierstrassValues:
        """
        Evaluate at the representative z0 of z in the centred cell and restore
        zeta and sigma through the quasi-periodicity factors.
        """
        z = complex(z)
        require_finite("z", z)
        if self.rank != SubgroupRank.RANK2:
            return self.values(z, functions)

        wanted = normalize_functions(functions)
        basis = self.basis
        z0, m, n = reduce_argument(z, basis)
        if abs(z0) <= self.tol.eps_pole * abs(basis.omega1):
            raise PoleProximityError(
                f"z is within {abs(z0):.3e} of a lattice point",
                context={"z": z, "m": m, "n": n}
            )
        v = weierstrass_from_chain(self.chain, self.invariants.g2, z0, wanted)
        if (m, n) == (0, 0) or not wanted & {"zeta", "sigma"}:
            return v

        eta = m * self.quasi.eta1 + n * self.quasi.eta2
        zeta = v.zeta + eta if v.zeta is not None else None
        sigma = None
        if v.sigma is not None:
            sign = -1 if (m + n + m * n) % 2 else 1
            sigma = v.sigma * sign * np.exp(eta * (z0 + basis.point(m, n) / 2))
        return _values(wanted, p=v.p, dp=v.dp, zeta=zeta, sigma=None if sigma is None else complex(sigma))

    def half_periods(self) -> Tuple[complex, complex, complex]:
        b = self.basis
        return b.omega1 / 2, b.omega2 / 2, (b.omega1 + b.omega2) / 2

    def _half_period_point(self, pt: CurvePoint) -> Optional[complex]:
        """The half-period for a point (e_k, 0), or None for any other point."""
        scale = max(1.0, self.roots.scale)
        if abs(pt.y) > HALF_PERIOD_Y_RTOL * scale ** 1.5:
            return None
        if min(abs(pt.x - e) for e in self.roots) > HALF_PERIOD_X_RTOL * scale:
            return None
        candidates = self.half_periods()
        p_values = [self.values(w, {"p"}).p for w in candidates]
        best = min(range(3), key=lambda i: abs(p_values[i] - pt.x))
        logger.debug(f"Abel map short-cut to half-period {candidates[best]}")
        return candidates[best]

    def abel(self, pt: CurvePoint) -> complex:
        """A z with (p(z), p'(z)) = pt, defined modulo the lattice."""
        check_on_curve(self.invariants, pt)
        if self.rank == SubgroupRank.RANK0:
            if pt.y == 0:
                raise OffCurveError("The cusp (0, 0) has no Abel image", context={"x": pt.x, "y": pt.y})
            return complex(-2 * pt.x / pt.y)
        if self.rank == SubgroupRank.RANK1:
            return self._rank1_abel(pt)
        shortcut = self._half_period_point(pt)
        if shortcut is not None:
            return shortcut
        return abel_from_chain(self.chain, pt)

    def _rank1_abel(self, pt: CurvePoint) -> complex:
        omega = self.omega
        k = np.pi / omega
        scale = max(1.0, abs(k) ** 2)
        if abs(pt.y) <= HALF_PERIOD_Y_RTOL * scale ** 1.5:
            if abs(pt.x - 2 * k ** 2 / 3) <= HALF_PERIOD_X_RTOL * scale:
                return omega / 2
            raise OffCurveError(
                "The node of a rank1 curve has no Abel image",
                context={"x": pt.x, "y": pt.y}
            )
        z = _arctan_abel(omega, pt.x, pt.y)
        require_finite("Abel map", z)
        return z


def weierstrass_all(
    inv: Invariants,
    z: complex,
    tol: Optional[Tolerances] = None,
    functions: Optional[Iterable[str]] = None
) -> WeierstrassValues:
    """p, p', zeta, sigma at z with no argument reduction."""
    return LatticeFunctions(inv, tol).values(z, functions)


def weierstrass_at(
    inv: Invariants,
    z: complex,
    tol: Optional[Tolerances] = None,
    functions: Optional[Iterable[str]] = None
) -> WeierstrassValues:
    """p, p', zeta, sigma at any z, reducing it into the centred period cell first."""
    return LatticeFunctions(inv, tol).reduced_values(z, functions)


def abel_map(inv: Invariants, pt: CurvePoint, tol: Optional[Tolerances] = None) -> complex:
    """A z with p(z) = x and p'(z) = y, modulo the lattice."""
    return LatticeFunctions(inv, tol).abel(pt)


def quasi_periods_from_chain(basis: ReducedBasis, chain: LandenChain, g2: complex) -> QuasiPeriods:
    """Quasi-periods reusing an existing optimal chain."""
    eta1 = 2 * weierstrass_from_chain(chain, g2, basis.omega1 / 2, functions={"zeta"}).zeta
    eta2 = 2 * weierstrass_from_chain(chain, g2, basis.omega2 / 2, functions={"zeta"}).zeta
    return QuasiPeriods(eta1, eta2)


def quasi_periods(basis: ReducedBasis, inv: Invariants, tol: Optional[Tolerances] = None) -> QuasiPeriods:
    """eta_k = 2 zeta(omega_k / 2)."""
    tol = resolve_tolerances(tol)
    eta1 = 2 * weierstrass_all(inv, basis.omega1 / 2, tol, functions={"zeta"}).zeta
    eta2 = 2 * weierstrass_all(inv, basis.omega2 / 2, tol, functions={"zeta"}).zeta
    quasi = QuasiPeriods(eta1, eta2)
    logger.debug(f"Legendre residual {abs(quasi.legendre_residual(basis)):.3e}")
    return quasi
