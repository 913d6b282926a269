"""
Value types shared by every module.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

import numpy as np

from ..exceptions import NonFiniteError, OutOfRangeError

EPS = float(np.finfo(np.float64).eps)


def is_finite(*values: complex) -> bool:
    """True when every value has finite real and imaginary parts."""
    return bool(np.all(np.isfinite(np.asarray(values, dtype=np.complex128))))


def require_finite(name: str, *values: complex) -> None:
    if not is_finite(*values):
        raise NonFiniteError(
            f"{name} must be finite, got {values}",
            context={"name": name, "values": [str(v) for v in values]}
        )


def sum_tolerance(*roots: complex) -> float:
    """64 eps times the largest modulus."""
    return 64 * EPS * max(abs(e) for e in roots)


def require_zero_sum(name: str, *roots: complex) -> None:
    residual = sum(roots)
    if abs(residual) > sum_tolerance(*roots):
        raise OutOfRangeError(
            f"{name} must sum to zero, residual {abs(residual):.3e}",
            context={"name": name, "roots": [str(e) for e in roots], "residual": abs(residual)}
        )


@dataclass(frozen=True)
class Invariants:
    """Weierstrass invariants (g2, g3) of a discrete subgroup."""
    g2: complex
    g3: complex

    def __post_init__(self):
        object.__setattr__(self, "g2", complex(self.g2))
        object.__setattr__(self, "g3", complex(self.g3))
        require_finite("invariants", self.g2, self.g3)

    def scaled(self, lam: complex) -> "Invariants":
        """Invariants of the lattice lam * Gamma."""
        lam = complex(lam)
        return Invariants(self.g2 / lam ** 4, self.g3 / lam ** 6)

    def curve_residual(self, x: complex, y: complex) -> complex:
        return y * y - (4 * x ** 3 - self.g2 * x - self.g3)


@dataclass(frozen=True)
class RootTriple:
    """Roots e1, e2, e3 of 4x^3 - g2 x - g3 in a fixed order."""
    e1: complex
    e2: complex
    e3: complex

    def __post_init__(self):
        for name in ("e1", "e2", "e3"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        require_finite("roots", self.e1, self.e2, self.e3)
        require_zero_sum("roots", self.e1, self.e2, self.e3)

    def __iter__(self) -> Iterator[complex]:
        return iter((self.e1, self.e2, self.e3))

    def as_tuple(self) -> Tuple[complex, complex, complex]:
        return (self.e1, self.e2, self.e3)

    @property
    def scale(self) -> float:
        return max(abs(self.e1), abs(self.e2), abs(self.e3))

    @property
    def sum_residual(self) -> complex:
        return self.e1 + self.e2 + self.e3

    def is_properly_ordered(self) -> bool:
        d23 = abs(self.e2 - self.e3)
        d13 = abs(self.e1 - self.e3)
        d12 = abs(self.e1 - self.e2)
        return d23 <= d13 <= d12


@dataclass(frozen=True)
class SelectedRoots:
    """A distinguished root plus an unordered pair."""
    selected: complex
    pair: Tuple[complex, complex]

    def __post_init__(self):
        object.__setattr__(self, "selected", complex(self.selected))
        first, second = self.pair
        object.__setattr__(self, "pair", (complex(first), complex(second)))
        require_finite("selected roots", self.selected, *self.pair)
        require_zero_sum("selected roots", self.selected, *self.pair)

    def forget(self) -> RootTriple:
        """The underlying triple, selected root first."""
        return RootTriple(self.selected, self.pair[0], self.pair[1])

    def swapped(self) -> "SelectedRoots":
        return SelectedRoots(self.selected, (self.pair[1], self.pair[0]))

    def pair_product(self) -> complex:
        """(e2 - e1)(e3 - e1) with e1 the selected root."""
        return (self.pair[0] - self.selected) * (self.pair[1] - self.selected)


class SubgroupRank(str, Enum):
    """Rank of the discrete subgroup behind (g2, g3)."""
    RANK2 = "rank2"
    RANK1 = "rank1"
    RANK0 = "rank0"


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used across the library."""
    eps_stop: float = 2.0 ** -52
    max_iter: int = 64
    eps_degenerate: float = 2.0 ** -40
    eps_pole: float = 2.0 ** -48

    def __post_init__(self):
        for name in ("eps_stop", "eps_degenerate", "eps_pole"):
            value = getattr(self, name)
            if not (value > 0 and np.isfinite(value)):
                raise OutOfRangeError(f"{name} must be positive, got {value}", context={name: value})
        if self.max_iter < 1:
            raise OutOfRangeError(f"max_iter must be >= 1, got {self.max_iter}", context={"max_iter": self.max_iter})


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) on y^2 = 4x^3 - g2 x - g3."""
    x: complex
    y: complex

    def __post_init__(self):
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "y", complex(self.y))
        require_finite("curve point", self.x, self.y)


@dataclass(frozen=True)
class WeierstrassValues:
    """(p, dp, zeta, sigma) at one argument; unrequested entries are None."""
    p: Optional[complex] = None
    dp: Optional[complex] = None
    zeta: Optional[complex] = None
    sigma: Optional[complex] = None

    def as_dict(self) -> dict:
        return {"p": self.p, "dp": self.dp, "zeta": self.zeta, "sigma": self.sigma}

    def requested(self) -> dict:
        return {k: v for k, v in self.as_dict().items() if v is not None}


@dataclass(frozen=True)
class ReducedBasis:
    """Two shortest independent periods with Im(omega2/omega1) > 0."""
    omega1: complex
    omega2: complex

    def coordinates(self, z: complex) -> Tuple[float, float]:
        """Real (a, b) with z = a*omega1 + b*omega2."""
        matrix = np.array([
            [self.omega1.real, self.omega2.real],
            [self.omega1.imag, self.omega2.imag]
        ])
        a, b = np.linalg.solve(matrix, np.array([z.real, z.imag]))
        return float(a), float(b)

    def point(self, m: float, n: float) -> complex:
        return m * self.omega1 + n * self.omega2

    @property
    def tau(self) -> complex:
        return self.omega2 / self.omega1


@dataclass(frozen=True)
class QuasiPeriods:
    """eta_k = 2 zeta(omega_k / 2)."""
    eta1: complex
    eta2: complex

    def legendre_residual(self, basis: ReducedBasis) -> complex:
        return self.eta1 * basis.omega2 - self.eta2 * basis.omega1 - 2j * np.pi


FUNCTION_NAMES = ("p", "dp", "zeta", "sigma")


def normalize_functions(functions) -> frozenset:
    """Validate a subset of FUNCTION_NAMES; None means all four."""
    if functions is None:
        return frozenset(FUNCTION_NAMES)
    chosen = frozenset(functions)
    unknown = chosen - set(FUNCTION_NAMES)
    if unknown or not chosen:
        raise OutOfRangeError(
            f"Unknown function selection: {sorted(unknown) or 'empty'}",
            context={"allowed": list(FUNCTION_NAMES)}
        )
    return chosen


def sign_normalize(omega: complex) -> complex:
    """Pick the representative of +-omega with Re > 0, or Re == 0 and Im > 0."""
    if omega.real < 0 or (omega.real == 0 and omega.imag < 0):
        return -omega
    return omega
