"""
Slow reference implementations: truncated lattice sums and brute-force
lattice geometry. Used by the test-suite to cross-check the Landen route.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from .core.types import Invariants, ReducedBasis, WeierstrassValues
from .utils.config import get_settings

logger = logging.getLogger(__name__)

ORDERS = ("raster", "shell")


def half_lattice(basis: ReducedBasis, cutoff: int, order: str = "raster") -> np.ndarray:
    """
    One representative u of each pair {u, -u} with 0 < max(|m|, |n|) <= cutoff.

    order="shell" sorts by |u|; "raster" keeps the (m, n) grid order.
    """
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    m, n = np.meshgrid(np.arange(-cutoff, cutoff + 1), np.arange(-cutoff, cutoff + 1), indexing="ij")
    m, n = m.ravel(), n.ravel()
    keep = (m > 0) | ((m == 0) & (n > 0))
    u = m[keep] * basis.omega1 + n[keep] * basis.omega2
    if order == "shell":
        u = u[np.argsort(np.abs(u), kind="stable")]
    return u.astype(np.complex128)


def _cutoff(cutoff: Optional[int]) -> int:
    return cutoff if cutoff is not None else get_settings().oracle_cutoff


def oracle_weierstrass(
    basis: ReducedBasis,
    z: complex,
    cutoff: Optional[int] = None,
    order: str = "raster"
) -> WeierstrassValues:
    """
    Defining series for p, p', zeta and the product for sigma, with u and -u
    summed together so the odd tail terms cancel. cutoff defaults to the
    configured oracle_cutoff.
    """
    z = complex(z)
    u = half_lattice(basis, _cutoff(cutoff), order)
    zm = z - u
    zp = z + u
    inv_u2 = 1 / u ** 2

    p = 1 / z ** 2 + np.sum(1 / zm ** 2 + 1 / zp ** 2 - 2 * inv_u2)
    dp = -2 / z ** 3 - 2 * np.sum(1 / zm ** 3 + 1 / zp ** 3)
    zeta = 1 / z + np.sum(1 / zm + 1 / zp + 2 * z * inv_u2)
    w = z / u
    log_sigma = np.sum(np.log(1 - w) + np.log(1 + w) + w ** 2)
    sigma = z * np.exp(log_sigma)
    logger.debug(f"Lattice-sum oracle over {2 * u.size} points at z={z}")
    return WeierstrassValues(complex(p), complex(dp), complex(zeta), complex(sigma))


def oracle_invariants(basis: ReducedBasis, cutoff: Optional[int] = None) -> Invariants:
    """g2 = sum 60 u^-4, g3 = sum 140 u^-6 over the truncated lattice."""
    u = half_lattice(basis, _cutoff(cutoff), order="shell")
    # smallest terms first
    g2 = 120 * np.sum((1 / u ** 4)[::-1])
    g3 = 280 * np.sum((1 / u ** 6)[::-1])
    return Invariants(complex(g2), complex(g3))


def oracle_shortest_vectors(omega1: complex, omega2: complex, k: int = 20) -> Tuple[complex, complex]:
    """
    Shortest nonzero m omega1 + n omega2 with |m|, |n| <= k, and the shortest
    one independent of it.
    """
    m, n = np.meshgrid(np.arange(-k, k + 1), np.arange(-k, k + 1), indexing="ij")
    v = (m.ravel() * complex(omega1) + n.ravel() * complex(omega2)).astype(np.complex128)
    v = v[np.abs(v) > 0]
    lengths = np.abs(v)
    shortest = v[np.argmin(lengths)]

    cross = np.abs((v * np.conj(shortest)).imag)
    independent = cross > 1e-12 * lengths * abs(shortest)
    candidates = v[independent]
    second = candidates[np.argmin(np.abs(candidates))]
    return complex(shortest), complex(second)
