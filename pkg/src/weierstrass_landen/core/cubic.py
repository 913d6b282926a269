"""
Roots of 4x^3 - g2 x - g3, their proper ordering, and the invariants they define.
"""

import itertools
import logging
from typing import Tuple

import numpy as np

from .types import Invariants, RootTriple, require_finite

logger = logging.getLogger(__name__)

# primitive cube root of unity
_CUBE_ROOT_OF_UNITY = complex(-0.5, np.sqrt(3.0) / 2.0)


def _cubic_value(x: complex, inv: Invariants) -> complex:
    return 4 * x ** 3 - inv.g2 * x - inv.g3


def _newton_polish(x: complex, inv: Invariants) -> complex:
    """One Newton step, kept only if it lowers the residual."""
    derivative = 12 * x * x - inv.g2
    if derivative == 0:
        return x
    candidate = x - _cubic_value(x, inv) / derivative
    if not np.isfinite(candidate):
        return x
    if abs(_cubic_value(candidate, inv)) <= abs(_cubic_value(x, inv)):
        return complex(candidate)
    return x


def solve_cubic(inv: Invariants) -> RootTriple:
    """
    Roots of 4x^3 - g2 x - g3 by Cardano's formula with a Newton polish.

    The polynomial is already depressed: x^3 + p x + q with p = -g2/4,
    q = -g3/4. The square root sign is chosen to maximise |u^3| so the
    cube root never suffers cancellation. The returned roots sum to zero
    up to the final mean correction.
    """
    require_finite("invariants", inv.g2, inv.g3)
    p = -inv.g2 / 4
    q = -inv.g3 / 4

    disc = complex(np.sqrt(complex(q * q / 4 + p ** 3 / 27)))
    u3_plus = -q / 2 + disc
    u3_minus = -q / 2 - disc
    u3 = u3_plus if abs(u3_plus) >= abs(u3_minus) else u3_minus

    if u3 == 0:
        # p = q = 0: triple root at the origin
        return RootTriple(0j, 0j, 0j)

    u = complex(np.power(np.complex128(u3), 1.0 / 3.0))
    roots = []
    for k in range(3):
        uk = u * _CUBE_ROOT_OF_UNITY ** k
        roots.append(uk - p / (3 * uk))

    roots = [_newton_polish(x, inv) for x in roots]

    # sum-zero enforcement
    mean = sum(roots) / 3
    roots = [x - mean for x in roots]
    require_finite("cubic roots", *roots)
    return RootTriple(*roots)


def _pair_distances(e1: complex, e2: complex, e3: complex) -> Tuple[float, float, float]:
    return abs(e2 - e3), abs(e1 - e3), abs(e1 - e2)


def _lexicographic_key(triple: Tuple[complex, complex, complex]):
    e1, e2, _ = triple
    return (e1.real, e1.imag, e2.real, e2.imag)


def order_properly(t: RootTriple) -> RootTriple:
    """
    Permutation of t with |e2 - e3| <= |e1 - e3| <= |e1 - e2|.

    All six permutations are checked; among admissible ones the smallest by
    (Re e1, Im e1, Re e2, Im e2) wins.
    """
    admissible = []
    for perm in itertools.permutations(t.as_tuple()):
        d23, d13, d12 = _pair_distances(*perm)
        if d23 <= d13 <= d12:
            admissible.append(perm)
    # the closest pair always yields an admissible permutation
    best = min(admissible, key=_lexicographic_key)
    return RootTriple(*best)


def order_with_first(t: RootTriple) -> RootTriple:
    """
    Keep t.e1 first and order the other two so that the one nearer to e1
    comes last; ties resolved lexicographically.
    """
    a, b = t.e2, t.e3
    da, db = abs(t.e1 - a), abs(t.e1 - b)
    if da < db or (da == db and (a.real, a.imag) > (b.real, b.imag)):
        a, b = b, a
    return RootTriple(t.e1, a, b)


def invariants_from_roots(t: RootTriple) -> Invariants:
    """g2 = 2(e1^2 + e2^2 + e3^2), g3 = 4 e1 e2 e3."""
    g2 = 2 * (t.e1 ** 2 + t.e2 ** 2 + t.e3 ** 2)
    g3 = 4 * t.e1 * t.e2 * t.e3
    return Invariants(g2, g3)


def discriminant(inv: Invariants) -> complex:
    """g2^3 - 27 g3^2."""
    require_finite("invariants", inv.g2, inv.g3)
    return inv.g2 ** 3 - 27 * inv.g3 ** 2


def root_discriminant(t: RootTriple) -> complex:
    """16 (e1-e2)^2 (e2-e3)^2 (e1-e3)^2, free of the g2^3 - 27 g3^2 cancellation."""
    return 16 * ((t.e1 - t.e2) * (t.e2 - t.e3) * (t.e1 - t.e3)) ** 2
