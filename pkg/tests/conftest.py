"""
Shared fixtures.
"""

import pytest

from src.weierstrass_landen.core.types import Invariants, Tolerances
from src.weierstrass_landen.functions import LatticeFunctions
from tests.reference_data import REFERENCE_INVARIANTS


@pytest.fixture
def tolerances() -> Tolerances:
    return Tolerances()


@pytest.fixture
def reference_invariants() -> Invariants:
    return REFERENCE_INVARIANTS


@pytest.fixture
def reference_lattice(tolerances) -> LatticeFunctions:
    """Chain, basis and quasi-periods of the (3+i, 2) lattice."""
    return LatticeFunctions(REFERENCE_INVARIANTS, tolerances)


@pytest.fixture
def square_lattice(tolerances) -> LatticeFunctions:
    return LatticeFunctions(Invariants(4, 0), tolerances)
