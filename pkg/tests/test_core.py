"""
Tests for value types, the cubic solver, proper ordering and classification.
"""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings

from src.weierstrass_landen.core.types import (
    Invariants,
    ReducedBasis,
    RootTriple,
    SelectedRoots,
    SubgroupRank,
    Tolerances,
    WeierstrassValues,
    normalize_functions,
    sign_normalize,
)
from src.weierstrass_landen.core.cubic import (
    discriminant,
    invariants_from_roots,
    order_properly,
    order_with_first,
    root_discriminant,
    solve_cubic,
)
from src.weierstrass_landen.core.classify import classify, classify_roots
from src.weierstrass_landen.exceptions import NonFiniteError, OutOfRangeError
from tests.strategies import root_triples, scale_factors


def _matched_distance(found, expected) -> float:
    """Largest distance after pairing each expected root with its nearest found root."""
    remaining = list(found)
    worst = 0.0
    for e in expected:
        i = min(range(len(remaining)), key=lambda k: abs(remaining[k] - e))
        worst = max(worst, abs(remaining.pop(i) - e))
    return worst


class TestSolveCubic:
    """Roots of 4x^3 - g2 x - g3."""

    def test_square_lattice_roots(self):
        """(4, 0) has roots 1, 0, -1."""
        roots = solve_cubic(Invariants(4, 0))
        assert _matched_distance(roots, [1, 0, -1]) < 1e-14

    def test_triple_root(self):
        roots = solve_cubic(Invariants(0, 0))
        assert roots.as_tuple() == (0j, 0j, 0j)

    def test_reference_curve_against_mpmath(self):
        """(3+i, 2) roots agree with an extended-precision solver."""
        expected = [complex(r) for r in mpmath.polyroots([4, 0, -(3 + 1j), -2], extraprec=60)]
        roots = solve_cubic(Invariants(3 + 1j, 2))
        assert _matched_distance(roots, expected) < 1e-14

    @settings(max_examples=100, deadline=None)
    @given(root_triples())
    def test_recovers_roots_from_invariants(self, t):
        roots = solve_cubic(invariants_from_roots(t))
        assert _matched_distance(roots, list(t)) < 1e-12
        assert abs(roots.sum_residual) <= 1e-14

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteError):
            Invariants(float("nan"), 0)


class TestOrdering:
    """Proper ordering and ordering with a fixed first root."""

    def test_square_lattice_ordering(self):
        """The isolated root comes first, the closest pair last."""
        t = order_properly(RootTriple(0, 1, -1))
        assert t.is_properly_ordered()
        assert t.e1 in (1, -1)
        assert t.e3 == 0

    def test_lexicographic_tie_break(self):
        t = order_properly(RootTriple(0, 1, -1))
        assert t.as_tuple() == (-1 + 0j, 1 + 0j, 0j)

    @settings(max_examples=100, deadline=None)
    @given(root_triples())
    def test_ordering_is_a_permutation(self, t):
        ordered = order_properly(t)
        assert ordered.is_properly_ordered()
        assert sorted(ordered, key=lambda w: (w.real, w.imag)) == sorted(t, key=lambda w: (w.real, w.imag))

    @settings(max_examples=50, deadline=None)
    @given(root_triples())
    def test_ordering_is_idempotent(self, t):
        once = order_properly(t)
        assert order_properly(once) == once

    def test_order_with_first_keeps_first(self):
        t = order_with_first(RootTriple(1, 0.9, -1.9))
        assert t.e1 == 1
        assert t.e3 == 0.9


class TestInvariants:
    """Root relations and the discriminant."""

    def test_reference_discriminant(self):
        assert discriminant(Invariants(3 + 1j, 2)) == complex(-90, 26)

    @settings(max_examples=100, deadline=None)
    @given(root_triples())
    def test_discriminant_forms_agree(self, t):
        inv = invariants_from_roots(t)
        scale = max(abs(inv.g2) ** 3, 27 * abs(inv.g3) ** 2)
        assert abs(discriminant(inv) - root_discriminant(t)) <= 1e-12 * scale

    @settings(max_examples=50, deadline=None)
    @given(root_triples(), scale_factors)
    def test_scaling(self, t, lam):
        """Roots of lam * Gamma are the roots of Gamma divided by lam^2."""
        inv = invariants_from_roots(t).scaled(lam)
        expected = [e / lam ** 2 for e in t]
        assert _matched_distance(solve_cubic(inv), expected) < 1e-11 * max(1.0, abs(lam) ** -2)

    def test_curve_residual(self):
        inv = Invariants(3 + 1j, 2)
        y2 = -1 - 1j
        assert inv.curve_residual(1, complex(np.sqrt(y2))) == pytest.approx(0, abs=1e-15)


class TestClassify:
    """Rank classification thresholds."""

    def test_rank0(self):
        assert classify(Invariants(0, 0)) == SubgroupRank.RANK0

    def test_rank1(self):
        inv = Invariants(4 * math.pi ** 4 / 3, 8 * math.pi ** 6 / 27)
        assert classify(inv) == SubgroupRank.RANK1

    def test_rank2(self):
        assert classify(Invariants(3 + 1j, 2)) == SubgroupRank.RANK2
        assert classify(Invariants(4, 0)) == SubgroupRank.RANK2

    def test_threshold_follows_tolerances(self):
        """A curve just off degeneration flips rank with eps_degenerate."""
        t = RootTriple(-1 / 3 + 1e-7, -1 / 3 - 1e-7, 2 / 3)
        assert classify_roots(t) == SubgroupRank.RANK1
        assert classify_roots(t, Tolerances(eps_degenerate=1e-30)) == SubgroupRank.RANK2

    def test_classify_roots_matches_classify(self):
        t = RootTriple(1, 0, -1)
        assert classify_roots(t) == classify(invariants_from_roots(t))


class TestTypes:
    """Small behaviours of the value types."""

    def test_sign_normalize(self):
        assert sign_normalize(-2 + 1j) == 2 - 1j
        assert sign_normalize(-1j) == 1j
        assert sign_normalize(3 - 5j) == 3 - 5j

    def test_selected_roots(self):
        s = SelectedRoots(1, (0, -1))
        assert s.forget() == RootTriple(1, 0, -1)
        assert s.swapped().pair == (-1 + 0j, 0j)
        assert s.pair_product() == (0 - 1) * (-1 - 1)

    def test_roots_must_sum_to_zero(self):
        with pytest.raises(OutOfRangeError) as excinfo:
            RootTriple(1, 1, 1)
        assert excinfo.value.context["residual"] == pytest.approx(3.0)
        with pytest.raises(OutOfRangeError):
            SelectedRoots(1, (0, -1 + 1e-9))

    def test_sum_tolerance_scales_with_roots(self):
        """The residual allowance is relative to the largest root."""
        t = RootTriple(1e8, -1e8, 1e-9)
        assert t.sum_residual == 1e-9
        with pytest.raises(OutOfRangeError):
            RootTriple(1, -1, 1e-9)

    def test_tolerances_validation(self):
        with pytest.raises(OutOfRangeError):
            Tolerances(eps_stop=0)
        with pytest.raises(OutOfRangeError):
            Tolerances(max_iter=0)

    def test_normalize_functions(self):
        assert normalize_functions(None) == frozenset({"p", "dp", "zeta", "sigma"})
        assert normalize_functions(["p"]) == frozenset({"p"})
        with pytest.raises(OutOfRangeError):
            normalize_functions(["q"])
        with pytest.raises(OutOfRangeError):
            normalize_functions([])

    def test_values_requested(self):
        v = WeierstrassValues(p=1j)
        assert v.requested() == {"p": 1j}

    def test_basis_coordinates(self):
        basis = ReducedBasis(2, 1 + 3j)
        a, b = basis.coordinates(basis.point(0.25, -0.5))
        assert a == pytest.approx(0.25)
        assert b == pytest.approx(-0.5)
