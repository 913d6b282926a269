"""
The Landen map on root triples, optimal subgroup selection and iterated chains.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .core.types import (
    EPS,
    Invariants,
    RootTriple,
    SelectedRoots,
    Tolerances,
    sign_normalize,
)
from .core.cubic import invariants_from_roots, order_properly, root_discriminant
from .exceptions import AmbiguousSelectionError, DegenerateCurveError, NoConvergenceError
from .utils.config import resolve_tolerances
from .utils.error_handling import NumericsErrorHandler

logger = logging.getLogger(__name__)


def landen_step(s: SelectedRoots) -> SelectedRoots:
    """
    Roots of the index-2 subgroup attached to the selected root.

    f1 = -e1/2 and the pair is {e1/4 + r, e1/4 - r} with
    16 r^2 = 4 (e1 - e2)(e1 - e3). The member nearer to f1 is obtained from
    (f2 - f1)(f3 - f1) = (e2 - e3)^2 / 16 instead of by subtraction. The
    offset carries no cancellation error; once it drops below the spacing
    of f1 the two roots coincide exactly.
    """
    e1 = s.selected
    e2, e3 = s.pair
    f1 = -e1 / 2
    r = complex(np.sqrt((e1 - e2) * (e1 - e3))) / 2

    offset_plus = 3 * e1 / 4 + r
    offset_minus = 3 * e1 / 4 - r
    gap_sq = (e2 - e3) ** 2

    if abs(offset_plus) >= abs(offset_minus):
        far = e1 / 4 + r
        near = f1 + gap_sq / (16 * offset_plus) if offset_plus != 0 else f1
        return SelectedRoots(f1, (far, near))
    far = e1 / 4 - r
    near = f1 + gap_sq / (16 * offset_minus)
    return SelectedRoots(f1, (near, far))


def _distances_equal(t: RootTriple) -> bool:
    d = sorted((abs(t.e1 - t.e2), abs(t.e1 - t.e3), abs(t.e2 - t.e3)))
    return d[2] - d[0] <= 64 * EPS * max(d[2], t.scale)


def select_optimal(t: RootTriple, strict: bool = False) -> SelectedRoots:
    """
    The root whose distances to the other two both dominate their mutual
    distance, i.e. e1 of the properly ordered arrangement.

    With all three distances equal every choice is optimal; the
    lexicographically smallest root is taken unless strict is set.
    """
    if _distances_equal(t):
        if strict:
            raise AmbiguousSelectionError(
                "All pairwise root distances are equal",
                context={"roots": [str(e) for e in t]}
            )
        logger.debug("Equianharmonic tie, selecting the lexicographically smallest root")
    ordered = order_properly(t)
    return SelectedRoots(ordered.e1, (ordered.e2, ordered.e3))


def gap_ratio(t: RootTriple) -> float:
    """|e2 - e3| / |e1 - e2| of the properly ordered arrangement of t."""
    ordered = order_properly(t)
    spread = abs(ordered.e1 - ordered.e2)
    gap = abs(ordered.e2 - ordered.e3)
    if spread == 0:
        return 0.0 if gap == 0 else float("inf")
    return gap / spread


@dataclass(frozen=True)
class LandenChain:
    """
    Optimal Landen chain of one lattice.

    selections[n-1] is the properly ordered (e1, {e2, e3}) of Gamma_{n-1}
    that step n was built from; steps[n-1] is the triple of Gamma_n with its
    distinguished root (the image of the selected one) first.
    """
    selections: Tuple[SelectedRoots, ...]
    steps: Tuple[SelectedRoots, ...]
    omega: complex
    converged: bool = True

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def initial(self) -> RootTriple:
        return self.selections[0].forget()

    def gap_ratios(self) -> List[float]:
        """Stopping quantity after each step."""
        return [gap_ratio(step.forget()) for step in self.steps]

    def truncated(self, n: int) -> "LandenChain":
        """The first n steps, with the period taken from step n."""
        if not 1 <= n <= self.length:
            raise ValueError(f"truncation length {n} outside 1..{self.length}")
        steps = self.steps[:n]
        return LandenChain(
            selections=self.selections[:n],
            steps=steps,
            omega=limit_period(steps[-1]),
            converged=n == self.length and self.converged
        )


def limit_period(step: SelectedRoots) -> complex:
    """omega = i pi / sqrt(3 e1), sign-normalised."""
    return sign_normalize(1j * np.pi / complex(np.sqrt(3 * step.selected)))


@NumericsErrorHandler.handle_iteration_error(logger, "optimal Landen iteration")
def iterate_optimal(
    t: RootTriple,
    tol: Optional[Tolerances] = None,
    max_steps: Optional[int] = None
) -> LandenChain:
    """
    Apply the Landen map with optimal selection until the two closest roots
    of the current triple satisfy |e2 - e3| <= eps_stop |e1 - e2|.

    max_steps truncates the chain silently; reaching tol.max_iter without
    meeting the threshold raises NoConvergenceError.
    """
    tol = resolve_tolerances(tol)
    ordered = t if t.is_properly_ordered() else order_properly(t)
    if ordered.e2 == ordered.e3 or ordered.e1 == ordered.e2:
        raise DegenerateCurveError(
            "Landen iteration needs three distinct roots",
            context={"roots": [str(e) for e in ordered]}
        )

    selections: List[SelectedRoots] = []
    steps: List[SelectedRoots] = []
    current = SelectedRoots(ordered.e1, (ordered.e2, ordered.e3))
    converged = False
    ratio = float("inf")

    while True:
        step = landen_step(current)
        selections.append(current)
        steps.append(step)
        ratio = gap_ratio(step.forget())
        logger.debug(f"Landen step {len(steps)}: gap ratio {ratio:.3e}")

        if ratio <= tol.eps_stop:
            converged = True
            break
        if max_steps is not None and len(steps) >= max_steps:
            break
        if len(steps) >= tol.max_iter:
            raise NoConvergenceError(
                f"Landen chain did not reach eps_stop={tol.eps_stop:.3e} in {tol.max_iter} steps",
                context={"last_ratio": ratio, "max_iter": tol.max_iter}
            )
        current = select_optimal(step.forget())

    return LandenChain(
        selections=tuple(selections),
        steps=tuple(steps),
        omega=limit_period(steps[-1]),
        converged=converged
    )


@dataclass(frozen=True)
class StepInvariants:
    """Invariants and discriminant of Gamma_n."""
    n: int
    invariants: Invariants
    delta: complex


def step_invariants(s: SelectedRoots) -> Tuple[Invariants, complex]:
    """
    Invariants of the subgroup produced by landen_step(s), from the parent
    roots alone:

        g2 = 3 e1^2 / 4 + (e1 - e2)(e1 - e3)
        g3 = -e1^3 / 8 + (e1 / 2)(e1 - e2)(e1 - e3)
        Delta = (e1 - e2)(e1 - e3)(e2 - e3)^4 / 16
    """
    e1 = s.selected
    e2, e3 = s.pair
    prod = (e1 - e2) * (e1 - e3)
    g2 = 3 * e1 ** 2 / 4 + prod
    g3 = -e1 ** 3 / 8 + e1 / 2 * prod
    delta = prod * (e2 - e3) ** 4 / 16
    return Invariants(g2, g3), delta


def chain_invariant_deltas(chain: LandenChain, include_initial: bool = False) -> List[StepInvariants]:
    """Per-step (g2, g3, Delta) of Gamma_1 .. Gamma_N, optionally with Gamma_0."""
    records: List[StepInvariants] = []
    if include_initial:
        initial = chain.initial
        records.append(StepInvariants(0, invariants_from_roots(initial), root_discriminant(initial)))
    for n, selection in enumerate(chain.selections, start=1):
        inv, delta = step_invariants(selection)
        records.append(StepInvariants(n, inv, delta))
    return records
