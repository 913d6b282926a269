"""
The channel-domain conformal map Q(z) built from sigma of a rectangular
lattice, and the one-parameter family of curves it is posed on.

    Q(z) = D z + (h-/pi) log(sigma(z - z-) / sigma(z + z-))
               - (h+/pi) log(sigma(z - z+) / sigma(z + z+)) - i (h- - h+)

maps the rectangle 0, omega2/2, (omega2 - omega1)/2, -omega1/2 onto the
domain, with omega1 > 0 and omega2 / i > 0.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from .core.types import Invariants, ReducedBasis, RootTriple, SubgroupRank, Tolerances
from .core.cubic import invariants_from_roots
from .exceptions import DegenerateCurveError, InputParseError, LogSingularityError, OutOfRangeError
from .functions import LatticeFunctions
from .utils.config import resolve_tolerances
from .utils.formatting import complex_from_record

logger = logging.getLogger(__name__)

GAMMA_LIMIT = 1.0 / 6.0
# |z -+ z+-| below this times |omega1| counts as hitting a zero of sigma
LOG_SINGULARITY_RTOL = 1e-10
IMAGINARY_RTOL = 1e-12
# params invariants further than this from the supplied roots draw a warning
INVARIANTS_RTOL = 1e-10


def curve_from_gamma(gamma: float) -> RootTriple:
    """
    e1 = gamma - 1/2, e2 = -2 gamma, e3 = gamma + 1/2 for -1/6 < gamma < 1/6.

    e2 is taken as -(e1 + e3), which is exact in binary64 on this range, so
    the three roots sum to exactly zero.
    """
    gamma = float(gamma)
    if not np.isfinite(gamma) or not -GAMMA_LIMIT < gamma < GAMMA_LIMIT:
        raise OutOfRangeError(
            f"gamma must lie in (-1/6, 1/6), got {gamma}",
            context={"gamma": gamma}
        )
    e1 = gamma - 0.5
    e3 = gamma + 0.5
    return RootTriple(complex(e1), complex(-(e1 + e3)), complex(e3))


def _is_imaginary(w: complex) -> bool:
    return abs(w.real) <= IMAGINARY_RTOL * abs(w)


@dataclass(frozen=True)
class ConformalParams:
    """Parameters of Q: D and z+- purely imaginary, 0 < z-/i < z+/i."""
    D: complex
    zplus: complex
    zminus: complex
    hplus: float
    hminus: float
    inv: Invariants

    def __post_init__(self):
        for name in ("D", "zplus", "zminus"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "hplus", float(self.hplus))
        object.__setattr__(self, "hminus", float(self.hminus))

        problems = []
        if not _is_imaginary(self.D):
            problems.append("D must be purely imaginary")
        if not (_is_imaginary(self.zplus) and _is_imaginary(self.zminus)):
            problems.append("zplus and zminus must be purely imaginary")
        if not 0 < self.zminus.imag < self.zplus.imag:
            problems.append("need 0 < Im(zminus) < Im(zplus)")
        if problems:
            raise OutOfRangeError("Invalid conformal parameters: " + ", ".join(problems), context={"errors": problems})


def params_from_record(record: Dict[str, Any]) -> ConformalParams:
    """Parse the flat JSON object {D, zplus, zminus, hplus, hminus, g2, g3}."""
    if not isinstance(record, dict):
        raise InputParseError("Conformal parameters must be a JSON object")
    missing = [k for k in ("D", "zplus", "zminus", "hplus", "hminus", "g2", "g3") if k not in record]
    if missing:
        raise InputParseError(f"Missing conformal parameters: {', '.join(missing)}", context={"missing": missing})

    heights = {}
    for name in ("hplus", "hminus"):
        value = complex_from_record(record[name], name)
        if value.imag != 0:
            raise InputParseError(f"Field '{name}' must be real", context={"field": name})
        heights[name] = value.real

    return ConformalParams(
        D=complex_from_record(record["D"], "D"),
        zplus=complex_from_record(record["zplus"], "zplus"),
        zminus=complex_from_record(record["zminus"], "zminus"),
        hplus=heights["hplus"],
        hminus=heights["hminus"],
        inv=Invariants(complex_from_record(record["g2"], "g2"), complex_from_record(record["g3"], "g3")),
    )


def rectangular_periods(basis: ReducedBasis) -> Tuple[complex, complex]:
    """(omega1, omega2) of a rectangular lattice with omega1 > 0 and omega2 / i > 0."""
    real_like = [w for w in (basis.omega1, basis.omega2) if abs(w.imag) <= IMAGINARY_RTOL * abs(w)]
    imag_like = [w for w in (basis.omega1, basis.omega2) if _is_imaginary(w)]
    if len(real_like) != 1 or len(imag_like) != 1:
        raise OutOfRangeError(
            "Lattice is not rectangular",
            context={"omega1": basis.omega1, "omega2": basis.omega2}
        )
    return complex(abs(real_like[0].real)), complex(0, abs(imag_like[0].imag))


def rectangle_boundary(basis: ReducedBasis, k: int) -> List[complex]:
    """
    k samples, evenly spaced in arc length, along the closed boundary
    0 -> omega2/2 -> (omega2 - omega1)/2 -> -omega1/2 -> 0.
    """
    if k < 1:
        raise OutOfRangeError(f"need at least one sample, got {k}", context={"k": k})
    omega1, omega2 = rectangular_periods(basis)
    corners = [0j, omega2 / 2, (omega2 - omega1) / 2, -omega1 / 2, 0j]
    lengths = np.array([abs(b - a) for a, b in zip(corners, corners[1:])])
    edges = np.concatenate(([0.0], np.cumsum(lengths)))
    samples = []
    for t in np.arange(k) * edges[-1] / k:
        i = min(int(np.searchsorted(edges, t, side="right")) - 1, 3)
        frac = (t - edges[i]) / lengths[i]
        samples.append(complex(corners[i] + frac * (corners[i + 1] - corners[i])))
    return samples


def _warn_on_mismatch(inv: Invariants, roots: RootTriple) -> None:
    """The roots win over params.inv; say so when the two disagree."""
    expected = invariants_from_roots(roots)
    scale = max(roots.scale, 1e-300)
    g2_off = abs(inv.g2 - expected.g2) / scale ** 2
    g3_off = abs(inv.g3 - expected.g3) / scale ** 3
    if max(g2_off, g3_off) > INVARIANTS_RTOL:
        logger.warning(
            f"Invariants in the parameters ({inv.g2}, {inv.g3}) differ from those of the "
            f"supplied roots ({expected.g2}, {expected.g3}); using the roots"
        )


class ConformalMap:
    """Q for fixed parameters, with the lattice data computed once."""

    def __init__(self, params: ConformalParams, tol: Optional[Tolerances] = None, roots: Optional[RootTriple] = None):
        self.params = params
        self.tol = resolve_tolerances(tol)
        if roots is not None:
            _warn_on_mismatch(params.inv, roots)
        self.lattice = (
            LatticeFunctions.from_roots(roots, self.tol) if roots is not None
            else LatticeFunctions(params.inv, self.tol)
        )
        if self.lattice.rank == SubgroupRank.RANK0:
            raise DegenerateCurveError("Q needs a lattice or a rank1 group", context={"rank": "rank0"})
        if self.lattice.rank == SubgroupRank.RANK2:
            _, omega2 = rectangular_periods(self.lattice.basis)
            if not params.zplus.imag < omega2.imag:
                raise OutOfRangeError(
                    "need Im(zplus) < Im(omega2)",
                    context={"zplus": params.zplus, "omega2": omega2}
                )

    def _sigma(self, w: complex) -> complex:
        if self.lattice.lattice_distance(w) <= LOG_SINGULARITY_RTOL * self.lattice.length_scale:
            raise LogSingularityError(
                "Q is singular at a zero of sigma",
                context={"argument": w}
            )
        return self.lattice.reduced_values(w, {"sigma"}).sigma

    def log_terms(self, z: complex) -> Tuple[complex, complex]:
        """Principal logs of sigma(z - z-)/sigma(z + z-) and sigma(z - z+)/sigma(z + z+)."""
        p = self.params
        q_minus = self._sigma(z - p.zminus) / self._sigma(z + p.zminus)
        q_plus = self._sigma(z - p.zplus) / self._sigma(z + p.zplus)
        return complex(np.log(q_minus)), complex(np.log(q_plus))

    def combine(self, z: complex, log_minus: complex, log_plus: complex) -> complex:
        p = self.params
        return (
            p.D * z
            + p.hminus / np.pi * log_minus
            - p.hplus / np.pi * log_plus
            - 1j * (p.hminus - p.hplus)
        )

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        return complex(self.combine(z, *self.log_terms(z)))

    def trace(self, zs: Iterable[complex]) -> List[complex]:
        """Q along a path, each log unwrapped against the previous sample."""
        out = []
        previous = None
        for z in zs:
            z = complex(z)
            log_minus, log_plus = self.log_terms(z)
            if previous is not None:
                log_minus = _unwrap(log_minus, previous[0])
                log_plus = _unwrap(log_plus, previous[1])
            previous = (log_minus, log_plus)
            out.append(complex(self.combine(z, log_minus, log_plus)))
        logger.debug(f"Traced Q over {len(out)} samples")
        return out


def _unwrap(value: complex, reference: complex) -> complex:
    turns = np.round((reference.imag - value.imag) / (2 * np.pi))
    return value + 2j * np.pi * turns


def eval_Q(params: ConformalParams, z: complex, tol: Optional[Tolerances] = None) -> complex:
    """Q(z) with one principal log per sigma quotient."""
    return ConformalMap(params, tol)(z)


def trace_Q(params: ConformalParams, zs: Iterable[complex], tol: Optional[Tolerances] = None) -> List[complex]:
    """Q along a sample path with the logs continued by 2 pi unwrapping."""
    return ConformalMap(params, tol).trace(zs)
