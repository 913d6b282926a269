"""
Custom exception classes for the Weierstrass/Landen library.
"""

from typing import Optional, Dict, Any


class WeierstrassError(Exception):
    """Base exception for all library errors."""

    def __init__(self, message: str, error_code: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.context = context or {}

    def __str__(self) -> str:
        return self.message


class NonFiniteError(WeierstrassError):
    """NaN or infinite input or intermediate value."""

    def __init__(self, message: str = "Non-finite value encountered", **kwargs):
        super().__init__(message, error_code="NON_FINITE", **kwargs)


class NoConvergenceError(WeierstrassError):
    """An iteration hit its cap without meeting the stopping rule."""

    def __init__(self, message: str = "Iteration did not converge", **kwargs):
        super().__init__(message, error_code="NO_CONVERGENCE", **kwargs)


class DegenerateCurveError(WeierstrassError):
    """The operation needs a different subgroup rank than the input has."""

    def __init__(self, message: str = "Curve has the wrong rank for this operation", **kwargs):
        super().__init__(message, error_code="DEGENERATE_CURVE", **kwargs)


class InconsistentInvariantsError(WeierstrassError):
    """Invariants that do not belong to any subgroup of the claimed rank."""

    def __init__(self, message: str = "Invariants are inconsistent", **kwargs):
        super().__init__(message, error_code="INCONSISTENT_INVARIANTS", **kwargs)


class PoleProximityError(WeierstrassError):
    """Argument too close to a lattice point."""

    def __init__(self, message: str = "Argument is too close to a pole", **kwargs):
        super().__init__(message, error_code="POLE_PROXIMITY", **kwargs)


class OffCurveError(WeierstrassError):
    """Point does not satisfy y^2 = 4x^3 - g2 x - g3."""

    def __init__(self, message: str = "Point is not on the curve", **kwargs):
        super().__init__(message, error_code="OFF_CURVE", **kwargs)


class LogSingularityError(WeierstrassError):
    """Logarithm argument at a zero or pole of a sigma quotient."""

    def __init__(self, message: str = "Logarithmic singularity", **kwargs):
        super().__init__(message, error_code="LOG_SINGULARITY", **kwargs)


class OutOfRangeError(WeierstrassError):
    """Parameter outside its admissible interval."""

    def __init__(self, message: str = "Parameter out of range", **kwargs):
        super().__init__(message, error_code="OUT_OF_RANGE", **kwargs)


class AmbiguousSelectionError(WeierstrassError):
    """No strictly optimal root exists."""

    def __init__(self, message: str = "Root selection is ambiguous", **kwargs):
        super().__init__(message, error_code="AMBIGUOUS", **kwargs)


class ConfigurationError(WeierstrassError):
    """Invalid settings."""

    def __init__(self, message: str = "Configuration is invalid", **kwargs):
        super().__init__(message, error_code="CONFIG_ERROR", **kwargs)


class InputParseError(WeierstrassError):
    """Malformed command-line or file input."""

    def __init__(self, message: str = "Could not parse input", **kwargs):
        super().__init__(message, error_code="PARSE_ERROR", **kwargs)


# Error code to message mapping
ERROR_MESSAGES = {
    "NON_FINITE": "Inputs must be finite complex numbers.",
    "NO_CONVERGENCE": "The Landen iteration did not converge; the curve may be pathological or the tolerance too tight.",
    "DEGENERATE_CURVE": "The curve is degenerate for this operation (check its rank).",
    "INCONSISTENT_INVARIANTS": "g2 and g3 do not describe a consistent degenerate subgroup.",
    "POLE_PROXIMITY": "The argument is too close to a lattice point.",
    "OFF_CURVE": "The point does not lie on the curve.",
    "LOG_SINGULARITY": "The argument is too close to a zero of a sigma quotient.",
    "OUT_OF_RANGE": "A parameter is outside its admissible range.",
    "AMBIGUOUS": "Several roots are equally optimal.",
    "CONFIG_ERROR": "The configuration is invalid. Check WEIERSTRASS_* environment variables.",
    "PARSE_ERROR": "The input could not be parsed.",
    "GENERAL_ERROR": "An unexpected error occurred."
}

# CLI exit status per error code
EXIT_CODES = {
    "PARSE_ERROR": 2,
    "NON_FINITE": 3,
    "NO_CONVERGENCE": 4,
    "DEGENERATE_CURVE": 5,
    "INCONSISTENT_INVARIANTS": 5,
    "POLE_PROXIMITY": 5,
    "OFF_CURVE": 5,
    "LOG_SINGULARITY": 5,
    "OUT_OF_RANGE": 5,
    "AMBIGUOUS": 5,
    "CONFIG_ERROR": 1,
    "GENERAL_ERROR": 1
}


def get_user_friendly_message(error_code: str) -> str:
    """Return the user-facing message for an error code."""
    return ERROR_MESSAGES.get(error_code, ERROR_MESSAGES["GENERAL_ERROR"])


def get_exit_code(error_code: Optional[str]) -> int:
    """Return the CLI exit status for an error code."""
    return EXIT_CODES.get(error_code or "GENERAL_ERROR", EXIT_CODES["GENERAL_ERROR"])
