"""
Tests for exception codes, the error decorators and JSON error records.
"""

from unittest.mock import MagicMock

import pytest

from src.weierstrass_landen.exceptions import (
    EXIT_CODES,
    NoConvergenceError,
    NonFiniteError,
    OffCurveError,
    WeierstrassError,
    get_exit_code,
    get_user_friendly_message,
)
from src.weierstrass_landen import landen
from src.weierstrass_landen.core.types import RootTriple
from src.weierstrass_landen.utils.error_handling import ErrorHandler, NumericsErrorHandler, error_handler


class TestExceptions:
    def test_codes_and_exit_status(self):
        e = OffCurveError(context={"x": 1})
        assert e.error_code == "OFF_CURVE"
        assert get_exit_code(e.error_code) == 5
        assert str(e) == "Point is not on the curve"

    def test_unknown_code(self):
        assert get_exit_code(None) == 1
        assert get_exit_code("SOMETHING_ELSE") == 1
        assert get_user_friendly_message("SOMETHING_ELSE") == get_user_friendly_message("GENERAL_ERROR")

    def test_exit_codes(self):
        assert EXIT_CODES["PARSE_ERROR"] == 2
        assert EXIT_CODES["NON_FINITE"] == 3
        assert EXIT_CODES["NO_CONVERGENCE"] == 4


class TestDecorators:
    def test_library_errors_pass_through(self):
        logger = MagicMock()

        @ErrorHandler.handle_sync_error("test operation", logger)
        def failing():
            raise OffCurveError("not here")

        with pytest.raises(OffCurveError):
            failing()
        logger.debug.assert_called_once()

    def test_arithmetic_errors_are_wrapped(self):
        logger = MagicMock()

        @NumericsErrorHandler.handle_evaluation_error(logger, "division")
        def divide():
            return 1 / 0

        with pytest.raises(NonFiniteError) as excinfo:
            divide()
        assert excinfo.value.context["error_type"] == "ZeroDivisionError"
        logger.error.assert_called_once()

    def test_iteration_preset(self):
        logger = MagicMock()

        @NumericsErrorHandler.handle_iteration_error(logger)
        def overflow():
            raise OverflowError("too big")

        with pytest.raises(NoConvergenceError):
            overflow()

    def test_landen_iteration_wraps_overflow(self, monkeypatch):
        """An arithmetic failure inside the chain surfaces as a library error."""
        def overflowing_step(s):
            raise OverflowError("Numerical result out of range")

        monkeypatch.setattr(landen, "landen_step", overflowing_step)
        with pytest.raises(NoConvergenceError) as excinfo:
            landen.iterate_optimal(RootTriple(1, 0, -1))
        assert excinfo.value.context["error_type"] == "OverflowError"

    def test_return_value(self):
        @ErrorHandler.handle_sync_error("identity", MagicMock())
        def identity(x):
            return x

        assert identity(3) == 3


class TestErrorResponse:
    def test_library_error(self):
        e = NoConvergenceError("stuck", context={"last_ratio": 0.5, "z": 1 + 2j})
        response = error_handler.create_error_response(e, "chain", MagicMock(), include_details=True)
        assert response["success"] is False
        assert response["error_code"] == "NO_CONVERGENCE"
        assert response["exit_code"] == 4
        assert response["context"] == {"last_ratio": 0.5, "z": {"re": 1.0, "im": 2.0}}

    def test_details_hidden_by_default(self):
        response = error_handler.create_error_response(WeierstrassError("x"), "op", MagicMock())
        assert "context" not in response

    def test_unexpected_error(self):
        response = error_handler.create_error_response(RuntimeError("boom"), "op", MagicMock())
        assert response["error_code"] == "GENERAL_ERROR"
        assert response["exit_code"] == 1

    def test_plain_message(self):
        response = error_handler.create_error_response("went wrong", "op", MagicMock())
        assert response["message"] == "went wrong"
