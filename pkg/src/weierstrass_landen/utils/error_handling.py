"""
Error handling utilities.
"""

import logging
import functools
from typing import Callable, Type, Union
from datetime import datetime

from ..exceptions import (
    WeierstrassError,
    NonFiniteError,
    NoConvergenceError,
    get_user_friendly_message,
    get_exit_code
)


class ErrorHandler:
    """Error handling helpers for library entry points."""

    @staticmethod
    def handle_sync_error(
        operation: str,
        logger: logging.Logger,
        default_exception: Type[WeierstrassError] = WeierstrassError
    ):
        """Decorator: log library errors and wrap unexpected ones."""
        def decorator(func: Callable) -> Callable:
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    return func(*args, **kwargs)
                except WeierstrassError as e:
                    logger.debug(f"Error in {operation}: {e.message}", extra={
                        "error_code": e.error_code,
                        "context": e.context,
                        "operation": operation
                    })
                    raise
                except (ZeroDivisionError, FloatingPointError, OverflowError, ValueError) as e:
                    logger.error(f"Unexpected error in {operation}: {str(e)}", extra={
                        "operation": operation,
                        "error_type": type(e).__name__
                    })
                    raise default_exception(
                        f"{operation} failed: {str(e)}",
                        context={"operation": operation, "error_type": type(e).__name__}
                    ) from e
            return wrapper
        return decorator

    @staticmethod
    def create_error_response(
        exception: Union[Exception, str],
        operation: str,
        logger: logging.Logger,
        include_details: bool = False
    ) -> dict:
        """JSON-ready error record with the CLI exit status."""
        timestamp = datetime.now().isoformat()

        if isinstance(exception, WeierstrassError):
            error_code = exception.error_code
            context = _jsonable(exception.context) if include_details else {}

            logger.error(f"Error in {operation}: {exception.message}", extra={
                "error_code": error_code,
                "context": context,
                "operation": operation
            })

            return {
                "success": False,
                "error_code": error_code,
                "message": exception.message,
                "hint": get_user_friendly_message(error_code),
                "exit_code": get_exit_code(error_code),
                "timestamp": timestamp,
                "operation": operation,
                **({"context": context} if include_details else {})
            }

        elif isinstance(exception, Exception):
            error_code = "GENERAL_ERROR"

            logger.error(f"Unexpected error in {operation}: {str(exception)}", extra={
                "operation": operation,
                "error_type": type(exception).__name__
            })

            return {
                "success": False,
                "error_code": error_code,
                "message": get_user_friendly_message(error_code),
                "exit_code": get_exit_code(error_code),
                "timestamp": timestamp,
                "operation": operation,
                **({"details": str(exception)} if include_details else {})
            }

        else:
            return {
                "success": False,
                "error_code": "GENERAL_ERROR",
                "message": str(exception),
                "exit_code": get_exit_code("GENERAL_ERROR"),
                "timestamp": timestamp,
                "operation": operation
            }


def _jsonable(context: dict) -> dict:
    out = {}
    for key, value in (context or {}).items():
        if isinstance(value, complex):
            out[key] = {"re": value.real, "im": value.imag}
        elif isinstance(value, (int, float, str, bool, list, dict)) or value is None:
            out[key] = value
        else:
            out[key] = str(value)
    return out


class NumericsErrorHandler:
    """Presets for the numerical entry points."""

    @staticmethod
    def handle_iteration_error(logger: logging.Logger, operation: str = "Landen iteration"):
        return ErrorHandler.handle_sync_error(operation, logger, NoConvergenceError)

    @staticmethod
    def handle_evaluation_error(logger: logging.Logger, operation: str = "function evaluation"):
        return ErrorHandler.handle_sync_error(operation, logger, NonFiniteError)


error_handler = ErrorHandler()
