"""
Error-to-exit-code mapping for command handlers.
"""
import logging
import sys
from functools import wraps
from marshmallow import ValidationError
from errors import EXIT_USAGE, CapabilityError, DataError, UsageError

logger = logging.getLogger(__name__)


def handle_errors(func):
    """
    Decorator converting service errors into exit codes.

    Usage and validation errors exit 2, data and parse errors 3,
    capability errors 4. The message goes to stderr; the handler's own
    return value is the exit code on success.
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            result = func(*args, **kwargs)
            return 0 if result is None else result
        except ValidationError as err:
            logger.error(f"Validation error: {err.messages}")
            print(f"error: {err.messages}", file=sys.stderr)
            return EXIT_USAGE
        except (UsageError, DataError, CapabilityError) as err:
            logger.error(f"{type(err).__name__}: {err}")
            print(f"error: {err}", file=sys.stderr)
            return err.exit_code
    return wrapper
