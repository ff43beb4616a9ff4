"""
Exception hierarchy shared by services and the command line.

Every error is a ValueError so service callers can keep catching the
broad type; the CLI maps each branch to its exit code.
"""
from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_CAPABILITY = 4


class UsageError(ValueError):
    """Invalid arguments or an operation applied in the wrong state"""
    exit_code = EXIT_USAGE


class RangeError(UsageError):
    """A number or region outside its permitted range"""


class InvalidConfigurationError(UsageError):
    """A configuration that cannot be stepped (width below 3)"""


class DataError(ValueError):
    """Unreadable or malformed input data"""
    exit_code = EXIT_DATA


class ParseError(DataError):
    """Illegal content in a configuration, CTS description or symbol string"""

    def __init__(self, message: str, offset: Optional[int] = None, source: Optional[str] = None):
        self.offset = offset
        self.source = source
        location = ''
        if source is not None:
            location += f"{source}: "
        if offset is not None:
            location += f"byte {offset}: "
        super().__init__(f"{location}{message}")


class CapabilityError(ValueError):
    """A request beyond what the implementation supports"""
    exit_code = EXIT_CAPABILITY
