"""Exceptions raised by srle and the exit codes they map to."""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3


class SRLEError(Exception):
    """Base class for srle errors."""

    pass


class FormatError(SRLEError):
    """Malformed, truncated or corrupt input data."""

    pass


class TruncatedStreamError(FormatError):
    """A bit reader ran out of bits."""

    pass


class RepresentationError(SRLEError, ValueError):
    """A symbol does not fit the configured binary representation."""

    pass


def exit_code_for(error: BaseException) -> int:
    """Map an exception onto a CLI exit code."""
    if isinstance(error, SRLEError):
        return EXIT_FORMAT
    if isinstance(error, OSError):
        return EXIT_IO
    return EXIT_USAGE
