"""Exception types shared across the package."""


class LexhypError(Exception):
    """Base class for all package-specific errors."""


class ParseError(LexhypError, ValueError):
    """Malformed graph text or spec string."""


class ValidationError(LexhypError, ValueError):
    """Structurally invalid input (loop, duplicate edge, disconnected, ...)."""


class SizeCapError(LexhypError):
    """An instance exceeds a configured size cap; construction fails fast."""


class GeodesicCapError(LexhypError):
    """Geodesic enumeration for one endpoint pair exceeded the configured cap.

    Carries the offending pair so the caller can decide whether to abort or
    report a partial lower bound.
    """

    def __init__(self, pair, cap, partial_lower_bound=None):
        self.pair = pair
        self.cap = cap
        self.partial_lower_bound = partial_lower_bound
        msg = f"geodesic cap {cap} exceeded for pair {pair}"
        if partial_lower_bound is not None:
            msg += f" (partial lower bound {partial_lower_bound})"
        super().__init__(msg)
