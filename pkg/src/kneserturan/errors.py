"""Exception types shared across the package."""


class KneserTuranError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameterError(KneserTuranError, ValueError):
    """A construction or query was called with malformed parameters."""


class SizeCapError(KneserTuranError):
    """An instance exceeds the documented size cap for the requested operation.

    Caps exist so that exact searches stay desk-scale; they can be raised
    explicitly by the caller, but never silently.
    """


class VerificationError(KneserTuranError):
    """A certificate or claimed invariant failed an independent re-check."""
