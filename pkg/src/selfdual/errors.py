"""Exception hierarchy shared by every module."""


class SelfDualError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(SelfDualError, ValueError):
    """An operation was called with arguments violating its contract."""


class GuardExceeded(SelfDualError, ValueError):
    """An exhaustive computation would exceed its configured size limit."""


class SearchFailure(SelfDualError, RuntimeError):
    """An ordering or merge search terminated without a valid result."""


class VerificationFailure(SelfDualError, RuntimeError):
    """A constructed object failed its own verifier (an internal bug)."""
