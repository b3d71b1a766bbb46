"""Exception hierarchy shared by the analysis modules and the CLI."""


class SubsumError(Exception):
    """Base class for all errors raised by :mod:`subsums`."""


class ModelError(SubsumError, ValueError):
    """The model is malformed or fails validation."""

    def __init__(self, message, messages=None):
        super().__init__(message)
        self.messages = list(messages or [message])


class ResourceGuardError(SubsumError):
    """The requested level would exceed the configured entry cap."""

    def __init__(self, projected, cap):
        super().__init__(
            f"projected entry count {projected} exceeds cap {cap}"
        )
        self.projected = projected
        self.cap = cap


class UnsupportedOperationError(SubsumError):
    """The operation needs integer digits but the model has rational ones."""


class InapplicableError(SubsumError):
    """The hypotheses of a check are not satisfied by the model."""


class InvariantViolation(SubsumError, AssertionError):
    """An internal consistency check failed."""
