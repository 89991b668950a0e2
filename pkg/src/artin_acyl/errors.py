"""Exception hierarchy shared by the package."""


class ArtinError(Exception):
    """Base class for all package errors."""


class GraphError(ArtinError, ValueError):
    """Malformed defining graph. ``element`` names the offending item."""

    def __init__(self, message: str, element: str | None = None):
        self.element = element
        if element is not None:
            message = f"{element}: {message}"
        super().__init__(message)


class PreconditionError(ArtinError, ValueError):
    """An operation was called outside its hypotheses."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class UnknownGeneratorError(ArtinError, KeyError):
    pass


class InvalidPointError(ArtinError, ValueError):
    pass


class CertificateError(ArtinError, RuntimeError):
    """A certificate assertion failed while the certificate was being built."""

    def __init__(self, assertion, message: str = ""):
        self.assertion = assertion
        super().__init__(message or f"assertion failed: {assertion.describe()}")


class CertificateMismatch(ArtinError, ValueError):
    """Certificate evaluated against a link it was not built for."""


class InconsistencyError(ArtinError, RuntimeError):
    """Two predicates that must agree did not. Always a bug."""
