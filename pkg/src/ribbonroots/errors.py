"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """A brute-force oracle was asked to exceed its size budget."""


class InternalConsistencyError(RuntimeError):
    """An identity that must hold exactly did not (signals a bug)."""


class NumericalError(ArithmeticError):
    """Root finding failed to converge or to certify its output."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
