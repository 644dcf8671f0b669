"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data (mesh file, config, matrix dimensions) violates a contract."""


class NumericalError(RuntimeError):
    """A numerical procedure failed (solver divergence, CFL refusal, bad pivot)."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
