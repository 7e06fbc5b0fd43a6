"""Exception types raised by the library."""

from __future__ import annotations


class ChoicertError(ValueError):
    """Base class for all library errors."""


class LabelError(ChoicertError):
    """Unknown, duplicate, or mismatched subsystem labels."""


class NotHermitianError(ChoicertError):
    """Input expected to be Hermitian is not; carries the asymmetry norm."""

    def __init__(self, max_asymmetry: float, message: str | None = None):
        self.max_asymmetry = float(max_asymmetry)
        super().__init__(
            message or f"matrix is not Hermitian: ||A - A^dag||_F = {max_asymmetry:.3e}"
        )


class PositivityError(ChoicertError):
    """PSD constraint violated; carries the most negative eigenvalue."""

    def __init__(self, min_eigenvalue: float, message: str | None = None):
        self.min_eigenvalue = float(min_eigenvalue)
        super().__init__(
            message or f"matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}"
        )


class TracePreservationError(ChoicertError):
    """Partial trace of a Choi matrix differs from the identity."""

    def __init__(self, residual: float, message: str | None = None):
        self.residual = float(residual)
        super().__init__(
            message or f"trace-preservation violated: ||Tr_out(X) - 1||_F = {residual:.3e}"
        )


class InvalidDensityError(ChoicertError):
    """Operator is not a valid density operator."""


class FastPathNotApplicable(ChoicertError):
    """The closed-form vector reduction does not apply to this instance."""


class ConvergenceError(ChoicertError):
    """An iterative routine failed to reach its tolerance; carries residuals."""

    def __init__(self, message: str, **residuals: float):
        self.residuals = {k: float(v) for k, v in residuals.items()}
        if residuals:
            detail = ", ".join(f"{k}={v:.3e}" for k, v in self.residuals.items())
            message = f"{message} ({detail})"
        super().__init__(message)
