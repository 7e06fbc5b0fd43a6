"""Package-wide numerical defaults."""

from __future__ import annotations

import os

# Absolute eigenvalue / Hermiticity tolerance; checks scale it by (1 + ||A||_F).
DEFAULT_TOL = 1e-9

# Off-diagonal sweep threshold and sweep cap for the Jacobi eigensolver.
JACOBI_SWEEP_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def default_tol() -> float:
    """Default tolerance, overridable through the CHOICERT_TOL env var."""
    raw = os.environ.get("CHOICERT_TOL")
    if raw is None:
        return DEFAULT_TOL
    value = float(raw)
    if value <= 0:
        raise ValueError(f"CHOICERT_TOL must be positive, got {raw!r}")
    return value
