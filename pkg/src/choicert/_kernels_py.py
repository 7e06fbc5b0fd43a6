"""Pure-Python cyclic Jacobi kernel for complex Hermitian matrices.

Fallback twin of the compiled extension in ``_kernels.pyx``; both implement
the identical rotation sequence so results agree to roundoff.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def _offdiag_norm(a: np.ndarray, n: int) -> float:
    s = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            x = a[p, q]
            s += x.real * x.real + x.imag * x.imag
    return math.sqrt(2.0 * s)


def jacobi_sweeps(a: np.ndarray, v: np.ndarray, thresh: float, max_sweeps: int) -> int:
    """Diagonalize Hermitian ``a`` in place, accumulating rotations into ``v``.

    On exit ``a`` is (numerically) diagonal and ``a_in = v @ a @ v^dag``.
    Returns the number of sweeps performed; -1 if the off-diagonal norm is
    still above ``thresh`` after ``max_sweeps``.
    """
    n = a.shape[0]
    if n < 2:
        return 0
    for sweep in range(max_sweeps):
        if _offdiag_norm(a, n) <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if abs(tau) > 1e150:
                    t = 1.0 / (2.0 * tau)
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                f = s / mag
                sph = f * apq
                sphc = f * apq.conjugate()
                # A <- A U  (columns p, q)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - sphc * akq
                    a[k, q] = sph * akp + c * akq
                # A <- U^dag A  (rows p, q)
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - sph * aqk
                    a[q, k] = sphc * apk + c * aqk
                a[p, p] = complex(a[p, p].real, 0.0)
                a[q, q] = complex(a[q, q].real, 0.0)
                a[p, q] = 0.0
                a[q, p] = 0.0
                # V <- V U
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - sphc * vkq
                    v[k, q] = sph * vkp + c * vkq
    if _offdiag_norm(a, n) > thresh:
        return -1
    return max_sweeps
