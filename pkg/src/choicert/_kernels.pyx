# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel for complex Hermitian matrices.

Hot path of the whole package: every eigendecomposition, spectral function,
norm, and solver iteration funnels through this sweep loop. The pure-Python
twin in ``_kernels_py.py`` implements the identical rotation sequence.
"""

from libc.math cimport sqrt, fabs, copysign

BACKEND = "cython"


cdef double _offdiag_norm(double complex[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double s = 0.0
    cdef double re, im
    cdef Py_ssize_t p, q
    for p in range(n - 1):
        for q in range(p + 1, n):
            re = a[p, q].real
            im = a[p, q].imag
            s += re * re + im * im
    return sqrt(2.0 * s)


cdef int _sweep_loop(double complex[:, ::1] a, double complex[:, ::1] v,
                     double thresh, int max_sweeps) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double complex apq, phase, sph, sphc, akp, akq, apk, aqk, vkp, vkq
    cdef double mag, app, aqq, tau, t, c, s

    for sweep in range(max_sweeps):
        if _offdiag_norm(a, n) <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if fabs(tau) > 1e150:
                    t = 1.0 / (2.0 * tau)
                else:
                    t = copysign(1.0, tau) / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                phase = apq / mag
                sph = s * phase
                sphc = s * phase.conjugate()
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
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
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


def jacobi_sweeps(double complex[:, ::1] a, double complex[:, ::1] v,
                  double thresh, int max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations into ``v``.

    On exit ``a`` is (numerically) diagonal and ``a_in = v @ a @ v^dag``.
    Returns the number of sweeps performed; -1 if the off-diagonal norm is
    still above ``thresh`` after ``max_sweeps``.
    """
    if a.shape[0] < 2:
        return 0
    cdef int result
    with nogil:
        result = _sweep_loop(a, v, thresh, max_sweeps)
    return result
