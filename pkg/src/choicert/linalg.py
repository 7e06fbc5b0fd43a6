"""Dense complex Hermitian linear algebra on label-tagged operators.

Operators carry an ordered list of subsystem labels ``(name, dim)``; the
composite basis index is the mixed-radix number with the FIRST label most
significant (so ``labels=[("Z", 2), ("Y", 2)]`` orders the basis as
``|z=0,y=0>, |z=0,y=1>, |z=1,y=0>, |z=1,y=1>``). All contractions are done
by label name, never by position.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from ._config import JACOBI_MAX_SWEEPS, JACOBI_SWEEP_TOL, default_tol
from .backend import jacobi_sweeps
from .errors import ConvergenceError, LabelError, NotHermitianError


def _as_complex_matrix(matrix: np.ndarray) -> np.ndarray:
    m = np.array(matrix, dtype=np.complex128, order="C")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise LabelError(f"operator must be a square matrix, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class LabeledOperator:
    """Square complex matrix tagged with ordered subsystem labels."""

    matrix: np.ndarray
    labels: tuple[tuple[str, int], ...]

    def __post_init__(self):
        m = _as_complex_matrix(self.matrix)
        labels = tuple((str(name), int(dim)) for name, dim in self.labels)
        names = [name for name, _ in labels]
        if len(set(names)) != len(names):
            raise LabelError(f"duplicate label names in {names}")
        total = math.prod(dim for _, dim in labels) if labels else 1
        if total != m.shape[0]:
            raise LabelError(
                f"label dimensions {labels} imply size {total}, matrix is {m.shape[0]}x{m.shape[0]}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def label_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.labels)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.labels)

    def label_dim(self, name: str) -> int:
        for lname, dim in self.labels:
            if lname == name:
                return dim
        raise LabelError(f"label {name!r} not found in {self.label_names}")

    def label_index(self, name: str) -> int:
        for i, (lname, _) in enumerate(self.labels):
            if lname == name:
                return i
        raise LabelError(f"label {name!r} not found in {self.label_names}")

    def with_matrix(self, matrix: np.ndarray) -> "LabeledOperator":
        return LabeledOperator(matrix, self.labels)

    def relabeled(self, mapping: dict[str, str]) -> "LabeledOperator":
        """Rename labels; dimensions and entries are untouched."""
        new = tuple((mapping.get(name, name), dim) for name, dim in self.labels)
        return LabeledOperator(self.matrix, new)

    def permuted(self, order: Sequence[str]) -> "LabeledOperator":
        """Reorder tensor factors to the given label-name order."""
        if tuple(order) == self.label_names:
            return self
        if sorted(order) != sorted(self.label_names):
            raise LabelError(f"cannot permute {self.label_names} to {tuple(order)}")
        perm = [self.label_index(name) for name in order]
        k = len(self.labels)
        t = self.matrix.reshape(self.dims + self.dims)
        t = t.transpose(perm + [k + p for p in perm])
        new_labels = tuple(self.labels[p] for p in perm)
        n = self.dim
        return LabeledOperator(np.ascontiguousarray(t).reshape(n, n), new_labels)


def identity(labels: Iterable[tuple[str, int]]) -> LabeledOperator:
    labels = tuple(labels)
    n = math.prod(dim for _, dim in labels) if labels else 1
    return LabeledOperator(np.eye(n, dtype=np.complex128), labels)


def frobenius(a: LabeledOperator | np.ndarray) -> float:
    m = a.matrix if isinstance(a, LabeledOperator) else a
    return float(np.linalg.norm(m))


def hermitize(a: LabeledOperator) -> LabeledOperator:
    """Hermitian part (A + A^dag)/2; exact on already-Hermitian input."""
    return a.with_matrix((a.matrix + a.matrix.conj().T) / 2.0)


def hs_inner(a: LabeledOperator, b: LabeledOperator) -> complex:
    """Hilbert-Schmidt inner product Tr(A^dag B), aligning label order."""
    if set(a.label_names) != set(b.label_names):
        raise LabelError(f"label mismatch: {a.label_names} vs {b.label_names}")
    b = b.permuted(a.label_names)
    return complex(np.vdot(a.matrix, b.matrix))


# ---------------------------------------------------------------------------
# tensor products and partial traces
# ---------------------------------------------------------------------------

def tensor(a: LabeledOperator, b: LabeledOperator) -> LabeledOperator:
    """Kronecker product with concatenated labels [a.labels, b.labels]."""
    shared = set(a.label_names) & set(b.label_names)
    if shared:
        raise LabelError(f"label collision in tensor product: {sorted(shared)}")
    return LabeledOperator(np.kron(a.matrix, b.matrix), a.labels + b.labels)


def partial_trace(m: LabeledOperator, label: str) -> LabeledOperator:
    """Trace out one tensor factor, keeping the remaining labels in order."""
    idx = m.label_index(label)
    k = len(m.labels)
    t = m.matrix.reshape(m.dims + m.dims)
    reduced = np.trace(t, axis1=idx, axis2=k + idx)
    new_labels = tuple(lbl for i, lbl in enumerate(m.labels) if i != idx)
    n = math.prod(dim for _, dim in new_labels) if new_labels else 1
    return LabeledOperator(np.ascontiguousarray(reduced).reshape(n, n), new_labels)


def embed_at(op: LabeledOperator, template: LabeledOperator, slot: str) -> LabeledOperator:
    """Tensor ``op`` with identities so it occupies ``slot`` of ``template``'s label order.

    ``op`` may itself carry several labels; they replace the single ``slot``
    label position. All other labels of ``template`` receive identities.
    """
    factors = []
    for name, dim in template.labels:
        if name == slot:
            factors.append(op)
        else:
            factors.append(identity([(name, dim)]))
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


# ---------------------------------------------------------------------------
# Hermiticity and eigendecomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HermitianCheck:
    max_asymmetry: float
    is_hermitian: bool
    threshold: float


def hermitian_check(a: LabeledOperator, tol: float | None = None) -> HermitianCheck:
    """Frobenius asymmetry ||A - A^dag||_F against tol*(1 + ||A||_F)."""
    tol = default_tol() if tol is None else tol
    asym = float(np.linalg.norm(a.matrix - a.matrix.conj().T))
    threshold = tol * (1.0 + frobenius(a))
    return HermitianCheck(asym, asym <= threshold, threshold)


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral data of a Hermitian operator: A = V diag(w) V^dag.

    Eigenvalues are sorted descending; ties keep the Jacobi diagonal order.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def apply(self, f: Callable[[float], float]) -> np.ndarray:
        fw = np.array([float(f(float(w))) for w in self.eigenvalues])
        v = self.eigenvectors
        return (v * fw) @ v.conj().T


def eigh_matrix(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Jacobi eigendecomposition of a Hermitian matrix (no label bookkeeping)."""
    m = np.array(matrix, dtype=np.complex128, order="C")
    m = (m + m.conj().T) / 2.0
    n = m.shape[0]
    v = np.eye(n, dtype=np.complex128)
    thresh = JACOBI_SWEEP_TOL * (1.0 + float(np.linalg.norm(m)))
    sweeps = jacobi_sweeps(m, v, thresh, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        off = m - np.diag(np.diag(m))
        raise ConvergenceError(
            "Jacobi eigensolver did not converge", offdiag=float(np.linalg.norm(off))
        )
    w = np.diag(m).real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], np.ascontiguousarray(v[:, order]), sweeps


def hermitian_eig(a: LabeledOperator, tol: float | None = None) -> EigenDecomposition:
    """Eigendecomposition via cyclic Jacobi; rejects non-Hermitian input."""
    check = hermitian_check(a, tol)
    if not check.is_hermitian:
        raise NotHermitianError(check.max_asymmetry)
    w, v, sweeps = eigh_matrix(a.matrix)
    return EigenDecomposition(w, v, sweeps)


def _exact_diagonal(matrix: np.ndarray) -> np.ndarray | None:
    """Real diagonal if the matrix is exactly diagonal with real diagonal."""
    off = matrix.copy()
    np.fill_diagonal(off, 0.0)
    if np.count_nonzero(off) != 0:
        return None
    d = np.diag(matrix)
    if np.count_nonzero(d.imag) != 0:
        return None
    return d.real.copy()


def spectral_fn(
    a: LabeledOperator, f: Callable[[float], float], tol: float | None = None
) -> LabeledOperator:
    """Apply a real scalar function to a Hermitian operator's spectrum.

    Exactly diagonal input maps to entrywise application on the diagonal,
    keeping exact zeros exact (relevant for sign(0) = 0).
    """
    d = _exact_diagonal(a.matrix)
    if d is not None:
        check = hermitian_check(a, tol)
        if not check.is_hermitian:  # pragma: no cover - diagonal real is Hermitian
            raise NotHermitianError(check.max_asymmetry)
        fd = np.array([float(f(float(x))) for x in d])
        return a.with_matrix(np.diag(fd).astype(np.complex128))
    eig = hermitian_eig(a, tol)
    return a.with_matrix(eig.apply(f))


def sign(x: float) -> float:
    """Sign with the 0 -> 0 convention used for spectral calculus."""
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------

def _dilation_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of [[0, A], [A^dag, 0]]; their |.| are A's singular values, doubled."""
    n = matrix.shape[0]
    dil = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    dil[:n, n:] = matrix
    dil[n:, :n] = matrix.conj().T
    w, _, _ = eigh_matrix(dil)
    return w


def nuclear_norm(a: LabeledOperator) -> float:
    """Sum of singular values; for Hermitian input, sum of |eigenvalues|."""
    if hermitian_check(a).is_hermitian:
        w, _, _ = eigh_matrix(a.matrix)
        return float(np.sum(np.abs(w)))
    return float(np.sum(np.abs(_dilation_eigenvalues(a.matrix))) / 2.0)


def operator_norm(a: LabeledOperator) -> float:
    """Largest singular value; for Hermitian input, max |eigenvalue|."""
    if a.dim == 0:
        return 0.0
    if hermitian_check(a).is_hermitian:
        w, _, _ = eigh_matrix(a.matrix)
        return float(np.max(np.abs(w)))
    return float(np.max(np.abs(_dilation_eigenvalues(a.matrix))))


# ---------------------------------------------------------------------------
# PSD ordering
# ---------------------------------------------------------------------------

class Ordering(enum.Enum):
    """Two-sided PSD comparison verdict for a pair (a, b)."""

    FIRST = "first"  # a >= b only
    SECOND = "second"  # b >= a only
    EQUAL = "equal"  # both (a = b up to tolerance)
    INCOMPARABLE = "incomparable"  # neither


@dataclass(frozen=True)
class PsdOrderResult:
    verdict: Ordering
    min_eigenvalue: float
    max_eigenvalue: float
    threshold: float

    @property
    def first_geq_second(self) -> bool:
        return self.verdict in (Ordering.FIRST, Ordering.EQUAL)

    @property
    def second_geq_first(self) -> bool:
        return self.verdict in (Ordering.SECOND, Ordering.EQUAL)


def psd_order(a: LabeledOperator, b: LabeledOperator, tol: float | None = None) -> PsdOrderResult:
    """Decide a >= b, b >= a, both, or neither from the spectrum of a - b."""
    tol = default_tol() if tol is None else tol
    for op in (a, b):
        check = hermitian_check(op, tol)
        if not check.is_hermitian:
            raise NotHermitianError(check.max_asymmetry)
    if sorted(a.labels) != sorted(b.labels):
        raise LabelError(f"operands differ in labels: {a.labels} vs {b.labels}")
    diff = a.matrix - b.permuted(a.label_names).matrix
    w, _, _ = eigh_matrix(diff)
    wmin = float(w[-1])
    wmax = float(w[0])
    threshold = tol * (1.0 + float(np.linalg.norm(diff)))
    a_geq = wmin >= -threshold
    b_geq = wmax <= threshold
    if a_geq and b_geq:
        verdict = Ordering.EQUAL
    elif a_geq:
        verdict = Ordering.FIRST
    elif b_geq:
        verdict = Ordering.SECOND
    else:
        verdict = Ordering.INCOMPARABLE
    return PsdOrderResult(verdict, wmin, wmax, threshold)
