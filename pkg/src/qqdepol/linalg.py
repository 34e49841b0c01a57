"""Dense complex matrix algebra for small (2-, 3- and 6-dimensional) operators.

Everything operates on plain ``numpy`` complex arrays and is pure: inputs are
never mutated, outputs are fresh arrays.  Eigenvalues of Hermitian matrices
come from a cyclic two-sided Jacobi rotation scheme rather than LAPACK, so the
result is deterministic and carries an explicit residual; the test suite
cross-checks it against ``numpy.linalg.eigvalsh`` as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-12

_MAX_JACOBI_SWEEPS = 60


def as_complex_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.isfinite(m).all():
        raise ValueError("matrix has non-finite entries")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def kron(a, b) -> np.ndarray:
    """Tensor product with entry ((i*br+k),(j*bc+l)) = a[i,j]*b[k,l]."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T.copy()


def matmul(a, b) -> np.ndarray:
    ma, mb = as_complex_matrix(a), as_complex_matrix(b)
    if ma.shape[1] != mb.shape[0]:
        raise ValueError(f"matmul dimension mismatch: {ma.shape} @ {mb.shape}")
    return ma @ mb


def add(a, b) -> np.ndarray:
    ma, mb = as_complex_matrix(a), as_complex_matrix(b)
    if ma.shape != mb.shape:
        raise ValueError(f"add dimension mismatch: {ma.shape} + {mb.shape}")
    return ma + mb


def scale(c: complex, a) -> np.ndarray:
    return complex(c) * as_complex_matrix(a)


def trace(a) -> complex:
    m = as_complex_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"trace requires a square matrix, got {m.shape}")
    return complex(np.trace(m))


def max_abs(a) -> float:
    """Entrywise max-abs norm, the deviation measure used throughout."""
    return float(np.max(np.abs(np.asarray(a))))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    ``residual`` is max |A v - lambda v| over the computed eigenpairs,
    evaluated against the (hermitized) input matrix.
    """

    eigenvalues: np.ndarray
    residual: float


def hermitian_spectrum(a, tol: float = DEFAULT_TOL) -> Spectrum:
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input must be Hermitian within ``tol`` (entrywise).  Sweeps stop once
    the off-diagonal Frobenius mass is at most ``tol``; a budget of
    ``_MAX_JACOBI_SWEEPS`` sweeps guards against non-convergence.

    Raises:
        ValueError: non-square or insufficiently Hermitian input.
        RuntimeError: sweep budget exhausted before convergence.
    """
    m = as_complex_matrix(a)
    n = m.shape[0]
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"hermitian_spectrum requires a square matrix, got {m.shape}")
    defect = max_abs(m - m.conj().T)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian within {tol:g} (defect {defect:.3e})")

    h = (m + m.conj().T) / 2.0
    d = h.copy()
    v = np.eye(n, dtype=np.complex128)
    # Rotations on entries below this threshold cannot push the off-diagonal
    # Frobenius mass above tol, so they are skipped.
    skip = tol / (4.0 * n * n) if n else 0.0
    for _ in range(_MAX_JACOBI_SWEEPS):
        sq = np.abs(d) ** 2
        np.fill_diagonal(sq, 0.0)
        if math.sqrt(float(np.sum(sq))) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = d[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                # Zero the (p,q) entry with a unitary plane rotation; t is the
                # smaller-magnitude root of t^2 + 2*tau*t - 1 = 0.
                tau = (d[q, q].real - d[p, p].real) / (2.0 * r)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * phase.conjugate()

                colp = d[:, p].copy()
                d[:, p] = c * colp - spc * d[:, q]
                d[:, q] = sp * colp + c * d[:, q]
                rowp = d[p, :].copy()
                d[p, :] = c * rowp - sp * d[q, :]
                d[q, :] = spc * rowp + c * d[q, :]
                d[p, q] = 0.0
                d[q, p] = 0.0

                vcolp = v[:, p].copy()
                v[:, p] = c * vcolp - spc * v[:, q]
                v[:, q] = sp * vcolp + c * v[:, q]
    else:
        raise RuntimeError(
            f"Jacobi eigensolver did not reach off-diagonal mass <= {tol:g} "
            f"within {_MAX_JACOBI_SWEEPS} sweeps"
        )

    lam = np.real(np.diag(d)).copy()
    residual = max_abs(h @ v - v * lam)
    order = np.argsort(lam, kind="stable")
    return Spectrum(eigenvalues=lam[order], residual=residual)
