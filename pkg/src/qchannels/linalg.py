"""Dense complex linear algebra primitives.

Conventions used by the whole package:

* Vectorization is row-major. ``res(m)[i * cols + j] == m[i, j]``.
* A composite index ``(i, k)`` over an ``n x n`` pair of factors is the
  integer ``i * n + k``. This is the ordering produced by ``numpy.kron`` and
  by ``res`` of an ``n x n`` matrix, so ``res(A @ rho @ B) ==
  kron(A, B.T) @ res(rho)``.
* The Hilbert-Schmidt inner product conjugates its *second* argument:
  ``hs_inner(x, y) == tr(x @ y^dagger)``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NonSquareLength, NotHermitian, ShapeMismatch

HERMITIAN_RTOL = 1e-10


def as_matrix(m, square: bool = False) -> np.ndarray:
    """Coerce ``m`` to a finite 2-d complex array.

    Raises ``ShapeMismatch`` for non-2-d input (or non-square input when
    ``square`` is set) and ``ValueError`` for NaN/Inf entries.
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d matrix, got shape {a.shape}")
    if square and a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def as_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.ndim != 1 or a.size == 0:
        raise ShapeMismatch(f"expected a non-empty 1-d vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("vector entries must be finite")
    return a


def isqrt_exact(k: int) -> int | None:
    """Return ``r`` with ``r * r == k``, or None if ``k`` is not a perfect square."""
    if k < 0:
        return None
    r = math.isqrt(k)
    return r if r * r == k else None


def res(m) -> np.ndarray:
    """Flatten a matrix row by row."""
    return as_matrix(m).reshape(-1).copy()


def unres(v) -> np.ndarray:
    """Inverse of :func:`res` for vectors of perfect-square length."""
    v = as_vector(v)
    n = isqrt_exact(v.size)
    if n is None:
        raise NonSquareLength(f"vector length {v.size} is not a perfect square")
    return v.reshape(n, n).copy()


def hs_inner(x, y) -> complex:
    """Hilbert-Schmidt inner product ``tr(x @ y^dagger)``.

    Linear in ``x`` and conjugate-linear in ``y``.
    """
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ShapeMismatch(f"shapes differ: {x.shape} vs {y.shape}")
    # tr(x y^dagger) = sum_ij x_ij conj(y_ij)
    return complex(np.sum(x * y.conj()))


def kron(a, b) -> np.ndarray:
    """Kronecker product with row-major pair indexing ``(i, k), (j, l)``."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def hermitian_tolerance(m: np.ndarray) -> float:
    return HERMITIAN_RTOL * (1.0 + float(np.max(np.abs(m), initial=0.0)))


def hermiticity_defect(m) -> float:
    """Largest entry of ``|m - m^dagger|``."""
    m = as_matrix(m, square=True)
    return float(np.max(np.abs(m - m.conj().T), initial=0.0))


def is_hermitian(m, tol: float | None = None) -> bool:
    m = as_matrix(m, square=True)
    if tol is None:
        tol = hermitian_tolerance(m)
    return hermiticity_defect(m) <= tol


def eigvals_hermitian(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order.

    The tolerance on ``m - m^dagger`` is relative to the largest entry
    magnitude; beyond it ``NotHermitian`` is raised.
    """
    m = as_matrix(m, square=True)
    defect = hermiticity_defect(m)
    if defect > hermitian_tolerance(m):
        raise NotHermitian(f"max |m - m^dagger| = {defect:.3e}")
    # symmetrize away the sub-tolerance defect before the LAPACK call
    h = 0.5 * (m + m.conj().T)
    return np.linalg.eigvalsh(h)
