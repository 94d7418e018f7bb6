"""Matrix representations of channels and conversions between them.

All supermatrices use the column convention: column ``j`` holds the
coordinates of the image of basis element ``j``, so that
``coords(Phi(rho)) == M @ coords(rho)``. In the canonical basis the
coordinates are just ``res(rho)``.

The Choi matrix is ``J = sum_kl Phi(E_kl) kron E_kl``, with entries
``J[(a, c), (b, d)] == Phi(E_cd)[a, b]``. The supermatrix has
``M[(a, b), (c, d)] == Phi(E_cd)[a, b]``, so the two differ by swapping the
middle pair of indices (:func:`reshuffle`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import Channel, apply
from .errors import DimensionMismatch, NonSquareSide, NotOrthonormal, ShapeMismatch
from .linalg import as_matrix, isqrt_exact, res, unres

ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MatrixBasis:
    """An ordered list of ``dim**2`` matrices of shape ``dim x dim``."""

    dim: int
    elements: np.ndarray
    orthonormal: bool
    name: str = "basis"

    def __post_init__(self):
        els = np.asarray(self.elements, dtype=complex)
        n = self.dim
        if els.shape != (n * n, n, n):
            raise ShapeMismatch(f"expected {n * n} matrices of shape {(n, n)}, got {els.shape}")
        els.setflags(write=False)
        object.__setattr__(self, "elements", els)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @classmethod
    def from_elements(cls, elements, name: str = "basis") -> "MatrixBasis":
        """Build a basis and set the orthonormal flag by checking the Gram matrix."""
        els = np.asarray([as_matrix(e, square=True) for e in elements])
        if els.ndim != 3:
            raise ShapeMismatch("basis elements must share one square shape")
        n = els.shape[1]
        b = cls(n, els, False, name)
        return cls(n, els, check_orthonormal(b), name)


@dataclass(frozen=True, eq=False)
class SuperMatrix:
    dim: int
    m: np.ndarray
    basis: MatrixBasis

    def __array__(self, dtype=None, copy=None):
        return self.m if dtype is None else self.m.astype(dtype)


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    dim: int
    j: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.j if dtype is None else self.j.astype(dtype)


def base_matrices(n: int) -> MatrixBasis:
    """Canonical matrix units E_11, E_12, ..., E_nn; element i is unres(e_i)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    d = n * n
    els = np.array([unres(np.eye(d)[i]) for i in range(d)])
    return MatrixBasis(n, els, True, name="canonical")


_PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


def pauli_basis() -> MatrixBasis:
    """Normalized Paulis {I, X, Y, Z} / sqrt(2)."""
    return MatrixBasis(2, _PAULI / np.sqrt(2), True, name="pauli")


def gram_matrix(b: MatrixBasis) -> np.ndarray:
    """``G[i, j] = hs_inner(b_i, b_j)``."""
    flat = b.elements.reshape(len(b), -1)
    return flat @ flat.conj().T


def check_orthonormal(b: MatrixBasis, tol: float = ORTHONORMAL_TOL) -> bool:
    g = gram_matrix(b)
    return bool(np.max(np.abs(g - np.eye(len(g)))) <= tol)


def basis_change_matrix(b: MatrixBasis) -> np.ndarray:
    """Matrix whose row i is ``conj(res(b_i))``.

    For an orthonormal basis this is unitary and maps ``res(rho)`` to the
    coordinates ``hs_inner(rho, b_i)``.
    """
    return b.elements.reshape(len(b), -1).conj()


def _require(ch: Channel, b: MatrixBasis):
    if b.dim != ch.dim:
        raise DimensionMismatch(f"basis dim {b.dim} != channel dim {ch.dim}")
    if not check_orthonormal(b):
        raise NotOrthonormal(f"basis {b.name!r} is not orthonormal")


def natural_representation(ch: Channel) -> SuperMatrix:
    """Supermatrix whose column i is ``res(ch(E_i))``."""
    basis = base_matrices(ch.dim)
    cols = [res(apply(ch, e)) for e in basis]
    return SuperMatrix(ch.dim, np.column_stack(cols), basis)


def general_natural_representation(ch: Channel, b: MatrixBasis) -> SuperMatrix:
    """Representation in basis ``b`` from Hilbert-Schmidt inner products.

    ``M[i, j] = hs_inner(ch(b_j), b_i)``. Costs one channel evaluation per
    basis element plus ``dim**4`` inner products.
    """
    _require(ch, b)
    images = [apply(ch, bj) for bj in b]
    d = len(b)
    m = np.empty((d, d), dtype=complex)
    for i, bi in enumerate(b):
        bi_conj = bi.conj()
        for j, img in enumerate(images):
            m[i, j] = np.sum(img * bi_conj)
    return SuperMatrix(ch.dim, m, b)


def general_natural_representation_via_basis_change(ch: Channel, b: MatrixBasis) -> SuperMatrix:
    """``M_B @ M @ M_B^dagger`` with ``M`` the canonical supermatrix."""
    _require(ch, b)
    mb = basis_change_matrix(b)
    m = natural_representation(ch).m
    return SuperMatrix(ch.dim, mb @ m @ mb.conj().T, b)


def choi_representation(ch: Channel) -> ChoiMatrix:
    """``sum_i kron(ch(E_i), E_i)`` over the canonical matrix units."""
    n = ch.dim
    j = np.zeros((n * n, n * n), dtype=complex)
    for e in base_matrices(n):
        j += np.kron(apply(ch, e), e)
    return ChoiMatrix(n, j)


def _swap_factors(x: np.ndarray, n: int) -> np.ndarray:
    """``S @ x @ S`` for the factor swap S on C^n (x) C^n."""
    return x.reshape(n, n, n, n).transpose(1, 0, 3, 2).reshape(n * n, n * n)


def choi_from_supermatrix(m: SuperMatrix, b: MatrixBasis | None = None, swapped: bool = False) -> ChoiMatrix:
    """Choi matrix from a supermatrix via ``tr[M (b_i kron b_j)]``.

    Taken literally the trace formula puts the channel output in the second
    tensor factor. Unless ``swapped`` is set the factors are exchanged
    afterwards so that, in the canonical basis, the result equals
    :func:`choi_representation`.
    """
    b = m.basis if b is None else b
    n = m.dim
    if b.dim != n or m.m.shape != (n * n, n * n):
        raise DimensionMismatch(f"supermatrix of shape {m.m.shape} does not match basis dim {b.dim}")
    if not check_orthonormal(b):
        raise NotOrthonormal(f"basis {b.name!r} is not orthonormal")
    # tr[M (b_i (x) b_j)] = sum_{pq} M[p, q] (b_i (x) b_j)[q, p]
    # with p = (r, s), q = (t, u): b_i[t, r] * b_j[u, s]
    mt = m.m.reshape(n, n, n, n)
    j = np.einsum("rstu,itr,jus->ij", mt, b.elements, b.elements)
    if not swapped:
        j = _swap_factors(j, n)
    return ChoiMatrix(n, j)


def reshuffle(x) -> np.ndarray:
    """Index permutation ``out[(a, b), (c, d)] = x[(a, c), (b, d)]``.

    Converts a Choi matrix to the supermatrix of the same channel and back;
    it is its own inverse.
    """
    x = as_matrix(x, square=True)
    n = isqrt_exact(x.shape[0])
    if n is None:
        raise NonSquareSide(f"side {x.shape[0]} is not a perfect square")
    return x.reshape(n, n, n, n).transpose(0, 2, 1, 3).reshape(n * n, n * n).copy()


def channel_from_supermatrix(m) -> Channel:
    """Channel ``rho -> unres(M @ res(rho))`` for a canonical-basis supermatrix."""
    mat = np.asarray(m.m if isinstance(m, SuperMatrix) else as_matrix(m, square=True))
    n = isqrt_exact(mat.shape[0])
    if n is None:
        raise NonSquareSide(f"side {mat.shape[0]} is not a perfect square")
    mat = mat.copy()

    def body(x):
        return unres(mat @ res(x))

    return Channel(n, body, name="supermatrix")


def channel_from_choi(j) -> Channel:
    mat = np.asarray(j.j if isinstance(j, ChoiMatrix) else j)
    return channel_from_supermatrix(reshuffle(mat))
