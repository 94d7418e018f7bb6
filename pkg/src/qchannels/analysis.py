"""Validity checks for channels: complete positivity, trace and Hermiticity preservation."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .channels import Channel, apply
from .linalg import as_matrix, hermitian_tolerance, hermiticity_defect
from .representations import base_matrices, choi_representation

TOL_CP = 1e-8
TOL_TP = 1e-10


@dataclass(frozen=True)
class ChannelVerdict:
    completely_positive: bool
    trace_preserving: bool
    hermiticity_preserving: bool
    min_choi_eigenvalue: float
    tp_residual: float
    hp_residual: float = 0.0

    @property
    def cptp(self) -> bool:
        return self.completely_positive and self.trace_preserving

    def as_dict(self) -> dict:
        d = asdict(self)
        d["cptp"] = self.cptp
        return d


def partial_trace(x, n: int, keep: int) -> np.ndarray:
    """Partial trace of an ``n**2 x n**2`` matrix; ``keep`` is 0 or 1 (the surviving factor)."""
    t = as_matrix(x, square=True).reshape(n, n, n, n)
    if keep == 1:
        return np.einsum("aiaj->ij", t)
    if keep == 0:
        return np.einsum("iaja->ij", t)
    raise ValueError("keep must be 0 or 1")


def choi_min_eigenvalue(j) -> tuple[bool, float]:
    """Smallest eigenvalue of the Hermitian part of ``j`` and whether ``j`` is Hermitian."""
    j = as_matrix(j, square=True)
    hermitian = bool(hermiticity_defect(j) <= hermitian_tolerance(j))
    lam = float(np.linalg.eigvalsh(0.5 * (j + j.conj().T))[0])
    return hermitian, lam


def is_completely_positive(ch: Channel, tol: float = TOL_CP) -> tuple[bool, float]:
    """CP verdict from the Choi spectrum.

    A non-Hermitian Choi matrix means the map is not even Hermiticity
    preserving; the verdict is then False and the reported eigenvalue is
    that of the Hermitian part.
    """
    return cp_from_choi(choi_representation(ch).j, tol)


def cp_from_choi(j, tol: float = TOL_CP) -> tuple[bool, float]:
    hermitian, lam = choi_min_eigenvalue(j)
    return bool(hermitian and lam >= -tol), lam


def is_trace_preserving(ch: Channel, tol: float = TOL_TP) -> tuple[bool, float]:
    """Compare ``tr(ch(E_kl))`` with ``tr(E_kl)`` over all matrix units."""
    residual = 0.0
    for e in base_matrices(ch.dim):
        residual = max(residual, abs(np.trace(apply(ch, e)) - np.trace(e)))
    return bool(residual <= tol), float(residual)


def hermiticity_residual(ch: Channel) -> float:
    """``max |ch(E_kl)^dagger - ch(E_lk)|``; zero iff ``ch(x^dagger) == ch(x)^dagger``."""
    n = ch.dim
    units = base_matrices(n)
    images = [apply(ch, e) for e in units]
    worst = 0.0
    for k in range(n):
        for l in range(n):
            a = images[k * n + l]
            b = images[l * n + k]
            worst = max(worst, float(np.max(np.abs(a.conj().T - b))))
    return worst


def is_cptp(ch: Channel, tol_cp: float = TOL_CP, tol_tp: float = TOL_TP) -> ChannelVerdict:
    j = choi_representation(ch).j
    cp, lam = cp_from_choi(j, tol_cp)
    tp, residual = is_trace_preserving(ch, tol_tp)
    hp_res = hermiticity_residual(ch)
    hp = hp_res <= hermitian_tolerance(j)
    return ChannelVerdict(bool(cp), bool(tp), bool(hp), float(lam), float(residual), float(hp_res))
