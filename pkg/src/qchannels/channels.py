"""Channels as plain linear maps on ``n x n`` matrices.

A :class:`Channel` is nothing more than a dimension and a callable. Nothing
here checks complete positivity or trace preservation; see
:mod:`qchannels.analysis` for that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyKrausSet,
    NotUnitary,
    ParameterOutOfRange,
    ShapeMismatch,
    UnknownParameter,
)
from .linalg import as_matrix

MatrixMap = Callable[[np.ndarray], np.ndarray]

UNITARY_TOL = 1e-10


@dataclass(frozen=True)
class Channel:
    """A linear map from ``dim x dim`` matrices to ``dim x dim`` matrices."""

    dim: int
    map: MatrixMap
    name: str = "channel"

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")

    def __call__(self, rho) -> np.ndarray:
        return apply(self, rho)

    def __repr__(self):
        return f"Channel(name={self.name!r}, dim={self.dim})"


def _check_state(ch: Channel, rho, index: int | None = None) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape != (ch.dim, ch.dim):
        where = "" if index is None else f" at index {index}"
        raise DimensionMismatch(
            f"{ch.name} acts on {ch.dim}x{ch.dim} matrices, got {rho.shape}{where}"
        )
    return rho


def apply(ch: Channel, rho) -> np.ndarray:
    rho = _check_state(ch, rho)
    out = np.asarray(ch.map(rho), dtype=complex)
    if out.shape != (ch.dim, ch.dim):
        raise ShapeMismatch(f"{ch.name} returned shape {out.shape}")
    return out


def apply_all(ch: Channel, rhos: Sequence) -> list[np.ndarray]:
    """Apply ``ch`` to each matrix of ``rhos``, keeping order."""
    states = [_check_state(ch, r, i) for i, r in enumerate(rhos)]
    return [apply(ch, r) for r in states]


def identity_channel(n: int) -> Channel:
    return Channel(n, lambda x: x.copy(), name="identity")


def transpose_channel(n: int) -> Channel:
    """The transposition map. Positive, but not completely positive."""
    return Channel(n, lambda x: x.T.copy(), name="transpose")


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"p must lie in [0, 1], got {p}")
    return p


def depolarizing(n: int, p: float) -> Channel:
    """Depolarizing channel ``rho -> (1 - p) rho + p tr(rho) I / n``.

    The trace factor makes the map linear on all of M_n; on unit-trace
    inputs it reduces to mixing with the maximally mixed state.
    """
    p = _check_probability(p)
    eye = np.eye(n, dtype=complex) / n

    def body(x):
        return (1.0 - p) * x + p * np.trace(x) * eye

    return Channel(n, body, name=f"depolarizing(p={p})")


def unitary_channel(u) -> Channel:
    u = as_matrix(u, square=True)
    n = u.shape[0]
    if np.max(np.abs(u @ u.conj().T - np.eye(n))) > UNITARY_TOL:
        raise NotUnitary("u @ u^dagger differs from the identity")
    ud = u.conj().T
    return Channel(n, lambda x: u @ x @ ud, name="unitary")


def kraus_channel(ops: Sequence) -> Channel:
    """Map ``rho -> sum_k K_k rho K_k^dagger``; trace preservation is not required."""
    if len(ops) == 0:
        raise EmptyKrausSet("at least one Kraus operator is required")
    mats = [as_matrix(k) for k in ops]
    n = mats[0].shape[0]
    for i, k in enumerate(mats):
        if k.shape != (n, n):
            raise ShapeMismatch(f"Kraus operator {i} has shape {k.shape}, expected {(n, n)}")
    stack = np.stack(mats)
    stack_dag = stack.conj().transpose(0, 2, 1)

    def body(x):
        return np.einsum("kij,jl,klm->im", stack, x, stack_dag)

    return Channel(n, body, name=f"kraus[{len(mats)}]")


# -- parametrized families ---------------------------------------------------


@dataclass(frozen=True)
class Param:
    """A real parameter restricted to the closed interval ``[low, high]``."""

    name: str
    low: float = -np.inf
    high: float = np.inf

    def check(self, value) -> float:
        v = float(value)
        if not self.low <= v <= self.high:
            raise ParameterOutOfRange(
                f"{self.name}={v} outside [{self.low}, {self.high}]"
            )
        return v


@dataclass(frozen=True)
class ChannelFamily:
    """A channel with some parameters still free.

    ``body(dim, **values)`` must return the matrix map for fully bound
    parameters. The dimension may be left open (``dim=None``) and bound
    later under the name ``"dim"``, like any other parameter.
    """

    dim: int | None
    params: tuple[Param, ...]
    body: Callable[..., MatrixMap]
    bound: Mapping[str, float] = field(default_factory=dict)
    name: str = "family"

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "bound", MappingProxyType(dict(self.bound)))

    @property
    def free(self) -> tuple[str, ...]:
        names = tuple(p.name for p in self.params if p.name not in self.bound)
        return (("dim",) if self.dim is None else ()) + names

    def instantiate(self, **values) -> Channel:
        fam = self
        for name, value in values.items():
            fam = fix_param(fam, name, value)
        if isinstance(fam, ChannelFamily):
            raise TypeError(f"parameters left unbound: {', '.join(fam.free)}")
        return fam

    def __call__(self, value):
        """Curried application: bind the first free parameter."""
        return fix_param(self, self.free[0], value)


def make_family(dim: int | None, params: Sequence[Param], body, name: str = "family"):
    params = tuple(params)
    names = [p.name for p in params]
    if len(set(names)) != len(names) or "dim" in names:
        raise ValueError(f"parameter names must be unique and not 'dim': {names}")
    fam = ChannelFamily(dim, params, body, {}, name)
    return _collapse(fam)


def _collapse(fam: ChannelFamily):
    if fam.free:
        return fam
    values = {p.name: fam.bound[p.name] for p in fam.params}
    label = ", ".join(f"{k}={v}" for k, v in values.items())
    return Channel(fam.dim, fam.body(fam.dim, **values), name=f"{fam.name}({label})")


def fix_param(fam: ChannelFamily, name: str, value):
    """Bind one parameter; returns a Channel once nothing is left free."""
    if name == "dim":
        if fam.dim is not None:
            raise UnknownParameter("dim is already fixed for this family")
        if int(value) != value or value < 1:
            raise ParameterOutOfRange(f"dim must be a positive integer, got {value!r}")
        return _collapse(ChannelFamily(int(value), fam.params, fam.body, fam.bound, fam.name))
    by_name = {p.name: p for p in fam.params}
    if name not in by_name or name in fam.bound:
        raise UnknownParameter(f"{name!r} is not a free parameter of {fam.name}")
    bound = dict(fam.bound)
    bound[name] = by_name[name].check(value)
    return _collapse(ChannelFamily(fam.dim, fam.params, fam.body, bound, fam.name))


def depolarizing_family(dim: int | None = None) -> ChannelFamily:
    """Depolarizing channels with free ``p`` and optionally free ``dim``."""
    return make_family(
        dim,
        [Param("p", 0.0, 1.0)],
        lambda d, p: depolarizing(d, p).map,
        name="depolarizing",
    )
