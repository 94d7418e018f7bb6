"""Finite-dimensional quantum channels as linear maps, and their matrix representations."""

from .analysis import (
    ChannelVerdict,
    is_completely_positive,
    is_cptp,
    is_trace_preserving,
    partial_trace,
)
from .channels import (
    Channel,
    ChannelFamily,
    Param,
    apply,
    apply_all,
    depolarizing,
    depolarizing_family,
    fix_param,
    identity_channel,
    kraus_channel,
    make_family,
    transpose_channel,
    unitary_channel,
)
from .errors import *  # noqa: F401,F403
from .linalg import dagger, eigvals_hermitian, hs_inner, kron, res, unres
from .representations import (
    ChoiMatrix,
    MatrixBasis,
    SuperMatrix,
    base_matrices,
    basis_change_matrix,
    channel_from_choi,
    channel_from_supermatrix,
    check_orthonormal,
    choi_from_supermatrix,
    choi_representation,
    general_natural_representation,
    general_natural_representation_via_basis_change,
    natural_representation,
    pauli_basis,
    reshuffle,
)

__version__ = "0.1.0"
