# Supermatrices in the canonical and the Pauli basis, and the Choi matrix.
import numpy as np

from qchannels import (
    choi_from_supermatrix,
    choi_representation,
    depolarizing,
    general_natural_representation,
    general_natural_representation_via_basis_change,
    natural_representation,
    pauli_basis,
    reshuffle,
    transpose_channel,
)

np.set_printoptions(precision=3, suppress=True)

print("transpose(2) supermatrix (the SWAP gate):")
print(natural_representation(transpose_channel(2)).m.real)

p = 0.3
dep = depolarizing(2, p)
print(f"depolarizing(2, {p}) supermatrix:")
print(natural_representation(dep).m.real)

print("same channel in the normalized Pauli basis:")
slow = general_natural_representation(dep, pauli_basis()).m
fast = general_natural_representation_via_basis_change(dep, pauli_basis()).m
print(fast.real)
print("two algorithms agree to", np.max(np.abs(slow - fast)))

nat = natural_representation(dep)
j = choi_representation(dep).j
print("Choi matrix:")
print(j.real)
print("trace formula vs sum:", np.max(np.abs(choi_from_supermatrix(nat).j - j)))
print("reshuffle(Choi) == supermatrix:", np.allclose(reshuffle(j), nat.m))
