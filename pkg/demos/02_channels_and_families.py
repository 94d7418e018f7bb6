# Channels are callables; families bind their parameters one at a time.
import numpy as np

from qchannels import apply_all, depolarizing, depolarizing_family, fix_param, transpose_channel

trans = transpose_channel(2)
rho = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
print("trans(rho) =\n", trans(rho))

states = [rho, np.diag([1.0, 0.0]), np.eye(2) / 2]
for out in apply_all(trans, states):
    print(out.round(3))

dep = depolarizing_family()       # free: dim, p
dep4 = dep(4)                     # bind the dimension first
print("free after dep(4):", dep4.free)
ch = dep4(0.3)
sigma = np.diag([1.0, 0, 0, 0])
print("dep4(0.3)(|0><0|) diagonal:", ch(sigma).diagonal().real)

# the other order gives the same channel
other = fix_param(fix_param(dep, "p", 0.3), "dim", 4)
print("same action:", np.allclose(other(sigma), ch(sigma)))

# traceless inputs are only shrunk: the map is linear on all matrices
e12 = np.array([[0, 1], [0, 0]])
print("depolarizing(2, 0.5)(E12) =\n", depolarizing(2, 0.5)(e12).real)
