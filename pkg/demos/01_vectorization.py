# Row-major vectorization and the Hilbert-Schmidt inner product.
import numpy as np

from qchannels import hs_inner, kron, res, unres

m = np.array([[1, 2], [3, 4]])
print("res(m)         =", res(m).real)
print("unres(res(m))  =\n", unres(res(m)).real)

# The identity that ties res to kron: res(A rho B) = (A kron B^T) res(rho).
rng = np.random.default_rng(0)
a, b, rho = (rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) for _ in range(3))
err = np.max(np.abs(res(a @ rho @ b) - kron(a, b.T) @ res(rho)))
print("vectorization identity error:", err)

sx = np.array([[0, 1], [1, 0]])
sy = np.array([[0, -1j], [1j, 0]])
print("<I, I> =", hs_inner(np.eye(2), np.eye(2)))
print("<X, Y> =", hs_inner(sx, sy))
# second argument is conjugated
print("<I, iI> =", hs_inner(np.eye(2), 1j * np.eye(2)))
