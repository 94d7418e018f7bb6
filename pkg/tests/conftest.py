import numpy as np
import pytest

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def unit(n, k, l):
    e = np.zeros((n, n), dtype=complex)
    e[k, l] = 1
    return e


def random_matrix(rng, n, m=None):
    m = n if m is None else m
    return rng.normal(size=(n, m)) + 1j * rng.normal(size=(n, m))


def random_kraus(rng, n, count=None, normalized=True):
    """Random Kraus set; normalized sets satisfy sum K^dagger K = I."""
    count = rng.integers(1, 4) if count is None else count
    ops = [random_matrix(rng, n) for _ in range(count)]
    if normalized:
        s = sum(k.conj().T @ k for k in ops)
        w, v = np.linalg.eigh(s)
        inv_sqrt = v @ np.diag(w ** -0.5) @ v.conj().T
        ops = [k @ inv_sqrt for k in ops]
    return ops


def kraus_supermatrix(ops):
    """Closed form sum_k K (x) conj(K) for row-major vectorization."""
    return sum(np.kron(k, k.conj()) for k in ops)


def jacobi_eigenvalues(h, sweeps=100):
    """Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]].

    Every eigenvalue of the Hermitian ``h`` appears twice in the embedding.
    """
    a = np.block([[h.real, -h.imag], [h.imag, h.real]]).astype(float)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off < 1e-14:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta ** 2 + 1)) if theta != 0 else 1.0
                c = 1 / np.sqrt(t ** 2 + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))[::2]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
