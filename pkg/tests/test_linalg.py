import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from qchannels import dagger, eigvals_hermitian, hs_inner, kron, res, unres
from qchannels.errors import NonSquareLength, NotHermitian, ShapeMismatch

from conftest import SWAP, SX, SY, SZ, jacobi_eigenvalues, random_matrix, unit

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


@st.composite
def complex_square(draw, max_side=5):
    n = draw(st.integers(1, max_side))
    re = draw(hnp.arrays(float, (n, n), elements=finite))
    im = draw(hnp.arrays(float, (n, n), elements=finite))
    return re + 1j * im


def test_res_row_major():
    assert res([[1, 2], [3, 4]]).tolist() == [1, 2, 3, 4]
    assert res(np.eye(2)).tolist() == [1, 0, 0, 1]
    assert res([[0, 1j], [-1j, 0]]).tolist() == [0, 1j, -1j, 0]
    assert res(SY).tolist() == [0, -1j, 1j, 0]


def test_unres():
    assert unres([1, 2, 3, 4]).tolist() == [[1, 2], [3, 4]]
    np.testing.assert_array_equal(unres([1, 0, 0, 1]), np.eye(2))
    with pytest.raises(NonSquareLength):
        unres([1, 2, 3])


def test_nonfinite_rejected():
    with pytest.raises(ValueError):
        res([[np.nan, 0], [0, 1]])


@given(complex_square())
def test_res_unres_round_trip(m):
    np.testing.assert_array_equal(unres(res(m)), m)
    np.testing.assert_array_equal(res(unres(res(m))), res(m))


def test_hs_inner_examples():
    assert hs_inner(np.eye(2), np.eye(2)) == 2
    assert hs_inner(SX, SY) == 0
    assert hs_inner(unit(2, 0, 1), unit(2, 0, 1)) == 1
    with pytest.raises(ShapeMismatch):
        hs_inner(np.eye(2), np.eye(3))


def test_hs_inner_conjugates_second_argument():
    x = np.eye(2)
    assert hs_inner(1j * x, x) == 2j
    assert hs_inner(x, 1j * x) == -2j


@given(complex_square(), st.data())
def test_hs_inner_properties(x, data):
    y = data.draw(hnp.arrays(float, x.shape, elements=finite)) * 1j + x.real
    xx = hs_inner(x, x)
    assert abs(xx.imag) <= 1e-12 * (1 + abs(xx.real))
    assert xx.real >= 0
    assert xx.real == pytest.approx(np.linalg.norm(x, "fro") ** 2, rel=1e-12, abs=1e-9)
    assert hs_inner(x, y) == pytest.approx(np.conj(hs_inner(y, x)), rel=1e-12, abs=1e-9)


def kron_loops(a, b):
    p, q = a.shape
    r, s = b.shape
    out = np.zeros((p * r, q * s), dtype=complex)
    for i in range(p):
        for j in range(q):
            for k in range(r):
                for l in range(s):
                    out[i * r + k, j * s + l] = a[i, j] * b[k, l]
    return out


def test_kron_examples(rng):
    e11 = unit(2, 0, 0)
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_array_equal(kron(e11, e11), expected)
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    a, b, c, d = (random_matrix(rng, 2) for _ in range(4))
    np.testing.assert_allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)
    a, b = random_matrix(rng, 2, 3), random_matrix(rng, 3, 2)
    np.testing.assert_allclose(kron(a, b), kron_loops(a, b), rtol=0, atol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vectorization_identity(rng, n):
    a, b, rho = (random_matrix(rng, n) for _ in range(3))
    np.testing.assert_allclose(res(a @ rho @ b), kron(a, b.T) @ res(rho), atol=1e-10)


def test_dagger(rng):
    np.testing.assert_array_equal(dagger(SY), SY)
    np.testing.assert_array_equal(dagger(unit(2, 0, 1)), unit(2, 1, 0))
    m = random_matrix(rng, 3)
    np.testing.assert_array_equal(dagger(dagger(m)), m)


def test_eigvals_examples():
    np.testing.assert_allclose(eigvals_hermitian(SZ), [-1, 1])
    np.testing.assert_allclose(eigvals_hermitian(np.eye(4)), [1, 1, 1, 1])
    np.testing.assert_allclose(eigvals_hermitian(SWAP), [-1, 1, 1, 1], atol=1e-12)


def test_eigvals_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        eigvals_hermitian([[0, 1], [0, 0]])
    # below the relative tolerance is accepted
    eigvals_hermitian(SZ + 1e-12 * np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize("n", [1, 2, 5, 9, 16])
def test_eigvals_against_jacobi(rng, n):
    a = random_matrix(rng, n)
    h = a + a.conj().T
    got = eigvals_hermitian(h)
    assert np.all(np.diff(got) >= 0)
    np.testing.assert_allclose(got, jacobi_eigenvalues(h), atol=1e-10)
    assert abs(got.sum() - np.trace(h).real) <= 1e-10 * (1 + np.linalg.norm(h))


@settings(max_examples=50)
@given(complex_square(max_side=6))
def test_eigvals_sum_to_trace(m):
    h = m + m.conj().T
    ev = eigvals_hermitian(h)
    assert len(ev) == h.shape[0]
    assert abs(ev.sum() - np.trace(h).real) <= 1e-10 * (1 + np.linalg.norm(h))
