import numpy as np
import pytest

from gps_spectra.eigen import eigh


def _jacobi_eigenvalues(a, sweeps=60, tol=1e-14):
    """Cyclic Jacobi rotations, run to convergence; independent oracle."""
    a = a.copy()
    n = a.shape[0]
    scale = np.max(np.abs(a))
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))


def test_diagonal_matrix():
    dec = eigh(np.array([[2.0, 0.0], [0.0, 1.0]]))
    assert np.allclose(dec.values, [1.0, 2.0], atol=0)


def test_exchange_matrix_with_sign_convention():
    dec = eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(dec.values, [-1.0, 1.0], atol=1e-15)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    # largest-magnitude component of each vector is positive
    assert np.allclose(dec.vectors[:, 0], [inv_sqrt2, -inv_sqrt2], atol=1e-15)
    assert np.allclose(dec.vectors[:, 1], [inv_sqrt2, inv_sqrt2], atol=1e-15)


def test_matches_jacobi_oracle():
    rng = np.random.default_rng(20240321)
    a = rng.uniform(-1.0, 1.0, size=(50, 50))
    a = a + a.T
    values = eigh(a, want_vectors=False).values
    oracle = _jacobi_eigenvalues(a)
    assert np.max(np.abs(values - oracle)) <= 1e-11


def test_orthonormality_and_residuals():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(60, 60))
    a = a + a.T
    dec = eigh(a)
    v = dec.vectors
    assert np.max(np.abs(v.T @ v - np.eye(60))) <= 1e-12
    scale = np.max(np.abs(a))
    for k in range(60):
        residual = np.linalg.norm(a @ v[:, k] - dec.values[k] * v[:, k])
        assert residual <= 1e-10 * scale


def test_trace_preserved():
    rng = np.random.default_rng(11)
    a = rng.normal(size=(40, 40))
    a = a + a.T
    values = eigh(a, want_vectors=False).values
    assert abs(values.sum() - np.trace(a)) <= 1e-9 * np.max(np.abs(a)) * 40


@pytest.mark.parametrize("dim", [2, 4, 8])
def test_characteristic_polynomial_roots(dim):
    rng = np.random.default_rng(dim)
    a = rng.uniform(-1.0, 1.0, size=(dim, dim))
    a = a + a.T
    values = eigh(a, want_vectors=False).values
    tol = 1e-10 * (np.linalg.norm(a) + 1.0) ** dim
    for lam in values:
        assert abs(np.linalg.det(a - lam * np.eye(dim))) <= tol


def test_values_ascending():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(30, 30))
    a = a + a.T
    values = eigh(a, want_vectors=False).values
    assert np.all(np.diff(values) >= 0.0)


def test_deterministic_and_reproducible():
    rng = np.random.default_rng(5)
    a = rng.normal(size=(25, 25))
    a = a + a.T
    d1 = eigh(a)
    d2 = eigh(a)
    assert np.array_equal(d1.values, d2.values)
    assert np.array_equal(d1.vectors, d2.vectors)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eigh(np.array([[1.0, 2.0], [2.1, 1.0]]))  # not symmetric
    with pytest.raises(ValueError):
        eigh(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eigh(np.zeros((0, 0)))


def test_values_only_mode():
    a = np.array([[3.0, 1.0], [1.0, 3.0]])
    dec = eigh(a, want_vectors=False)
    assert dec.vectors is None
    assert np.allclose(dec.values, [2.0, 4.0], atol=1e-14)
