import math
from unittest.mock import patch

import numpy as np
import pytest

from tests.helpers import random_frame
from welchkit.errors import InvalidArgumentError, NumericFailureError, SingularOperatorError
from welchkit.models import HermitianMatrix
from welchkit.services.frames import builtin, operator_matrix
from welchkit.services.measure import make_rng
from welchkit.services.numerics import (
    eig_hermitian,
    hermitian_function,
    inverse_sqrt,
    matrix_power_trace,
    solve_hpd,
)
from welchkit.utils import stable_sum, weighted_double_sum


def _random_hermitian(seed: int, d: int) -> np.ndarray:
    rng = make_rng(seed, 11)
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return a + a.conj().T


def test_hermitian_matrix_rejects_asymmetric():
    """Test that non-Hermitian input is rejected."""
    with pytest.raises(InvalidArgumentError):
        HermitianMatrix.from_array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(InvalidArgumentError):
        HermitianMatrix.from_array([[1.0, 0.0, 0.0]])


@pytest.mark.parametrize("seed,d", [(0, 1), (1, 2), (2, 5), (3, 8), (4, 16)])
def test_jacobi_matches_lapack(seed, d):
    """Test Jacobi eigenvalues against numpy's eigh and the reconstruction."""
    a = _random_hermitian(seed, d)
    eig = eig_hermitian(a, method="jacobi")

    # Verify results
    assert np.all(np.diff(eig.eigenvalues) >= 0)
    np.testing.assert_allclose(eig.eigenvalues, np.linalg.eigvalsh(a), rtol=0, atol=1e-12 * np.linalg.norm(a))
    np.testing.assert_allclose(eig.reconstruct(), a, atol=1e-12 * np.linalg.norm(a))
    v = eig.eigenvectors
    np.testing.assert_allclose(v.conj().T @ v, np.eye(d), atol=1e-12)


def test_jacobi_diagonal_and_zero_input():
    """Test trivial inputs converge without sweeps."""
    eig = eig_hermitian(np.diag([3.0, 1.0, 2.0]))
    assert eig.eigenvalues.tolist() == [1.0, 2.0, 3.0]
    assert eig.sweeps == 0

    zero = eig_hermitian(np.zeros((3, 3)))
    assert zero.eigenvalues.tolist() == [0.0, 0.0, 0.0]


def _max_residual(a: np.ndarray, eig) -> float:
    v = eig.eigenvectors
    return float(np.max(np.linalg.norm(a @ v - v * eig.eigenvalues, axis=0)))


def test_jacobi_on_frame_operators():
    """Test Jacobi residuals and Σλ² = ‖S‖_F² on the 100 sweep frame operators."""
    for index in range(100):
        s = np.array(operator_matrix(random_frame(index, weighted=index % 3 == 0)).entries)
        eig = eig_hermitian(s, method="jacobi")
        scale = np.linalg.norm(s)

        # Verify results
        assert _max_residual(s, eig) <= 1e-10 * scale, index
        assert math.fsum(eig.eigenvalues ** 2) == pytest.approx(scale ** 2, rel=1e-10), index


@pytest.mark.parametrize("spread", [0.0, 1e-12, 1e-9, 1e-6])
def test_jacobi_clustered_eigenvalues(spread):
    """Test Jacobi on PSD operators whose eigenvalues nearly coincide."""
    rng = make_rng(17, 11)
    d = 6
    q, _ = np.linalg.qr(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
    values = np.array([1.0, 1.0 + spread, 1.0 + 2 * spread, 2.5, 2.5 + spread, 7.0])
    s = (q * values) @ q.conj().T
    s = 0.5 * (s + s.conj().T)
    eig = eig_hermitian(s, method="jacobi")

    assert _max_residual(s, eig) <= 1e-10 * np.linalg.norm(s)
    np.testing.assert_allclose(eig.eigenvalues, np.sort(values), rtol=0, atol=1e-12 * 7.0)

    tight = np.array(operator_matrix(builtin("harmonic", n=7, d=3)).entries)
    tight_eig = eig_hermitian(tight, method="jacobi")
    assert _max_residual(tight, tight_eig) <= 1e-10 * np.linalg.norm(tight)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 12, 16])
def test_eigenvalue_squares_match_frobenius(d):
    """Test Σλ² = ‖A‖_F² for seeded Hermitian matrices."""
    for seed in range(5):
        a = _random_hermitian(100 + seed, d)
        eig = eig_hermitian(a, method="jacobi")
        assert math.fsum(eig.eigenvalues ** 2) == pytest.approx(np.linalg.norm(a) ** 2, rel=1e-10)


def test_two_by_two_examples():
    """Test [[2,1],[1,2]] has eigenvalues (1, 3) and solves to (1, 1) against (3, 3)."""
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    eig = eig_hermitian(a, method="jacobi")
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 3.0], rtol=0, atol=1e-15)
    np.testing.assert_allclose(solve_hpd(a, [3.0, 3.0]), [1.0, 1.0], rtol=0, atol=1e-14)


def test_solve_hpd_round_trip():
    """Test A·solve_hpd(A, B) = B on 100 seeded positive definite systems."""
    for seed in range(100):
        rng = make_rng(seed, 12)
        d = int(rng.integers(1, 9))
        a = _random_hermitian(seed, d)
        spd = a @ a.conj().T + 0.1 * np.eye(d)
        b = rng.standard_normal((d, 2)) + 1j * rng.standard_normal((d, 2))
        x = solve_hpd(spd, b)
        assert np.linalg.norm(spd @ x - b) <= 1e-10 * max(1.0, np.linalg.norm(spd) * np.linalg.norm(x)), seed


def test_jacobi_reports_non_convergence():
    """Test the sweep cap raises NumericFailureError."""
    with patch("welchkit.services.numerics.linalg.MAX_SWEEPS", 0):
        with pytest.raises(NumericFailureError):
            eig_hermitian(_random_hermitian(3, 4), method="jacobi")


def test_eigen_method_from_settings():
    """Test the eigensolver follows WELCHKIT_EIGEN_METHOD."""
    a = _random_hermitian(5, 4)
    with patch.dict('welchkit.config.features.SETTINGS', {"EIGEN_METHOD": "lapack"}):
        eig = eig_hermitian(a)
    np.testing.assert_allclose(eig.eigenvalues, np.linalg.eigvalsh(a), atol=1e-12 * np.linalg.norm(a))

    with pytest.raises(InvalidArgumentError):
        eig_hermitian(a, method="qr")


def test_solve_hpd():
    """Test the HPD solver and its singularity check."""
    a = _random_hermitian(6, 4)
    spd = a @ a.conj().T + np.eye(4)
    b = np.arange(8, dtype=float).reshape(4, 2)
    x = solve_hpd(spd, b)
    np.testing.assert_allclose(spd @ x, b, atol=1e-10)

    with pytest.raises(SingularOperatorError):
        solve_hpd(np.diag([1.0, 0.0]), np.ones(2))
    with pytest.raises(InvalidArgumentError):
        solve_hpd(np.eye(2), np.ones(3))


def test_matrix_power_trace():
    """Test Tra(A^r) on a diagonal PSD matrix."""
    a = np.diag([4.0, 1.0, 0.0])
    assert matrix_power_trace(a, 0.5) == pytest.approx(3.0, rel=1e-14)
    assert matrix_power_trace(a, 2) == pytest.approx(17.0, rel=1e-14)
    with pytest.raises(InvalidArgumentError):
        matrix_power_trace(a, 0)
    with pytest.raises(InvalidArgumentError):
        matrix_power_trace(np.diag([1.0, -1.0]), 2)


def test_hermitian_function_and_inverse_sqrt():
    """Test spectral calculus: S^{-1/2}·S·S^{-1/2} = I."""
    a = _random_hermitian(7, 3)
    s = a @ a.conj().T + 0.5 * np.eye(3)
    root = inverse_sqrt(s).entries
    np.testing.assert_allclose(root @ s @ root, np.eye(3), atol=1e-10)

    squared = hermitian_function(s, lambda lam: lam ** 2).entries
    np.testing.assert_allclose(squared, s @ s, atol=1e-9 * np.linalg.norm(s) ** 2)

    with pytest.raises(SingularOperatorError):
        inverse_sqrt(np.diag([1.0, 0.0]))


def test_compensated_sums():
    """Test fsum-based sums keep digits plain summation loses."""
    values = np.array([1e16, 1.0, -1e16, 1.0])
    assert stable_sum(values) == 2.0

    weights = np.array([1.0, 2.0])
    kernel = np.array([[1.0, 0.5], [0.5, 1.0]])
    assert weighted_double_sum(weights, kernel) == pytest.approx(1.0 + 2.0 * 0.5 * 2.0 + 4.0, rel=1e-15)
    assert math.isclose(weighted_double_sum(np.ones(3), np.ones((3, 3))), 9.0)
