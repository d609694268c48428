"""
Dense Hermitian linear algebra.

The default eigensolver is cyclic complex Jacobi. Each step zeroes one
off-diagonal pair (p, q) with the unitary

    G = [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]],   a_pq = |a_pq|·e^{iφ}

which first rotates the phase of a_pq away and then applies the classical
real Jacobi rotation. WELCHKIT_EIGEN_METHOD=lapack switches to numpy.linalg.eigh.
"""

import logging
import math
from typing import Callable, Optional

import numpy as np

from ...config import get_setting
from ...errors import InvalidArgumentError, NumericFailureError, SingularOperatorError
from ...models.numerics import EigenDecomposition, HermitianMatrix, as_complex_matrix

logger = logging.getLogger(__name__)

MAX_SWEEPS = 100
OFFDIAG_TOL = 1e-14
NEGLIGIBLE_PAIR_TOL = 1e-16
SPD_TOL = 1e-12
PSD_CLAMP_TOL = 1e-14
LARGE_TAU = 1e150


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi(a: np.ndarray) -> EigenDecomposition:
    d = a.shape[0]
    v = np.eye(d, dtype=complex)
    scale = float(np.linalg.norm(a))
    if d == 1 or scale == 0.0:
        return EigenDecomposition.build(np.diag(a).real, v, sweeps=0)

    target = OFFDIAG_TOL * scale
    for sweep in range(1, MAX_SWEEPS + 1):
        if _offdiag_norm(a) <= target:
            logger.debug(f"Jacobi converged after {sweep - 1} sweeps (d={d})")
            return EigenDecomposition.build(np.diag(a).real, v, sweeps=sweep - 1)

        for p in range(d - 1):
            for q in range(p + 1, d):
                b = a[p, q]
                mag = abs(b)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                if mag <= NEGLIGIBLE_PAIR_TOL * math.sqrt(abs(app * aqq)):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue

                phase = b / mag
                tau = (aqq - app) / (2.0 * mag)
                if tau == 0.0:
                    t = 1.0
                elif abs(tau) > LARGE_TAU:
                    # 1 + tau² would overflow; t → 1/(2τ)
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=complex)

                cols = [p, q]
                a[:, cols] = a[:, cols] @ rot
                a[cols, :] = rot.conj().T @ a[cols, :]
                v[:, cols] = v[:, cols] @ rot

                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0

    if _offdiag_norm(a) <= target:
        return EigenDecomposition.build(np.diag(a).real, v, sweeps=MAX_SWEEPS)
    raise NumericFailureError(f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps (d={d})")


def eig_hermitian(matrix, method: Optional[str] = None) -> EigenDecomposition:
    """
    Eigendecomposition of a Hermitian matrix.

    Args:
        matrix: HermitianMatrix or square array-like
        method: "jacobi" or "lapack"; defaults to WELCHKIT_EIGEN_METHOD

    Returns:
        EigenDecomposition with ascending eigenvalues

    Raises:
        InvalidArgumentError: If the input is not Hermitian or the method is unknown
        NumericFailureError: If Jacobi does not converge within the sweep cap
    """
    herm = HermitianMatrix.from_array(matrix)
    method = (method or get_setting("EIGEN_METHOD")).lower()
    work = np.array(herm.entries, dtype=complex)
    if method == "jacobi":
        return _jacobi(work)
    if method == "lapack":
        values, vectors = np.linalg.eigh(work)
        return EigenDecomposition.build(values, vectors)
    raise InvalidArgumentError(f"unknown eigen method: {method}")


def solve_hpd(matrix, rhs) -> np.ndarray:
    """
    Solve A·X = B for Hermitian positive definite A.

    Args:
        matrix: HermitianMatrix or array-like
        rhs: Vector or matrix with A.dim rows

    Returns:
        np.ndarray with the shape of rhs

    Raises:
        SingularOperatorError: If min eigenvalue ≤ 1e-12·max eigenvalue
        InvalidArgumentError: On shape mismatch
    """
    herm = HermitianMatrix.from_array(matrix)
    b = np.array(rhs, dtype=complex)
    if b.ndim not in (1, 2) or b.shape[0] != herm.dim:
        raise InvalidArgumentError(f"right-hand side shape {b.shape} does not match dimension {herm.dim}")
    eig = eig_hermitian(herm)
    lo, hi = float(eig.eigenvalues[0]), float(eig.eigenvalues[-1])
    if hi <= 0.0 or lo <= SPD_TOL * hi:
        raise SingularOperatorError(f"operator is not positive definite (eigenvalues in [{lo:.3e}, {hi:.3e}])")
    return np.linalg.solve(herm.entries, b)


def _psd_eigenvalues(herm: HermitianMatrix) -> np.ndarray:
    values = np.array(eig_hermitian(herm).eigenvalues, dtype=float)
    top = float(np.max(np.abs(values)))
    tol = PSD_CLAMP_TOL * top
    if np.any(values < -tol):
        raise InvalidArgumentError(f"matrix is not positive semidefinite (min eigenvalue {values[0]:.3e})")
    values[values < tol] = 0.0
    return values


def matrix_power_trace(matrix, r: float) -> float:
    """
    Tra(A^r) = Σ λ_k^r for positive semidefinite A.

    Eigenvalues below 1e-14·max|λ| are clamped to 0.

    Raises:
        InvalidArgumentError: If r ≤ 0 or A has a negative eigenvalue beyond tolerance
    """
    if not r > 0:
        raise InvalidArgumentError(f"power must be positive, got {r}")
    values = _psd_eigenvalues(HermitianMatrix.from_array(matrix))
    return math.fsum(float(lam) ** r for lam in values)


def hermitian_function(matrix, func: Callable[[np.ndarray], np.ndarray]) -> HermitianMatrix:
    """
    Apply a real function through the spectrum: V·f(Λ)·V*.

    Args:
        matrix: HermitianMatrix or array-like
        func: Vectorized real function of the eigenvalues

    Returns:
        HermitianMatrix
    """
    eig = eig_hermitian(matrix)
    mapped = np.asarray(func(np.array(eig.eigenvalues)), dtype=float)
    v = eig.eigenvectors
    result = (v * mapped) @ v.conj().T
    return HermitianMatrix.from_array(0.5 * (result + result.conj().T))


def inverse_sqrt(matrix) -> HermitianMatrix:
    """
    A^{-1/2} for Hermitian positive definite A.

    Raises:
        SingularOperatorError: If A is singular or indefinite
    """
    herm = HermitianMatrix.from_array(matrix)
    values = eig_hermitian(herm).eigenvalues
    lo, hi = float(values[0]), float(values[-1])
    if hi <= 0.0 or lo <= SPD_TOL * hi:
        raise SingularOperatorError(f"operator is not positive definite (eigenvalues in [{lo:.3e}, {hi:.3e}])")
    return hermitian_function(herm, lambda lam: 1.0 / np.sqrt(lam))


def as_square(value, dim: int, name: str = "operator") -> np.ndarray:
    """Validate a dim×dim complex matrix."""
    arr = as_complex_matrix(value, name)
    if arr.shape != (dim, dim):
        raise InvalidArgumentError(f"{name} must be {dim}x{dim}, got {arr.shape}")
    return arr
