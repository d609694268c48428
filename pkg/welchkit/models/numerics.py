"""
Models for the dense linear algebra kernel.

Matrices are numpy complex128 arrays. Models are frozen and the wrapped
arrays are marked read-only so instances can be shared across threads.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import InvalidArgumentError

HERMITIAN_TOL = 1e-12


def as_complex_matrix(value, name: str = "matrix") -> np.ndarray:
    """
    Coerce input to a finite 2-D complex128 array.

    Args:
        value: Array-like input
        name: Name used in error messages

    Returns:
        np.ndarray: A fresh complex copy

    Raises:
        InvalidArgumentError: If the input is not 2-D or has non-finite entries
    """
    try:
        arr = np.array(value, dtype=complex)
    except (TypeError, ValueError) as e:
        raise InvalidArgumentError(f"{name} is not numeric: {e}")
    if arr.ndim != 2:
        raise InvalidArgumentError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name} has non-finite entries")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class HermitianMatrix(BaseModel):
    """Dense d×d self-adjoint complex matrix."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def from_array(cls, value, tol: float = HERMITIAN_TOL) -> "HermitianMatrix":
        """
        Validate and wrap a Hermitian matrix.

        Args:
            value: Square array-like
            tol: Absolute tolerance for entry(j,k) = conj(entry(k,j))

        Returns:
            HermitianMatrix with an exactly Hermitian copy of the input

        Raises:
            InvalidArgumentError: If the matrix is not square, not finite or not Hermitian
        """
        if isinstance(value, HermitianMatrix):
            return value
        arr = as_complex_matrix(value, "Hermitian matrix")
        if arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise InvalidArgumentError(f"Hermitian matrix must be square and non-empty, got shape {arr.shape}")
        asym = np.max(np.abs(arr - arr.conj().T))
        if asym > tol:
            raise InvalidArgumentError(f"matrix is not Hermitian (max |A - A*| = {asym:.3e})")
        if np.max(np.abs(np.diag(arr).imag)) > tol:
            raise InvalidArgumentError("Hermitian matrix has non-real diagonal")
        # Remove the sub-tolerance skew part
        arr = 0.5 * (arr + arr.conj().T)
        return cls(entries=_frozen(arr))

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


class EigenDecomposition(BaseModel):
    """Eigenvalues in ascending order with orthonormal eigenvector columns."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    @classmethod
    def build(cls, eigenvalues: np.ndarray, eigenvectors: np.ndarray, sweeps: int = 0) -> "EigenDecomposition":
        order = np.argsort(eigenvalues, kind="stable")
        values = np.array(eigenvalues, dtype=float)[order]
        vectors = np.array(eigenvectors, dtype=complex)[:, order]
        return cls(eigenvalues=_frozen(values), eigenvectors=_frozen(vectors), sweeps=sweeps)

    def reconstruct(self) -> np.ndarray:
        """Return V·diag(λ)·V*."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T
