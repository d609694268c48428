"""
Models for sampled frames and the frame file format.
"""

from enum import Enum
from typing import List, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat

from ..errors import FrameValidationError
from .measure import QuadratureMeasure
from .numerics import HermitianMatrix

NORMALIZED_TOL = 1e-10
REAL_FIELD_TOL = 1e-12


class FieldTag(str, Enum):
    REAL = "R"
    COMPLEX = "C"

    @property
    def m_field(self) -> float:
        """dim_R(K) / 2: 1 for C, 1/2 for R."""
        return 1.0 if self is FieldTag.COMPLEX else 0.5

    @property
    def dtype(self):
        return complex if self is FieldTag.COMPLEX else float


class SampledFrame(BaseModel):
    """
    A family {τ_α} with one d-vector per node of a QuadratureMeasure.

    Vectors are stored as rows of an (n, d) complex array; for the real field
    the imaginary parts are exactly zero.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    field: FieldTag
    measure: QuadratureMeasure
    vectors: np.ndarray

    @classmethod
    def create(cls, field: FieldTag, measure: QuadratureMeasure, vectors,
               require_normalized: bool = False) -> "SampledFrame":
        """
        Validate and build a sampled frame.

        Args:
            field: Scalar field of the Hilbert space
            measure: Quadrature measure indexing the family
            vectors: Array-like of shape (n, d)
            require_normalized: Reject the family unless every ‖τ_α‖ = 1 within 1e-10

        Returns:
            SampledFrame

        Raises:
            FrameValidationError: On shape mismatch, non-finite data, complex data
                for a real frame, or a failed normalization check
        """
        field = FieldTag(field)
        try:
            arr = np.array(vectors, dtype=complex)
        except (TypeError, ValueError) as e:
            raise FrameValidationError(f"frame vectors are not numeric: {e}")
        if arr.ndim != 2 or arr.shape[1] < 1:
            raise FrameValidationError(f"frame vectors must have shape (n, d), got {arr.shape}")
        if arr.shape[0] != measure.size:
            raise FrameValidationError(
                f"frame has {arr.shape[0]} vectors but the measure has {measure.size} nodes"
            )
        if not np.all(np.isfinite(arr)):
            raise FrameValidationError("frame vectors contain non-finite values")
        if field is FieldTag.REAL:
            if np.any(np.abs(arr.imag) > REAL_FIELD_TOL):
                raise FrameValidationError("real frame has vectors with imaginary parts")
            arr = arr.real.astype(complex)
        arr.setflags(write=False)
        frame = cls(field=field, measure=measure, vectors=arr)
        if require_normalized and not frame.is_normalized:
            worst = float(np.max(np.abs(frame.norms() - 1.0)))
            raise FrameValidationError(f"family is not normalized (max |‖τ‖ - 1| = {worst:.3e})")
        return frame

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def size(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def weights(self) -> np.ndarray:
        return self.measure.weights

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)

    @property
    def is_normalized(self) -> bool:
        return bool(np.all(np.abs(self.norms() - 1.0) <= NORMALIZED_TOL))

    def gram(self) -> np.ndarray:
        """G[α, β] = ⟨τ_α, τ_β⟩, linear in the first slot."""
        return self.vectors @ self.vectors.conj().T

    def with_vectors(self, vectors, require_normalized: bool = False) -> "SampledFrame":
        """Same field and measure, new vectors."""
        return SampledFrame.create(self.field, self.measure, vectors, require_normalized)


class FrameOperatorReport(BaseModel):
    """Frame operator with its spectral digest."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    S: HermitianMatrix
    eigenvalues: np.ndarray
    lower: float
    upper: float
    trace: float
    trace_sq: float

    @property
    def tight(self) -> bool:
        return abs(self.upper - self.lower) <= 1e-6 * abs(self.upper)

    @property
    def bound_ratio(self) -> float:
        """b / a, infinite when the family does not span."""
        return self.upper / self.lower if self.lower > 0 else float("inf")


class FrameNode(BaseModel):
    """One node of a frame file."""
    model_config = ConfigDict(extra="forbid")

    weight: FiniteFloat = Field(..., gt=0, description="μ-mass of the node")
    vector: List[Union[FiniteFloat, List[FiniteFloat]]] = Field(
        ..., description="Entries as [re, im] pairs; bare reals allowed for the real field"
    )


class FrameFile(BaseModel):
    """
    JSON frame file:
    { "field": "C"|"R", "dim": d, "atomic": bool,
      "nodes": [ { "weight": w, "vector": [[re, im], …] }, … ] }
    """
    model_config = ConfigDict(extra="forbid")

    field: FieldTag
    dim: int = Field(..., ge=1)
    atomic: bool = True
    nodes: List[FrameNode] = Field(..., min_length=1)
