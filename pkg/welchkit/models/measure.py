"""
Models for discretized measure spaces.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidArgumentError


class QuadratureMeasure(BaseModel):
    """
    Weighted node set standing in for a measure space (Ω, μ).

    `atomic` is True when the nodes are genuine atoms of μ (counting measure,
    weighted point masses) and False when they are quadrature cells of an
    atomless measure. It decides how the diagonal of Ω×Ω is measured.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    nodes: np.ndarray = Field(..., description="Parameter points, first axis indexes nodes")
    weights: np.ndarray = Field(..., description="Positive μ-mass per node")
    atomic: bool = Field(..., description="Nodes are atoms of μ")

    @classmethod
    def create(cls, nodes, weights, atomic: bool) -> "QuadratureMeasure":
        """
        Validate and build a measure.

        Args:
            nodes: Node labels; any array whose first axis has one entry per node
            weights: Positive finite weights
            atomic: Whether nodes are atoms

        Returns:
            QuadratureMeasure

        Raises:
            InvalidArgumentError: On empty input, length mismatch or bad weights
        """
        node_arr = np.array(nodes)
        weight_arr = np.array(weights, dtype=float).ravel()
        if weight_arr.size < 1:
            raise InvalidArgumentError("a measure needs at least one node")
        if node_arr.ndim == 0 or node_arr.shape[0] != weight_arr.size:
            raise InvalidArgumentError(
                f"nodes and weights differ in length ({node_arr.shape[:1]} vs {weight_arr.size})"
            )
        if not np.all(np.isfinite(weight_arr)) or np.any(weight_arr <= 0):
            raise InvalidArgumentError("weights must be positive and finite")
        node_arr.setflags(write=False)
        weight_arr.setflags(write=False)
        return cls(nodes=node_arr, weights=weight_arr, atomic=bool(atomic))

    @property
    def size(self) -> int:
        return int(self.weights.size)


class MassSummary(BaseModel):
    """μ(Ω), (μ×μ)(Δ) and (μ×μ)((Ω×Ω)\\Δ)."""
    model_config = ConfigDict(frozen=True)

    total: float = Field(..., ge=0)
    diagonal: float = Field(..., ge=0)
    offdiag: float = Field(..., ge=0)
