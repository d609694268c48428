"""
Bounds for dual pairs (τ, ω) with θ*_ω θ_τ = I.
"""

import logging

import numpy as np

from ...errors import NotApplicableError
from ...models.frame import SampledFrame
from ...models.reports import BoundReport
from ...utils.summation import stable_sum, weighted_double_sum
from ..frames.operator import require_dual_pair
from ..measure.quadrature import mass_summary

logger = logging.getLogger(__name__)

CONSTANT_DIAGONAL_TOL = 1e-8


def _cross_gram(frame: SampledFrame, dual: SampledFrame) -> np.ndarray:
    """X[α, β] = ⟨τ_α, ω_β⟩."""
    return frame.vectors @ dual.vectors.conj().T


def dual_dim_check(frame: SampledFrame, dual: SampledFrame) -> BoundReport:
    """
    ∬|⟨τ_α, ω_β⟩|² dμ dμ ≥ dim H.

    Raises:
        InvalidArgumentError: If the families are not a dual pair
    """
    require_dual_pair(frame, dual)
    lhs = weighted_double_sum(frame.weights, np.abs(_cross_gram(frame, dual)) ** 2)
    return BoundReport.evaluate("dual_dim", lhs, float(frame.dim),
                                statement="∬|⟨τα,ωβ⟩|² dμdμ ≥ dim H", node_count=frame.size)


def dual_welch(frame: SampledFrame, dual: SampledFrame) -> BoundReport:
    """
    First-order Welch bound for a dual pair.

    When ⟨τ_α, ω_α⟩ is constant (within 1e-8) the RHS is
    d(μ(Ω)² − d(μ×μ)(Δ))/(μ(Ω)²·offdiag); otherwise the general form
    (d − ∫_Δ|⟨τ_α, ω_α⟩|²)/offdiag is used. Both are kept in `details`.

    Raises:
        InvalidArgumentError: If the families are not a dual pair
        NotApplicableError: With fewer than two nodes or no off-diagonal mass
    """
    require_dual_pair(frame, dual)
    mass = mass_summary(frame.measure)
    if frame.size < 2 or mass.offdiag <= 0.0:
        raise NotApplicableError("dual Welch bound needs two nodes and off-diagonal mass")

    cross = _cross_gram(frame, dual)
    diagonal = np.diag(cross).copy()
    magnitudes = np.abs(cross) ** 2
    np.fill_diagonal(magnitudes, -np.inf)
    lhs = float(np.max(magnitudes))

    d = frame.dim
    constant = bool(np.max(np.abs(diagonal - diagonal[0])) <= CONSTANT_DIAGONAL_TOL)
    total_sq = mass.total * mass.total
    rhs_constant = d * (total_sq - d * mass.diagonal) / (total_sq * mass.offdiag)
    diagonal_mass = stable_sum(frame.weights ** 2 * np.abs(diagonal) ** 2) if frame.measure.atomic else 0.0
    rhs_general = (d - diagonal_mass) / mass.offdiag

    rhs = rhs_constant if constant else rhs_general
    statement = ("sup_(α≠β)|⟨τα,ωβ⟩|² ≥ d(μ(Ω)² − dΔ)/(μ(Ω)²·offdiag)" if constant
                 else "sup_(α≠β)|⟨τα,ωβ⟩|² ≥ (d − ∫_Δ|⟨τα,ωα⟩|²)/offdiag")
    return BoundReport.evaluate(
        "dual_welch", lhs, rhs, statement=statement, vacuous=rhs < 0.0, node_count=frame.size,
        details={
            "constant_diagonal": constant,
            "rhs_constant_diagonal": rhs_constant,
            "rhs_general": rhs_general,
        },
    )
