"""
Frame quality functionals: coherence, CRMS, frame potential and equiangularity.
"""

import logging
import math
from typing import Tuple

import numpy as np

from ...errors import InvalidArgumentError, NotApplicableError
from ...models.frame import SampledFrame
from ...models.reports import BoundReport, EqualityCertificate, MetricsReport
from ...utils.summation import weighted_double_sum
from ..bounds.welch import evaluate_lhs, require_normalized, welch_continuous
from ..frames.operator import frame_operator
from ..measure.quadrature import mass_summary

logger = logging.getLogger(__name__)

EQUIANGULAR_TOL = 1e-8
TIGHT_TOL = 1e-6


def _offdiagonal_moduli(frame: SampledFrame) -> np.ndarray:
    if frame.size < 2:
        raise NotApplicableError("needs at least two nodes")
    moduli = np.abs(frame.gram())
    return moduli[~np.eye(frame.size, dtype=bool)]


def coherence(frame: SampledFrame) -> float:
    """
    Frame correlation M = max over distinct nodes of |⟨τ_α, τ_β⟩|.

    Raises:
        NotApplicableError: For a single node
    """
    return float(np.max(_offdiagonal_moduli(frame)))


def crms(frame: SampledFrame) -> float:
    """
    Root-mean-square off-diagonal correlation √(∫_{Ω×Ω∖Δ}|⟨τα,τβ⟩|² / offdiag mass).

    Raises:
        InvalidArgumentError: If the family is not normalized
        NotApplicableError: If the off-diagonal mass is 0
    """
    require_normalized(frame, "CRMS")
    mass = mass_summary(frame.measure)
    if mass.offdiag <= 0.0:
        raise NotApplicableError("CRMS needs positive off-diagonal mass")
    return math.sqrt(evaluate_lhs(frame, 1).offdiag_integral / mass.offdiag)


def frame_potential(frame: SampledFrame) -> float:
    """FP = ∬|⟨τ_α, τ_β⟩|² dμ dμ."""
    return weighted_double_sum(frame.weights, np.abs(frame.gram()) ** 2)


def equiangularity(frame: SampledFrame, tol: float = EQUIANGULAR_TOL) -> Tuple[bool, float, float]:
    """
    Test |⟨τ_α, τ_β⟩| = γ for all α ≠ β.

    Args:
        frame: Family with at least two nodes
        tol: Allowed deviation from the mean modulus

    Returns:
        (flag, γ as the mean off-diagonal modulus, max deviation from γ)
    """
    moduli = _offdiagonal_moduli(frame)
    gamma = float(np.mean(moduli))
    deviation = float(np.max(np.abs(moduli - gamma)))
    return deviation <= tol, gamma, deviation


def equality_certificate(frame: SampledFrame) -> EqualityCertificate:
    """
    Compare M² with the first-order sup Welch bound.

    `implication_holds` records whether "equiangular ⇒ equality" holds for this
    family; it fails for equiangular families that are not tight. The γ of the
    equality statement is the right-hand side itself, γ = √sup_lb, so a
    γ-equiangular family has every off-diagonal modulus equal to √sup_lb.
    `equiangular` accepts any common modulus, reported as `gamma`; the
    implication fails when that modulus differs from √sup_lb.

    Raises:
        NotApplicableError: If the off-diagonal mass is 0
    """
    require_normalized(frame, "the equality certificate")
    bounds = welch_continuous(mass_summary(frame.measure), frame.dim, 1)
    if bounds.sup_lb is None:
        raise NotApplicableError(bounds.sup_reason or "sup bound not applicable")
    coherence_sq = coherence(frame) ** 2
    flag, gamma, _ = equiangularity(frame)
    report = BoundReport.evaluate("coherence_welch", coherence_sq, bounds.sup_lb)
    return EqualityCertificate(
        coherence_sq=coherence_sq,
        sup_lb=bounds.sup_lb,
        gap=report.gap,
        equiangular=flag,
        gamma=gamma,
        equality=report.equality,
        implication_holds=(not flag) or report.equality,
    )


def metrics_report(frame: SampledFrame) -> MetricsReport:
    """Aggregate coherence, CRMS, potential, tightness and equiangularity."""
    notes = {}
    try:
        value_coherence = coherence(frame)
        flag, gamma, deviation = equiangularity(frame)
    except NotApplicableError as e:
        value_coherence, flag, gamma, deviation = None, False, None, None
        notes["coherence"] = str(e)
    try:
        value_crms = crms(frame)
    except (InvalidArgumentError, NotApplicableError) as e:
        value_crms = None
        notes["crms"] = str(e)

    operator = frame_operator(frame)
    ratio = operator.bound_ratio
    return MetricsReport(
        coherence=value_coherence,
        crms=value_crms,
        potential=frame_potential(frame),
        tight=abs(operator.upper - operator.lower) <= TIGHT_TOL * operator.upper,
        bound_ratio=ratio if math.isfinite(ratio) else None,
        equiangular=flag,
        gamma=gamma,
        max_deviation=deviation,
        notes=notes,
    )
