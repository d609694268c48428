"""
Welch-type lower bounds: closed forms and their measured counterparts.

Conventions for the measured sides over a QuadratureMeasure:
  - full double integrals are full weighted double sums over the node grid;
  - off-diagonal integrals drop the j = k terms exactly for atomic measures
    and equal the full sum for discretized atomless measures;
  - sup over α ≠ β is the max over distinct nodes (an under-approximation of
    the continuous sup by O(mesh), so reports carry the node count).
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ...errors import InvalidArgumentError, NotApplicableError, RangeError
from ...models.frame import SampledFrame
from ...models.measure import MassSummary
from ...models.reports import BoundReport, LhsValues, WelchBounds
from ...utils.summation import stable_sum, weighted_double_sum
from ..frames.operator import frame_operator
from ..measure.quadrature import counting_measure, mass_summary, require_count
from ..numerics.linalg import matrix_power_trace

logger = logging.getLogger(__name__)

MAX_EXACT_INT = 2 ** 53


def sym_dim(d: int, m: int) -> int:
    """
    dim Sym^m(K^d) = C(d+m-1, m).

    Raises:
        RangeError: If the value exceeds 2**53
    """
    d = require_count(d, "d")
    m = require_count(m, "m")
    value = math.comb(d + m - 1, m)
    if value > MAX_EXACT_INT:
        raise RangeError(f"C({d + m - 1}, {m}) exceeds 2**53")
    return value


def welch_continuous(mass: MassSummary, d: int, m: int) -> WelchBounds:
    """
    Order-m continuous Welch bounds.

    integral_lb = μ(Ω)²/C(d+m-1, m)
    sup_lb      = (integral_lb − (μ×μ)(Δ)) / (μ×μ)((Ω×Ω)\\Δ)

    Args:
        mass: Mass summary of the measure
        d: Dimension
        m: Order

    Returns:
        WelchBounds; sup_lb is None (with a reason) when the off-diagonal mass is 0
    """
    c = sym_dim(d, m)
    integral_lb = mass.total * mass.total / c
    if mass.offdiag > 0.0:
        return WelchBounds(m=m, sym_dim=c, integral_lb=integral_lb,
                           sup_lb=(integral_lb - mass.diagonal) / mass.offdiag)
    return WelchBounds(m=m, sym_dim=c, integral_lb=integral_lb,
                       sup_reason="off-diagonal mass is zero")


def welch_discrete(n: int, d: int, m: int) -> WelchBounds:
    """
    Order-m Welch bounds for n unit vectors in K^d.

    sum_lb = n²/C(d+m-1, m), max_lb = (n/C(d+m-1, m) − 1)/(n − 1). The max bound
    is the counting-measure sup bound (n²/C − n)/(n² − n) with n cancelled, so the
    two can differ in the last few ulps.

    Raises:
        InvalidArgumentError: If n < d
    """
    n = require_count(n, "n")
    d = require_count(d, "d")
    if n < d:
        raise InvalidArgumentError(f"need n ≥ d, got n={n}, d={d}")
    c = sym_dim(d, m)
    sum_lb = n * n / c
    if n < 2:
        return WelchBounds(m=m, sym_dim=c, integral_lb=sum_lb, sup_reason="max bound needs n ≥ 2")
    return WelchBounds(m=m, sym_dim=c, integral_lb=sum_lb, sup_lb=(n / c - 1.0) / (n - 1.0))


def _gram_power(frame: SampledFrame, exponent: float) -> np.ndarray:
    """|⟨τ_α, τ_β⟩|^exponent."""
    return np.abs(frame.gram()) ** exponent


def _lhs_from_kernel(frame: SampledFrame, kernel: np.ndarray) -> Tuple[float, float, Optional[float]]:
    weights = frame.weights
    full = weighted_double_sum(weights, kernel)
    off_kernel = kernel.copy()
    np.fill_diagonal(off_kernel, 0.0)
    offdiag = weighted_double_sum(weights, off_kernel) if frame.measure.atomic else full
    if frame.size < 2:
        return full, offdiag, None
    np.fill_diagonal(off_kernel, -np.inf)
    return full, offdiag, float(np.max(off_kernel))


def evaluate_lhs(frame: SampledFrame, m: int) -> LhsValues:
    """
    Measured sides of the order-m bounds.

    Returns:
        LhsValues with the full double integral of |⟨τ_α, τ_β⟩|^{2m}, its
        off-diagonal part and the max over distinct nodes (None for one node)
    """
    m = require_count(m, "m")
    full, offdiag, sup = _lhs_from_kernel(frame, _gram_power(frame, 2 * m))
    return LhsValues(m=m, full_integral=full, offdiag_integral=offdiag, sup_offdiag=sup,
                     node_count=frame.size)


def require_normalized(frame: SampledFrame, what: str) -> None:
    if not frame.is_normalized:
        raise InvalidArgumentError(f"{what} needs a normalized family")


def welch_reports(frame: SampledFrame, m: int, lhs: Optional[LhsValues] = None) -> Tuple[BoundReport, BoundReport]:
    """
    Integral and sup order-m Welch bounds checked on a normalized family.

    Returns:
        (integral report, sup report)
    """
    require_normalized(frame, "the continuous Welch bound")
    lhs = lhs or evaluate_lhs(frame, m)
    mass = mass_summary(frame.measure)
    bounds = welch_continuous(mass, frame.dim, m)
    integral = BoundReport.evaluate(
        "welch_integral", lhs.full_integral, bounds.integral_lb, m_or_p=m,
        statement=f"∬|⟨τα,τβ⟩|^{2 * m} dμdμ ≥ μ(Ω)²/C(d+{m - 1},{m})",
        node_count=frame.size, details={"sym_dim": bounds.sym_dim},
    )
    sup_statement = f"sup_(α≠β)|⟨τα,τβ⟩|^{2 * m} ≥ (μ(Ω)²/C(d+{m - 1},{m}) − (μ×μ)(Δ))/(μ×μ)(Ω×Ω∖Δ)"
    if bounds.sup_lb is None:
        sup = BoundReport.not_applicable("welch_sup", bounds.sup_reason, m_or_p=m,
                                         statement=sup_statement, node_count=frame.size)
    elif lhs.sup_offdiag is None:
        sup = BoundReport.not_applicable("welch_sup", "needs at least two nodes", m_or_p=m,
                                         statement=sup_statement, node_count=frame.size)
    else:
        sup = BoundReport.evaluate(
            "welch_sup", lhs.sup_offdiag, bounds.sup_lb, m_or_p=m, statement=sup_statement,
            vacuous=bounds.vacuous, node_count=frame.size,
        )
        if sup.vacuous:
            logger.warning(f"Order-{m} sup Welch bound is vacuous ({bounds.sup_lb!r})")
    return integral, sup


def welch_generalized(frame: SampledFrame, m: int) -> Tuple[BoundReport, BoundReport]:
    """
    Order-m bounds for families that need not be normalized.

    integral: ∬|⟨τα,τβ⟩|^{2m} ≥ (∫‖τα‖^{2m} dμ)² / C(d+m-1, m)
    sup:      sup_(α≠β)|⟨τα,τβ⟩|^{2m} ≥ (that RHS − ∫_Δ ‖τα‖^{4m}) / offdiag mass

    Returns:
        (integral report, sup report)
    """
    m = require_count(m, "m")
    c = sym_dim(frame.dim, m)
    lhs = evaluate_lhs(frame, m)
    norms_sq = np.sum(np.abs(frame.vectors) ** 2, axis=1)
    weights = frame.weights
    moment = stable_sum(weights * norms_sq ** m)
    rhs_integral = moment * moment / c
    integral = BoundReport.evaluate(
        "welch_generalized_integral", lhs.full_integral, rhs_integral, m_or_p=m,
        statement=f"∬|⟨τα,τβ⟩|^{2 * m} ≥ (∫‖τα‖^{2 * m} dμ)²/C(d+{m - 1},{m})",
        node_count=frame.size, details={"moment": moment},
    )

    mass = mass_summary(frame.measure)
    statement = f"sup_(α≠β)|⟨τα,τβ⟩|^{2 * m} ≥ ((∫‖τα‖^{2 * m})²/C − ∫_Δ‖τα‖^{4 * m})/offdiag"
    if lhs.sup_offdiag is None or mass.offdiag <= 0.0:
        sup = BoundReport.not_applicable("welch_generalized_sup", "needs at least two nodes and off-diagonal mass",
                                         m_or_p=m, statement=statement, node_count=frame.size)
    else:
        diagonal_term = stable_sum(weights * weights * norms_sq ** (2 * m)) if frame.measure.atomic else 0.0
        rhs_sup = (rhs_integral - diagonal_term) / mass.offdiag
        sup = BoundReport.evaluate(
            "welch_generalized_sup", lhs.sup_offdiag, rhs_sup, m_or_p=m, statement=statement,
            vacuous=rhs_sup < 0.0, node_count=frame.size, details={"diagonal_term": diagonal_term},
        )
    return integral, sup


def _p_welch_rhs(mass: MassSummary, d: int, p: float) -> float:
    if mass.offdiag <= 0.0:
        raise NotApplicableError("p-Welch bound needs positive off-diagonal mass")
    excess = max(0.0, mass.total * mass.total / d - mass.diagonal)
    return mass.offdiag ** (1.0 - p / 2.0) * excess ** (p / 2.0) + mass.diagonal


def _check_p(p: float) -> float:
    p = float(p)
    if not (p > 2.0 and math.isfinite(p)):
        raise InvalidArgumentError(f"p-Welch bound needs 2 < p < ∞, got {p}")
    return p


def p_welch(frame: SampledFrame, p: float) -> BoundReport:
    """
    ∬|⟨τα,τβ⟩|^p ≥ offdiag^{1-p/2}·(μ(Ω)²/d − (μ×μ)(Δ))^{p/2} + (μ×μ)(Δ) for 2 < p < ∞.

    Raises:
        InvalidArgumentError: If p ≤ 2 or the family is not normalized
        NotApplicableError: If the off-diagonal mass is 0
    """
    p = _check_p(p)
    require_normalized(frame, "the p-Welch bound")
    rhs = _p_welch_rhs(mass_summary(frame.measure), frame.dim, p)
    lhs = weighted_double_sum(frame.weights, _gram_power(frame, p))
    return BoundReport.evaluate(
        "p_welch", lhs, rhs, m_or_p=p,
        statement=f"∬|⟨τα,τβ⟩|^{p!r} ≥ offdiag^(1−p/2)(μ(Ω)²/d − Δ)^(p/2) + Δ",
        node_count=frame.size,
    )


def p_welch_discrete(n: int, d: int, p: float) -> float:
    """p-Welch RHS for n unit vectors with the counting measure."""
    p = _check_p(p)
    n = require_count(n, "n")
    d = require_count(d, "d")
    return _p_welch_rhs(mass_summary(counting_measure(n)), d, p)


def trace_power_bound(frame: SampledFrame, r: float) -> BoundReport:
    """
    Jensen bound on the spectrum of S for a normalized family.

    (1/d)·Tra(S^r) ≥ (μ(Ω)/d)^r for r ≥ 1; the inequality reverses for 0 < r < 1,
    in which case the sides are swapped in the report.

    Raises:
        InvalidArgumentError: If r ≤ 0 or the family is not normalized
    """
    r = float(r)
    if not (r > 0.0 and math.isfinite(r)):
        raise InvalidArgumentError(f"trace power needs r > 0, got {r}")
    require_normalized(frame, "the trace power bound")
    d = frame.dim
    power_mean = matrix_power_trace(frame_operator(frame).S, r) / d
    jensen = (mass_summary(frame.measure).total / d) ** r
    details = {"power_mean": power_mean, "jensen": jensen}
    if r >= 1.0:
        return BoundReport.evaluate("trace_power", power_mean, jensen, m_or_p=r,
                                    statement="(1/d)Tra(S^r) ≥ (μ(Ω)/d)^r", details=details)
    return BoundReport.evaluate("trace_power", jensen, power_mean, m_or_p=r,
                                statement="(μ(Ω)/d)^r ≥ (1/d)Tra(S^r) for 0 < r < 1", details=details)


def finiteness_check(frame: SampledFrame) -> BoundReport:
    """μ(Ω) ≤ b·d for a normalized family with upper frame bound b."""
    require_normalized(frame, "the finiteness bound")
    upper = frame_operator(frame).upper
    return BoundReport.evaluate("finiteness", upper * frame.dim, mass_summary(frame.measure).total,
                                statement="b·d ≥ μ(Ω)")


def potential_bounds(frame: SampledFrame) -> Tuple[BoundReport, BoundReport, BoundReport]:
    """
    Frame potential sandwich for a normalized family.

    Returns:
        reports for FP ≥ μ(Ω)²/d, μ(Ω)² ≥ FP and FP ≥ (μ×μ)(Δ)
    """
    require_normalized(frame, "the frame potential bounds")
    mass = mass_summary(frame.measure)
    potential = weighted_double_sum(frame.weights, _gram_power(frame, 2))
    total_sq = mass.total * mass.total
    return (
        BoundReport.evaluate("potential_lower", potential, total_sq / frame.dim, statement="FP ≥ μ(Ω)²/d"),
        BoundReport.evaluate("potential_upper", total_sq, potential, statement="μ(Ω)² ≥ FP"),
        BoundReport.evaluate("potential_diagonal", potential, mass.diagonal, statement="FP ≥ (μ×μ)(Δ)"),
    )
