"""
Runs every bound on one frame and collects the reports.

A bound that does not apply to the frame (wrong preconditions, undefined
quantities, a non-spanning family for the dual bounds) is reported with
`applicable = false` and the reason; it never aborts the run.
"""

import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence

from ...errors import InvalidArgumentError, NotApplicableError, SingularOperatorError
from ...models.frame import SampledFrame
from ...models.reports import BoundReport
from ..frames.operator import canonical_dual
from ..measure.quadrature import mass_summary
from ..metrics.quality import crms
from .alternatives import coherence_alt_reports
from .duals import dual_dim_check, dual_welch
from .welch import (
    finiteness_check,
    p_welch,
    potential_bounds,
    require_normalized,
    trace_power_bound,
    welch_continuous,
    welch_generalized,
    welch_reports,
)

logger = logging.getLogger(__name__)

_SKIPPABLE = (InvalidArgumentError, NotApplicableError, SingularOperatorError)


def _guarded(bound_ids: Sequence[str], build: Callable[[], Iterable[BoundReport]],
             m_or_p: Optional[float] = None) -> List[BoundReport]:
    try:
        return list(build())
    except _SKIPPABLE as e:
        logger.warning(f"Skipping {', '.join(bound_ids)}: {e}")
        return [BoundReport.not_applicable(bound_id, str(e), m_or_p=m_or_p) for bound_id in bound_ids]


def crms_bounds(frame: SampledFrame) -> List[BoundReport]:
    """
    1 ≥ CRMS ≥ √max(0, first-order sup Welch bound) for a normalized family.

    Raises:
        InvalidArgumentError: If the family is not normalized
        NotApplicableError: If the off-diagonal mass is 0
    """
    require_normalized(frame, "the CRMS bounds")
    value = crms(frame)
    sup_lb = welch_continuous(mass_summary(frame.measure), frame.dim, 1).sup_lb or 0.0
    return [
        BoundReport.evaluate("crms_upper", 1.0, value, statement="1 ≥ CRMS"),
        BoundReport.evaluate("crms_lower", value, math.sqrt(max(0.0, sup_lb)),
                             statement="CRMS ≥ √max(0, sup Welch bound)"),
    ]


def _dual_reports(frame: SampledFrame) -> List[BoundReport]:
    dual = canonical_dual(frame)
    reports = [dual_dim_check(frame, dual)]
    reports += _guarded(["dual_welch"], lambda: [dual_welch(frame, dual)])
    return reports


def check_all(frame: SampledFrame, orders: Sequence[int] = (1,), ps: Sequence[float] = (4.0,),
              rs: Sequence[float] = (2.0,)) -> List[BoundReport]:
    """
    Evaluate every bound on a frame.

    Args:
        frame: The family to check
        orders: Welch orders m
        ps: p-Welch exponents (each > 2)
        rs: Trace-power exponents (each > 0)

    Returns:
        BoundReports in a fixed order: Welch (per m), generalized Welch (per m),
        p-Welch (per p), trace power (per r), finiteness, potential, CRMS,
        alternative coherence bounds, then dual bounds against the canonical dual
    """
    reports: List[BoundReport] = []
    for m in orders:
        reports += _guarded(["welch_integral", "welch_sup"], lambda: welch_reports(frame, m), m_or_p=m)
    for m in orders:
        reports += _guarded(["welch_generalized_integral", "welch_generalized_sup"],
                            lambda: welch_generalized(frame, m), m_or_p=m)
    for p in ps:
        reports += _guarded(["p_welch"], lambda: [p_welch(frame, p)], m_or_p=p)
    for r in rs:
        reports += _guarded(["trace_power"], lambda: [trace_power_bound(frame, r)], m_or_p=r)
    reports += _guarded(["finiteness"], lambda: [finiteness_check(frame)])
    reports += _guarded(["potential_lower", "potential_upper", "potential_diagonal"],
                        lambda: potential_bounds(frame))
    reports += _guarded(["crms_upper", "crms_lower"], lambda: crms_bounds(frame))
    reports += coherence_alt_reports(frame)
    reports += _guarded(["dual_dim", "dual_welch"], lambda: _dual_reports(frame))

    violations = [report.bound_id for report in reports if report.violated]
    if violations:
        logger.warning(f"Bound violations detected: {violations}")
    logger.info(f"Checked {len(reports)} bounds on a {frame.field.value}^{frame.dim} frame with {frame.size} nodes")
    return reports
