"""
Report builders behind the command-line surface.

Each builder returns a pydantic model; rendering (tables, JSON, CSV) is left
to the commands.
"""

import logging
import math
from typing import Iterator, Sequence, Tuple

import numpy as np

from ..config import get_setting
from ..errors import FrameValidationError, InvalidArgumentError
from ..models.frame import FieldTag, FrameOperatorReport, SampledFrame
from ..models.reports import (
    AltBounds,
    AnalysisReport,
    BoundsTable,
    CircleExampleReport,
    ExampleCheck,
    FrameSummary,
    OperatorDigest,
    WelchRow,
)
from .bounds import alt_bounds, gerzon, p_welch_discrete, welch_discrete, welch_reports
from .bounds.checker import check_all
from .frames import cos_sin, frame_operator
from .measure import mass_summary
from .metrics import frame_potential, metrics_report

logger = logging.getLogger(__name__)

CIRCLE_OPERATOR_TOL = 1e-6
CIRCLE_POTENTIAL_TOL = 1e-6
CIRCLE_RHS_TOL = 1e-12
CIRCLE_SUP_MIN = 0.999


def summarize_frame(frame: SampledFrame) -> FrameSummary:
    mass = mass_summary(frame.measure)
    return FrameSummary(
        field=frame.field.value,
        dim=frame.dim,
        node_count=frame.size,
        total_mass=mass.total,
        diagonal_mass=mass.diagonal,
        offdiag_mass=mass.offdiag,
        atomic=frame.measure.atomic,
        normalized=frame.is_normalized,
    )


def operator_digest(report: FrameOperatorReport) -> OperatorDigest:
    ratio = report.bound_ratio
    return OperatorDigest(
        lower=report.lower,
        upper=report.upper,
        trace=report.trace,
        trace_sq=report.trace_sq,
        tight=report.tight,
        bound_ratio=ratio if math.isfinite(ratio) else None,
        eigenvalues=[float(value) for value in report.eigenvalues],
    )


def analyze_frame(frame: SampledFrame, source: str, orders: Sequence[int] = (1,),
                  ps: Sequence[float] = (4.0,), rs: Sequence[float] = (2.0,)) -> AnalysisReport:
    """
    Full analysis of one frame.

    Args:
        frame: The family to analyze
        source: Where the frame came from (file path or builtin spec)
        orders: Welch orders m
        ps: p-Welch exponents
        rs: Trace-power exponents

    Returns:
        AnalysisReport

    Raises:
        FrameValidationError: If the frame has more nodes than WELCHKIT_MAX_NODES,
            since every metric works on dense n×n Gram matrices
    """
    limit = get_setting("MAX_NODES")
    if frame.size > limit:
        raise FrameValidationError(
            f"{frame.size} nodes exceed the analysis limit of {limit} (raise WELCHKIT_MAX_NODES to allow more)"
        )
    logger.info(f"Analyzing {source}: {frame.size} nodes in {frame.field.value}^{frame.dim}")
    return AnalysisReport(
        source=source,
        frame=summarize_frame(frame),
        operator=operator_digest(frame_operator(frame)),
        metrics=metrics_report(frame),
        bounds=check_all(frame, orders=orders, ps=ps, rs=rs),
    )


def bounds_table(n: int, d: int, field: FieldTag, orders: Sequence[int] = (1,),
                 ps: Sequence[float] = ()) -> BoundsTable:
    """
    Closed-form bounds for n unit vectors in K^d.

    Raises:
        InvalidArgumentError: If n < d, an order is not positive or some p ≤ 2
    """
    field = FieldTag(field)
    rows = []
    for m in orders:
        bounds = welch_discrete(n, d, m)
        rows.append(WelchRow(
            m=m,
            sym_dim=bounds.sym_dim,
            sum_lb=bounds.sum_lb,
            max_lb=bounds.max_lb,
            max_lb_sqrt=math.sqrt(max(0.0, bounds.max_lb)) if bounds.max_lb is not None else None,
        ))
    p_rows = {repr(float(p)): p_welch_discrete(n, d, p) for p in ps}
    if n >= 2:
        alternatives = alt_bounds(n, d, field)
    else:
        reason = "needs n ≥ 2"
        alternatives = AltBounds(n=n, d=d, field=field.value, reasons={
            name: reason for name in ("bukh_cox", "orthoplex", "levenstein", "exponential")
        })
    limit = gerzon(d, field)
    return BoundsTable(n=n, d=d, field=field.value, welch=rows, p_welch=p_rows,
                       alternatives=alternatives, gerzon=limit, exceeds_gerzon=n > limit)


def circle_example(nodes: int = 513) -> CircleExampleReport:
    """
    Checks on τ_α = (cos α, sin α) over [0, 2π] with Lebesgue measure.

    The frame operator is πI, the frame potential and the first-order integral
    Welch bound are both 2π², and the sup bound 1/2 is far below the sup of
    |⟨τ_α, τ_β⟩|² = 1.

    Args:
        nodes: Trapezoid nodes, at least 3

    Returns:
        CircleExampleReport
    """
    if nodes < 3:
        raise InvalidArgumentError(f"the circle example needs at least 3 nodes, got {nodes}")
    frame = cos_sin(nodes)
    two_pi_sq = 2.0 * math.pi ** 2

    s = frame_operator(frame).S.entries
    operator_error = float(np.linalg.norm(s - math.pi * np.eye(2)) / np.linalg.norm(math.pi * np.eye(2)))
    potential = frame_potential(frame)
    potential_error = abs(potential - two_pi_sq) / two_pi_sq
    integral, sup = welch_reports(frame, 1)

    checks = [
        ExampleCheck(name="frame_operator", measured=operator_error, expected=0.0,
                     tolerance=CIRCLE_OPERATOR_TOL, passed=operator_error <= CIRCLE_OPERATOR_TOL,
                     statement="‖S − πI‖_F / ‖πI‖_F"),
        ExampleCheck(name="frame_potential", measured=potential, expected=two_pi_sq,
                     tolerance=CIRCLE_POTENTIAL_TOL, passed=potential_error <= CIRCLE_POTENTIAL_TOL,
                     statement="∬|⟨τα,τβ⟩|² = 2π²"),
        ExampleCheck(name="welch_integral", measured=integral.rhs, expected=two_pi_sq,
                     tolerance=CIRCLE_RHS_TOL,
                     passed=bool(integral.equality) and abs(integral.rhs - two_pi_sq) <= CIRCLE_RHS_TOL * two_pi_sq,
                     statement="μ(Ω)²/d = 2π² with equality"),
        ExampleCheck(name="sup_coherence", measured=sup.lhs, expected=1.0,
                     tolerance=1.0 - CIRCLE_SUP_MIN, passed=sup.lhs >= CIRCLE_SUP_MIN and bool(sup.satisfied),
                     statement="sup_(α≠β)|⟨τα,τβ⟩|² ≈ 1"),
        ExampleCheck(name="sup_lower_bound", measured=sup.rhs, expected=0.5, tolerance=0.0,
                     passed=sup.rhs == 0.5, statement="(μ(Ω)²/d − 0)/μ(Ω)² = 1/2"),
    ]
    failed = [check.name for check in checks if not check.passed]
    if failed:
        logger.warning(f"Circle example with {nodes} nodes failed: {failed}")
    return CircleExampleReport(nodes=nodes, checks=checks)


def gram_distribution(frame: SampledFrame) -> Iterator[Tuple[int, int, float, float]]:
    """
    Off-diagonal Gram magnitudes for plotting.

    Yields:
        (α, β, |⟨τ_α, τ_β⟩|, w_α·w_β) for α < β
    """
    moduli = np.abs(frame.gram())
    weights = frame.weights
    rows, cols = np.triu_indices(frame.size, k=1)
    for alpha, beta in zip(rows.tolist(), cols.tolist()):
        yield alpha, beta, float(moduli[alpha, beta]), float(weights[alpha] * weights[beta])
