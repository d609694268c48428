"""
Coherence lower bounds for finite families beyond Welch, and Gerzon's bound.

Z(d, K) is Gerzon's bound: d² over C, d(d+1)/2 over R. All bounds here are
on max_{j≠k} |⟨τ_j, τ_k⟩| (not squared), with m = dim_R(K)/2.
"""

import logging
import math
from typing import List

import numpy as np

from ...models.frame import FieldTag, SampledFrame
from ...models.reports import AltBounds, BoundReport
from ..measure.quadrature import require_count

logger = logging.getLogger(__name__)


def gerzon(d: int, field: FieldTag) -> int:
    """Maximum number of equiangular lines in K^d."""
    d = require_count(d, "d")
    if FieldTag(field) is FieldTag.COMPLEX:
        return d * d
    return d * (d + 1) // 2


def bukh_cox(n: int, d: int, field: FieldTag) -> float:
    m = FieldTag(field).m_field
    z = gerzon(n - d, field)
    return z / (n * (1.0 + m * (n - d - 1) * math.sqrt(1.0 / m + n - d)) - z)


def orthoplex(d: int) -> float:
    return 1.0 / math.sqrt(d)


def levenstein_radicand(n: int, d: int, field: FieldTag) -> float:
    m = FieldTag(field).m_field
    return (n * (m + 1.0) - d * (m * d + 1.0)) / ((n - d) * (m * d + 1.0))


def exponential(n: int, d: int) -> float:
    return 1.0 - 2.0 * n ** (-1.0 / (d - 1))


def alt_bounds(n: int, d: int, field: FieldTag) -> AltBounds:
    """
    Bukh-Cox, orthoplex (Rankin), Levenstein and exponential bounds.

    Args:
        n: Number of unit vectors, at least 2
        d: Dimension
        field: Scalar field

    Returns:
        AltBounds; inapplicable entries are None with a reason
    """
    n = require_count(n, "n", minimum=2)
    d = require_count(d, "d")
    field = FieldTag(field)
    z = gerzon(d, field)
    values = {}
    reasons = {}

    if n > d:
        values["bukh_cox"] = bukh_cox(n, d, field)
    else:
        reasons["bukh_cox"] = f"needs n > d (n={n}, d={d})"

    if n > z:
        values["orthoplex"] = orthoplex(d)
        radicand = levenstein_radicand(n, d, field)
        if radicand >= 0.0:
            values["levenstein"] = math.sqrt(radicand)
        else:
            reasons["levenstein"] = f"negative radicand {radicand!r}"
    else:
        reasons["orthoplex"] = f"needs n > Z(d, K) = {z}"
        reasons["levenstein"] = f"needs n > Z(d, K) = {z}"

    if d >= 2:
        values["exponential"] = exponential(n, d)
    else:
        reasons["exponential"] = "needs d ≥ 2"

    return AltBounds(n=n, d=d, field=field.value, reasons=reasons, **values)


def coherence_alt_reports(frame: SampledFrame) -> List[BoundReport]:
    """
    Check every applicable alternative bound against the measured coherence.

    Only meaningful for unit vectors with the counting measure; other
    families get not-applicable reports.
    """
    names = ["bukh_cox", "orthoplex", "levenstein", "exponential"]
    counting = frame.measure.atomic and bool(np.all(frame.weights == 1.0))
    if not (counting and frame.is_normalized and frame.size >= 2):
        reason = "needs at least two unit vectors with the counting measure"
        return [BoundReport.not_applicable(name, reason) for name in names]

    gram = np.abs(frame.gram())
    np.fill_diagonal(gram, -np.inf)
    coherence = float(np.max(gram))
    bounds = alt_bounds(frame.size, frame.dim, frame.field)
    values = bounds.applicable()
    reports = []
    for name in names:
        statement = f"max_(j≠k)|⟨τj,τk⟩| ≥ {name} bound"
        if name in values:
            reports.append(BoundReport.evaluate(name, coherence, values[name], statement=statement,
                                                vacuous=values[name] < 0.0, node_count=frame.size))
        else:
            reports.append(BoundReport.not_applicable(name, bounds.reasons[name], statement=statement))
    return reports
