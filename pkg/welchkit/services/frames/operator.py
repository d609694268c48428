"""
Frame operator, analysis/synthesis and dual frames of a sampled family.

Vectors are the rows of T (n×d). With weights w:

    analysis    θh      = (⟨h, τ_α⟩)_α          = conj(T)·h
    synthesis   θ*c     = Σ_α w_α c_α τ_α        = Tᵀ·(w∘c)
    operator    S = θ*θ = Σ_α w_α τ_α τ_α*       = Tᵀ·diag(w)·conj(T)
"""

import logging
import math
from typing import Optional, Tuple, Union

import numpy as np

from ...errors import InvalidArgumentError, SingularOperatorError
from ...models.frame import FieldTag, FrameOperatorReport, SampledFrame
from ...models.measure import QuadratureMeasure
from ...models.numerics import HermitianMatrix
from ...utils.summation import stable_sum, weighted_double_sum
from ..measure.quadrature import counting_measure, require_count, weighted_atoms
from ..numerics.linalg import PSD_CLAMP_TOL, SPD_TOL, as_square, eig_hermitian, inverse_sqrt, solve_hpd

logger = logging.getLogger(__name__)

DUAL_PAIR_TOL = 1e-8
MINIMAL_DUAL_TOL = 1e-9


def from_vectors(vectors, field: FieldTag = FieldTag.COMPLEX, weights=None, atomic: bool = True,
                 measure: Optional[QuadratureMeasure] = None, require_normalized: bool = False) -> SampledFrame:
    """
    Build a frame from explicit vectors.

    Args:
        vectors: Array-like of shape (n, d)
        field: Scalar field
        weights: Node weights; counting measure when omitted
        atomic: Atomicity of the weighted measure (ignored for the counting measure)
        measure: Explicit measure, overrides weights
        require_normalized: Reject families with ‖τ_α‖ ≠ 1

    Returns:
        SampledFrame
    """
    rows = np.array(vectors, dtype=complex)
    if measure is None:
        n = rows.shape[0] if rows.ndim >= 1 else 0
        if weights is None:
            measure = counting_measure(n)
        elif atomic:
            measure = weighted_atoms(weights)
        else:
            weights = np.array(weights, dtype=float).ravel()
            measure = QuadratureMeasure.create(np.arange(1, weights.size + 1), weights, atomic=False)
    return SampledFrame.create(field, measure, rows, require_normalized=require_normalized)


def analysis(frame: SampledFrame, h) -> np.ndarray:
    """θh = (⟨h, τ_α⟩)_α."""
    vec = np.array(h, dtype=complex).ravel()
    if vec.size != frame.dim:
        raise InvalidArgumentError(f"vector has {vec.size} entries, frame dimension is {frame.dim}")
    return frame.vectors.conj() @ vec


def synthesis(frame: SampledFrame, coefficients) -> np.ndarray:
    """θ*c = Σ_α w_α c_α τ_α."""
    coeffs = np.array(coefficients, dtype=complex).ravel()
    if coeffs.size != frame.size:
        raise InvalidArgumentError(f"got {coeffs.size} coefficients for {frame.size} nodes")
    return frame.vectors.T @ (frame.weights * coeffs)


def operator_matrix(frame: SampledFrame) -> HermitianMatrix:
    """S = Σ_α w_α τ_α τ_α* as a HermitianMatrix."""
    t = frame.vectors
    s = (t.T * frame.weights) @ t.conj()
    return HermitianMatrix.from_array(0.5 * (s + s.conj().T))


def frame_operator(frame: SampledFrame) -> FrameOperatorReport:
    """
    Frame operator with its extreme eigenvalues (the optimal frame bounds).

    Args:
        frame: Any sampled family

    Returns:
        FrameOperatorReport; `lower` is 0 for families that do not span
    """
    s = operator_matrix(frame)
    values = np.array(eig_hermitian(s).eigenvalues, dtype=float)
    top = float(np.max(np.abs(values)))
    values[np.abs(values) <= PSD_CLAMP_TOL * top] = 0.0
    values.setflags(write=False)
    return FrameOperatorReport(
        S=s,
        eigenvalues=values,
        lower=float(values[0]),
        upper=float(values[-1]),
        trace=math.fsum(values),
        trace_sq=math.fsum(values * values),
    )


def tensor_power(frame: SampledFrame, m: int) -> SampledFrame:
    """
    The family {τ_α^{⊗m}} in K^{d^m} over the same measure.

    Its frame operator S_m satisfies Tra(S_m²) = ∬|⟨τ_α, τ_β⟩|^{2m}, which
    gives the order-m double integral from a d^m × d^m matrix instead of an
    n × n Gram matrix.
    """
    m = require_count(m, "m")
    rows = frame.vectors
    power = rows
    for _ in range(m - 1):
        power = np.einsum("ni,nj->nij", power, rows).reshape(frame.size, -1)
    return SampledFrame.create(frame.field, frame.measure, power)


def trace_identities(frame: SampledFrame) -> Tuple[float, float]:
    """
    Tra(S) and Tra(S²) computed from the family directly.

    Returns:
        (Σ_α w_α‖τ_α‖², Σ_α Σ_β w_α w_β |⟨τ_α, τ_β⟩|²)
    """
    norms_sq = np.sum(np.abs(frame.vectors) ** 2, axis=1)
    trace_direct = stable_sum(frame.weights * norms_sq)
    trace_sq_direct = weighted_double_sum(frame.weights, np.abs(frame.gram()) ** 2)
    return trace_direct, trace_sq_direct


def _require_spanning(report: FrameOperatorReport) -> None:
    if report.upper <= 0.0 or report.lower <= SPD_TOL * report.upper:
        raise SingularOperatorError(
            f"family does not span: frame bounds ({report.lower:.3e}, {report.upper:.3e})"
        )


def canonical_dual(frame: SampledFrame) -> SampledFrame:
    """
    The canonical dual {S⁻¹τ_α} over the same measure.

    Raises:
        SingularOperatorError: If the frame operator is rank deficient
    """
    report = frame_operator(frame)
    _require_spanning(report)
    dual_rows = solve_hpd(report.S, frame.vectors.T).T
    return SampledFrame.create(frame.field, frame.measure, dual_rows)


def parseval(frame: SampledFrame) -> SampledFrame:
    """
    The canonical Parseval frame {S^{-1/2}τ_α}; its frame operator is I.

    Raises:
        SingularOperatorError: If the frame operator is rank deficient
    """
    root = inverse_sqrt(operator_matrix(frame)).entries
    return SampledFrame.create(frame.field, frame.measure, frame.vectors @ root.T)


def _check_compatible(first: SampledFrame, second: SampledFrame) -> None:
    if first.field != second.field or first.dim != second.dim or first.size != second.size:
        raise InvalidArgumentError(
            f"frames are not comparable: ({first.field.value}, d={first.dim}, n={first.size}) vs "
            f"({second.field.value}, d={second.dim}, n={second.size})"
        )


def is_dual_pair(frame: SampledFrame, dual: SampledFrame) -> Tuple[bool, float]:
    """
    Check θ*_ω θ_τ = I via M = Σ_α w_α ω_α τ_α*.

    Args:
        frame: The family τ
        dual: Candidate dual ω over the same nodes (the weights of `frame` are used)

    Returns:
        (‖M − I‖_F ≤ 1e-8·√d, ‖M − I‖_F)

    Raises:
        InvalidArgumentError: If field, dimension or node count differ
    """
    _check_compatible(frame, dual)
    mixed = (dual.vectors.T * frame.weights) @ frame.vectors.conj()
    residual = float(np.linalg.norm(mixed - np.eye(frame.dim)))
    return residual <= DUAL_PAIR_TOL * math.sqrt(frame.dim), residual


def require_dual_pair(frame: SampledFrame, dual: SampledFrame) -> None:
    ok, residual = is_dual_pair(frame, dual)
    if not ok:
        raise InvalidArgumentError(f"families are not a dual pair (residual {residual:.3e})")


def minimal_dual_check(frame: SampledFrame, dual: SampledFrame) -> Tuple[bool, float]:
    """
    Check that `dual` uses at least the energy of the canonical dual.

    For every dual ω, S_ω − S_τ⁻¹ is positive semidefinite.

    Returns:
        (holds within 1e-9·‖S_ω‖, minimum eigenvalue of S_ω − S_τ⁻¹)
    """
    require_dual_pair(frame, dual)
    s_dual = operator_matrix(dual).entries
    s_canonical = operator_matrix(canonical_dual(frame)).entries
    diff = s_dual - s_canonical
    lowest = float(eig_hermitian(0.5 * (diff + diff.conj().T)).eigenvalues[0])
    return lowest >= -MINIMAL_DUAL_TOL * float(np.linalg.norm(s_dual)), lowest


def trace_via_frame(op, frame: SampledFrame) -> Union[float, complex]:
    """
    Tra(T) = ∫⟨T S^{-1/2}τ_α, S^{-1/2}τ_α⟩ dμ.

    Args:
        op: d×d matrix
        frame: A spanning family

    Returns:
        The trace; a float when the imaginary part is negligible

    Raises:
        SingularOperatorError: If the family does not span
    """
    matrix = as_square(op, frame.dim)
    root = inverse_sqrt(operator_matrix(frame)).entries
    u = frame.vectors @ root.T
    values = np.sum((u @ matrix.T) * u.conj(), axis=1)
    real = stable_sum(frame.weights * values.real)
    imag = stable_sum(frame.weights * values.imag)
    if abs(imag) <= 1e-12 * max(1.0, abs(real)):
        return real
    return complex(real, imag)
