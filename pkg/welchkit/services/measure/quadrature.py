"""
Quadrature measures standing in for (Ω, μ).

Atomic measures (counting, weighted point masses) give the diagonal of Ω×Ω
mass Σ w²; for discretized atomless measures the diagonal mass is exactly 0
and double integrals run over the full node grid.
"""

import logging
import math

import numpy as np

from ...errors import InvalidArgumentError
from ...models.frame import FieldTag
from ...models.measure import MassSummary, QuadratureMeasure
from .rng import STREAM_SPHERE, make_rng, unit_vectors

logger = logging.getLogger(__name__)


def require_count(value, name: str, minimum: int = 1) -> int:
    """Validate an integer argument with a lower bound."""
    if isinstance(value, bool) or not float(value).is_integer():
        raise InvalidArgumentError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise InvalidArgumentError(f"{name} must be at least {minimum}, got {value}")
    return value


def counting_measure(n: int) -> QuadratureMeasure:
    """
    Counting measure on {1, …, n}.

    Args:
        n: Number of atoms, at least 1

    Returns:
        QuadratureMeasure with unit weights and atomic=True
    """
    n = require_count(n, "n")
    return QuadratureMeasure.create(np.arange(1, n + 1), np.ones(n), atomic=True)


def weighted_atoms(weights) -> QuadratureMeasure:
    """Point masses with the given weights, labeled 1…n."""
    weights = np.array(weights, dtype=float).ravel()
    return QuadratureMeasure.create(np.arange(1, weights.size + 1), weights, atomic=True)


def uniform_interval(a: float, b: float, n: int) -> QuadratureMeasure:
    """
    Composite trapezoid rule for Lebesgue measure on [a, b].

    Args:
        a: Left end
        b: Right end, b > a
        n: Number of equally spaced nodes, at least 2

    Returns:
        QuadratureMeasure with end weights h/2, interior weights h and atomic=False
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise InvalidArgumentError(f"interval needs finite a < b, got [{a}, {b}]")
    n = require_count(n, "n", minimum=2)
    h = (b - a) / (n - 1)
    weights = np.full(n, h)
    weights[0] = weights[-1] = 0.5 * h
    return QuadratureMeasure.create(np.linspace(a, b, n), weights, atomic=False)


def monte_carlo_sphere(d: int, field: FieldTag, n: int, seed: int) -> QuadratureMeasure:
    """
    Normalized measure on the unit sphere of K^d sampled by Monte Carlo.

    Node labels are the sampled unit vectors (shape (n, d)); every weight is
    1/n so μ(Ω) = 1.

    Args:
        d: Dimension
        field: Scalar field
        n: Sample count
        seed: Seed for the PCG64 stream

    Returns:
        QuadratureMeasure with atomic=False
    """
    d = require_count(d, "d")
    n = require_count(n, "n")
    rng = make_rng(seed, STREAM_SPHERE)
    samples = unit_vectors(rng, n, d, FieldTag(field))
    logger.debug(f"Sampled {n} unit vectors in {FieldTag(field).value}^{d} (seed={seed})")
    return QuadratureMeasure.create(samples, np.full(n, 1.0 / n), atomic=False)


def mass_summary(measure: QuadratureMeasure) -> MassSummary:
    """
    μ(Ω), (μ×μ)(Δ) and the off-diagonal mass.

    Args:
        measure: A validated QuadratureMeasure

    Returns:
        MassSummary with offdiag = total² − diagonal
    """
    weights = measure.weights
    total = math.fsum(weights)
    diagonal = math.fsum(weights * weights) if measure.atomic else 0.0
    offdiag = max(total * total - diagonal, 0.0)
    return MassSummary(total=total, diagonal=diagonal, offdiag=offdiag)
