"""
Deterministic reductions for quadrature sums.

Pairwise double sums are reduced with `math.fsum`, which is correctly rounded
and therefore independent of evaluation order and of how the terms were
produced (vectorized, chunked or threaded).
"""

import math

import numpy as np


def stable_sum(values) -> float:
    """
    Correctly rounded sum of a real array of any shape.

    Args:
        values: Array-like of real numbers

    Returns:
        The sum as a Python float
    """
    return math.fsum(np.asarray(values, dtype=float).ravel())


def weighted_double_sum(weights: np.ndarray, kernel: np.ndarray) -> float:
    """
    Compute Σ_α Σ_β w_α w_β K[α, β] for a real kernel matrix.

    Args:
        weights: Node weights, shape (n,)
        kernel: Real kernel values, shape (n, n)

    Returns:
        The double quadrature sum
    """
    return stable_sum(np.outer(weights, weights) * kernel)
