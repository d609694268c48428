"""
Objectives on configurations of n vectors in K^d (rows of X) and their gradients.

Gradients are Euclidean gradients over the real coordinates: for complex
entries the returned array holds ∂f/∂Re x + i·∂f/∂Im x. With G = X·X*,
g = |G|²:

    potential of order m      f = Σ_{j,k} g_jk^m
                              ∇f = 4·(m·g^{m-1} ∘ G)·X
    smoothed coherence        f = (Σ_{j<k} g_jk^p)^{1/p}
                              ∇f = 2·R^{1/p-1}·(r^{p-1} ∘ G)·X,  r = g/max g, R = Σ_{j<k} r^p

The smoothed coherence tends to max_{j≠k} g = M² as p grows.
"""

from typing import Callable, Tuple

import numpy as np

Objective = Callable[[np.ndarray], Tuple[float, np.ndarray]]


def gram(x: np.ndarray) -> np.ndarray:
    return x @ x.conj().T


def potential(x: np.ndarray, m: int = 1) -> Tuple[float, np.ndarray]:
    """Order-m frame potential and its gradient."""
    g_mat = gram(x)
    g = np.abs(g_mat) ** 2
    value = float(np.sum(g ** m))
    weights = m * g ** (m - 1) if m > 1 else np.ones_like(g)
    grad = 4.0 * (weights * g_mat) @ x
    return value, grad


def smoothed_coherence(x: np.ndarray, p: float) -> Tuple[float, np.ndarray, float]:
    """
    Smoothed squared coherence, its gradient, and the exact max_{j≠k} g.

    The max is factored out before raising to the power p, so large p does not
    overflow or underflow the sum.
    """
    n = x.shape[0]
    g_mat = gram(x)
    g = np.abs(g_mat) ** 2
    np.fill_diagonal(g, 0.0)
    gmax = float(np.max(g)) if n > 1 else 0.0
    if gmax == 0.0:
        return 0.0, np.zeros_like(x), 0.0
    r = g / gmax
    total = float(np.sum(np.triu(r, 1) ** p))
    value = gmax * total ** (1.0 / p)
    weights = r ** (p - 1.0)
    np.fill_diagonal(weights, 0.0)
    grad = 2.0 * total ** (1.0 / p - 1.0) * (weights * g_mat) @ x
    return value, grad, gmax


def project_tangent(x: np.ndarray, grad: np.ndarray) -> np.ndarray:
    """Remove the radial part of each row: ∇_j − Re⟨∇_j, x_j⟩·x_j."""
    radial = np.real(np.sum(grad * x.conj(), axis=1, keepdims=True))
    return grad - radial * x


def retract(x: np.ndarray) -> np.ndarray:
    """Map each row back to the unit sphere."""
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def finite_difference_gradient(func: Callable[[np.ndarray], float], x: np.ndarray,
                               h: float = 1e-6) -> np.ndarray:
    """
    Central differences over every real coordinate of x.

    Returns:
        Array shaped like x; complex entries carry (∂/∂Re, ∂/∂Im) as re/im parts
    """
    result = np.zeros_like(x)
    complex_entries = np.iscomplexobj(x)
    for index in np.ndindex(x.shape):
        directions = [1.0, 1j] if complex_entries else [1.0]
        for direction in directions:
            plus = x.copy()
            minus = x.copy()
            plus[index] += h * direction
            minus[index] -= h * direction
            slope = (func(plus) - func(minus)) / (2.0 * h)
            result[index] += slope * direction
    return result
