"""
Builtin frame families.

Every builtin can be requested from the command line with the compact
`name:params` syntax, e.g. `cos_sin:513`, `onb:3`, `harmonic:7,3`,
`random_unit:8,3,C,5` or plain `sic_d2`.
"""

import logging
import math
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ...errors import InvalidArgumentError
from ...models.frame import FieldTag, SampledFrame
from ..measure.quadrature import counting_measure, monte_carlo_sphere, require_count, uniform_interval
from ..measure.rng import STREAM_RANDOM_FRAME, make_rng, unit_vectors

logger = logging.getLogger(__name__)


def cos_sin(n_nodes: int = 513) -> SampledFrame:
    """(cos α, sin α) on [0, 2π] with the trapezoid rule."""
    measure = uniform_interval(0.0, 2.0 * math.pi, n_nodes)
    alpha = measure.nodes
    return SampledFrame.create(FieldTag.REAL, measure, np.column_stack([np.cos(alpha), np.sin(alpha)]))


def onb(d: int, field: FieldTag = FieldTag.COMPLEX) -> SampledFrame:
    """Standard basis of K^d with the counting measure."""
    d = require_count(d, "d")
    return SampledFrame.create(field, counting_measure(d), np.eye(d))


def simplex_etf(d: int) -> SampledFrame:
    """
    d+1 unit vectors in R^d with pairwise inner product -1/d.

    The centered standard basis of R^{d+1} expressed in Helmert coordinates.
    """
    d = require_count(d, "d")
    helmert = np.zeros((d, d + 1))
    for k in range(1, d + 1):
        helmert[k - 1, :k] = 1.0
        helmert[k - 1, k] = -float(k)
        helmert[k - 1] /= math.sqrt(k * (k + 1))
    vectors = helmert.T * math.sqrt((d + 1) / d)
    return SampledFrame.create(FieldTag.REAL, counting_measure(d + 1), vectors, require_normalized=True)


def harmonic(n: int, d: int) -> SampledFrame:
    """First d columns of the n-point character table, scaled to unit rows."""
    n = require_count(n, "n")
    d = require_count(d, "d")
    if d > n:
        raise InvalidArgumentError(f"harmonic frame needs d ≤ n, got n={n}, d={d}")
    j = np.arange(n)[:, None]
    k = np.arange(d)[None, :]
    vectors = np.exp(2j * math.pi * j * k / n) / math.sqrt(d)
    return SampledFrame.create(FieldTag.COMPLEX, counting_measure(n), vectors)


def sic_d2() -> SampledFrame:
    """The tetrahedral SIC in C²: pairwise |⟨·,·⟩|² = 1/3."""
    vectors = [[1.0, 0.0]]
    for k in range(3):
        vectors.append([1.0 / math.sqrt(3.0), math.sqrt(2.0 / 3.0) * np.exp(2j * math.pi * k / 3.0)])
    return SampledFrame.create(FieldTag.COMPLEX, counting_measure(4), vectors, require_normalized=True)


def random_unit(n: int, d: int, field: FieldTag = FieldTag.COMPLEX, seed: int = 0) -> SampledFrame:
    """n seeded uniform unit vectors with the counting measure."""
    n = require_count(n, "n")
    d = require_count(d, "d")
    rng = make_rng(seed, STREAM_RANDOM_FRAME)
    return SampledFrame.create(field, counting_measure(n), unit_vectors(rng, n, d, FieldTag(field)))


def cp_monte_carlo(d: int, field: FieldTag = FieldTag.COMPLEX, n: int = 1000, seed: int = 0) -> SampledFrame:
    """The sampled sphere points of monte_carlo_sphere used as the family itself."""
    measure = monte_carlo_sphere(d, field, n, seed)
    return SampledFrame.create(field, measure, measure.nodes)


# name -> (builder, [(param name, parser)])
BUILTINS: Dict[str, Tuple[Callable[..., SampledFrame], List[Tuple[str, Callable[[str], Any]]]]] = {
    "cos_sin": (cos_sin, [("n_nodes", int)]),
    "onb": (onb, [("d", int), ("field", FieldTag)]),
    "simplex_etf": (simplex_etf, [("d", int)]),
    "harmonic": (harmonic, [("n", int), ("d", int)]),
    "sic_d2": (sic_d2, []),
    "random_unit": (random_unit, [("n", int), ("d", int), ("field", FieldTag), ("seed", int)]),
    "cp_monte_carlo": (cp_monte_carlo, [("d", int), ("field", FieldTag), ("n", int), ("seed", int)]),
}


def builtin(name: str, **params) -> SampledFrame:
    """
    Build a named builtin frame.

    Args:
        name: One of BUILTINS
        **params: Keyword parameters of the builder

    Returns:
        SampledFrame

    Raises:
        InvalidArgumentError: For an unknown name or bad parameters
    """
    if name not in BUILTINS:
        raise InvalidArgumentError(f"unknown builtin frame '{name}' (known: {', '.join(sorted(BUILTINS))})")
    factory, spec = BUILTINS[name]
    allowed = {param for param, _ in spec}
    unknown = set(params) - allowed
    if unknown:
        raise InvalidArgumentError(f"builtin '{name}' does not take {', '.join(sorted(unknown))}")
    try:
        return factory(**params)
    except TypeError as e:
        raise InvalidArgumentError(f"bad parameters for builtin '{name}': {e}")


def builtin_from_spec(spec: str) -> SampledFrame:
    """
    Parse `name:p1,p2,…` and build the frame.

    Args:
        spec: Compact builtin spec, e.g. "harmonic:7,3"

    Returns:
        SampledFrame
    """
    name, _, raw = spec.strip().partition(":")
    name = name.strip()
    if name not in BUILTINS:
        raise InvalidArgumentError(f"unknown builtin frame '{name}' (known: {', '.join(sorted(BUILTINS))})")
    _, params_spec = BUILTINS[name]
    values = [item.strip() for item in raw.split(",")] if raw.strip() else []
    if len(values) > len(params_spec):
        raise InvalidArgumentError(f"builtin '{name}' takes at most {len(params_spec)} parameters, got {len(values)}")
    params = {}
    for (param, parse), value in zip(params_spec, values):
        try:
            params[param] = parse(value.upper()) if parse is FieldTag else parse(value)
        except ValueError:
            raise InvalidArgumentError(f"bad value '{value}' for parameter '{param}' of builtin '{name}'")
    logger.info(f"Building builtin frame {name} with {params}")
    return builtin(name, **params)
