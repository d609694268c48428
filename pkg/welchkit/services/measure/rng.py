"""
Seeded random streams.

All randomness goes through numpy's PCG64 bit generator seeded with a
SeedSequence. The stream index is folded into the spawn key, so independent
consumers (measure sampling, optimizer restarts, test sweeps) never share
draws and the same (seed, stream) pair gives the same numbers on every
platform numpy supports.
"""

from typing import Optional

import numpy as np

from ...errors import InvalidArgumentError
from ...models.frame import FieldTag

# Stream ids used by the library; callers may pass any non-negative int.
STREAM_SPHERE = 0
STREAM_RANDOM_FRAME = 1
STREAM_OPTIMIZER = 2
STREAM_PROBE = 3


def make_rng(seed: int, stream: int = 0, substream: Optional[int] = None) -> np.random.Generator:
    """
    Build a generator for (seed, stream[, substream]).

    Args:
        seed: Non-negative user seed
        stream: Independent stream id
        substream: Optional index inside the stream, e.g. an optimizer restart

    Returns:
        np.random.Generator backed by PCG64
    """
    if int(seed) < 0:
        raise InvalidArgumentError(f"seed must be non-negative, got {seed}")
    key = (int(stream),) if substream is None else (int(stream), int(substream))
    sequence = np.random.SeedSequence(int(seed), spawn_key=key)
    return np.random.Generator(np.random.PCG64(sequence))


def unit_vectors(rng: np.random.Generator, n: int, d: int, field: FieldTag) -> np.ndarray:
    """
    Draw n i.i.d. uniform unit vectors in K^d as rows of a complex array.

    Gaussian sampling followed by normalization; for the real field the
    imaginary parts are exactly zero.
    """
    field = FieldTag(field)
    if field is FieldTag.COMPLEX:
        raw = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    else:
        raw = rng.standard_normal((n, d)).astype(complex)
    norms = np.linalg.norm(raw, axis=1, keepdims=True)
    # zero rows are redrawn
    while np.any(norms == 0.0):
        bad = np.flatnonzero(norms[:, 0] == 0.0)
        raw[bad] = unit_vectors(rng, bad.size, d, field)
        norms = np.linalg.norm(raw, axis=1, keepdims=True)
    return raw / norms
