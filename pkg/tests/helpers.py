import numpy as np

from welchkit.models import FieldTag
from welchkit.services.frames import from_vectors, random_unit
from welchkit.services.measure import make_rng

SWEEP_STREAM = 7


def random_frame(index: int, weighted: bool = False, normalized: bool = True):
    """
    Seeded random frame number `index` of the test sweeps.

    Alternates fields, with n ≤ 32 and d ≤ 8. Weighted frames draw positive
    weights; unnormalized frames rescale the vectors.
    """
    rng = make_rng(index, SWEEP_STREAM)
    field = FieldTag.COMPLEX if index % 2 else FieldTag.REAL
    d = int(rng.integers(1, 9))
    n = int(rng.integers(d, 33))
    frame = random_unit(n, d, field, seed=index)
    if normalized and not weighted:
        return frame
    vectors = np.array(frame.vectors)
    if not normalized:
        vectors = vectors * rng.uniform(0.5, 2.0, size=(n, 1))
    weights = rng.uniform(0.2, 3.0, size=n) if weighted else None
    return from_vectors(vectors, field, weights=weights)
