"""Power-of-two weight vectors combining the facet normals of a face."""
from functools import lru_cache
from itertools import product
from typing import List, Tuple

WeightVector = Tuple[int, ...]

REDUCED_CODIMENSION_THREE: List[WeightVector] = [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


@lru_cache(maxsize=None)
def _weight_sets(d: int, k: int) -> Tuple[WeightVector, ...]:
    codim = d - k
    if codim == 1:
        return ((1,),)
    if codim == 2:
        return ((1, 1),)
    if codim == 3:
        return tuple(REDUCED_CODIMENSION_THREE)
    powers = [2 ** l for l in range(codim - 1)]  # 0 <= l <= codim - 2
    return tuple(product(powers, repeat=codim))


def weight_sets(d: int, k: int) -> List[WeightVector]:
    """
    Weight vectors for k-faces of a d-polytope, sorted lexicographically.

    Args:
        d: Dimension, at least 1.
        k: Face dimension, ``0 <= k <= d - 1``.

    Raises:
        ValueError: If k is out of range.
    """
    if d < 1 or not 0 <= k <= d - 1:
        raise ValueError(f"face dimension {k} out of range for d = {d}")
    return list(_weight_sets(d, k))


def mu_count(d: int) -> int:
    """Number of polynomials the construction produces for a simple d-polytope."""
    if d < 2:
        raise ValueError("mu_count needs d >= 2")
    return sum(len(_weight_sets(d, k)) for k in range(d)) + 1
