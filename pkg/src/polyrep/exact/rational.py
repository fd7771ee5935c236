"""
Exact rational scalars and vectors.

All quantities in polyrep are ``fractions.Fraction`` values; vectors are
tuples of fractions. ``Fraction`` keeps itself reduced with a positive
denominator, so equality and ordering are exact.
"""
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
RatVec = Tuple[Fraction, ...]
RatLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r'^([+-]?\d+)(?:/(\d+))?$')


def to_rat(value: RatLike) -> Fraction:
    """
    Convert an int, Fraction or ``"p/q"`` string into a Fraction.

    Floats are refused: they would smuggle rounding into exact data.

    Raises:
        ValueError: On floats, malformed strings and zero denominators.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value.strip())
        if not match:
            raise ValueError(f"not a rational number: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ValueError("zero denominator")
        return Fraction(numerator, denominator)
    raise ValueError(f"cannot convert {type(value).__name__} to a rational")


def vec(values: Iterable[RatLike]) -> RatVec:
    """Build an exact vector."""
    return tuple(to_rat(v) for v in values)


def zero_vec(dim: int) -> RatVec:
    return (Fraction(0),) * dim


def unit_vec(dim: int, index: int, sign: int = 1) -> RatVec:
    return tuple(Fraction(sign if i == index else 0) for i in range(dim))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(v: Sequence[Fraction], s: Fraction) -> RatVec:
    return tuple(a * s for a in v)


def norm_sq(v: Sequence[Fraction]) -> Fraction:
    return dot(v, v)


def linear_combination(weights: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]]) -> RatVec:
    """Return sum_j weights[j] * vectors[j]."""
    if not vectors:
        raise ValueError("empty combination")
    total = [Fraction(0)] * len(vectors[0])
    for w, v in zip(weights, vectors):
        if not w:
            continue
        for i, a in enumerate(v):
            if a:
                total[i] += w * a
    return tuple(total)


def centroid(points: Sequence[Sequence[Fraction]]) -> RatVec:
    """Arithmetic mean of a nonempty list of points."""
    if not points:
        raise ValueError("centroid of an empty point set")
    n = len(points)
    return tuple(sum(coords, Fraction(0)) / n for coords in zip(*points))


def sqrt_lower(q: Fraction, bits: int = 16) -> Fraction:
    """Largest n / 2^bits with (n / 2^bits)^2 <= q, for q >= 0."""
    if q < 0:
        raise ValueError("square root of a negative number")
    scaled = q.numerator * (1 << (2 * bits))
    # floor(sqrt(N / D)) == isqrt(N // D)
    return Fraction(math.isqrt(scaled // q.denominator), 1 << bits)


def sqrt_upper(q: Fraction, bits: int = 16) -> Fraction:
    """Least n / 2^bits with (n / 2^bits)^2 >= q, for q >= 0."""
    if q < 0:
        raise ValueError("square root of a negative number")
    scaled = q.numerator * (1 << (2 * bits))
    target = -(-scaled // q.denominator)  # ceil
    root = math.isqrt(target)
    if root * root < target:
        root += 1
    return Fraction(root, 1 << bits)


def format_rat(q: Fraction) -> str:
    """Render ``p/q`` or ``p`` for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vec(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rat(a) for a in v) + ")"
