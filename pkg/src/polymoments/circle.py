"""Distance moments and chord-length distribution of a disk.

The disk is the n -> infinity limit of the regular polygons and provides the
reference rows of the tables.  Moments are

    M_m = 2**(m+4) * r**m / (sqrt(pi) (m+2)(m+4)) * Gamma((m+3)/2) / Gamma(m/2 + 2)

for integer m >= -1.  Both Gamma arguments are integers or half-integers, so
each value is an exact rational times pi**0 or pi**-1; the ratio is carried
in exact integer arithmetic and rounded once.
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction

__all__ = ["moment", "mean", "variance", "chord_cdf", "distance_pdf"]


def _gamma_half(twice: int) -> tuple[Fraction, int]:
    """Gamma(twice / 2) as (rational, power) with value rational * pi**(power/2)."""
    if twice <= 0:
        raise ValueError(f"gamma argument must be positive, got {twice}/2")
    if twice % 2 == 0:
        return Fraction(math.factorial(twice // 2 - 1)), 0
    j = (twice - 1) // 2
    return Fraction(math.factorial(2 * j), 4 ** j * math.factorial(j)), 1


def moment(m: int, r: float = 1.0) -> float:
    """E[distance**m] between two uniform random points in a disk of radius r."""
    try:
        m = operator.index(m)
    except TypeError:
        raise ValueError(f"moment order must be an integer, got {m!r}") from None
    if m < -1:
        raise ValueError(f"moment order must be >= -1, got {m}")
    num, num_pow = _gamma_half(m + 3)
    den, den_pow = _gamma_half(m + 4)
    frac = Fraction(2 ** (m + 4), (m + 2) * (m + 4)) * num / den
    pi_half_power = num_pow - den_pow - 1
    # Only pi**0 (even m) and pi**-1 (odd m) occur.
    return float(frac) * math.pi ** (pi_half_power // 2) * r ** m


def mean(r: float = 1.0) -> float:
    """Mean distance 128 r / (45 pi)."""
    return 128.0 * r / (45.0 * math.pi)


def variance(r: float = 1.0) -> float:
    """Var[distance] = (1 - (128 / (45 pi))**2) * r**2."""
    return (1.0 - (128.0 / (45.0 * math.pi)) ** 2) * r * r


def chord_cdf(x: float, r: float = 1.0) -> float:
    """Distribution of the length of a uniform isotropic chord of the disk."""
    if x < 0.0:
        return 0.0
    if x >= 2.0 * r:
        return 1.0
    ratio = x / (2.0 * r)
    return 1.0 - math.sqrt(1.0 - ratio * ratio)


def distance_pdf(x: float, r: float = 1.0) -> float:
    """Density of the distance between two uniform random points in the disk.

    Follows from the same identity used for the polygons,
    g(x) = (2x/A) [pi - L phi(x) / A] with phi(x) the integral of 1 - F:
    here phi(x) = x/2 * sqrt(1 - (x/2r)**2) + r asin(x / 2r).
    """
    if not 0.0 <= x < 2.0 * r:
        return 0.0
    area = math.pi * r * r
    ratio = x / (2.0 * r)
    phi = 0.5 * x * math.sqrt(1.0 - ratio * ratio) + r * math.asin(ratio)
    return 2.0 * x / area * (math.pi - 2.0 * phi / r)
