"""Chord-length distribution of a regular polygon.

The distribution function F of the length of a uniform isotropic random
chord is piecewise analytic on [0, d].  Each piece carries one of four branch
shapes (tags ``H0``..``H3``), but all four are the same linear combination of
seven elementary kernels of x:

    H(x) = const + lin*x + inv/x
         + asin_h   * x * asin(a_h / x)   + sqrt_h   * sqrt(x**2 - a_h**2) / x
         + asin_lam * x * asin(a_lam / x) + sqrt_lam * sqrt(x**2 - a_lam**2) / x

and F(x) = 1 - H(x) / side on the piece.  The coefficient table is assembled
once per polygon; the companion modules integrate the very same combinations
term by term (``distance_pdf`` for the plain antiderivative, ``moments`` for
the x**(m+2)-weighted one), so continuity and consistency of all three
evaluations follow from a single coefficient set.

Branch layout over [0, d):

* k = 0 carries ``H0`` (for n = 3 only up to lam, with ``H3`` above),
* 1 <= k <= K-1 carry ``H1``,
* k = K carries ``H2`` for even n, and for odd n ``H1`` below lam with
  ``H3`` at and above lam.

K = floor(n/2) - 1; lam is a genuine breakpoint only for odd n.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .geometry import PolygonParams

__all__ = [
    "BranchId", "CurveSample", "Piece", "pieces", "breakpoints",
    "select_branch", "chord_cdf", "chord_pdf_numeric", "mean_chord",
    "mean_chord_integral",
]


class BranchId(NamedTuple):
    """Branch index k plus the shape tag that applies there."""
    k: int
    tag: str


class CurveSample(NamedTuple):
    """One (abscissa, value) row of a sampled curve."""
    x: float
    value: float


@dataclass(frozen=True, slots=True)
class Piece:
    """One analytic piece of the distribution on [lo, hi)."""
    k: int
    tag: str
    lo: float
    hi: float
    const: float = 0.0
    lin: float = 0.0
    inv: float = 0.0
    asin_h: float = 0.0
    sqrt_h: float = 0.0
    asin_lam: float = 0.0
    sqrt_lam: float = 0.0
    a_h: float = 0.0
    a_lam: float = 0.0


def _cot(z: float) -> float:
    return math.cos(z) / math.sin(z)


def _coeffs(params: PolygonParams, k: int, tag: str) -> dict[str, float]:
    a = params.alpha
    r = params.r
    h_k = params.h[k]
    c: dict[str, float] = {"a_h": h_k, "a_lam": params.lam}
    if tag == "H0":
        c["const"] = params.side
        c["lin"] = -(1.0 + a * (math.tan(a) - _cot(a))) / 2.0
    elif tag == "H1":
        p_k = params.p[k]
        q_k = params.q[k]
        c["asin_h"] = p_k
        c["lin"] = -(k * a * _cot(2 * k * a) - (k + 1) * a * _cot(2 * (k + 1) * a))
        c["sqrt_h"] = -(h_k * p_k + 2.0 * r * q_k * math.cos(a))
    elif tag == "H2":
        ct = _cot(2 * k * a)
        c["lin"] = 0.5 - k * a * ct
        c["asin_h"] = ct
        c["inv"] = -(h_k - 2.0 * r * math.cos(a)) * h_k
        c["sqrt_h"] = -(h_k * ct + 2.0 * r * math.cos(a) * math.tan(k * a))
    elif tag == "H3":
        p_k = params.p[k]
        q_k = params.q[k]
        s_k = params.s[k]
        ct1 = _cot(2 * (k + 1) * a)
        c["asin_h"] = p_k
        c["asin_lam"] = 2.0 * ct1
        c["lin"] = -((math.pi - a) * ct1 + s_k)
        c["sqrt_h"] = -(h_k * p_k + 2.0 * r * q_k * math.cos(a))
        c["sqrt_lam"] = -2.0 * math.cos(a) * (
            2.0 * r * math.cos(a / 2.0) / math.cos((k + 1) * a)
            - params.lam / math.sin(2 * (k + 1) * a))
    else:
        raise ValueError(f"unknown branch tag {tag!r}")
    return c


@lru_cache(maxsize=256)
def pieces(params: PolygonParams) -> tuple[Piece, ...]:
    """The full piece table of the polygon, ordered by interval."""
    out: list[Piece] = []

    def add(k: int, tag: str, lo: float, hi: float) -> None:
        out.append(Piece(k=k, tag=tag, lo=lo, hi=hi, **_coeffs(params, k, tag)))

    big_k = params.big_k
    ell = params.ell
    if params.n == 3:
        add(0, "H0", 0.0, params.lam)
        add(0, "H3", params.lam, params.d)
        return tuple(out)
    add(0, "H0", 0.0, ell[1])
    for k in range(1, big_k):
        add(k, "H1", ell[k], ell[k + 1])
    if params.n % 2 == 0:
        add(big_k, "H2", ell[big_k], params.d)
    else:
        add(big_k, "H1", ell[big_k], params.lam)
        add(big_k, "H3", params.lam, params.d)
    return tuple(out)


def breakpoints(params: PolygonParams) -> tuple[float, ...]:
    """Ordered breakpoints 0 = x_0 < ... < x_M = d of the piece table.

    Includes every vertex distance ell[k] and, for odd n, lam.
    """
    table = pieces(params)
    return tuple(p.lo for p in table) + (params.d,)


@lru_cache(maxsize=256)
def _piece_lows(params: PolygonParams) -> tuple[float, ...]:
    return tuple(p.lo for p in pieces(params))


def piece_index(params: PolygonParams, x: float) -> int | None:
    """Index into pieces(params) of the piece containing x, else None."""
    if not 0.0 <= x < params.d:
        return None
    return bisect_right(_piece_lows(params), x) - 1


def piece_at(params: PolygonParams, x: float) -> Piece | None:
    """The piece whose half-open interval [lo, hi) contains x, else None."""
    i = piece_index(params, x)
    return None if i is None else pieces(params)[i]


def select_branch(params: PolygonParams, x: float) -> BranchId | None:
    """Branch (k, tag) applying at x in [0, d); None outside that domain."""
    piece = piece_at(params, x)
    if piece is None:
        return None
    return BranchId(piece.k, piece.tag)


def branch_terms(piece: Piece, x: float) -> list[float]:
    """The additive terms of H(x) on the piece (summed exactly by callers)."""
    t: list[float] = []
    if piece.const:
        t.append(piece.const)
    if piece.lin:
        t.append(piece.lin * x)
    if piece.inv:
        t.append(piece.inv / x)
    if piece.asin_h:
        t.append(piece.asin_h * x * math.asin(min(1.0, piece.a_h / x)))
    if piece.sqrt_h:
        a = piece.a_h
        gap = (x - a) * (x + a)
        t.append(piece.sqrt_h * math.sqrt(gap if gap > 0.0 else 0.0) / x)
    if piece.asin_lam:
        t.append(piece.asin_lam * x * math.asin(min(1.0, piece.a_lam / x)))
    if piece.sqrt_lam:
        a = piece.a_lam
        gap = (x - a) * (x + a)
        t.append(piece.sqrt_lam * math.sqrt(gap if gap > 0.0 else 0.0) / x)
    return t


def branch_value(piece: Piece, x: float) -> float:
    """H(x) on the piece."""
    return math.fsum(branch_terms(piece, x))


def chord_cdf(params: PolygonParams, x: float) -> float:
    """P(chord length <= x); total on the real line (0 below 0, 1 from d up)."""
    if x < 0.0:
        return 0.0
    if x >= params.d:
        return 1.0
    piece = piece_at(params, x)
    return 1.0 - branch_value(piece, x) / params.side


def chord_pdf_numeric(params: PolygonParams, x: float, step: float = 1e-6) -> float:
    """Centered difference (F(x+step) - F(x-step)) / (2 step).

    Refuses abscissae within ``step`` of a breakpoint, where the one-sided
    analytic pieces disagree and the difference quotient is meaningless.
    """
    if not 0.0 < x < params.d:
        raise ValueError(f"x={x} outside the open support (0, {params.d})")
    if step <= 0.0:
        raise ValueError(f"step must be > 0, got {step}")
    for b in breakpoints(params):
        if abs(x - b) <= step:
            raise ValueError(f"x={x} within step={step} of breakpoint {b}")
    return (chord_cdf(params, x + step) - chord_cdf(params, x - step)) / (2.0 * step)


def mean_chord(params: PolygonParams) -> float:
    """Expected chord length, pi * area / perimeter."""
    return math.pi * params.area / params.perimeter


def mean_chord_integral(params: PolygonParams, rel_tol: float = 1e-10) -> float:
    """Expected chord length via the integral of 1 - F over [0, d].

    Cross-check for :func:`mean_chord`; adaptive quadrature split at every
    breakpoint.
    """
    from .oracles import QuadConfig, integrate

    cfg = QuadConfig(rel_tol=rel_tol, mandatory_splits=breakpoints(params))
    value, _ = integrate(lambda t: 1.0 - chord_cdf(params, t), 0.0, params.d, cfg)
    return value
