"""Density of the distance between two uniform random points in the polygon.

The density is

    g(x) = (2 x / area) * [pi - perimeter * phi(x) / (area * side)]

on [0, d), zero elsewhere, where phi is the running integral of the branch
function H of :mod:`polymoments.chord_cdf`:  phi(x) = integral of H from 0 to
x = side * integral of (1 - F).  Each branch integrates in closed form term
by term, so phi is assembled from the cached piece table plus per-polygon
prefix sums and every evaluation is O(1) after setup.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import antiderivatives as anti
from .chord_cdf import BranchId, Piece, piece_index, pieces
from .geometry import PolygonParams

__all__ = ["PhiPrefix", "phi_prefix", "h_flat", "j_flat", "phi_flat",
           "distance_pdf"]


def flat_terms(piece: Piece, x: float) -> list[float]:
    """Additive terms of the antiderivative of H on the piece, at x."""
    if x == 0.0:
        return [0.0]
    t: list[float] = []
    if piece.const:
        t.append(piece.const * x)
    if piece.lin:
        t.append(piece.lin * x * x / 2.0)
    if piece.inv:
        t.append(piece.inv * math.log(x))
    if piece.asin_h:
        t.append(piece.asin_h * anti.sigma_tilde(1, piece.a_h, x))
    if piece.sqrt_h:
        t.append(piece.sqrt_h * anti.tau_tilde(-1, piece.a_h, x))
    if piece.asin_lam:
        t.append(piece.asin_lam * anti.sigma_tilde(1, piece.a_lam, x))
    if piece.sqrt_lam:
        t.append(piece.sqrt_lam * anti.tau_tilde(-1, piece.a_lam, x))
    return t


def _flat(piece: Piece, x: float) -> float:
    return math.fsum(flat_terms(piece, x))


@dataclass(frozen=True)
class PhiPrefix:
    """Per-polygon prefix sums of the piecewise integral of H.

    ``partial[k]`` is the integral of H over all branches below index k,
    i.e. phi evaluated at the branch's lower edge; ``partial[0] == 0`` and
    the sequence is nondecreasing because H >= 0.  ``piece_prefix`` holds the
    same running integral at each piece's lower edge (pieces subdivide the
    odd-n top branch at lam), and ``total`` is the full integral over [0, d].
    """
    partial: tuple[float, ...]
    piece_prefix: tuple[float, ...]
    total: float


@lru_cache(maxsize=256)
def phi_prefix(params: PolygonParams) -> PhiPrefix:
    table = pieces(params)
    piece_prefix: list[float] = []
    running: list[float] = []
    for piece in table:
        piece_prefix.append(math.fsum(running))
        running.extend(flat_terms(piece, piece.hi))
        running.extend(-t for t in flat_terms(piece, piece.lo))
    total = math.fsum(running)
    partial: list[float] = []
    for k in range(params.big_k + 1):
        first = next(i for i, piece in enumerate(table) if piece.k == k)
        partial.append(piece_prefix[first])
    return PhiPrefix(partial=tuple(partial), piece_prefix=tuple(piece_prefix),
                     total=total)


def h_flat(params: PolygonParams, branch: BranchId, x: float) -> float:
    """Closed-form antiderivative of the branch function, evaluated at x.

    ``branch`` must name an existing (k, tag) combination of the polygon and
    x must lie in the branch's closed interval.
    """
    k, tag = branch
    for piece in pieces(params):
        if piece.k == k and piece.tag == tag:
            if not piece.lo * (1.0 - 1e-12) <= x <= piece.hi * (1.0 + 1e-12):
                raise ValueError(f"x={x} outside branch interval "
                                 f"[{piece.lo}, {piece.hi}]")
            return _flat(piece, x)
    raise ValueError(f"polygon n={params.n} has no branch {branch}")


def j_flat(params: PolygonParams, k: int, x: float) -> float:
    """Integral of the branch function H_k from its lower edge ell[k] to x."""
    if not 0 <= k <= params.big_k:
        raise ValueError(f"branch index {k} out of range 0..{params.big_k}")
    lo = params.ell[k]
    hi = params.ell[k + 1]
    if not lo * (1.0 - 1e-12) <= x <= hi * (1.0 + 1e-12):
        raise ValueError(f"x={x} outside [{lo}, {hi}] for branch {k}")
    terms: list[float] = []
    for piece in pieces(params):
        if piece.k != k or x <= piece.lo:
            continue
        terms.extend(flat_terms(piece, min(x, piece.hi)))
        terms.extend(-t for t in flat_terms(piece, piece.lo))
    return math.fsum(terms)


def phi_flat(params: PolygonParams, x: float) -> float:
    """Integral of H over [0, min(x, d)]; equals side * integral of (1 - F)."""
    prefix = phi_prefix(params)
    if x <= 0.0:
        return 0.0
    if x >= params.d:
        return prefix.total
    i = piece_index(params, x)
    piece = pieces(params)[i]
    terms = [prefix.piece_prefix[i]]
    terms.extend(flat_terms(piece, x))
    terms.extend(-t for t in flat_terms(piece, piece.lo))
    return math.fsum(terms)


def distance_pdf(params: PolygonParams, x: float) -> float:
    """Density of the distance between two uniform points; 0 outside [0, d)."""
    if not 0.0 <= x < params.d:
        return 0.0
    bracket = math.pi - params.perimeter * phi_flat(params, x) / (params.area * params.side)
    return 2.0 * x / params.area * bracket
