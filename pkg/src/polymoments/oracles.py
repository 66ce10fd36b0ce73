"""Independent verification engines: adaptive quadrature and Monte Carlo.

These deliberately share no code with the closed-form evaluation paths; they
exist to check them.  The quadrature is a globally adaptive Gauss-Kronrod
(7, 15) scheme that never evaluates interval endpoints, so integrands with
root-type edges (the distribution has one at the last vertex distance for
even n) are handled without special casing.  The samplers draw uniform point
pairs in the polygon or uniform isotropic random chords through it.

Reproducibility contract: a given (seed, samples, estimator) triple always
produces bit-identical estimates.  Sampling is carved into fixed-size shards
seeded as (seed, shard_index); shard results are combined in shard order, so
any parallel execution of shards gives the same result as the serial one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappush, heappop
from typing import Callable, Iterable

import numpy as np

from .geometry import PolygonParams, contains, edge_normals, vertices

__all__ = [
    "POINT_PAIR", "IUR_CHORD", "McConfig", "QuadConfig", "QuadratureError",
    "integrate", "sample_point", "sample_points", "sample_pair_distances",
    "sample_chord_lengths", "mc_estimate", "rng_for_shard", "mc_metadata",
]

POINT_PAIR = "point_pair_distance"
IUR_CHORD = "iur_chord_length"

_RULE_NAME = "gauss-kronrod-7-15"
_GENERATOR_NAME = "numpy-pcg64"


@dataclass(frozen=True)
class McConfig:
    """Monte Carlo run description; fully determines the estimate."""
    samples: int
    seed: int = 0
    estimator: str = POINT_PAIR
    shard_size: int = 1 << 16

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.estimator not in (POINT_PAIR, IUR_CHORD):
            raise ValueError(f"unknown estimator {self.estimator!r}")
        if self.shard_size < 1:
            raise ValueError(f"shard_size must be >= 1, got {self.shard_size}")


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and interval layout for :func:`integrate`."""
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_depth: int = 60
    mandatory_splits: tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise ValueError("tolerances must be > 0")


class QuadratureError(RuntimeError):
    """Raised when the subdivision depth runs out; carries the best estimate."""

    def __init__(self, message: str, value: float, err_estimate: float) -> None:
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate


# Kronrod-15 nodes (positive half) with Kronrod weights and the embedded
# Gauss-7 weights (zero at Kronrod-only nodes).
_NODES = (
    (0.99145537112081263921, 0.02293532201052922496, 0.0),
    (0.94910791234275852453, 0.06309209262997855329, 0.12948496616886969327),
    (0.86486442335976907279, 0.10479001032225018384, 0.0),
    (0.74153118559939443986, 0.14065325971552591875, 0.27970539148927666790),
    (0.58608723546769113029, 0.16900472663926790283, 0.0),
    (0.40584515137739716691, 0.19035057806478540991, 0.38183005050511894495),
    (0.20778495500789846760, 0.20443294007529889241, 0.0),
)
_CENTER_WK = 0.20948214108472782801
_CENTER_WG = 0.41795918367346938776


def _gk15(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """One Gauss-Kronrod (7, 15) panel: (integral, error estimate)."""
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    fc = f(c)
    kron = _CENTER_WK * fc
    gauss = _CENTER_WG * fc
    for x, wk, wg in _NODES:
        pair = f(c + h * x) + f(c - h * x)
        kron += wk * pair
        if wg:
            gauss += wg * pair
    kron *= h
    gauss *= h
    return kron, abs(kron - gauss)


def integrate(f: Callable[[float], float], a: float, b: float,
              cfg: QuadConfig | None = None) -> tuple[float, float]:
    """Adaptive integral of f over [a, b] honoring mandatory split points.

    Returns (value, error_estimate).  The interval is first cut at every
    mandatory split inside (a, b); the worst panel (largest error estimate)
    is then bisected until the summed error meets the tolerances.  Panels
    deeper than ``max_depth`` raise :class:`QuadratureError` carrying the
    best estimate reached.
    """
    cfg = cfg or QuadConfig()
    if a > b:
        raise ValueError(f"integration bounds out of order: {a} > {b}")
    if a == b:
        return 0.0, 0.0

    edges = [a] + sorted(x for x in set(cfg.mandatory_splits) if a < x < b) + [b]
    heap: list[tuple[float, float, float, float, float, int]] = []
    total = 0.0
    total_err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        val, err = _gk15(f, lo, hi)
        heappush(heap, (-err, lo, hi, val, err, 0))
        total += val
        total_err += err

    exhausted = False
    while total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        if len(heap) > 100_000:
            exhausted = True
            break
        neg_err, lo, hi, val, err, depth = heappop(heap)
        if depth >= cfg.max_depth:
            heappush(heap, (neg_err, lo, hi, val, err, depth))
            exhausted = True
            break
        mid = 0.5 * (lo + hi)
        total -= val
        total_err -= err
        for sub_lo, sub_hi in ((lo, mid), (mid, hi)):
            sub_val, sub_err = _gk15(f, sub_lo, sub_hi)
            heappush(heap, (-sub_err, sub_lo, sub_hi, sub_val, sub_err, depth + 1))
            total += sub_val
            total_err += sub_err

    value = math.fsum(item[3] for item in heap)
    err = math.fsum(item[4] for item in heap)
    if exhausted:
        raise QuadratureError(
            f"max_depth={cfg.max_depth} exhausted, best estimate {value!r} "
            f"with error {err:.3e}", value, err)
    return value, err


# --------------------------------------------------------------------------
# Monte Carlo samplers


def rng_for_shard(seed: int, shard: int) -> np.random.Generator:
    """The generator owning shard ``shard`` of the stream seeded by ``seed``."""
    return np.random.default_rng((seed, shard))


def sample_point(params: PolygonParams, rng: np.random.Generator) -> tuple[float, float]:
    """One point uniform in the polygon.

    The polygon is fanned into n congruent triangles (centroid plus an edge);
    a triangle is picked uniformly and mapped with the square-root transform.
    Membership is re-checked as a sanity contract.
    """
    pt = sample_points(params, 1, rng)[0]
    point = (float(pt[0]), float(pt[1]))
    if not contains(params, point):
        raise AssertionError(f"sampled point {point} escaped the polygon")
    return point


def sample_points(params: PolygonParams, count: int,
                  rng: np.random.Generator) -> np.ndarray:
    """``count`` points uniform in the polygon, shape (count, 2)."""
    verts = np.asarray(vertices(params))
    idx = rng.integers(0, params.n, size=count)
    u = rng.random(count)
    v = rng.random(count)
    su = np.sqrt(u)
    # Triangle (origin, V_k, V_{k+1}): origin weight (1 - su) contributes 0.
    w1 = su * (1.0 - v)
    w2 = su * v
    return w1[:, None] * verts[idx] + w2[:, None] * verts[(idx + 1) % params.n]


def sample_pair_distances(params: PolygonParams, count: int,
                          rng: np.random.Generator) -> np.ndarray:
    """Distances between ``count`` independent uniform point pairs."""
    pts = sample_points(params, 2 * count, rng)
    delta = pts[:count] - pts[count:]
    return np.hypot(delta[:, 0], delta[:, 1])


def _chord_lengths_batch(params: PolygonParams, count: int,
                         rng: np.random.Generator) -> np.ndarray:
    """Chord lengths of ``count`` random lines; misses come out as 0."""
    p = rng.random(count) * params.r
    phi = rng.random(count) * (2.0 * math.pi)
    cos_phi = np.cos(phi)
    sin_phi = np.sin(phi)
    # Line base point p*(cos, sin), direction (-sin, cos); clip the parameter
    # t against the half-plane of every edge.
    normals = np.asarray(edge_normals(params))
    a_coef = -sin_phi[:, None] * normals[:, 0] + cos_phi[:, None] * normals[:, 1]
    base_dot = (p * cos_phi)[:, None] * normals[:, 0] + (p * sin_phi)[:, None] * normals[:, 1]
    b_coef = params.apothem - base_dot
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = b_coef / a_coef
    upper = np.where(a_coef > 0.0, ratio, np.inf).min(axis=1)
    lower = np.where(a_coef < 0.0, ratio, -np.inf).max(axis=1)
    feasible = np.where(a_coef == 0.0, b_coef >= 0.0, True).all(axis=1)
    return np.where(feasible, np.maximum(upper - lower, 0.0), 0.0)


def sample_chord_lengths(params: PolygonParams, count: int,
                         rng: np.random.Generator,
                         batch: int = 1 << 16) -> np.ndarray:
    """Lengths of ``count`` uniform isotropic random chords hitting the polygon.

    Lines are proposed with distance uniform on [0, r] and angle uniform on
    [0, 2 pi); only hitting lines are retained.
    """
    kept: list[np.ndarray] = []
    have = 0
    while have < count:
        lengths = _chord_lengths_batch(params, batch, rng)
        hits = lengths[lengths > 0.0]
        kept.append(hits)
        have += hits.size
    return np.concatenate(kept)[:count]


def _shard_sizes(total: int, shard_size: int) -> list[int]:
    full, rest = divmod(total, shard_size)
    return [shard_size] * full + ([rest] if rest else [])


def mc_estimate(params: PolygonParams, cfg: McConfig, m: int) -> tuple[float, float]:
    """Sample mean of distance**m (or chord-length**m) with its standard error."""
    s1 = 0.0
    s2 = 0.0
    n_total = 0
    if cfg.estimator == POINT_PAIR:
        for shard, size in enumerate(_shard_sizes(cfg.samples, cfg.shard_size)):
            rng = rng_for_shard(cfg.seed, shard)
            w = sample_pair_distances(params, size, rng) ** m
            s1 += float(w.sum())
            s2 += float((w * w).sum())
            n_total += size
    else:
        shard = 0
        while n_total < cfg.samples:
            rng = rng_for_shard(cfg.seed, shard)
            lengths = _chord_lengths_batch(params, cfg.shard_size, rng)
            hits = lengths[lengths > 0.0][:cfg.samples - n_total]
            w = hits ** m
            s1 += float(w.sum())
            s2 += float((w * w).sum())
            n_total += hits.size
            shard += 1
    mean = s1 / n_total
    if n_total > 1:
        var = max(0.0, (s2 - n_total * mean * mean) / (n_total - 1))
    else:
        var = 0.0
    return mean, math.sqrt(var / n_total)


def mc_metadata(cfg: McConfig) -> dict[str, object]:
    """Provenance of an estimate: generator, seed, and the shard plan."""
    return {
        "generator": _GENERATOR_NAME,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "estimator": cfg.estimator,
        "shard_plan": f"(seed, shard) streams of {cfg.shard_size}, combined in order",
    }
