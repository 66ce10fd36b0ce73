"""Verification suites behind the ``verify`` command.

Each check returns a :class:`CheckResult` with the worst observed deviation,
so failures are diagnosable from the report alone.  The suites only use the
public evaluation APIs plus the independent oracles.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import moments as mom
from .chord_cdf import (branch_value, breakpoints, chord_cdf, mean_chord,
                        pieces)
from .distance_pdf import distance_pdf, phi_flat
from .geometry import PolygonParams, polygon
from .oracles import (IUR_CHORD, POINT_PAIR, McConfig, QuadConfig, integrate,
                      mc_estimate, rng_for_shard, sample_chord_lengths)
from .antiderivatives import psi_tilde, sigma_tilde, tau_tilde

__all__ = ["CheckResult", "run_verification", "ks_distance", "dkw_bound"]

GRID_POINTS = 10_000


@dataclass(frozen=True)
class CheckResult:
    suite: str
    target: str
    passed: bool
    worst: float
    bound: float

    @property
    def detail(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (f"{verdict} {self.suite}[{self.target}] "
                f"worst={self.worst:.3e} bound={self.bound:.3e}")


def _result(suite: str, target: str, worst: float, bound: float) -> CheckResult:
    return CheckResult(suite=suite, target=target, passed=worst <= bound,
                       worst=worst, bound=bound)


def check_cdf_monotone(params: PolygonParams, points: int = GRID_POINTS) -> CheckResult:
    xs = np.linspace(0.0, params.d, points)
    values = [chord_cdf(params, float(x)) for x in xs]
    worst = max((values[i] - values[i + 1] for i in range(len(values) - 1)),
                default=0.0)
    return _result("cdf_monotone", f"n={params.n}", max(worst, 0.0), 0.0)


def check_cdf_continuity(params: PolygonParams, bound: float = 1e-8) -> CheckResult:
    """Jump of F at every breakpoint, by one-sided branch limits.

    Both adjacent analytic pieces are evaluated exactly at the breakpoint;
    their mismatch is the actual jump.  (A symmetric probe at offset eps
    would measure the Hoelder modulus ~sqrt(eps) at the root-type edge of
    even polygons, not the jump.)
    """
    table = pieces(params)
    worst = 0.0
    for left, right in zip(table, table[1:]):
        b = left.hi
        worst = max(worst, abs(branch_value(left, b) - branch_value(right, b))
                    / params.side)
    # F(d) = 1 exactly means the last branch vanishes at d.
    worst = max(worst, abs(branch_value(table[-1], params.d)) / params.side)
    return _result("cdf_continuity", f"n={params.n}", worst, bound)


def check_cdf_bounds(params: PolygonParams, bound: float = 1e-8) -> CheckResult:
    worst = abs(chord_cdf(params, 0.0))
    worst = max(worst, abs(chord_cdf(params, params.d) - 1.0))
    worst = max(worst, abs(chord_cdf(params, params.d * (1.0 - 1e-12)) - 1.0))
    return _result("cdf_bounds", f"n={params.n}", worst, bound)


def check_mean_identity(params: PolygonParams, bound: float = 1e-9) -> CheckResult:
    """integral of (1 - F) over [0, d] against pi * area / perimeter."""
    cfg = QuadConfig(rel_tol=1e-11, mandatory_splits=breakpoints(params))
    value, _ = integrate(lambda x: 1.0 - chord_cdf(params, x), 0.0, params.d, cfg)
    target = mean_chord(params)
    return _result("cdf_mean_identity", f"n={params.n}",
                   abs(value - target) / target, bound)


def check_pdf_nonnegative(params: PolygonParams,
                          points: int = GRID_POINTS) -> CheckResult:
    xs = np.linspace(0.0, params.d, points)
    worst = max(-distance_pdf(params, float(x)) for x in xs)
    return _result("pdf_nonnegative", f"n={params.n}", max(worst, 0.0), 0.0)


def check_pdf_normalization(params: PolygonParams, bound: float = 1e-9) -> CheckResult:
    cfg = QuadConfig(rel_tol=1e-11, mandatory_splits=breakpoints(params))
    value, _ = integrate(lambda x: distance_pdf(params, x), 0.0, params.d, cfg)
    return _result("pdf_normalization", f"n={params.n}", abs(value - 1.0), bound)


def check_pdf_near_origin(params: PolygonParams, bound: float = 1e-4) -> CheckResult:
    """g(x)/x -> 2 pi / area as x -> 0."""
    x = 1e-6 * params.d
    limit = 2.0 * math.pi / params.area
    return _result("pdf_near_origin", f"n={params.n}",
                   abs(distance_pdf(params, x) / x / limit - 1.0), bound)


def check_phi_consistency(params: PolygonParams, count: int = 100,
                          seed: int = 0, bound: float = 1e-8) -> CheckResult:
    """phi from the closed-form prefix table against direct quadrature of 1 - F."""
    rng = rng_for_shard(seed, 0)
    xs = rng.random(count) * params.d
    splits = breakpoints(params)
    cfg = QuadConfig(rel_tol=1e-11, mandatory_splits=splits)
    worst = 0.0
    scale = params.side * mean_chord(params)
    for x in xs:
        x = float(x)
        direct, _ = integrate(lambda t: 1.0 - chord_cdf(params, t), 0.0, x, cfg)
        worst = max(worst, abs(phi_flat(params, x) - params.side * direct) / scale)
    return _result("phi_consistency", f"n={params.n}", worst, bound)


def check_triple_oracle(params: PolygonParams, m: int,
                        bound: float = 1e-8) -> CheckResult:
    """Analytic vs pdf-quadrature vs cdf-quadrature moments, pairwise."""
    analytic = mom.moment(params, m).value
    via_pdf = mom.moment_via_pdf_quadrature(params, m).value
    via_cdf = mom.moment_via_cdf_quadrature(params, m).value
    scale = max(abs(analytic), abs(via_pdf), abs(via_cdf))
    worst = max(abs(analytic - via_pdf), abs(analytic - via_cdf),
                abs(via_pdf - via_cdf)) / scale
    return _result("moment_triple_oracle", f"n={params.n},m={m}", worst, bound)


def check_closed_forms(params: PolygonParams, bound: float = 1e-12) -> CheckResult:
    """Short closed forms of the 2nd and 4th moments against the general route."""
    worst = abs(mom.moment(params, 2).value / mom.moment2_closed(params) - 1.0)
    worst = max(worst, abs(mom.moment(params, 4).value
                           / mom.moment4_closed(params) - 1.0))
    return _result("closed_forms", f"n={params.n}", worst, bound)


def check_kernel_derivatives(seed: int = 0, bound: float = 1e-6) -> CheckResult:
    """Centered finite differences of the kernel antiderivatives.

    For orders -1..8 and random (a, x), the derivative of each antiderivative
    must reproduce its kernel to relative 1e-6 at step 1e-5 * x.
    """
    rng = rng_for_shard(seed, 1)
    worst = 0.0
    for mu in range(-1, 9):
        for _ in range(20):
            a = 2.0 * rng.random() + 1e-3
            x = a * 1.01 + 5.0 * rng.random()
            h = 1e-5 * x
            gap = math.sqrt(x * x - a * a)
            checks = [(psi_tilde, x ** mu / gap),
                      (tau_tilde, x ** mu * gap)]
            if mu >= 0:
                checks.append((sigma_tilde, x ** mu * math.asin(a / x)))
            for fn, kernel in checks:
                diff = (fn(mu, a, x + h) - fn(mu, a, x - h)) / (2.0 * h)
                worst = max(worst, abs(diff - kernel) / max(abs(kernel), 1e-30))
    return _result("kernel_derivatives", "mu=-1..8", worst, bound)


def ks_distance(params: PolygonParams, lengths: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance of an empirical sample against F."""
    xs = np.sort(lengths)
    n = xs.size
    cdf = np.array([chord_cdf(params, float(x)) for x in xs])
    grid = np.arange(1, n + 1) / n
    return float(np.maximum(np.abs(cdf - grid), np.abs(cdf - (grid - 1.0 / n))).max())


def dkw_bound(samples: int, sigmas: float = 4.0) -> float:
    """Dvoretzky-Kiefer-Wolfowitz concentration scale for an empirical CDF."""
    return sigmas * math.sqrt(math.log(2.0) / (2.0 * samples))


def check_mc_mean(params: PolygonParams, samples: int, seed: int) -> CheckResult:
    """Point-pair sample mean within 4 standard errors of the analytic mean."""
    cfg = McConfig(samples=samples, seed=seed, estimator=POINT_PAIR)
    est, se = mc_estimate(params, cfg, 1)
    gap = abs(est - mom.moment(params, 1).value)
    return _result("mc_mean_distance", f"n={params.n}", gap, 4.0 * se)


def check_mc_chord_ks(params: PolygonParams, samples: int, seed: int) -> CheckResult:
    """KS distance of sampled chords against F, below the 4-sigma DKW bound."""
    lengths = sample_chord_lengths(params, samples, rng_for_shard(seed, 2))
    return _result("mc_chord_ks", f"n={params.n}", ks_distance(params, lengths),
                   dkw_bound(samples))


def run_verification(ns: list[int], ms: list[int], r: float = 1.0,
                     mc_samples: int | None = None, seed: int = 0,
                     budget: float | None = None) -> list[CheckResult]:
    """Run every suite for the requested polygons and moment orders.

    With ``mc_samples`` set, the Monte Carlo concordance suites run as well.
    A ``budget`` in seconds fails the run (as a synthetic result row) if the
    wall clock exceeds it.
    """
    start = time.perf_counter()
    results = [check_kernel_derivatives(seed)]
    for n in ns:
        params = polygon(n, r)
        results.append(check_cdf_monotone(params))
        results.append(check_cdf_continuity(params))
        results.append(check_cdf_bounds(params))
        results.append(check_mean_identity(params))
        results.append(check_pdf_nonnegative(params))
        results.append(check_pdf_normalization(params))
        results.append(check_pdf_near_origin(params))
        results.append(check_closed_forms(params))
        for m in ms:
            results.append(check_triple_oracle(params, m))
        if mc_samples:
            results.append(check_mc_mean(params, mc_samples, seed))
            results.append(check_mc_chord_ks(params, mc_samples, seed))
    elapsed = time.perf_counter() - start
    if budget is not None:
        results.append(_result("budget", f"{budget}s", elapsed, budget))
    return results
