import math

import numpy as np
import pytest

from polymoments.chord_cdf import breakpoints, chord_cdf, mean_chord
from polymoments.distance_pdf import distance_pdf
from polymoments.geometry import contains, edge_normals, polygon
from polymoments.moments import polar_moment
from polymoments.oracles import (IUR_CHORD, POINT_PAIR, McConfig, QuadConfig,
                                 QuadratureError, integrate, mc_estimate,
                                 rng_for_shard, sample_chord_lengths,
                                 sample_point, sample_points)


def test_integrate_linear():
    value, err = integrate(lambda x: x, 0.0, 1.0)
    assert value == pytest.approx(0.5, abs=1e-12)
    assert err < 1e-12


@pytest.mark.parametrize("degree", list(range(13)))
def test_integrate_polynomials_exact(degree):
    value, _ = integrate(lambda x: x ** degree, 0.0, 2.0)
    exact = 2.0 ** (degree + 1) / (degree + 1)
    assert abs(value - exact) <= 1e-13 * exact


def test_integrate_empty_and_bad_interval():
    assert integrate(math.sin, 1.0, 1.0) == (0.0, 0.0)
    with pytest.raises(ValueError):
        integrate(math.sin, 1.0, 0.0)


def test_integrate_honors_mandatory_splits():
    cfg = QuadConfig(mandatory_splits=(0.5,))
    value, _ = integrate(lambda x: abs(x - 0.5), 0.0, 1.0, cfg)
    assert value == pytest.approx(0.25, abs=1e-14)


def test_integrate_depth_exhaustion_carries_best_estimate():
    cfg = QuadConfig(rel_tol=1e-14, abs_tol=1e-300, max_depth=3)
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: math.sqrt(abs(x)), 0.0, 1.0, cfg)
    best = info.value.value
    assert best == pytest.approx(2.0 / 3.0, rel=1e-3)
    assert info.value.err_estimate > 0.0


def test_integrate_mean_chord_identity():
    p = polygon(4)
    cfg = QuadConfig(rel_tol=1e-11, mandatory_splits=breakpoints(p))
    value, _ = integrate(lambda x: 1.0 - chord_cdf(p, x), 0.0, p.d, cfg)
    assert value == pytest.approx(math.pi * math.sqrt(2.0) / 4.0, rel=1e-9)


def test_integrate_pdf_normalization():
    p = polygon(7)
    cfg = QuadConfig(rel_tol=1e-11, mandatory_splits=breakpoints(p))
    value, _ = integrate(lambda x: distance_pdf(p, x), 0.0, p.d, cfg)
    assert value == pytest.approx(1.0, abs=1e-9)


def test_mc_config_validation():
    with pytest.raises(ValueError):
        McConfig(samples=0)
    with pytest.raises(ValueError):
        McConfig(samples=10, estimator="bogus")


def test_mc_determinism_bit_identical():
    p = polygon(6)
    cfg = McConfig(samples=30_000, seed=123)
    assert mc_estimate(p, cfg, 1) == mc_estimate(p, cfg, 1)
    chord_cfg = McConfig(samples=30_000, seed=123, estimator=IUR_CHORD)
    assert mc_estimate(p, chord_cfg, 2) == mc_estimate(p, chord_cfg, 2)
    # shard plan is part of the contract: same seed, different shard size,
    # different stream
    other = mc_estimate(p, McConfig(samples=30_000, seed=124), 1)
    assert other != mc_estimate(p, cfg, 1)


def test_mc_zeroth_moment_is_exact():
    p = polygon(9)
    est, se = mc_estimate(p, McConfig(samples=1000, seed=5), 0)
    assert est == 1.0
    assert se == 0.0


def test_sample_points_stay_inside_and_center():
    p = polygon(5)
    pts = sample_points(p, 1_000_000, rng_for_shard(17, 0))
    normals = np.asarray(edge_normals(p))
    support = pts @ normals.T
    assert float(support.max()) <= p.apothem + 1e-12
    # symmetric: mean within 4 standard errors of the centroid
    se = pts.std(axis=0, ddof=1) / math.sqrt(pts.shape[0])
    assert abs(float(pts[:, 0].mean())) < 4.0 * se[0]
    assert abs(float(pts[:, 1].mean())) < 4.0 * se[1]


def test_sample_points_second_radial_moment():
    # E[x^2 + y^2] = I_p / area
    p = polygon(5)
    pts = sample_points(p, 1_000_000, rng_for_shard(18, 0))
    rho2 = (pts ** 2).sum(axis=1)
    est = float(rho2.mean())
    se = float(rho2.std(ddof=1)) / math.sqrt(rho2.size)
    assert abs(est - polar_moment(p) / p.area) < 4.0 * se


def test_sample_point_scalar():
    p = polygon(7)
    rng = rng_for_shard(3, 0)
    for _ in range(200):
        assert contains(p, sample_point(p, rng))


def test_chord_acceptance_rate():
    # hitting probability of a random (distance, angle) line is
    # perimeter / (2 pi r)
    p = polygon(3)
    rng = rng_for_shard(21, 0)
    proposals = 200_000
    from polymoments.oracles import _chord_lengths_batch

    lengths = _chord_lengths_batch(p, proposals, rng)
    rate = float((lengths > 0.0).mean())
    expect = p.perimeter / (2.0 * math.pi * p.r)
    se = math.sqrt(expect * (1.0 - expect) / proposals)
    assert rate > 0.5
    assert abs(rate - expect) < 4.0 * se


def test_chord_lengths_bounded_by_diameter():
    p = polygon(9)
    lengths = sample_chord_lengths(p, 50_000, rng_for_shard(8, 0))
    assert lengths.size == 50_000
    assert float(lengths.max()) <= p.d + 1e-12
    assert float(lengths.min()) > 0.0


def test_chord_mean_matches_identity():
    p = polygon(5)
    cfg = McConfig(samples=200_000, seed=99, estimator=IUR_CHORD)
    est, se = mc_estimate(p, cfg, 1)
    assert abs(est - mean_chord(p)) < 4.0 * se


def test_point_pair_mean_matches_analytic():
    from polymoments.moments import moment

    p = polygon(8)
    cfg = McConfig(samples=200_000, seed=77, estimator=POINT_PAIR)
    est, se = mc_estimate(p, cfg, 1)
    assert abs(est - moment(p, 1).value) < 4.0 * se
