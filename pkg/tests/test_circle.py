import math

import pytest

from polymoments import circle
from polymoments.oracles import QuadConfig, integrate

from golden_values import CIRCLE_MOMENTS, CIRCLE_VARIANCE


def test_moment_table():
    for m, ref in CIRCLE_MOMENTS.items():
        assert circle.moment(m) == pytest.approx(ref, rel=1e-14)


def test_moment_order_validation():
    with pytest.raises(ValueError):
        circle.moment(-2)
    with pytest.raises(ValueError):
        circle.moment(1.5)


def test_moment_scaling():
    for m in (-1, 0, 1, 2, 5):
        assert circle.moment(m, 3.0) == pytest.approx(
            circle.moment(m) * 3.0 ** m, rel=1e-14)


def test_trivial_moments():
    assert circle.moment(0) == 1.0
    assert circle.mean() == pytest.approx(circle.moment(1), rel=1e-15)
    assert circle.moment(1) == pytest.approx(0.90541478736722679904, rel=1e-15)


def test_variance_value():
    assert circle.variance() == pytest.approx(CIRCLE_VARIANCE, rel=1e-14)
    assert circle.variance(2.0) == pytest.approx(4.0 * CIRCLE_VARIANCE,
                                                 rel=1e-14)
    assert circle.variance() == pytest.approx(
        circle.moment(2) - circle.moment(1) ** 2, rel=1e-14)


def test_chord_cdf_shape():
    assert circle.chord_cdf(-1.0) == 0.0
    assert circle.chord_cdf(0.0) == 0.0
    assert circle.chord_cdf(2.0) == 1.0
    assert circle.chord_cdf(1.0) == pytest.approx(1.0 - math.sqrt(0.75),
                                                  rel=1e-15)
    xs = [0.02 * i for i in range(101)]
    values = [circle.chord_cdf(x) for x in xs]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_distance_pdf_normalizes_and_reproduces_moments():
    cfg = QuadConfig(rel_tol=1e-12)
    total, _ = integrate(lambda x: circle.distance_pdf(x), 0.0, 2.0, cfg)
    assert total == pytest.approx(1.0, abs=1e-10)
    for m in (-1, 1, 2, 3, 4):
        value, _ = integrate(lambda x: x ** m * circle.distance_pdf(x),
                             0.0, 2.0, cfg)
        assert value == pytest.approx(circle.moment(m), rel=1e-9)


def test_moments_from_cdf_route():
    # M_m = 2L/((m+2) A^2) * integral x^(m+2) (1 - F) with L = 2 pi r, A = pi r^2
    cfg = QuadConfig(rel_tol=1e-12)
    for m in (1, 2, 6):
        raw, _ = integrate(lambda x: x ** (m + 2) * (1.0 - circle.chord_cdf(x)),
                           0.0, 2.0, cfg)
        value = 4.0 * math.pi / ((m + 2) * math.pi ** 2) * raw
        assert value == pytest.approx(circle.moment(m), rel=1e-9)
