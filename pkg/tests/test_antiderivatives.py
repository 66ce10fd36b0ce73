import math

import numpy as np
import pytest

from polymoments.antiderivatives import (double_factorial, gamma_factor,
                                         psi_tilde, sigma_tilde, tau_tilde)
from polymoments.oracles import QuadConfig, integrate


def test_double_factorial():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(1) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    assert double_factorial(9) == 945
    with pytest.raises(ValueError):
        double_factorial(-2)
    with pytest.raises(ValueError):
        double_factorial(131)


def test_gamma_factor_small_orders():
    # empty sum for orders 1 and 2
    assert gamma_factor(1, 0.7, 2.0) == 1.0
    assert gamma_factor(2, 0.7, 2.0) == 1.0
    # one term: (a/x)^2 * (mu+1-2)/(mu-2) = (1/2)^2 * 2/1
    assert gamma_factor(3, 1.0, 2.0) == pytest.approx(1.0 + 0.25 * 2.0, rel=1e-15)


def test_gamma_factor_consistent_with_quintic_form():
    # psi for order 5 has the explicit form (3x^4+4a^2x^2+8a^4)sqrt(x^2-a^2)/15;
    # the general route must agree, tying gamma_factor down at x = a too.
    for a, x in [(1.0, 1.0), (1.0, 1.7), (0.4, 2.2)]:
        explicit = (3 * x**4 + 4 * a**2 * x**2 + 8 * a**4) * math.sqrt(
            max(x * x - a * a, 0.0)) / 15.0
        assert psi_tilde(5, a, x) == pytest.approx(explicit, abs=1e-14, rel=1e-13)


def test_psi_point_values():
    assert psi_tilde(-1, 1.0, 2.0) == pytest.approx(-math.pi / 6.0, rel=1e-15)
    assert psi_tilde(1, 3.0, 5.0) == pytest.approx(4.0, rel=1e-15)
    expect = (11.0 * math.sqrt(3.0) + 1.5 * math.log(2.0 + math.sqrt(3.0))) / 4.0
    assert psi_tilde(4, 1.0, 2.0) == pytest.approx(expect, rel=1e-15)


def test_psi_rejects_bad_arguments():
    with pytest.raises(ValueError):
        psi_tilde(2, 0.0, 1.0)
    with pytest.raises(ValueError):
        psi_tilde(2, -1.0, 1.0)
    with pytest.raises(ValueError):
        psi_tilde(2, 1.0, 0.5)
    with pytest.raises(ValueError):
        psi_tilde(1.5, 1.0, 2.0)
    with pytest.raises(ValueError):
        psi_tilde(-2, 1.0, 2.0)
    with pytest.raises(ValueError):
        sigma_tilde(-1, 1.0, 2.0)
    # rounding-level undershoot of x below a is clamped, not rejected
    assert psi_tilde(1, 1.0, 1.0 - 1e-13) == 0.0


def _psi_explicit(mu, a, x):
    """The six explicit low-order forms of the power-family antiderivative."""
    root = math.sqrt(max(x * x - a * a, 0.0))
    lg = math.log((x + root) / a)
    return {
        1: root,
        2: 0.5 * (x * root + a**2 * lg),
        3: (x**2 + 2 * a**2) * root / 3.0,
        4: (x * (2 * x**2 + 3 * a**2) * root + 3 * a**4 * lg) / 8.0,
        5: (3 * x**4 + 4 * a**2 * x**2 + 8 * a**4) * root / 15.0,
        6: (x * (8 * x**4 + 10 * a**2 * x**2 + 15 * a**4) * root
            + 15 * a**6 * lg) / 48.0,
    }[mu]


@pytest.mark.parametrize("mu", [1, 2, 3, 4, 5, 6])
def test_psi_matches_explicit_forms(mu):
    rng = np.random.default_rng(1234 + mu)
    for _ in range(40):
        a = 0.1 + 1.9 * rng.random()
        x = a * (1.0 + 2.0 * rng.random())
        got = psi_tilde(mu, a, x)
        expect = _psi_explicit(mu, a, x)
        assert got == pytest.approx(expect, rel=1e-12, abs=1e-14)


def test_sigma_point_values():
    assert sigma_tilde(7, 0.0, 3.0) == 0.0
    assert sigma_tilde(0, 1.0, 1.0) == pytest.approx(math.pi / 2.0, rel=1e-15)


def test_sigma_against_quadrature():
    value, _ = integrate(lambda t: t**4 * math.asin(1.0 / t), 1.0, 2.0,
                         QuadConfig(rel_tol=1e-12))
    got = sigma_tilde(4, 1.0, 2.0) - sigma_tilde(4, 1.0, 1.0)
    assert got == pytest.approx(value, abs=1e-10)


def test_tau_point_values():
    assert tau_tilde(2, 0.0, 2.0) == pytest.approx(4.0, rel=1e-15)
    assert tau_tilde(-1, 1.0, 1.0) == pytest.approx(math.pi / 2.0, rel=1e-15)
    expect = (3.0 * 17.0 * math.sqrt(8.0)
              - math.log(3.0 + math.sqrt(8.0))) / 8.0
    assert tau_tilde(2, 1.0, 3.0) == pytest.approx(expect, rel=1e-15)


def test_tau_against_quadrature():
    value, _ = integrate(lambda t: t**3 * math.sqrt(t * t - 0.25), 0.5, 2.0,
                         QuadConfig(rel_tol=1e-12))
    got = tau_tilde(3, 0.5, 2.0) - tau_tilde(3, 0.5, 0.5)
    assert got == pytest.approx(value, abs=1e-10)


@pytest.mark.parametrize("mu", list(range(-1, 9)))
def test_derivatives_recover_kernels(mu):
    rng = np.random.default_rng(77 + mu)
    for _ in range(25):
        a = 2.0 * rng.random() + 1e-3
        x = a * 1.01 + 5.0 * rng.random()
        h = 1e-5 * x
        gap = math.sqrt(x * x - a * a)
        pairs = [(psi_tilde, x**mu / gap), (tau_tilde, x**mu * gap)]
        if mu >= 0:
            pairs.append((sigma_tilde, x**mu * math.asin(a / x)))
        for fn, kernel in pairs:
            diff = (fn(mu, a, x + h) - fn(mu, a, x - h)) / (2.0 * h)
            assert diff == pytest.approx(kernel, rel=1e-6)


@pytest.mark.parametrize("mu", [0, 1, 2, 3, 4, 5])
def test_vanishing_edge_limit(mu):
    # a -> 0: tau goes to the pure power primitive, sigma to 0.
    for x in (0.5, 1.0, 2.0, 3.0):
        assert tau_tilde(mu, 1e-8, x) == pytest.approx(
            tau_tilde(mu, 0.0, x), rel=1e-6)
        assert abs(sigma_tilde(mu, 1e-8, x)) < 1e-6
