"""Closed-form antiderivatives of the three kernel families

    x**mu / sqrt(x**2 - a**2),    x**mu * asin(a / x),    x**mu * sqrt(x**2 - a**2)

for integer ``mu``.  These primitives are the special-function core behind
every distribution branch and every moment formula in this package.

All functions clamp the radicand ``x**2 - a**2`` to zero when ``x``
undershoots ``a`` by at most a relative ``CLAMP_REL``: branch edges of the
piecewise distributions hit ``x == a`` exactly in exact arithmetic but not in
binary64.  For the same reason ``asin(a / x)`` is evaluated with the ratio
clamped to 1.
"""
from __future__ import annotations

import math
import operator

# Relative undershoot of x below a that is treated as x == a.
CLAMP_REL = 1e-12

# Largest admissible double-factorial argument; anything bigger signals a
# runaway order upstream (moment orders are capped far below this).
MAX_DOUBLE_FACTORIAL = 130


def double_factorial(k: int) -> int:
    """k!! with the conventions 0!! = (-1)!! = 1."""
    k = operator.index(k)
    if k < -1:
        raise ValueError(f"double factorial needs k >= -1, got {k}")
    if k > MAX_DOUBLE_FACTORIAL:
        raise ValueError(f"double factorial argument {k} exceeds guard "
                         f"{MAX_DOUBLE_FACTORIAL}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def _index(mu: int, lowest: int, name: str) -> int:
    try:
        mu = operator.index(mu)
    except TypeError:
        raise ValueError(f"{name} needs an integer order, got {mu!r}") from None
    if mu < lowest:
        raise ValueError(f"{name} needs order >= {lowest}, got {mu}")
    return mu


def _check_edge(a: float, x: float, name: str) -> None:
    if not a > 0.0:
        raise ValueError(f"{name} needs a > 0, got a={a}")
    if x < a * (1.0 - CLAMP_REL):
        raise ValueError(f"{name} is undefined below x = a: x={x}, a={a}")


def _sqrt_gap(x: float, a: float) -> float:
    """sqrt(x**2 - a**2), clamped to 0 for rounding-level undershoot."""
    gap = (x - a) * (x + a)
    return math.sqrt(gap) if gap > 0.0 else 0.0


def _asin_ratio(a: float, x: float) -> float:
    return math.asin(min(1.0, a / x))


def _log_ratio(x: float, a: float) -> float:
    """log((x + sqrt(x**2 - a**2)) / a), accurate near x == a."""
    return math.log1p((x - a + _sqrt_gap(x, a)) / a)


def gamma_factor(mu: int, a: float, x: float) -> float:
    """Correction factor of the power-family antiderivative,

        1 + sum_{v=1}^{floor((mu-1)/2)} (a/x)**(2v) * prod_{j=1}^{v} (mu+1-2j)/(mu-2j).

    The sum is empty for mu = 1, 2.
    """
    mu = _index(mu, 1, "gamma_factor")
    _check_edge(a, x, "gamma_factor")
    ratio_sq = (a / x) ** 2
    total = 1.0
    term = 1.0
    for v in range(1, (mu - 1) // 2 + 1):
        term *= ratio_sq * (mu + 1 - 2 * v) / (mu - 2 * v)
        total += term
    return total


def psi_tilde(mu: int, a: float, x: float) -> float:
    """Antiderivative of x**mu / sqrt(x**2 - a**2) on [a, inf), a > 0.

    Continuous in x on [a, inf); its value at x = a is 0 for mu >= 0 and
    -pi/(2a) for mu = -1.
    """
    mu = _index(mu, -1, "psi_tilde")
    _check_edge(a, x, "psi_tilde")
    if mu == -1:
        return -_asin_ratio(a, x) / a
    if mu == 0:
        return _log_ratio(x, a)
    val = x ** (mu - 1) * _sqrt_gap(x, a) * gamma_factor(mu, a, x) / mu
    if mu % 2 == 0:
        coeff = double_factorial(mu - 1) / double_factorial(mu)
        val += coeff * a ** mu * _log_ratio(x, a)
    return val


def sigma_tilde(mu: int, a: float, x: float) -> float:
    """Antiderivative of x**mu * asin(a / x); exactly 0 when a == 0."""
    mu = _index(mu, 0, "sigma_tilde")
    if a == 0.0:
        return 0.0
    _check_edge(a, x, "sigma_tilde")
    return (x ** (mu + 1) * _asin_ratio(a, x) + a * psi_tilde(mu, a, x)) / (mu + 1)


def tau_tilde(mu: int, a: float, x: float) -> float:
    """Antiderivative of x**mu * sqrt(x**2 - a**2); x**(mu+2)/(mu+2) when a == 0."""
    mu = _index(mu, -1, "tau_tilde")
    if a == 0.0:
        return x ** (mu + 2) / (mu + 2)
    _check_edge(a, x, "tau_tilde")
    return (x ** (mu + 1) * _sqrt_gap(x, a) - a * a * psi_tilde(mu, a, x)) / (mu + 2)
