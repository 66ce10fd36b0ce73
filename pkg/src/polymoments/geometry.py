"""Regular-polygon geometry: derived constants, vertices, point membership.

Everything downstream (distribution branches, densities, moments, samplers)
works off a single immutable :class:`PolygonParams` built once per polygon by
:func:`derive_params`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Invalid polygon specification or out-of-range argument."""


@dataclass(frozen=True)
class PolygonSpec:
    """A regular polygon with ``n`` sides inscribed in a circle of radius ``r``."""

    n: int
    r: float = 1.0

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 3:
            raise DomainError(f"polygon needs an integer n >= 3, got {self.n!r}")
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise DomainError(f"circumradius must be finite and > 0, got {self.r!r}")


@dataclass(frozen=True)
class PolygonParams:
    """Cached geometric constants of a regular polygon.

    ``ell[k]`` is the distance from vertex 0 to vertex k; it increases
    strictly from ``ell[0] == 0`` to the diameter ``ell[big_k + 1] == d``.
    ``lam`` is the distance from a vertex to the far side (``r + apothem``)
    and always satisfies ``ell[big_k] < lam < d``.

    ``h[k]`` is the distance from vertex 0 to the line through vertices k and
    k+1.  The branch coefficients ``p``, ``q``, ``s`` are materialized only
    for the indices the distribution branches actually consume; entries whose
    defining cotangent or tangent would be singular are stored as ``None`` so
    that no NaN can leak into an evaluation.
    """

    n: int
    r: float
    alpha: float
    big_k: int
    ell: tuple[float, ...]
    lam: float
    d: float
    side: float
    perimeter: float
    area: float
    apothem: float
    h: tuple[float, ...]
    p: tuple[float | None, ...]
    q: tuple[float | None, ...]
    s: tuple[float | None, ...]


def _cot(z: float) -> float:
    return math.cos(z) / math.sin(z)


def derive_params(spec: PolygonSpec) -> PolygonParams:
    """Compute every geometric constant of the polygon described by ``spec``."""
    n, r = spec.n, spec.r
    alpha = math.pi / n
    big_k = n // 2 - 1
    ell = tuple(2.0 * r * math.sin(k * alpha) for k in range(big_k + 2))
    lam = 2.0 * r * math.cos(alpha / 2.0) ** 2
    side = ell[1]
    h = tuple(2.0 * r * math.sin(k * alpha) * math.sin((k + 1) * alpha)
              for k in range(big_k + 1))

    # p_k = cot(2k*alpha) - cot(2(k+1)*alpha) is singular at k = 0 and, for
    # even n, at k = big_k (2(k+1)*alpha = pi).  q_k = tan(k*alpha) -
    # tan((k+1)*alpha) is singular for even n at k = big_k only.
    p: list[float | None] = []
    q: list[float | None] = []
    s: list[float | None] = []
    for k in range(big_k + 1):
        if n == 3:
            p.append(0.0)
            s.append(0.5)
        elif k == 0 or (n % 2 == 0 and k == big_k):
            p.append(None)
            s.append(None)
        else:
            pk = _cot(2 * k * alpha) - _cot(2 * (k + 1) * alpha)
            p.append(pk)
            s.append(k * alpha * pk)
        if n % 2 == 0 and k == big_k:
            q.append(None)
        else:
            q.append(math.tan(k * alpha) - math.tan((k + 1) * alpha))

    return PolygonParams(
        n=n,
        r=r,
        alpha=alpha,
        big_k=big_k,
        ell=ell,
        lam=lam,
        d=ell[-1],
        side=side,
        perimeter=n * side,
        area=0.5 * n * r * r * math.sin(2.0 * alpha),
        apothem=r * math.cos(alpha),
        h=h,
        p=tuple(p),
        q=tuple(q),
        s=tuple(s),
    )


def polygon(n: int, r: float = 1.0) -> PolygonParams:
    """Shorthand for ``derive_params(PolygonSpec(n, r))``."""
    return derive_params(PolygonSpec(n, r))


def vertex(params: PolygonParams, k: int) -> tuple[float, float]:
    """Vertex k, counting counterclockwise from (r, 0)."""
    if not 0 <= k < params.n:
        raise DomainError(f"vertex index {k} out of range for n={params.n}")
    ang = 2.0 * k * params.alpha
    return (params.r * math.cos(ang), params.r * math.sin(ang))


def vertices(params: PolygonParams) -> list[tuple[float, float]]:
    """All n vertices in counterclockwise order."""
    return [vertex(params, k) for k in range(params.n)]


def edge_normals(params: PolygonParams) -> list[tuple[float, float]]:
    """Outward unit normal of each edge (vertex k to vertex k+1).

    A point z lies in the closed polygon iff dot(z, normal_k) <= apothem for
    every edge k.
    """
    out = []
    for k in range(params.n):
        ang = (2 * k + 1) * params.alpha
        out.append((math.cos(ang), math.sin(ang)))
    return out


def contains(params: PolygonParams, point: tuple[float, float]) -> bool:
    """True iff ``point`` lies in the closed polygon.

    Boundary points pass; the half-plane tests carry a 1e-12*r slack so that
    vertices computed in floating point are not rejected.
    """
    x, y = point
    tol = 1e-12 * params.r
    for nx, ny in edge_normals(params):
        if x * nx + y * ny > params.apothem + tol:
            return False
    return True
