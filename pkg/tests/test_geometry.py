import math

import pytest

from polymoments import geometry
from polymoments.geometry import (DomainError, PolygonSpec, contains,
                                  derive_params, polygon, vertex, vertices)


def test_triangle_constants():
    p = polygon(3)
    assert p.ell[1] == pytest.approx(math.sqrt(3.0), rel=1e-15)
    assert p.d == pytest.approx(math.sqrt(3.0), rel=1e-15)
    assert p.lam == pytest.approx(1.5, rel=1e-15)
    assert p.area == pytest.approx(3.0 * math.sqrt(3.0) / 4.0, rel=1e-15)


def test_square_constants():
    p = polygon(4)
    assert p.side == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert p.d == pytest.approx(2.0, rel=1e-15)
    assert p.area == pytest.approx(2.0, rel=1e-15)
    assert p.perimeter == pytest.approx(4.0 * math.sqrt(2.0), rel=1e-15)


def test_hexagon_constants():
    p = polygon(6)
    assert p.ell[1] == pytest.approx(1.0, rel=1e-15)
    assert p.ell[2] == pytest.approx(math.sqrt(3.0), rel=1e-15)
    assert p.d == pytest.approx(2.0, rel=1e-15)
    assert p.lam == pytest.approx(1.0 + math.sqrt(3.0) / 2.0, rel=1e-15)


@pytest.mark.parametrize("n,r", [(2, 1.0), (1, 1.0), (5, 0.0), (5, -2.0),
                                 (5, math.inf)])
def test_rejects_bad_spec(n, r):
    with pytest.raises(DomainError):
        derive_params(PolygonSpec(n, r))


def test_vertices():
    assert vertex(polygon(4), 0) == pytest.approx((1.0, 0.0), abs=1e-15)
    assert vertex(polygon(4), 1) == pytest.approx((0.0, 1.0), abs=1e-15)
    assert vertex(polygon(3, 2.0), 1) == pytest.approx((-1.0, math.sqrt(3.0)),
                                                       abs=1e-14)
    with pytest.raises(DomainError):
        vertex(polygon(4), 4)
    with pytest.raises(DomainError):
        vertex(polygon(4), -1)


def test_contains():
    p = polygon(5)
    assert contains(p, (0.0, 0.0))
    assert not contains(p, (2.0, 0.0))
    assert contains(polygon(3), vertex(polygon(3), 0))
    # just outside an edge midpoint
    apothem = polygon(5).apothem
    ang = geometry.edge_normals(p)[0]
    assert not contains(p, ((apothem + 1e-9) * ang[0], (apothem + 1e-9) * ang[1]))


@pytest.mark.parametrize("n", list(range(3, 201)))
def test_breakpoint_ordering(n):
    p = polygon(n)
    for a, b in zip(p.ell, p.ell[1:]):
        assert a < b
    assert p.ell[p.big_k] < p.lam < p.d


def _shoelace(points):
    total = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:] + points[:1]):
        total += x0 * y1 - x1 * y0
    return 0.5 * total


@pytest.mark.parametrize("n,r", [(3, 1.0), (4, 2.5), (7, 0.3), (12, 1.0),
                                 (41, 5.0), (100, 1.0)])
def test_area_perimeter_diameter_against_vertices(n, r):
    p = polygon(n, r)
    verts = vertices(p)
    assert p.area == pytest.approx(_shoelace(verts), rel=1e-12)
    side = math.dist(verts[0], verts[1])
    assert p.perimeter == pytest.approx(n * side, rel=1e-12)
    diam = max(math.dist(a, b) for a in verts for b in verts)
    assert p.d == pytest.approx(diam, rel=1e-12)
    # area = n * (side/2) * r * cos(alpha)
    assert p.area == pytest.approx(n * side / 2.0 * r * math.cos(p.alpha),
                                   rel=1e-12)


def test_coefficients_absent_only_where_singular():
    square = polygon(4)
    assert square.p[0] is None and square.p[square.big_k] is None
    assert square.q[square.big_k] is None

    tri = polygon(3)
    assert tri.p == (0.0,)
    assert tri.s == (0.5,)
    assert tri.q[0] == pytest.approx(-math.tan(math.pi / 3.0), rel=1e-15)

    for n in (5, 7, 9, 11):
        p = polygon(n)
        assert p.p[0] is None
        assert all(v is not None for v in p.p[1:])
        assert all(v is not None for v in p.q)
        for k in range(1, p.big_k + 1):
            assert p.s[k] == pytest.approx(k * p.alpha * p.p[k], rel=1e-15)

    for n in (6, 8, 10):
        p = polygon(n)
        assert p.p[p.big_k] is None
        assert all(v is not None for v in p.p[1:p.big_k])


def test_h_matches_definition():
    for n in (3, 4, 5, 6, 9, 14):
        p = polygon(n, 1.5)
        for k in range(p.big_k + 1):
            expect = 2.0 * 1.5 * math.sin(k * p.alpha) * math.sin((k + 1) * p.alpha)
            assert p.h[k] == pytest.approx(expect, rel=1e-15)
