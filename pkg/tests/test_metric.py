import numpy as np
import pytest

from hilbertgeo.domains import EllipseDomain, PolygonDomain, quadrant
from hilbertgeo.errors import PointsOutsideDomain
from hilbertgeo.metric import (
    Normalization,
    TangentVector,
    finsler_norm,
    hilbert_area,
    hilbert_distance,
    p_area_density,
    unit_ball_boundary,
)
from hilbertgeo.projective import ProjMap
from hilbertgeo.quadrature import Rect, Strip

FULL = Normalization.FULL
ANN = Normalization.ANNOUNCED


def test_one_dimensional_section():
    # horizontal fiber of the quadrant behaves like (0, inf): d = |log(y/x)|
    q = quadrant()
    for x, y in ((1.0, 2.0), (0.5, 3.0), (2.0, 2.5)):
        d = hilbert_distance(q, (x, 1.0), (y, 1.0))
        assert d == pytest.approx(abs(np.log(y / x)), rel=1e-12)


def test_quadrant_unit_step():
    d = hilbert_distance(quadrant(), (1.0, 1.0), (np.e, np.e))
    assert d == pytest.approx(1.0, rel=1e-12)


def test_distance_zero_iff_equal():
    disc = EllipseDomain.unit_disc()
    assert hilbert_distance(disc, (0.1, 0.2), (0.1, 0.2)) == 0.0
    assert hilbert_distance(disc, (0.1, 0.2), (0.1, 0.20001)) > 0.0


def test_distance_symmetric_exactly():
    rng = np.random.default_rng(0)
    disc = EllipseDomain.unit_disc()
    for _ in range(100):
        b = 0.9 * rng.uniform(-1, 1, 2) / np.sqrt(2)
        c = 0.9 * rng.uniform(-1, 1, 2) / np.sqrt(2)
        assert hilbert_distance(disc, b, c) == hilbert_distance(disc, c, b)


def test_near_boundary_rejected():
    disc = EllipseDomain.unit_disc()
    with pytest.raises(PointsOutsideDomain):
        hilbert_distance(disc, (1 - 1e-10, 0.0), (0.0, 0.0))


def test_announced_is_half_exactly():
    disc = EllipseDomain.unit_disc()
    full = hilbert_distance(disc, (0.2, 0.1), (-0.3, 0.4), FULL)
    ann = hilbert_distance(disc, (0.2, 0.1), (-0.3, 0.4), ANN)
    assert ann == 0.5 * full


def test_finsler_disc_center():
    disc = EllipseDomain.unit_disc()
    assert finsler_norm(disc, TangentVector((0, 0), (1, 0))) == pytest.approx(2.0)
    assert finsler_norm(disc, TangentVector((0, 0), (0.6, 0.8))) == pytest.approx(2.0)


def test_finsler_positively_homogeneous():
    q = quadrant()
    v1 = finsler_norm(q, TangentVector((2.0, 0.7), (0.3, -0.1)))
    v2 = finsler_norm(q, TangentVector((2.0, 0.7), (0.6, -0.2)))
    assert v2 == pytest.approx(2.0 * v1, rel=1e-14)


def test_finsler_matches_distance_derivative():
    q = quadrant()
    e = np.array([1.0, 1.0]) / np.sqrt(2.0)
    f = finsler_norm(q, TangentVector((1.0, 1.0), tuple(e)))
    h = 1e-6
    fd = hilbert_distance(q, (1.0, 1.0), tuple(np.array([1.0, 1.0]) + h * e)) / h
    assert fd == pytest.approx(f, rel=1e-5)


def test_unit_ball_disc_center_is_circle():
    disc = EllipseDomain.unit_disc()
    pts = unit_ball_boundary(disc, (0.0, 0.0), 64)
    radii = np.linalg.norm(pts, axis=1)
    assert radii == pytest.approx(np.full(64, 0.5), rel=1e-12)


def test_unit_ball_quadrant_hexagon_vertices():
    # the ball at (x, y) is a hexagon with vertices at (+-x, 0), (0, +-y),
    # +-(x, y): directions (1,0), (0,1) and the diagonal carry them
    q = quadrant()
    x, y = 1.0, 1.0
    pts = unit_ball_boundary(q, (x, y), 8)
    assert pts[0] == pytest.approx([x, 0.0], abs=1e-12)
    assert pts[2] == pytest.approx([0.0, y], abs=1e-12)
    assert pts[1] == pytest.approx([x, y], abs=1e-12)  # 45 degrees, radius sqrt2


def test_unit_ball_convex():
    rng = np.random.default_rng(1)
    doms = [EllipseDomain((0.1, 0.2), [[1.2, 0.1], [0.0, 0.9]]),
            quadrant(),
            PolygonDomain([(0, 0), (2, 0), (3, 1.5), (1, 3), (-0.7, 1.2)])]
    for dom in doms:
        for _ in range(5):
            x = dom.interior_xy() + rng.uniform(-0.05, 0.05, 2)
            pts = unit_ball_boundary(dom, x, 48)
            nxt = np.roll(pts, -1, axis=0)
            nxt2 = np.roll(pts, -2, axis=0)
            e1, e2 = nxt - pts, nxt2 - nxt
            cross = e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]
            assert np.all(cross > -1e-12)


def test_density_quadrant_values():
    q = quadrant()
    assert p_area_density(q, (2.0, 3.0), n=1024) == pytest.approx(1 / 6, rel=1e-3)
    assert p_area_density(q, (1.0, 1.0), n=1024) == pytest.approx(1.0, rel=1e-3)
    full = p_area_density(q, (1.0, 1.0), n=1024, norm=FULL)
    ann = p_area_density(q, (1.0, 1.0), n=1024, norm=ANN)
    assert ann == 0.25 * full


def test_density_disc_center():
    disc = EllipseDomain.unit_disc()
    assert p_area_density(disc, (0.0, 0.0), n=1024) == pytest.approx(4.0, rel=1e-4)


def test_density_generic_matches_ellipse_closed_form():
    disc = EllipseDomain((0.3, -0.1), [[1.1, 0.3], [0.2, 0.8]])
    rng = np.random.default_rng(2)
    for _ in range(5):
        p = disc.center + disc.shape @ (0.7 * rng.uniform(-1, 1, 2) / np.sqrt(2))
        sampled = p_area_density(disc, p, n=2048)
        exact = disc.density_full_xy(p)
        assert sampled == pytest.approx(exact, rel=1e-4)


def test_density_generic_matches_triangle_closed_form():
    from hilbertgeo.domains import TriangleDomain
    from hilbertgeo.projective import ProjPoint

    tri = TriangleDomain(ProjPoint(0, 0, 1), ProjPoint(1, 0, 1), ProjPoint(0, 1, 1))
    p = (1 / 3, 1 / 3)
    assert tri.density_full_xy(p) == pytest.approx(27.0, rel=1e-12)
    assert p_area_density(tri, p, n=2048) == pytest.approx(27.0, rel=1e-3)


def test_density_convergence_monotone():
    q = quadrant()
    disc = EllipseDomain.unit_disc()
    for dom, p, oracle in ((q, (2.0, 3.0), 1 / 6),
                           (disc, (0.4, 0.1), disc.density_full_xy((0.4, 0.1)))):
        e1 = abs(p_area_density(dom, p, n=128) - oracle)
        e2 = abs(p_area_density(dom, p, n=512) - oracle)
        assert e2 <= e1 + 1e-15


def test_projective_invariance_of_distance():
    rng = np.random.default_rng(3)
    poly = PolygonDomain([(0, 0), (2, 0), (3, 1.5), (1, 3), (-0.7, 1.2)])
    for _ in range(25):
        g = ProjMap(np.eye(3) + 0.05 * rng.standard_normal((3, 3)))
        try:
            moved = poly.transform(g)
        except Exception:
            continue
        b = poly.interior_xy() + rng.uniform(-0.2, 0.2, 2)
        c = poly.interior_xy() + rng.uniform(-0.2, 0.2, 2)
        if not (poly.contains(b) and poly.contains(c)):
            continue
        gb = (g.m @ np.array([b[0], b[1], 1.0]))
        gc = (g.m @ np.array([c[0], c[1], 1.0]))
        d1 = hilbert_distance(poly, b, c)
        d2 = hilbert_distance(moved, gb[:2] / gb[2], gc[:2] / gc[2])
        assert d2 == pytest.approx(d1, rel=1e-9, abs=1e-12)


def test_area_rect_quadrant():
    # integral of dxdy/(xy) over [1,e]^2 is exactly 1
    q = quadrant()
    val = hilbert_area(q, Rect(1.0, np.e, 1.0, np.e), tol=1e-8)
    assert val == pytest.approx(1.0, abs=1e-6)


def test_area_hex_circle_pullback():
    # the Hex circle of radius r maps to a strip region in the quadrant
    # whose Hilbert area is 3 r^2
    from hilbertgeo.hexplane import SQRT3

    q = quadrant()
    for r in (0.8, 1.5):
        def u_hi(y, r=r):
            v = 0.5 * SQRT3 * np.log(y)
            return r - abs(v) / SQRT3

        region = Strip(
            "y", np.exp(-r), np.exp(r),
            lambda y, r=r: np.exp(-u_hi(y, r) + 0.5 * np.log(y)),
            lambda y, r=r: np.exp(u_hi(y, r) + 0.5 * np.log(y)),
            probes=[(1.0, 1.0)],
        )
        val = hilbert_area(q, region, tol=1e-6)
        assert val == pytest.approx(3.0 * r * r, abs=1e-4)


def test_area_announced_quarter():
    q = quadrant()
    full = hilbert_area(q, Rect(1.0, 2.0, 1.0, 2.0), FULL, tol=1e-8)
    ann = hilbert_area(q, Rect(1.0, 2.0, 1.0, 2.0), ANN, tol=1e-8)
    assert ann == pytest.approx(0.25 * full, rel=1e-10)


def test_region_outside_domain():
    from hilbertgeo.errors import RegionOutsideDomain

    with pytest.raises(RegionOutsideDomain):
        hilbert_area(EllipseDomain.unit_disc(), Rect(0.0, 2.0, 0.0, 0.5), tol=1e-4)
