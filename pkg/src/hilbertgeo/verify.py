"""Numeric verification suite.

Each check reproduces one quantitative claim end to end at a fixed
tolerance with fixed seeds (no network, no nondeterminism).  The CLI
`verify` subcommand and the acceptance tests both run this catalog.
"""

from dataclasses import dataclass

import numpy as np

from . import bounds, hexplane, ideal
from .domains import EllipseDomain, PolygonDomain, quadrant
from .metric import (
    Normalization,
    density_of_norm,
    hilbert_area_quadrature,
    hilbert_area_mc,
    hilbert_distance,
    p_area_density,
)
from .projective import ProjMap, ProjPoint
from .quadrature import UniformTriangleSampler, VertexGradedTriangleSampler

FULL = Normalization.FULL
ANNOUNCED = Normalization.ANNOUNCED


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name, passed, detail):
    return CheckResult(name, bool(passed), detail)


def check_closed_form_area():
    """B(t) numeric vs (pi^2 + log^2 t)/2 for t in {1, 2, 10, 100}."""
    worst = 0.0
    for t in (1.0, 2.0, 10.0, 100.0):
        num = ideal.triangle_area_numeric(t, 1e-8)
        closed = (np.pi**2 + np.log(t) ** 2) / 2.0
        worst = max(worst, abs(num - closed))
    return _result("closed-form-area", worst < 1e-6,
                   "max |numeric - closed| = %.3g (tol 1e-6)" % worst)


def check_quadrant_density():
    """Generic ball-sampled density vs 1/(xy) at 20 seeded points."""
    q = quadrant()
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(20):
        x, y = rng.uniform(0.25, 4.0, 2)
        dens = p_area_density(q, (x, y), n=4096)
        worst = max(worst, abs(dens * x * y - 1.0))
    return _result("quadrant-density-oracle", worst < 1e-3,
                   "max relative error vs 1/(xy) = %.3g (tol 1e-3)" % worst)


def check_hex_conversion_factor():
    """Generic density of the Hex norm vs 2/sqrt(3)."""
    dens = density_of_norm(hexplane.hex_norm, 4096)
    rel = abs(dens / hexplane.HEX_AREA_FACTOR - 1.0)
    return _result("hex-conversion-factor", rel < 1e-3,
                   "relative error vs 2/sqrt(3) = %.3g (tol 1e-3)" % rel)


def check_isometry():
    """Hex distance vs quadrant Hilbert distance through A, 1000 pairs."""
    q = quadrant()
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(1000):
        a = rng.uniform(-3.0, 3.0, 2)
        b = rng.uniform(-3.0, 3.0, 2)
        dh = hexplane.hex_distance(a, b)
        dq = hilbert_distance(q, hexplane.hex_to_quadrant(a),
                              hexplane.hex_to_quadrant(b), FULL)
        worst = max(worst, abs(dh - dq))
    return _result("hex-quadrant-isometry", worst < 1e-9,
                   "max |d_Hex - d_Q| = %.3g (tol 1e-9)" % worst)


def check_hex_circle():
    """Circumference 6r and p-area 3r^2 for r in {1, 2}."""
    worst = 0.0
    for r in (1.0, 2.0):
        circ, area = hexplane.hex_circle_stats(r, n=60)
        worst = max(worst, abs(circ - 6.0 * r), abs(area - 3.0 * r * r))
    return _result("hex-circle", worst < 1e-9,
                   "max deviation from (6r, 3r^2) = %.3g (tol 1e-9)" % worst)


def check_base_height():
    """(2/sqrt3)|det(a,b)| = ||a|| * dist(b, span a), 200 random pairs."""
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(200):
        theta = rng.uniform(0.0, 2.0 * np.pi)
        a = rng.uniform(0.5, 2.0) * np.array([np.cos(theta), np.sin(theta)])
        b = rng.uniform(-2.0, 2.0, 2)
        lhs = hexplane.hex_parallelogram_area(a, b)
        rhs = hexplane.hex_norm(a) * hexplane.hex_distance_to_span(b, a)
        worst = max(worst, abs(lhs - rhs))
    return _result("hex-base-times-height", worst < 1e-6,
                   "max |area - base*height| = %.3g (tol 1e-6)" % worst)


def _sample_ellipse(dom, rng, margin=0.97):
    r = margin * np.sqrt(rng.random())
    th = rng.uniform(0.0, 2.0 * np.pi)
    return dom.center + dom.shape @ (r * np.array([np.cos(th), np.sin(th)]))


def _sample_polygon(dom, rng):
    lo = dom.vertices.min(axis=0)
    hi = dom.vertices.max(axis=0)
    while True:
        p = rng.uniform(lo, hi)
        if dom.margin_xy(p) > 1e-3:
            return p


def _fixture_polygon(k=7, seed=7, radius=2.0):
    rng = np.random.default_rng(seed)
    while True:
        angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, k))
        if np.min(np.diff(angles)) < 0.15:
            continue
        pts = radius * np.stack([np.cos(angles), np.sin(angles)], axis=1)
        pts *= rng.uniform(0.93, 1.0, (k, 1))
        try:
            return PolygonDomain(pts)
        except Exception:
            continue


def check_metric_axioms():
    """Triangle inequality on 1000 triples (ellipse + polygon) and
    nested-domain monotonicity on 500 polygon pairs."""
    rng = np.random.default_rng(7)
    ell = EllipseDomain((0.3, -0.2), [[1.2, 0.3], [-0.1, 0.8]])
    poly = _fixture_polygon()
    worst = -np.inf
    for dom, sampler in ((ell, _sample_ellipse), (poly, _sample_polygon)):
        for _ in range(1000):
            p, q, r = (sampler(dom, rng) for _ in range(3))
            excess = (hilbert_distance(dom, p, r)
                      - hilbert_distance(dom, p, q)
                      - hilbert_distance(dom, q, r))
            worst = max(worst, excess)
    inner = poly.scaled_toward_centroid(0.6)
    mono = -np.inf
    for _ in range(500):
        a, b = _sample_polygon(inner, rng), _sample_polygon(inner, rng)
        if np.max(np.abs(a - b)) < 1e-9:
            continue
        mono = max(mono, hilbert_distance(poly, a, b) - hilbert_distance(inner, a, b))
    ok = worst <= 1e-9 and mono <= 1e-9
    return _result("metric-axioms-monotonicity", ok,
                   "triangle-inequality excess %.3g, monotonicity excess %.3g "
                   "(tol 1e-9)" % (worst, mono))


def check_derivative():
    """dB/dt = log(t)/t against central differences at h = 1e-3."""
    worst = 0.0
    for t in (1.0, float(np.e), 4.0):
        fd, analytic = ideal.db_dt_check(t, 1e-3, tol=1e-8)
        worst = max(worst, abs(fd - analytic))
    return _result("area-derivative", worst < 1e-4,
                   "max |finite-diff - log(t)/t| = %.3g (tol 1e-4)" % worst)


def check_equality_case():
    """2D quadrature of the quadrant density over the canonical ideal
    triangle vs the closed form, t in {1, 5}."""
    q = quadrant()
    worst = 0.0
    for t in (1.0, 5.0):
        res = hilbert_area_quadrature(q, ideal.canonical_triangle_region(t),
                                      FULL, tol=2e-4)
        worst = max(worst, abs(res.value - ideal.triangle_area_closed(t, FULL)))
    return _result("equality-case-2d-area", worst < 1e-3,
                   "max |2d quadrature - B(t)| = %.3g (tol 1e-3)" % worst)


def disc_triangle_samplers():
    """Medial-split samplers for the symmetric ideal triangle in the
    unit disc: one vertex-graded stratum per boundary vertex plus the
    uniform central triangle."""
    v = [np.array([np.cos(a), np.sin(a)])
         for a in (np.pi / 2.0, np.pi * 7.0 / 6.0, np.pi * 11.0 / 6.0)]
    m = [0.5 * (v[i] + v[(i + 1) % 3]) for i in range(3)]
    return [
        VertexGradedTriangleSampler(v[0], m[0], m[2]),
        VertexGradedTriangleSampler(v[1], m[1], m[0]),
        VertexGradedTriangleSampler(v[2], m[2], m[1]),
        UniformTriangleSampler(m[0], m[1], m[2]),
    ]


def check_strict_inequality():
    """Monte Carlo area of the disc ideal triangle: within 1% of 4*pi
    (the hyperbolic oracle: Full disc metric doubles the hyperbolic one)
    and strictly above the triangle bound pi^2/2."""
    disc = EllipseDomain.unit_disc()
    res = hilbert_area_mc(disc, disc_triangle_samplers(), 1_000_000, seed=20,
                          norm=FULL)
    target = 4.0 * np.pi
    rel = abs(res.value - target) / target
    ok = rel < 0.01 and res.value > np.pi**2 / 2.0
    return _result("disc-strict-inequality", ok,
                   "mc area %.6f vs 4*pi %.6f (rel err %.3g, tol 1%%; "
                   "bound pi^2/2 %.6f)" % (res.value, target, rel, np.pi**2 / 2))


def _shape_fixture():
    poly = _fixture_polygon(k=8, seed=11, radius=1.5)
    tri = ideal.IdealTriangle(
        poly, poly.edge_point(0, 0.37), poly.edge_point(3, 0.52),
        poly.edge_point(5, 0.61))
    return poly, tri


def check_shape_invariance():
    """t = abc on the reference configuration, plus invariance of t under
    100 random projective maps of (domain, vertices)."""
    e1, e2, e3 = (ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1))
    from .domains import TriangleDomain

    tri = TriangleDomain(e1, e2, e3)
    sp = ideal.shape_parameter(tri, ProjPoint(1, 2, 0), ProjPoint(0, 1, 3),
                               ProjPoint(4, 0, 1))
    abc_err = abs(sp.t - 24.0)

    _, fixture = _shape_fixture()
    t0 = ideal.shape_of_ideal_triangle(fixture).t
    rng = np.random.default_rng(11)
    worst = 0.0
    done = 0
    while done < 100:
        g = ProjMap(np.eye(3) + 0.08 * rng.standard_normal((3, 3)))
        try:
            moved = fixture.transform(g)
            t1 = ideal.shape_of_ideal_triangle(moved).t
        except Exception:
            continue
        worst = max(worst, abs(t1 - t0) / t0)
        done += 1
    ok = abc_err < 1e-12 and worst < 1e-9
    return _result("shape-parameter-invariance", ok,
                   "|t(2,3,4) - 24| = %.3g; max relative drift over 100 maps "
                   "= %.3g (tol 1e-9)" % (abc_err, worst))


def check_surface_bounds():
    """alpha bound decomposition, tau = 0 value, and the orbifold bound."""
    zero = bounds.SurfaceSpec(2, np.zeros(4))
    base_err = abs(bounds.alpha_bound(zero, ANNOUNCED) - np.pi**2 / 2.0)
    rng = np.random.default_rng(12)
    worst = base_err
    for _ in range(100):
        tau = rng.uniform(-2.0, 2.0, 4)
        spec = bounds.SurfaceSpec(2, tau)
        total = sum(ideal.triangle_area_closed(float(np.exp(ti)), ANNOUNCED)
                    for ti in tau)
        worst = max(worst, abs(bounds.alpha_bound(spec, ANNOUNCED) - total))
    orb = abs(bounds.orbifold_bound(bounds.OrbifoldSpec(-1.0 / 42.0))
              - np.pi**2 / 168.0)
    ok = worst < 1e-12 and orb < 1e-12
    return _result("surface-bounds", ok,
                   "max decomposition defect %.3g, orbifold defect %.3g "
                   "(tol 1e-12)" % (worst, orb))


ALL_CHECKS = [
    check_closed_form_area,
    check_quadrant_density,
    check_hex_conversion_factor,
    check_isometry,
    check_hex_circle,
    check_base_height,
    check_metric_axioms,
    check_derivative,
    check_equality_case,
    check_strict_inequality,
    check_shape_invariance,
    check_surface_bounds,
]


def run_all(report=print):
    """Run every check, report one line each, return the results."""
    results = []
    for fn in ALL_CHECKS:
        res = fn()
        results.append(res)
        if report is not None:
            report("%s  %-32s %s" % ("PASS" if res.passed else "FAIL",
                                     res.name, res.detail))
    return results
