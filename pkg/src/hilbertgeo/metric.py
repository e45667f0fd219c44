"""Hilbert distance, Finsler norm, and the parallelogram (p-)area density.

Normalization conventions
-------------------------
``Normalization.FULL`` is the raw definition d(b,c) = |log cr(a,b,c,d)|;
on the unit disc it is twice the hyperbolic metric.  ``ANNOUNCED`` is the
half metric (hyperbolic on the disc), whose areas are a quarter of Full.
Announced values are produced exactly as Full/2 (distances, norms) and
Full/4 (densities, areas).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import GeometryError, InvalidParameter, PointsOutsideDomain, RegionOutsideDomain
from .quadrature import integrate_2d, monte_carlo_2d

NEAR_BOUNDARY = 1e-8    # interior points closer than this are rejected


class Normalization(Enum):
    FULL = "full"
    ANNOUNCED = "announced"

    @property
    def dist_scale(self):
        return 1.0 if self is Normalization.FULL else 0.5

    @property
    def area_scale(self):
        return 1.0 if self is Normalization.FULL else 0.25

    @classmethod
    def parse(cls, name):
        try:
            return cls(str(name).lower())
        except ValueError:
            raise InvalidParameter("normalization must be 'full' or 'announced'")


@dataclass(frozen=True)
class TangentVector:
    """Direction dir attached to an interior base point (chart coords)."""
    base: tuple
    dir: tuple


def _xy(p):
    if hasattr(p, "to_affine"):
        return p.to_affine()
    return np.asarray(p, dtype=float)


def _require_interior(dom, xy):
    if dom.margin_xy(xy) <= NEAR_BOUNDARY:
        raise PointsOutsideDomain(
            "point %s is outside the domain or within %g of its boundary"
            % (tuple(xy), NEAR_BOUNDARY))


def _cross_ratio_of_params(ta, td):
    """cr(a,b,c,d) for chord parameters a=ta, b=0, c=1, d=td (ta<0<1<td),
    evaluated homogeneously so infinite parameters are exact."""
    xa, ya = (0.0, 1.0) if np.isinf(ta) else (1.0, ta)
    xd, yd = (0.0, 1.0) if np.isinf(td) else (1.0, td)
    # points (p1..p4) = (a, b, c, d) with b=[1:0], c=[1:1]
    num = (1.0 * ya - xa * 1.0) * (xd * 0.0 - 1.0 * yd)
    den = (1.0 * ya - xa * 0.0) * (xd * 1.0 - 1.0 * yd)
    if den == 0.0 or not np.isfinite(num / den):
        raise GeometryError("degenerate chord configuration")
    return num / den


def hilbert_distance(dom, b, c, norm=Normalization.FULL):
    """Hilbert distance between interior points b and c.

    Full value is |log cr(a,b,c,d)| with (a,d) the chord endpoints;
    symmetric by construction (the points are ordered canonically first).
    """
    b_xy, c_xy = _xy(b), _xy(c)
    _require_interior(dom, b_xy)
    _require_interior(dom, c_xy)
    if b_xy[0] == c_xy[0] and b_xy[1] == c_xy[1]:
        return 0.0
    if (c_xy[0], c_xy[1]) < (b_xy[0], b_xy[1]):
        b_xy, c_xy = c_xy, b_xy
    d = c_xy - b_xy
    t_minus, t_plus = dom.chord_params(b_xy, d)
    # rescale so the chord parameters of (b, c) are 0 and 1
    cr = _cross_ratio_of_params(t_minus, t_plus)
    if cr <= 0.0:
        raise GeometryError("cross-ratio of a chord must be positive")
    return abs(np.log(cr)) * norm.dist_scale


def finsler_norm(dom, v, norm=Normalization.FULL):
    """Finsler length of the tangent vector v = TangentVector(base, dir).

    Full value is (1/t+ + 1/|t-|) where base + t*dir leaves the domain at
    t- < 0 < t+; an ideal boundary point contributes zero.
    """
    base = np.asarray(v.base, dtype=float)
    direction = np.asarray(v.dir, dtype=float)
    if np.max(np.abs(direction)) == 0.0:
        raise InvalidParameter("tangent direction must be nonzero")
    _require_interior(dom, base)
    t_minus, t_plus = dom.chord_params(base, direction)
    full = 0.0
    if not np.isinf(t_plus):
        full += 1.0 / t_plus
    if not np.isinf(t_minus):
        full += 1.0 / (-t_minus)
    return full * norm.dist_scale


def unit_ball_boundary(dom, x, n, norm=Normalization.FULL):
    """n points of the boundary of the Finsler unit ball at x.

    The i-th point sits at angle 2*pi*i/n and radius 1/F(direction).
    """
    if n < 8:
        raise InvalidParameter("need at least 8 samples")
    base = np.asarray(x, dtype=float)
    _require_interior(dom, base)
    thetas = 2.0 * np.pi * np.arange(n) / n
    pts = np.empty((n, 2))
    for i, th in enumerate(thetas):
        e = (np.cos(th), np.sin(th))
        f = finsler_norm(dom, TangentVector(tuple(base), e), norm)
        pts[i] = np.array(e) / f
    return pts


def _max_parallelogram(pts):
    """max |det(a, b)| over pairs of rows (the K of the p-area definition)."""
    x, y = pts[:, 0], pts[:, 1]
    cross = np.abs(np.outer(x, y) - np.outer(y, x))
    return float(np.max(cross))


def density_of_norm(norm_fn, n):
    """Generic p-area density of an arbitrary norm on the plane.

    Samples the unit sphere of the norm at n angles (n even, >= 8; by
    central symmetry only half the circle is scanned) and returns 1/K
    where K is the largest sampled parallelogram.  The supremum in the
    definition is attained on the unit sphere, so boundary sampling
    suffices.
    """
    if n < 8 or n % 2 != 0:
        raise InvalidParameter("sample count must be even and >= 8")
    m = n // 2
    thetas = np.pi * np.arange(m) / m
    pts = np.empty((m, 2))
    for i, th in enumerate(thetas):
        e = np.array([np.cos(th), np.sin(th)])
        pts[i] = e / norm_fn(e)
    return 1.0 / _max_parallelogram(pts)


def p_area_density(dom, x, n=1024, norm=Normalization.FULL):
    """Definition-1 density of the Hilbert metric at x, relative to
    Lebesgue measure in the domain's chart."""
    base = np.asarray(x, dtype=float)
    _require_interior(dom, base)
    full = density_of_norm(
        lambda e: finsler_norm(dom, TangentVector(tuple(base), tuple(e))), n)
    return full * norm.dist_scale ** 2


def _full_density_fn(dom, n_ball):
    """Closed-form chart density when the realization has one, else the
    generic sampled density."""
    if dom.density_full_xy(dom.interior_xy()) is not None:
        return lambda x, y: dom.density_full_xy((x, y))
    return lambda x, y: p_area_density(dom, (x, y), n=n_ball)


def _check_region(dom, region):
    for p in region.probe_points():
        if dom.margin_xy(np.asarray(p, float)) < -10.0 * NEAR_BOUNDARY:
            raise RegionOutsideDomain("region probe %s lies outside the domain" % (p,))


def hilbert_area_quadrature(dom, region, norm=Normalization.FULL, tol=1e-6,
                            *, density=None, n_ball=1024, budget=10_000_000):
    """Adaptive quadrature of the p-area density over a region descriptor.

    density, when given, must be the Full chart density; the default is
    the domain's closed form (quadrant/triangle, ellipse) or the generic
    sampled density at n_ball directions.  Returns a QuadratureResult.
    """
    _check_region(dom, region)
    f = density if density is not None else _full_density_fn(dom, n_ball)
    scale = norm.area_scale

    def g(x, y):
        return f(x, y) * scale

    return integrate_2d(g, region, tol, budget=budget)


def hilbert_area(dom, region, norm=Normalization.FULL, tol=1e-6, **kw):
    """Hilbert area of a region (value of hilbert_area_quadrature)."""
    return hilbert_area_quadrature(dom, region, norm, tol, **kw).value


def _array_density(dom, density, n_ball):
    """Full-normalization density evaluated on an (m, 2) point array."""
    if density is not None:
        return lambda pts: np.array([density(p[0], p[1]) for p in pts])
    vec = getattr(dom, "density_full_vec", None)
    if vec is not None:
        return vec
    f = _full_density_fn(dom, n_ball)
    return lambda pts: np.array([f(p[0], p[1]) for p in pts])


def hilbert_area_mc(dom, samplers, n, seed, norm=Normalization.FULL,
                    *, density=None, n_ball=1024):
    """Monte Carlo Hilbert area over disjoint sampler strata.

    n samples are split evenly across the samplers; stratum estimates
    add and their standard errors combine in quadrature.  Deterministic
    for a fixed seed.
    """
    from .quadrature import QuadratureResult

    if not isinstance(samplers, (list, tuple)):
        samplers = [samplers]
    f = _array_density(dom, density, n_ball)
    scale = norm.area_scale

    def g(pts):
        return f(np.atleast_2d(np.asarray(pts, float))) * scale

    per = int(n) // len(samplers)
    total, var, evals = 0.0, 0.0, 0
    for i, sampler in enumerate(samplers):
        res = monte_carlo_2d(g, sampler, per, seed + i)
        total += res.value
        var += res.error_estimate ** 2
        evals += res.evaluations
    return QuadratureResult(total, float(np.sqrt(var)), evals)
