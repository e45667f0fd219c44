"""Ideal triangles: tangent triangles, shape parameters, and areas.

An ideal triangle is a triangle with vertices on the boundary of a
properly convex domain, meeting the boundary only at those vertices.
Its shape parameter t > 0 is computed from the tangent triangle: with
ordered triangle vertices v0, v1, v2 and the ideal vertices written as
w0 = v0 + a v1, w1 = v1 + b v2, w2 = v2 + c v0, the parameter is
t = a*b*c.  Cyclic relabelling preserves t, reversing the orientation
inverts it; the triangle invariant is tau = log t.

The Hilbert area of an ideal triangle in a triangle domain is
B(t) = (pi^2 + (log t)^2) / 2 in the Full normalization; a quarter of
that in the Announced one.  For an arbitrary properly convex domain the
closed form is a lower bound for the actual area, with equality exactly
in the triangle-domain case.
"""

from dataclasses import dataclass

import numpy as np

from .domains import TriangleDomain, quadrant
from .errors import (
    DegenerateTangents,
    EdgeMismatch,
    GeometryError,
    IdenticalLines,
    InvalidParameter,
    VertexOnEdgeEndpoint,
)
from .metric import Normalization
from .projective import ProjPoint, meet
from .quadrature import Strip, central_difference, integrate_1d

_EDGE_TOL = 1e-8


class IdealTriangle:
    """A domain with three cyclically ordered boundary vertices p, q, r."""

    def __init__(self, dom, p, q, r):
        self.dom = dom
        self.p, self.q, self.r = p, q, r
        self._tangent = None
        for v in (p, q, r):
            if not dom.on_boundary(v):
                raise GeometryError("ideal-triangle vertices must lie on the boundary")
        if p == q or q == r or r == p:
            raise GeometryError("ideal-triangle vertices must be distinct")
        tri = np.stack([p.normalized(), q.normalized(), r.normalized()])
        if abs(np.linalg.det(tri)) < 1e-10:
            raise GeometryError("ideal-triangle vertices are collinear")
        for u, v in ((p, q), (q, r), (r, p)):
            if not _open_chord_is_interior(dom, u, v):
                raise GeometryError(
                    "improper ideal triangle: a side touches the boundary")

    def vertices(self):
        return (self.p, self.q, self.r)

    def tangent_triangle(self):
        if self._tangent is None:
            self._tangent = tangent_triangle(self)
        return self._tangent

    def transform(self, g):
        return IdealTriangle(self.dom.transform(g), g(self.p), g(self.q), g(self.r))


def _open_chord_is_interior(dom, u, v):
    """True when the open chord between boundary points u, v enters the
    open domain (by convexity one interior sample decides)."""
    if u.is_ideal() and v.is_ideal():
        return False
    if not u.is_ideal() and not v.is_ideal():
        mid = 0.5 * (u.to_affine() + v.to_affine())
        return dom.contains(mid)
    fin, ide = (u, v) if v.is_ideal() else (v, u)
    base = fin.to_affine()
    d = ide.normalized()[:2]
    d = d / np.linalg.norm(d)
    scale = max(1.0, float(np.max(np.abs(base))))
    for k in range(-8, 9):
        step = scale * 4.0**k
        if dom.contains(base + step * d) or dom.contains(base - step * d):
            return True
    return False


@dataclass(frozen=True)
class ShapeParam:
    """Shape parameter t > 0; canonical means t >= 1 (t <-> 1/t picks the
    representative independent of the vertex ordering)."""

    t: float
    canonical: bool = False

    @property
    def tau(self):
        return float(np.log(self.t))

    def canonicalized(self):
        return ShapeParam(self.t if self.t >= 1.0 else 1.0 / self.t, True)


def tangent_triangle(tri):
    """Triangle bounded by the tangent lines at the vertices of tri.

    Contains the domain; vertex order is chosen so that p lies on the
    edge (v0, v1), q on (v1, v2) and r on (v2, v0).
    """
    dom = tri.dom
    lp = dom.tangent_at(tri.p)
    lq = dom.tangent_at(tri.q)
    lr = dom.tangent_at(tri.r)
    try:
        v0, v1, v2 = meet(lp, lr), meet(lp, lq), meet(lq, lr)
    except IdenticalLines:
        raise DegenerateTangents("two tangent lines coincide")
    m = np.stack([v0.normalized(), v1.normalized(), v2.normalized()], axis=1)
    if abs(np.linalg.det(m)) < 1e-10:
        raise DegenerateTangents("tangent lines are concurrent")
    x = dom.interior_xy()
    c = np.linalg.solve(m, np.array([x[0], x[1], 1.0]))
    if np.any(c == 0.0):
        raise DegenerateTangents("interior point lies on a tangent vertex line")
    m = m * np.sign(c)  # make the domain sit in the positive span
    return TriangleDomain(m[:, 0], m[:, 1], m[:, 2])


def shape_parameter(tri, w0, w1, w2, tol=_EDGE_TOL):
    """Fock-Goncharov parameter t = a*b*c of an inscribed ideal triangle.

    tri is a TriangleDomain with ordered vertices (v0, v1, v2); wi must
    lie strictly inside the edge (vi, v(i+1)).
    """
    ratios = []
    for i, w in enumerate((w0, w1, w2)):
        j, k = (i + 1) % 3, (i + 2) % 3
        c = tri.coords(w.v if isinstance(w, ProjPoint) else np.asarray(w, float))
        if abs(c[k]) > tol:
            raise EdgeMismatch(
                "point %d does not lie on the edge (v%d, v%d)" % (i, i, j))
        if abs(c[i]) <= tol or abs(c[j]) <= tol:
            raise VertexOnEdgeEndpoint("point %d coincides with a triangle vertex" % i)
        if c[i] * c[j] < 0.0:
            raise EdgeMismatch("point %d is on the edge line but outside the edge" % i)
        ratios.append(c[j] / c[i])
    t = float(ratios[0] * ratios[1] * ratios[2])
    return ShapeParam(t, canonical=False)


def shape_of_ideal_triangle(tri, canonical=True):
    """Shape parameter of an ideal triangle in its tangent triangle."""
    sp = shape_parameter(tri.tangent_triangle(), *tri.vertices())
    return sp.canonicalized() if canonical else sp


def embed_canonical(t):
    """The canonical ideal triangle in the positive quadrant.

    Vertices (0,1), (1,0) and the ideal point [1:t:0]; the sides are
    x + y = 1, y = 1 + t x and y = t (x - 1), and the shape parameter
    with respect to the quadrant is exactly t.
    """
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    return IdealTriangle(
        quadrant(),
        ProjPoint(0.0, 1.0, 1.0),
        ProjPoint(1.0, 0.0, 1.0),
        ProjPoint(1.0, float(t), 0.0),
    )


def leaf_endpoints(s, t):
    """Intersections (alpha, beta) of the leaf x + y = s with the two ray
    sides y = 1 + t x and y = t (x - 1) of the canonical triangle."""
    ax = (s - 1.0) / (t + 1.0)
    bx = (s + t) / (t + 1.0)
    return np.array([ax, s - ax]), np.array([bx, s - bx])


def leaf_length(s, t):
    """Hilbert length of the leaf x + y = s of the canonical triangle:
    log((s + t)(s t + 1) / (t (s - 1)^2))."""
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    if s <= 1.0:
        raise InvalidParameter("leaves exist for s > 1 only")
    return float(np.log((s + t) * (s * t + 1.0) / (t * (s - 1.0) ** 2)))


def triangle_area_numeric(t, tol=1e-8, budget=10_000_000):
    """Full-normalization area of the canonical ideal triangle, as the
    improper integral of leaf_length(s)/s over s in (1, inf).

    The integrand has a log singularity at s = 1 (graded cells) and an
    O(s^-2) tail (mapped by u = 1/s); both are handled by integrate_1d.
    """
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    res = integrate_1d(lambda s: leaf_length(s, t) / s, 1.0, np.inf, tol,
                       singular_lo=True, budget=budget)
    return res.value


def triangle_area_closed(t, norm=Normalization.FULL):
    """Closed form (pi^2 + (log t)^2)/2, scaled by the normalization
    (a quarter of the Full value for Announced)."""
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    return (np.pi**2 + np.log(t) ** 2) / 2.0 * norm.area_scale


def triangle_area_lower_bound(tri, norm=Normalization.FULL):
    """Area lower bound B(t) for an ideal triangle in any properly convex
    domain (equality exactly for triangle domains)."""
    sp = shape_of_ideal_triangle(tri)
    return triangle_area_closed(sp.t, norm)


def canonical_triangle_region(t):
    """Strip decomposition of the canonical ideal triangle for 2D
    quadrature: x in [0,1] between x+y=1 and y=1+tx, then x in [1,inf)
    between y=t(x-1) and y=1+tx."""
    left = Strip(
        "x", 0.0, 1.0,
        lambda x: 1.0 - x, lambda x: 1.0 + t * x,
        singular_hi=True, inner_singular=True,
        probes=[(0.0, 1.0), (1.0, 0.0), (0.5, 1.0)],
    )
    right = Strip(
        "x", 1.0, np.inf,
        lambda x: t * (x - 1.0), lambda x: 1.0 + t * x,
        singular_lo=True, inner_singular=True,
        probes=[(2.0, t + 0.5)],
    )
    from .quadrature import RegionUnion

    return RegionUnion(left, right)


def db_dt_check(t, h, tol=1e-8):
    """(central finite difference of the numeric area, analytic t^-1 log t)."""
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    if not (0.0 < h < t / 10.0):
        raise InvalidParameter("need 0 < h < t/10")
    fd = central_difference(lambda x: triangle_area_numeric(x, tol), t, h)
    return fd, float(np.log(t) / t)
