"""Properly convex plane domains: containment, chords, tangent lines.

Every realization exposes the same small capability surface:

* ``contains`` / ``margin_xy`` -- strict interior test and a scale-free
  signed margin (positive inside, ~0 on the boundary, negative outside);
* ``chord_params`` -- the two parameters where the line ``base + t*dir``
  leaves the domain (``-inf``/``+inf`` when the boundary point is ideal);
* ``chord_endpoints`` -- the boundary pair (a, d) through two interior
  points, ordered so a, b, c, d are in linear order along the chord;
* ``tangent_at`` -- the unique support line at a smooth boundary point.

Domains are immutable after construction and all operations are pure.
"""

import numpy as np

from .errors import (
    GeometryError,
    IdenticalPoints,
    NoUniqueTangent,
    NotOnBoundary,
    PointsOutsideDomain,
)
from .projective import ProjLine, ProjPoint, line_through

BOUNDARY_TOL = 1e-8     # membership tolerance for boundary points
SEGMENT_TOL = 1e-10     # edge-membership filtering


def _as_xy(p):
    if isinstance(p, ProjPoint):
        return p.to_affine()
    a = np.asarray(p, dtype=float)
    if a.shape != (2,):
        raise GeometryError("expected an affine pair or a ProjPoint")
    return a


class ConvexDomain:
    """Capability contract shared by all realizations."""

    def contains(self, p):
        """Strict interior test."""
        try:
            xy = _as_xy(p)
        except GeometryError:
            return False  # ideal points are never interior (proper domains)
        return self.margin_xy(xy) > 0.0

    def margin_xy(self, xy):
        raise NotImplementedError

    def chord_params(self, base_xy, dir_xy):
        """Signed parameters (t_minus, t_plus) of the boundary along a ray."""
        raise NotImplementedError

    def tangent_at(self, p):
        raise NotImplementedError

    def on_boundary(self, p, tol=BOUNDARY_TOL):
        if isinstance(p, ProjPoint) and p.is_ideal():
            return self._ideal_on_boundary(p, tol)
        return abs(self.margin_xy(_as_xy(p))) <= tol

    def _ideal_on_boundary(self, p, tol):
        return False  # bounded realizations

    def chord_endpoints(self, b, c):
        """Boundary points (a, d) with a, b, c, d in linear order."""
        b_xy, c_xy = _as_xy(b), _as_xy(c)
        d = c_xy - b_xy
        scale = max(np.max(np.abs(b_xy)), np.max(np.abs(c_xy)), 1.0)
        if np.max(np.abs(d)) < SEGMENT_TOL * scale:
            raise IdenticalPoints("chord needs two distinct points")
        if not (self.contains(b_xy) and self.contains(c_xy)):
            raise PointsOutsideDomain("chord endpoints must be interior")
        t_minus, t_plus = self.chord_params(b_xy, d)
        return self._ray_point(b_xy, d, t_minus), self._ray_point(b_xy, d, t_plus)

    @staticmethod
    def _ray_point(base_xy, dir_xy, t):
        if np.isinf(t):
            return ProjPoint(dir_xy[0], dir_xy[1], 0.0)
        q = base_xy + t * dir_xy
        return ProjPoint(q[0], q[1], 1.0)

    def density_full_xy(self, xy):
        """Closed-form Hilbert p-area density (Full normalization) in the
        chart, when the realization has one; None otherwise."""
        return None

    def to_dict(self):
        raise NotImplementedError


class TriangleDomain(ConvexDomain):
    """Open triangle: the projectivized positive span of three basis points.

    Vertices may be ideal (the positive quadrant is the triangle with
    vertices [0:0:1], [1:0:0], [0:1:0]).  The signs of the given vertex
    representatives select which of the four triangle components is
    meant; representatives are only rescaled by positive factors.
    """

    def __init__(self, v0, v1, v2):
        reps = []
        for v in (v0, v1, v2):
            w = np.array(v.v if isinstance(v, ProjPoint) else v, dtype=float)
            w = w / np.max(np.abs(w))  # positive scaling only: keeps the component
            reps.append(w)
        m = np.stack(reps, axis=1)
        cols = m / np.max(np.abs(m), axis=0)
        if abs(np.linalg.det(cols)) < 1e-10:
            raise GeometryError("triangle vertices are collinear")
        self.m = m
        self.minv = np.linalg.inv(m)
        self._absdet = abs(np.linalg.det(m))
        self.vertices = tuple(ProjPoint.from_array(r) for r in reps)

    def coords(self, v3):
        """Basis coordinates of a homogeneous triple, scaled so the
        largest-magnitude coordinate is +1."""
        c = self.minv @ np.asarray(v3, dtype=float)
        return c / c[int(np.argmax(np.abs(c)))]

    def interior_xy(self):
        s = self.m @ np.ones(3)
        return np.array([s[0] / s[2], s[1] / s[2]])

    def margin_xy(self, xy):
        c = self.coords(np.array([xy[0], xy[1], 1.0]))
        return float(np.min(c))

    def contains(self, p):
        if isinstance(p, ProjPoint):
            c = self.coords(p.v)
            return bool(np.min(c) > 0.0)
        return self.margin_xy(_as_xy(p)) > 0.0

    def _ideal_on_boundary(self, p, tol):
        c = self.coords(p.v)
        return bool(np.min(c) > -tol and np.min(np.abs(c)) <= tol)

    def chord_params(self, base_xy, dir_xy):
        v = np.array([base_xy[0], base_xy[1], 1.0])
        c = self.minv @ v
        s = c[int(np.argmax(np.abs(c)))]
        c = c / s
        if np.min(c) <= 0.0:
            raise PointsOutsideDomain("ray base must be interior")
        delta = (self.minv @ np.array([dir_xy[0], dir_xy[1], 0.0])) / s
        t_plus, t_minus = np.inf, -np.inf
        for ci, di in zip(c, delta):
            if di == 0.0:
                continue
            t = -ci / di
            if t > 0.0:
                t_plus = min(t_plus, t)
            elif t < 0.0:
                t_minus = max(t_minus, t)
        return t_minus, t_plus

    def tangent_at(self, p):
        if not isinstance(p, ProjPoint):
            p = ProjPoint.from_affine(*_as_xy(p))
        c = self.coords(p.v)
        if np.min(c) < -BOUNDARY_TOL:
            raise NotOnBoundary("point lies outside the closed triangle")
        zero = [i for i in range(3) if abs(c[i]) <= BOUNDARY_TOL]
        if len(zero) == 0:
            raise NotOnBoundary("point lies in the open triangle")
        if len(zero) > 1:
            raise NoUniqueTangent("no unique tangent at a triangle vertex")
        j, k = [i for i in range(3) if i != zero[0]]
        return line_through(self.vertices[j], self.vertices[k])

    def density_full_xy(self, xy):
        c = self.minv @ np.array([xy[0], xy[1], 1.0])
        prod = abs(float(c[0] * c[1] * c[2]))
        if prod == 0.0:
            raise PointsOutsideDomain("density requested on the boundary")
        return 1.0 / (self._absdet * prod)

    def density_full_vec(self, pts):
        pts = np.asarray(pts, dtype=float)
        h = self.minv @ np.vstack([pts.T, np.ones(len(pts))])
        prod = np.abs(h[0] * h[1] * h[2])
        return 1.0 / (self._absdet * prod)

    def transform(self, g):
        return TriangleDomain(*(ProjPoint.from_array(g.m @ v.v) for v in self.vertices))

    def to_dict(self):
        return {"type": "triangle", "vertices": [v.v.tolist() for v in self.vertices]}


def quadrant():
    """The positive quadrant {(x, y) : x, y > 0} as a triangle domain."""
    return TriangleDomain(
        ProjPoint(0.0, 0.0, 1.0), ProjPoint(1.0, 0.0, 0.0), ProjPoint(0.0, 1.0, 0.0)
    )


class EllipseDomain(ConvexDomain):
    """Affine image of the open unit disc: {center + S w : |w| < 1}."""

    def __init__(self, center, shape):
        self.center = np.array(center, dtype=float).reshape(2)
        self.shape = np.array(shape, dtype=float).reshape(2, 2)
        if abs(np.linalg.det(self.shape)) < 1e-12 * max(1.0, np.max(np.abs(self.shape)) ** 2):
            raise GeometryError("ellipse shape matrix is singular")
        self.sinv = np.linalg.inv(self.shape)
        self._absdet = abs(np.linalg.det(self.shape))

    @classmethod
    def unit_disc(cls):
        return cls((0.0, 0.0), np.eye(2))

    def interior_xy(self):
        return np.array(self.center)

    def _w(self, xy):
        return self.sinv @ (np.asarray(xy, float) - self.center)

    def margin_xy(self, xy):
        return 1.0 - float(np.linalg.norm(self._w(xy)))

    def chord_params(self, base_xy, dir_xy):
        w0 = self._w(base_xy)
        wd = self.sinv @ np.asarray(dir_xy, float)
        q = float(wd @ wd)
        p = float(w0 @ wd)
        disc = p * p + q * (1.0 - float(w0 @ w0))
        if disc <= 0.0 or q == 0.0:
            raise PointsOutsideDomain("ray base must be interior")
        r = np.sqrt(disc)
        return (-p - r) / q, (-p + r) / q

    def tangent_at(self, p):
        xy = _as_xy(p)
        w = self._w(xy)
        if abs(np.linalg.norm(w) - 1.0) > BOUNDARY_TOL:
            raise NotOnBoundary("point is not on the ellipse")
        n = self.sinv.T @ w
        return ProjLine(n[0], n[1], -float(n @ xy))

    def density_full_xy(self, xy):
        w = self._w(xy)
        r2 = float(w @ w)
        if r2 >= 1.0:
            raise PointsOutsideDomain("density requested outside the ellipse")
        return 4.0 / ((1.0 - r2) ** 1.5 * self._absdet)

    def density_full_vec(self, pts):
        pts = np.asarray(pts, dtype=float)
        w = self.sinv @ (pts - self.center).T
        r2 = np.einsum("ij,ij->j", w, w)
        return 4.0 / ((1.0 - r2) ** 1.5 * self._absdet)

    def boundary_point(self, theta):
        w = np.array([np.cos(theta), np.sin(theta)])
        xy = self.center + self.shape @ w
        return ProjPoint(xy[0], xy[1], 1.0)

    def transform(self, g):
        m = g.m / g.m[2, 2] if g.m[2, 2] != 0.0 else g.m
        if np.max(np.abs(m[2, :2])) > 1e-12 * np.max(np.abs(m)):
            raise GeometryError("ellipse transforms are supported for affine maps only")
        a, b = m[:2, :2], m[:2, 2]
        return EllipseDomain(a @ self.center + b, a @ self.shape)

    def to_dict(self):
        return {
            "type": "ellipse",
            "center": self.center.tolist(),
            "shape": self.shape.tolist(),
        }


class PolygonDomain(ConvexDomain):
    """Open interior of a strictly convex polygon (counterclockwise)."""

    def __init__(self, vertices):
        v = np.array(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise GeometryError("polygon needs >= 3 affine vertices")
        self.vertices = v
        self._diam = float(np.max(v, axis=0).max() - np.min(v, axis=0).min()) or 1.0
        n = len(v)
        crosses = []
        for i in range(n):
            e1 = v[(i + 1) % n] - v[i]
            e2 = v[(i + 2) % n] - v[(i + 1) % n]
            crosses.append(float(e1[0] * e2[1] - e1[1] * e2[0]))
        if not all(c > 1e-12 * self._diam**2 for c in crosses):
            raise GeometryError("vertices must be in strictly convex ccw position")
        # outward edge normals: edge i runs v[i] -> v[i+1]
        edges = np.roll(v, -1, axis=0) - v
        self.normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        self.normals /= np.linalg.norm(self.normals, axis=1, keepdims=True)
        self.offsets = np.einsum("ij,ij->i", self.normals, v)

    def margin_xy(self, xy):
        slack = self.offsets - self.normals @ np.asarray(xy, float)
        return float(np.min(slack)) / self._diam

    def interior_xy(self):
        return self.vertices.mean(axis=0)

    def chord_params(self, base_xy, dir_xy):
        b = np.asarray(base_xy, float)
        d = np.asarray(dir_xy, float)
        nd = self.normals @ d
        slack = self.offsets - self.normals @ b
        if np.min(slack) <= 0.0:
            raise PointsOutsideDomain("ray base must be interior")
        with np.errstate(divide="ignore"):
            t = slack / nd
        t_plus = float(np.min(t[nd > 0.0])) if np.any(nd > 0.0) else np.inf
        t_minus = float(np.max(t[nd < 0.0])) if np.any(nd < 0.0) else -np.inf
        return t_minus, t_plus

    def tangent_at(self, p):
        xy = _as_xy(p)
        resid = (self.offsets - self.normals @ xy) / self._diam
        if np.min(resid) < -BOUNDARY_TOL:
            raise NotOnBoundary("point lies outside the closed polygon")
        on = np.flatnonzero(np.abs(resid) <= BOUNDARY_TOL)
        if len(on) == 0:
            raise NotOnBoundary("point lies in the open polygon")
        if len(on) > 1:
            raise NoUniqueTangent("no unique tangent at a polygon vertex")
        i = int(on[0])
        n = self.normals[i]
        return ProjLine(n[0], n[1], -self.offsets[i])

    def edge_point(self, i, u):
        """Point at parameter u in (0,1) along edge i (for test fixtures)."""
        v = self.vertices
        q = (1.0 - u) * v[i] + u * v[(i + 1) % len(v)]
        return ProjPoint(q[0], q[1], 1.0)

    def scaled_toward_centroid(self, factor):
        c = self.vertices.mean(axis=0)
        return PolygonDomain(c + factor * (self.vertices - c))

    def transform(self, g):
        imgs = []
        for x, y in self.vertices:
            w = g.m @ np.array([x, y, 1.0])
            if abs(w[2]) < 1e-12 * np.max(np.abs(w)):
                raise GeometryError("polygon vertex maps to an ideal point")
            imgs.append(w[:2] / w[2])
        imgs = np.array(imgs)
        area2 = 0.0
        n = len(imgs)
        for i in range(n):
            a, b = imgs[i], imgs[(i + 1) % n]
            area2 += float(a[0] * b[1] - a[1] * b[0])
        if area2 < 0.0:
            imgs = imgs[::-1]
        return PolygonDomain(imgs)

    def to_dict(self):
        return {"type": "polygon", "vertices": self.vertices.tolist()}


def domain_from_dict(d):
    """Rebuild a domain from its JSON dict form (see each to_dict)."""
    kind = d.get("type")
    if kind == "quadrant":
        return quadrant()
    if kind == "triangle":
        return TriangleDomain(*(ProjPoint(*v) for v in d["vertices"]))
    if kind == "ellipse":
        return EllipseDomain(d["center"], d["shape"])
    if kind == "polygon":
        return PolygonDomain(d["vertices"])
    raise GeometryError("unknown domain type %r" % (kind,))
