"""Projective-plane primitives: points, lines, maps, and the cross-ratio.

Everything here works on homogeneous coordinates over the reals.  A point
[x:y:z] and a line with dual coordinates (a,b,c) are incident when the dot
product vanishes.  Values are immutable and every operation is pure.
"""

import numpy as np

from .errors import (
    DegenerateConfiguration,
    GeometryError,
    IdenticalLines,
    IdenticalPoints,
    InfiniteCrossRatio,
    NotCollinear,
    SingularMap,
)

EQ_TOL = 1e-10          # equality of max-normalized homogeneous coords
COLLINEAR_TOL = 1e-9    # |det| of a normalized point triple
DET_FLOOR = 1e-12       # singularity floor for ProjMap (max-normalized)


def _normalize(v):
    """Divide by the largest-magnitude entry (keeps its sign)."""
    i = int(np.argmax(np.abs(v)))
    return v / v[i]


class ProjPoint:
    """Point of the real projective plane, stored as a homogeneous triple."""

    __slots__ = ("v",)

    def __init__(self, x, y, z):
        v = np.array([x, y, z], dtype=float)
        if not np.all(np.isfinite(v)) or np.max(np.abs(v)) == 0.0:
            raise GeometryError("homogeneous coordinates must be finite and not all zero")
        self.v = v
        self.v.flags.writeable = False

    @classmethod
    def from_array(cls, v):
        return cls(v[0], v[1], v[2])

    @classmethod
    def from_affine(cls, x, y):
        return cls(x, y, 1.0)

    def normalized(self):
        return _normalize(self.v)

    def is_ideal(self, tol=EQ_TOL):
        return abs(self.normalized()[2]) < tol

    def to_affine(self):
        """Chart coordinates (x/z, y/z); raises for ideal points."""
        x, y, z = self.v
        if abs(z) <= EQ_TOL * max(abs(x), abs(y), abs(z)):
            raise GeometryError("ideal point has no affine coordinates")
        return np.array([x / z, y / z])

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return bool(np.all(np.abs(self.normalized() - other.normalized()) < EQ_TOL))

    def __hash__(self):  # pragma: no cover - identity based containers only
        return id(self)

    def __repr__(self):
        return "ProjPoint[%g:%g:%g]" % tuple(self.v)


class ProjLine:
    """Line of the projective plane in dual homogeneous coordinates."""

    __slots__ = ("c",)

    def __init__(self, a, b, c):
        v = np.array([a, b, c], dtype=float)
        if not np.all(np.isfinite(v)) or np.max(np.abs(v)) == 0.0:
            raise GeometryError("line coefficients must be finite and not all zero")
        self.c = v
        self.c.flags.writeable = False

    @classmethod
    def from_array(cls, v):
        return cls(v[0], v[1], v[2])

    def normalized(self):
        return _normalize(self.c)

    def contains(self, p, tol=COLLINEAR_TOL):
        return abs(float(np.dot(self.normalized(), p.normalized()))) < tol

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return bool(np.all(np.abs(self.normalized() - other.normalized()) < EQ_TOL))

    def __hash__(self):  # pragma: no cover
        return id(self)

    def __repr__(self):
        return "ProjLine(%gx + %gy + %gz = 0)" % tuple(self.c)


class ProjMap:
    """Projective transformation, a 3x3 matrix up to scale."""

    __slots__ = ("m",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise GeometryError("projective map needs a finite 3x3 matrix")
        scale = np.max(np.abs(m))
        if scale == 0.0 or abs(np.linalg.det(m / scale)) < DET_FLOOR:
            raise SingularMap("matrix is singular or too close to singular")
        self.m = m
        self.m.flags.writeable = False

    @classmethod
    def identity(cls):
        return cls(np.eye(3))

    def inverse(self):
        return ProjMap(np.linalg.inv(self.m))

    def compose(self, other):
        """self after other: (self.compose(other))(p) = self(other(p))."""
        return ProjMap(self.m @ other.m)

    def __call__(self, p):
        return apply_map(self, p)

    def apply_line(self, line):
        """Image of a line: dual coordinates transform by the inverse transpose."""
        return ProjLine.from_array(np.linalg.inv(self.m).T @ line.c)

    def __repr__(self):
        return "ProjMap(%r)" % (self.m.tolist(),)


class RP1Point:
    """Point of the real projective line as a [num:den] pair.

    The affine value is num/den; den == 0 encodes the point at infinity.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if num == 0.0 and den == 0.0:
            raise GeometryError("[0:0] is not a point of RP^1")
        self.num = float(num)
        self.den = float(den)

    def is_infinite(self, tol=EQ_TOL):
        return abs(self.den) <= tol * max(abs(self.num), abs(self.den))

    def value(self):
        """Affine value num/den (+-inf at the point at infinity)."""
        if self.den == 0.0:
            return float("inf") if self.num > 0 else float("-inf")
        return self.num / self.den

    def normalized(self):
        v = np.array([self.num, self.den])
        return _normalize(v)

    def __eq__(self, other):
        if not isinstance(other, RP1Point):
            return NotImplemented
        return bool(np.all(np.abs(self.normalized() - other.normalized()) < EQ_TOL))

    def __repr__(self):
        return "RP1Point[%g:%g]" % (self.num, self.den)


def cross_ratio_affine(y1, y2, y3, y4, extended=False):
    """Cross-ratio (y1-y3)(y2-y4) / ((y1-y2)(y3-y4)) of four reals.

    At least three of the inputs must be distinct.  When a denominator
    factor vanishes the value is at infinity: by default this raises
    InfiniteCrossRatio; pass extended=True to get a signed float inf.
    """
    ys = (float(y1), float(y2), float(y3), float(y4))
    if len(set(ys)) < 3:
        raise DegenerateConfiguration("need at least three distinct points")
    num = (ys[0] - ys[2]) * (ys[1] - ys[3])
    den = (ys[0] - ys[1]) * (ys[2] - ys[3])
    if den == 0.0:
        if extended:
            return float(np.copysign(np.inf, num)) if num != 0.0 else float("inf")
        raise InfiniteCrossRatio("cross-ratio denominator vanished")
    return num / den


def _rp1_coords(points):
    """Coordinates [alpha:beta] of collinear plane points in a line basis.

    The basis is the pair of input points that is farthest from being
    proportional; the remaining points are expressed as alpha*b1 + beta*b2.
    """
    vs = [p.normalized() for p in points]
    best, bi, bj = -1.0, 0, 1
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            s = float(np.linalg.norm(np.cross(vs[i], vs[j])))
            if s > best:
                best, bi, bj = s, i, j
    if best < EQ_TOL:
        raise DegenerateConfiguration("all points coincide")
    basis = np.stack([vs[bi], vs[bj]], axis=1)  # 3x2
    coords = []
    for v in vs:
        ab, residual, _, _ = np.linalg.lstsq(basis, v, rcond=None)
        coords.append(ab)
    return coords


def cross_ratio_proj(p1, p2, p3, p4, tol=COLLINEAR_TOL):
    """Cross-ratio of four collinear projective points, as an RP1Point.

    Never fails on points at infinity; the result pair [num:den] satisfies
    num/den == cross_ratio_affine of the chart values whenever the latter
    is defined.
    """
    pts = (p1, p2, p3, p4)
    vs = [p.normalized() for p in pts]
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                if abs(float(np.linalg.det(np.stack([vs[i], vs[j], vs[k]])))) > tol:
                    raise NotCollinear("cross-ratio points must be collinear")
    distinct = sum(
        1
        for i in range(4)
        if all(not (pts[i] == pts[j]) for j in range(i))
    )
    if distinct < 3:
        raise DegenerateConfiguration("need at least three distinct points")
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = _rp1_coords(pts)
    den = (x2 * y1 - x1 * y2) * (x4 * y3 - x3 * y4)
    num = (x3 * y1 - x1 * y3) * (x4 * y2 - x2 * y4)
    return RP1Point(num, den)


def line_through(p, q):
    """The unique line through two distinct points (cross product)."""
    c = np.cross(p.normalized(), q.normalized())
    if np.max(np.abs(c)) < EQ_TOL:
        raise IdenticalPoints("points coincide, no unique line")
    return ProjLine.from_array(c)


def meet(l1, l2):
    """Intersection point of two distinct lines (dual cross product)."""
    v = np.cross(l1.normalized(), l2.normalized())
    if np.max(np.abs(v)) < EQ_TOL:
        raise IdenticalLines("lines coincide, no unique intersection")
    return ProjPoint.from_array(v)


def apply_map(g, p):
    """Image of the point p under the projective map g."""
    return ProjPoint.from_array(g.m @ p.v)
