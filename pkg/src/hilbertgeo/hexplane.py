"""The Hex normed plane and its isometry with the positive quadrant.

The unit ball is the regular hexagon H with vertices +-u0, +-u1, +-u2
where u0 = (1, 0), u1 = (-1/2, sqrt(3)/2), u2 = -u0 - u1.  The isometry
A(u, v) = (exp(u + v/sqrt(3)), exp(2v/sqrt(3))) carries (R^2, ||.||_Hex)
onto the quadrant with its Hilbert metric, and the map
phi[x0 v0 + x1 v1 + x2 v2] = sum_i (log x_i) u_i does the same for any
triangle in basis form.
"""

import numpy as np

from .errors import InvalidParameter, NonPositiveCoordinate, PointsOutsideDomain

SQRT3 = np.sqrt(3.0)

U0 = np.array([1.0, 0.0])
U1 = np.array([-0.5, 0.5 * SQRT3])
U2 = -U0 - U1

HEX_VERTICES = np.array([U0, U0 + U1, U1, -U0, -(U0 + U1), -U1])

# conversion factor between Hex p-area and Euclidean Lebesgue measure
HEX_AREA_FACTOR = 2.0 / SQRT3


def _edge_functionals(vertices):
    """Outward (normal, offset) pairs of a convex ccw polygon around 0."""
    nxt = np.roll(vertices, -1, axis=0)
    edges = nxt - vertices
    normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
    offsets = np.einsum("ij,ij->i", normals, vertices)
    if np.any(offsets <= 0.0):
        raise InvalidParameter("gauge polygon must contain the origin")
    return normals, offsets


_HEX_NORMALS, _HEX_OFFSETS = _edge_functionals(HEX_VERTICES)


def polygon_gauge(vertices, w):
    """Gauge (Minkowski functional) of a convex polygon around the origin.

    Equivalent to intersecting the ray through w with each edge: the
    gauge is the largest of the edge support functionals n.w / c.
    """
    normals, offsets = _edge_functionals(np.asarray(vertices, float))
    return float(np.max(normals @ np.asarray(w, float) / offsets))


def hex_norm(w):
    """Norm with the regular hexagon H as unit ball."""
    return float(np.max(_HEX_NORMALS @ np.asarray(w, float) / _HEX_OFFSETS))


def hex_distance(a, b):
    """Translation-invariant Hex distance ||a - b||."""
    return hex_norm(np.asarray(a, float) - np.asarray(b, float))


def hex_to_quadrant(w):
    """The isometry A onto the positive quadrant."""
    u, v = np.asarray(w, float)
    return np.array([np.exp(u + v / SQRT3), np.exp(2.0 * v / SQRT3)])


def quadrant_to_hex(p):
    """Inverse of hex_to_quadrant; p must be strictly inside the quadrant."""
    x, y = np.asarray(p, float)
    if x <= 0.0 or y <= 0.0:
        raise PointsOutsideDomain("point must lie in the open quadrant")
    ly = np.log(y)
    return np.array([np.log(x) - 0.5 * ly, 0.5 * SQRT3 * ly])


def triangle_to_hex(x0, x1, x2):
    """phi of a point with positive triangle coordinates (x0, x1, x2).

    Scale-invariant: (lam*x0, lam*x1, lam*x2) maps to the same vector,
    because u0 + u1 + u2 = 0.
    """
    if x0 <= 0.0 or x1 <= 0.0 or x2 <= 0.0:
        raise NonPositiveCoordinate("triangle coordinates must be positive")
    return np.log(x0) * U0 + np.log(x1) * U1 + np.log(x2) * U2


def hex_parallelogram_area(a, b):
    """p-area of the parallelogram spanned by a and b: (2/sqrt 3)|det|."""
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    return HEX_AREA_FACTOR * abs(float(a[0] * b[1] - a[1] * b[0]))


def hex_distance_to_span(b, a, tol=1e-10):
    """Hex distance from b to the line through 0 and a (base x height helper).

    Minimizes ||b - t a|| over t by golden-section search; the objective
    is convex, the bracket comes from the Euclidean projection +- 2.
    """
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    na2 = float(a @ a)
    if na2 == 0.0:
        return hex_norm(b)
    t0 = float(b @ a) / na2
    lo, hi = t0 - 2.0, t0 + 2.0
    phi = (np.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - phi * (hi - lo)
    x2 = lo + phi * (hi - lo)
    f1 = hex_norm(b - x1 * a)
    f2 = hex_norm(b - x2 * a)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - phi * (hi - lo)
            f1 = hex_norm(b - x1 * a)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + phi * (hi - lo)
            f2 = hex_norm(b - x2 * a)
    return hex_norm(b - 0.5 * (lo + hi) * a)


def hex_circle_points(r, n):
    """n boundary points of the Hex circle of radius r (a regular hexagon
    of circumradius r), at gauge angles 2*pi*i/n."""
    thetas = 2.0 * np.pi * np.arange(n) / n
    dirs = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
    gauges = np.max(dirs @ _HEX_NORMALS.T / _HEX_OFFSETS, axis=1)
    return r * dirs / gauges[:, None]


def hex_circle_stats(r, n=6):
    """(circumference, p_area) of the Hex circle of radius r.

    The boundary polygon is sampled at n >= 6 points; for n a multiple
    of 6 the hexagon vertices are hit exactly and the values 6r and 3r^2
    are reproduced to rounding.
    """
    if r <= 0.0:
        raise InvalidParameter("radius must be positive")
    if n < 6:
        raise InvalidParameter("need at least 6 samples")
    pts = hex_circle_points(r, n)
    nxt = np.roll(pts, -1, axis=0)
    circumference = sum(hex_norm(q - p) for p, q in zip(pts, nxt))
    shoelace = 0.5 * abs(float(np.sum(pts[:, 0] * nxt[:, 1] - pts[:, 1] * nxt[:, 0])))
    return circumference, HEX_AREA_FACTOR * shoelace
