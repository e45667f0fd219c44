"""Adaptive quadrature and Monte Carlo integration.

1D: nested Gauss-7 / Kronrod-15 pairs on a priority queue of cells,
with caller-declared endpoint grading (for integrable log singularities)
and a 1/x tail transform for infinite upper limits.  The rule is open,
so endpoints are never evaluated.

2D: iterated adaptive quadrature over axis-aligned rectangles, graph
("strip") regions between two curves, and triangles; plus seeded Monte
Carlo with plain and vertex-graded samplers.
"""

import heapq
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, NonConvergence

# 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15).
_XGK = np.array([
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
])
_WGK = np.array([
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
])
_WG = np.array([
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
])

_GRADE_DEPTH = 12        # seed cells toward a flagged singular endpoint
_EPS = np.finfo(float).eps


def _cross2(a, b):
    return float(a[0] * b[1] - a[1] * b[0])


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _gk15(f, a, b):
    """Kronrod-15 value, |K15-G7| error gauge, on one cell.

    The rule is open; nodes that round onto a cell endpoint are nudged
    one ulp inward so integrable endpoint singularities are never hit.
    """
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    lo_in = np.nextafter(a, b)
    hi_in = np.nextafter(b, a)

    def ev(x):
        if x <= a:
            x = lo_in
        elif x >= b:
            x = hi_in
        return f(x)

    fk = 0.0
    fg = 0.0
    for i, x in enumerate(_XGK):
        if x == 0.0:
            v = ev(mid)
            fk += _WGK[i] * v
            fg += _WG[3] * v
            continue
        v1 = ev(mid - half * x)
        v2 = ev(mid + half * x)
        fk += _WGK[i] * (v1 + v2)
        if i % 2 == 1:  # odd-index Kronrod nodes are the Gauss nodes
            fg += _WG[i // 2] * (v1 + v2)
    return fk * half, abs(fk - fg) * abs(half), 15


def _initial_cells(a, b, singular_lo, singular_hi):
    """Seed cells, geometrically graded toward flagged endpoints.

    Seeding is only a head start: the adaptive loop keeps bisecting
    toward a singular endpoint as far as the tolerance requires.
    """
    if not (singular_lo or singular_hi):
        return [(a, b)]
    pts = [a, b]
    if singular_lo and singular_hi:
        mid = 0.5 * (a + b)
        pts.append(mid)
        pts += [a + (mid - a) * 2.0 ** (-k) for k in range(1, _GRADE_DEPTH + 1)]
        pts += [b - (b - mid) * 2.0 ** (-k) for k in range(1, _GRADE_DEPTH + 1)]
    elif singular_lo:
        pts += [a + (b - a) * 2.0 ** (-k) for k in range(1, _GRADE_DEPTH + 1)]
    else:
        pts += [b - (b - a) * 2.0 ** (-k) for k in range(1, _GRADE_DEPTH + 1)]
    uniq = sorted(set(pts))
    return [(uniq[i], uniq[i + 1]) for i in range(len(uniq) - 1)]


def _splittable(lo, hi):
    """A cell may be bisected while its width resolves its own coordinate
    scale; below that, its value is frozen (the remaining error is kept)."""
    return hi - lo > 4.0 * _EPS * max(abs(lo), abs(hi), 1e-300)


def _adaptive(f, a, b, tol, singular_lo, singular_hi, budget):
    heap = []
    count = 0
    evals = 0
    frozen_val = 0.0
    frozen_err = 0.0
    total_val = 0.0
    total_err = 0.0
    for lo, hi in _initial_cells(a, b, singular_lo, singular_hi):
        v, e, n = _gk15(f, lo, hi)
        evals += n
        heapq.heappush(heap, (-e, count, lo, hi, v, e))
        count += 1
        total_val += v
        total_err += e
    while total_err + frozen_err > max(tol, abs(total_val + frozen_val) * 1e-14):
        if not heap:
            break
        if evals + 30 > budget:
            raise NonConvergence(
                "1d quadrature budget exhausted",
                value=total_val + frozen_val,
                error_estimate=total_err + frozen_err,
                evaluations=evals,
            )
        _, _, lo, hi, v, e = heapq.heappop(heap)
        total_val -= v
        total_err -= e
        if not _splittable(lo, hi):
            frozen_val += v
            frozen_err += e
            continue
        mid = 0.5 * (lo + hi)
        for clo, chi in ((lo, mid), (mid, hi)):
            v2, e2, n2 = _gk15(f, clo, chi)
            evals += n2
            heapq.heappush(heap, (-e2, count, clo, chi, v2, e2))
            count += 1
            total_val += v2
            total_err += e2
    return QuadratureResult(total_val + frozen_val, total_err + frozen_err, evals)


def _tail_split(lo):
    """Where to cut off the finite part before the 1/x tail transform."""
    return max(2.0, 2.0 * lo) if lo > 0 else lo + 2.0


def integrate_1d(f, lo, hi, tol, *, singular_lo=False, singular_hi=False,
                 budget=10_000_000):
    """Integrate f on (lo, hi) to absolute tolerance tol.

    hi may be +inf: the tail is mapped by u = 1/x onto a finite cell
    (this assumes f decays at least like x^-2, which the caller declares
    by using the infinite limit).  singular_lo / singular_hi request
    geometric grading toward an endpoint with an integrable (e.g. log)
    singularity.  Raises NonConvergence when the evaluation budget runs
    out, carrying the partial value.
    """
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    if np.isinf(lo):
        raise InvalidParameter("infinite lower limits are not supported")
    if np.isinf(hi):
        split = _tail_split(lo)
        if split <= lo:
            split = lo + 1.0
        if split <= 0:
            raise InvalidParameter("infinite tails need a positive split point")
        res1 = _adaptive(f, lo, split, 0.5 * tol, singular_lo, False, budget)

        def tail(u):
            return f(1.0 / u) / (u * u)

        res2 = _adaptive(tail, 0.0, 1.0 / split, 0.5 * tol, True, False,
                         budget - res1.evaluations)
        return QuadratureResult(
            res1.value + res2.value,
            res1.error_estimate + res2.error_estimate,
            res1.evaluations + res2.evaluations,
        )
    if hi <= lo:
        raise InvalidParameter("need hi > lo")
    return _adaptive(f, lo, hi, tol, singular_lo, singular_hi, budget)


class Rect:
    """Axis-aligned rectangle [x0,x1] x [y0,y1]."""

    def __init__(self, x0, x1, y0, y1):
        self.x0, self.x1, self.y0, self.y1 = map(float, (x0, x1, y0, y1))

    def probe_points(self):
        return [(self.x0, self.y0), (self.x0, self.y1),
                (self.x1, self.y0), (self.x1, self.y1)]

    def _outer_measure(self):
        return self.x1 - self.x0

    def _integrate(self, f, tol, budget):
        inner_tol = 0.25 * tol / max(self._outer_measure(), 1.0)
        inner_budget = max(budget // 64, 10_000)
        evals = [0]

        def row(x):
            r = integrate_1d(lambda y: f(x, y), self.y0, self.y1, inner_tol,
                             budget=inner_budget)
            evals[0] += r.evaluations
            return r.value

        outer = integrate_1d(row, self.x0, self.x1, 0.5 * tol, budget=budget)
        err = outer.error_estimate + inner_tol * self._outer_measure()
        return QuadratureResult(outer.value, err, evals[0])


class Strip:
    """Region between two graphs over an interval of one axis.

    axis='x': points (x, y) with x in [lo, hi] (hi may be +inf) and
    inner_lo(x) <= y <= inner_hi(x); axis='y' swaps the roles.
    ``singular_lo``/``singular_hi`` grade the outer integration toward
    an endpoint; ``inner_singular`` grades every inner integral toward
    both of its endpoints (for densities blowing up on the boundary).
    """

    def __init__(self, axis, lo, hi, inner_lo, inner_hi, *,
                 singular_lo=False, singular_hi=False, inner_singular=False,
                 probes=()):
        if axis not in ("x", "y"):
            raise InvalidParameter("axis must be 'x' or 'y'")
        self.axis = axis
        self.lo, self.hi = float(lo), float(hi)
        self.inner_lo, self.inner_hi = inner_lo, inner_hi
        self.singular_lo = singular_lo
        self.singular_hi = singular_hi
        self.inner_singular = inner_singular
        self._probes = list(probes)

    def probe_points(self):
        return list(self._probes)

    def _outer_measure(self):
        if np.isinf(self.hi):
            split = _tail_split(self.lo)
            return (split - self.lo) + 1.0 / max(split, 1.0)
        return self.hi - self.lo

    def _integrate(self, f, tol, budget):
        inner_tol = 0.25 * tol / max(self._outer_measure(), 1.0)
        inner_budget = max(budget // 64, 10_000)
        evals = [0]
        sing = self.inner_singular

        def row(t):
            a, b = self.inner_lo(t), self.inner_hi(t)
            if b <= a:
                return 0.0
            if self.axis == "x":
                g = lambda y: f(t, y)
            else:
                g = lambda x: f(x, t)
            r = integrate_1d(g, a, b, inner_tol, singular_lo=sing,
                             singular_hi=sing, budget=inner_budget)
            evals[0] += r.evaluations
            return r.value

        outer = integrate_1d(row, self.lo, self.hi, 0.5 * tol,
                             singular_lo=self.singular_lo,
                             singular_hi=self.singular_hi, budget=budget)
        err = outer.error_estimate + inner_tol * self._outer_measure()
        return QuadratureResult(outer.value, err, evals[0])


class TriangleRegion:
    """Filled triangle with the given affine vertices."""

    def __init__(self, p0, p1, p2):
        self.p0 = np.asarray(p0, float)
        self.p1 = np.asarray(p1, float)
        self.p2 = np.asarray(p2, float)
        self.jac = abs(_cross2(self.p1 - self.p0, self.p2 - self.p0))

    @property
    def area(self):
        return 0.5 * self.jac

    def probe_points(self):
        return [tuple(self.p0), tuple(self.p1), tuple(self.p2)]

    def _outer_measure(self):
        return 1.0

    def _integrate(self, f, tol, budget):
        e1 = self.p1 - self.p0
        e2 = self.p2 - self.p0
        inner_tol = 0.25 * tol
        inner_budget = max(budget // 64, 10_000)
        evals = [0]

        def row(u):
            def g(v):
                p = self.p0 + u * e1 + v * e2
                return f(p[0], p[1]) * self.jac

            hi = 1.0 - u
            if hi <= 0.0:
                return 0.0
            r = integrate_1d(g, 0.0, hi, inner_tol, budget=inner_budget)
            evals[0] += r.evaluations
            return r.value

        outer = integrate_1d(row, 0.0, 1.0, 0.5 * tol, budget=budget)
        return QuadratureResult(outer.value, outer.error_estimate + inner_tol,
                                evals[0])


class RegionUnion:
    """Disjoint union of regions; integrals and errors add."""

    def __init__(self, *regions):
        self.regions = regions

    def probe_points(self):
        return [p for r in self.regions for p in r.probe_points()]

    def _integrate(self, f, tol, budget):
        per = tol / len(self.regions)
        parts = [r._integrate(f, per, budget // len(self.regions))
                 for r in self.regions]
        return QuadratureResult(
            sum(p.value for p in parts),
            sum(p.error_estimate for p in parts),
            sum(p.evaluations for p in parts),
        )


def integrate_2d(density, region, tol, budget=10_000_000):
    """Integrate density(x, y) over a region descriptor.

    Accepts Rect, Strip, TriangleRegion or RegionUnion.  Returns a
    QuadratureResult; raises NonConvergence (with partial value) when
    the evaluation budget is exceeded.
    """
    if tol <= 0:
        raise InvalidParameter("tol must be positive")
    return region._integrate(density, tol, budget)


def _density_on_points(density, pts):
    try:
        vals = np.asarray(density(pts), dtype=float)
        if vals.shape == (len(pts),):
            return vals
    except Exception:
        pass
    return np.array([float(density(p)) for p in pts])


def thread_count():
    """Worker count from HILBERTGEO_THREADS (unset -> 1, 0 -> all cores)."""
    raw = os.environ.get("HILBERTGEO_THREADS")
    if raw is None:
        return 1
    try:
        k = int(raw)
    except ValueError:
        return 1
    if k == 0:
        return os.cpu_count() or 1
    return max(1, k)


def monte_carlo_2d(density, sampler, n, seed):
    """Unbiased Monte Carlo estimate of the integral of density.

    sampler.sample(rng, n) must return (points, inv_pdf): the estimate
    is mean(density(points) * inv_pdf) and the reported error is the
    standard error of that mean.  Deterministic for a fixed seed.
    """
    if n < 100:
        raise InvalidParameter("need n >= 100 samples")
    rng = np.random.default_rng(seed)
    pts, invp = sampler.sample(rng, int(n))
    workers = thread_count()
    if workers > 1 and len(pts) >= 1 << 17:
        blocks = np.array_split(np.arange(len(pts)), 4 * workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ix: _density_on_points(density, pts[ix]),
                                  blocks))
        vals = np.concatenate(parts)
    else:
        vals = _density_on_points(density, pts)
    prods = vals * invp
    value = float(np.mean(prods))
    stderr = float(np.std(prods, ddof=1) / np.sqrt(len(prods)))
    return QuadratureResult(value, stderr, len(prods))


class UniformRectSampler:
    def __init__(self, x0, x1, y0, y1):
        self.x0, self.x1, self.y0, self.y1 = map(float, (x0, x1, y0, y1))
        self.area = (self.x1 - self.x0) * (self.y1 - self.y0)

    def sample(self, rng, n):
        u = rng.random((n, 2))
        pts = np.empty((n, 2))
        pts[:, 0] = self.x0 + u[:, 0] * (self.x1 - self.x0)
        pts[:, 1] = self.y0 + u[:, 1] * (self.y1 - self.y0)
        return pts, np.full(n, self.area)


class UniformTriangleSampler:
    def __init__(self, p0, p1, p2):
        self.p0 = np.asarray(p0, float)
        self.p1 = np.asarray(p1, float)
        self.p2 = np.asarray(p2, float)
        self.area = 0.5 * abs(_cross2(self.p1 - self.p0, self.p2 - self.p0))

    def sample(self, rng, n):
        su = np.sqrt(rng.random(n))
        v = rng.random(n)
        pts = (np.outer(1.0 - su, self.p0)
               + np.outer(su * (1.0 - v), self.p1)
               + np.outer(su * v, self.p2))
        return pts, np.full(n, self.area)


class VertexGradedTriangleSampler:
    """Importance sampler concentrated toward one triangle vertex.

    The point density is proportional to dist(apex)^(-3/2), which keeps
    the weighted integrand bounded for densities blowing up like
    dist^(-3/2) at the apex (the rate of the Hilbert area form at a
    boundary contact).  Radii below ~u_floor^2 of the apex are excluded;
    for such integrands the excluded mass is O(u_floor) relative.
    """

    def __init__(self, apex, p1, p2, u_floor=1e-6):
        self.apex = np.asarray(apex, float)
        self.p1 = np.asarray(p1, float)
        self.p2 = np.asarray(p2, float)
        self.area = 0.5 * abs(_cross2(self.p1 - self.apex, self.p2 - self.apex))
        self.u_floor = float(u_floor)

    def sample(self, rng, n):
        u = np.maximum(rng.random(n), self.u_floor)
        w = u * u
        v = rng.random(n)
        q = np.outer(1.0 - v, self.p1) + np.outer(v, self.p2)
        pts = self.apex + w[:, None] * (q - self.apex)
        inv_pdf = 4.0 * self.area * u**3
        return pts, inv_pdf


def central_difference(f, x, h):
    """(f(x+h) - f(x-h)) / (2h)."""
    if h <= 0:
        raise InvalidParameter("h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)
