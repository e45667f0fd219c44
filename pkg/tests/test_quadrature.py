import numpy as np
import pytest

from hilbertgeo.errors import InvalidParameter, NonConvergence
from hilbertgeo.quadrature import (
    Rect,
    RegionUnion,
    Strip,
    TriangleRegion,
    UniformRectSampler,
    UniformTriangleSampler,
    VertexGradedTriangleSampler,
    central_difference,
    integrate_1d,
    integrate_2d,
    monte_carlo_2d,
)


def test_inverse_square_tail():
    res = integrate_1d(lambda s: 1.0 / s**2, 1.0, np.inf, 1e-10)
    assert res.value == pytest.approx(1.0, abs=1e-10)
    assert res.evaluations > 0


def test_log_endpoint():
    res = integrate_1d(lambda x: np.log(1.0 / x), 0.0, 1.0, 1e-8, singular_lo=True)
    assert res.value == pytest.approx(1.0, abs=1e-8)


def test_b1_integrand():
    res = integrate_1d(lambda s: (2.0 / s) * np.log((s + 1.0) / (s - 1.0)),
                       1.0, np.inf, 1e-6, singular_lo=True)
    assert res.value == pytest.approx(np.pi**2 / 2.0, abs=1e-6)


def test_budget_exhaustion_carries_partial_value():
    with pytest.raises(NonConvergence) as err:
        integrate_1d(lambda x: np.log(1.0 / x), 0.0, 1.0, 1e-13, budget=300)
    assert err.value.value is not None
    assert err.value.evaluations <= 300


def test_bad_arguments():
    with pytest.raises(InvalidParameter):
        integrate_1d(lambda x: x, 0.0, 1.0, -1.0)
    with pytest.raises(InvalidParameter):
        integrate_1d(lambda x: x, 1.0, 0.5, 1e-6)
    with pytest.raises(InvalidParameter):
        integrate_1d(lambda x: x, -np.inf, 0.0, 1e-6)


# fixture suite: (callable, lo, hi, flags, exact value)
_FIXTURES = [
    (lambda x: x**2, 0.0, 3.0, {}, 9.0),
    (lambda x: x**7, 0.0, 1.0, {}, 1.0 / 8.0),
    (lambda x: np.exp(-x), 0.0, 5.0, {}, 1.0 - np.exp(-5.0)),
    (lambda x: np.sin(x), 0.0, np.pi, {}, 2.0),
    (lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, {}, np.pi / 4.0),
    (lambda x: np.exp(x), -1.0, 1.0, {}, np.e - 1.0 / np.e),
    (lambda x: np.cos(10.0 * x), 0.0, 1.0, {}, np.sin(10.0) / 10.0),
    (lambda x: abs(x - 0.5), 0.0, 1.0, {}, 0.25),
    (lambda x: np.sqrt(x), 0.0, 1.0, {"singular_lo": True}, 2.0 / 3.0),
    (lambda x: np.log(x), 0.0, 1.0, {"singular_lo": True}, -1.0),
    (lambda x: np.log(1.0 - x), 0.0, 1.0, {"singular_hi": True}, -1.0),
    (lambda x: x * np.log(x), 0.0, 1.0, {"singular_lo": True}, -0.25),
    (lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, {"singular_lo": True}, 2.0),
    (lambda x: np.log(x) ** 2, 0.0, 1.0, {"singular_lo": True}, 2.0),
    (lambda x: np.log(x * (1.0 - x)), 0.0, 1.0,
     {"singular_lo": True, "singular_hi": True}, -2.0),
    (lambda s: 1.0 / s**2, 1.0, np.inf, {}, 1.0),
    (lambda s: 1.0 / s**3, 2.0, np.inf, {}, 1.0 / 8.0),
    (lambda s: np.exp(-s), 0.0, np.inf, {}, 1.0),
    (lambda s: np.log(s) / s**2, 1.0, np.inf, {}, 1.0),
    (lambda s: (2.0 / s) * np.log((s + 1.0) / (s - 1.0)), 1.0, np.inf,
     {"singular_lo": True}, np.pi**2 / 2.0),
]


@pytest.mark.parametrize("f,lo,hi,flags,exact", _FIXTURES)
def test_error_estimate_honesty(f, lo, hi, flags, exact):
    res = integrate_1d(f, lo, hi, 1e-8, **flags)
    measured = abs(res.value - exact)
    assert measured <= 10.0 * max(res.error_estimate, 1e-14)
    assert measured < 1e-7


def test_integrate_2d_constant_on_square():
    res = integrate_2d(lambda x, y: 1.0, Rect(0, 1, 0, 1), 1e-8)
    assert res.value == pytest.approx(1.0, abs=1e-9)


def test_integrate_2d_product_density():
    res = integrate_2d(lambda x, y: 1.0 / (x * y), Rect(1.0, np.e, 1.0, np.e), 1e-8)
    assert res.value == pytest.approx(1.0, abs=1e-6)


def test_integrate_2d_triangle():
    region = TriangleRegion((0, 0), (1, 0), (0, 1))
    res = integrate_2d(lambda x, y: 1.0, region, 1e-8)
    assert res.value == pytest.approx(0.5, abs=1e-8)
    res = integrate_2d(lambda x, y: x, region, 1e-8)
    assert res.value == pytest.approx(1.0 / 6.0, abs=1e-8)


def test_integrate_2d_strip_matches_rect():
    strip = Strip("x", 0.0, 2.0, lambda x: -1.0, lambda x: 1.0,
                  probes=[(0, 0)])
    r1 = integrate_2d(lambda x, y: x * x + y, strip, 1e-9)
    r2 = integrate_2d(lambda x, y: x * x + y, Rect(0, 2, -1, 1), 1e-9)
    assert r1.value == pytest.approx(r2.value, abs=1e-8)


def test_union_adds():
    u = RegionUnion(Rect(0, 1, 0, 1), Rect(1, 2, 0, 1))
    res = integrate_2d(lambda x, y: x, u, 1e-9)
    assert res.value == pytest.approx(2.0, abs=1e-8)


def test_monte_carlo_constant():
    res = monte_carlo_2d(lambda pts: np.ones(len(pts)),
                         UniformRectSampler(0, 1, 0, 1), 100_000, seed=1)
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert res.error_estimate < 1e-12


def test_monte_carlo_matches_quadrature():
    f = lambda x, y: 1.0 / (x * y)
    quad = integrate_2d(f, Rect(1.0, np.e, 1.0, np.e), 1e-8)
    mc = monte_carlo_2d(lambda pts: 1.0 / (pts[:, 0] * pts[:, 1]),
                        UniformRectSampler(1.0, np.e, 1.0, np.e), 200_000, seed=2)
    assert abs(mc.value - quad.value) < 3.0 * mc.error_estimate


def test_monte_carlo_reproducible():
    sampler = UniformTriangleSampler((0, 0), (1, 0), (0, 1))
    f = lambda pts: pts[:, 0] + pts[:, 1] ** 2
    r1 = monte_carlo_2d(f, sampler, 10_000, seed=7)
    r2 = monte_carlo_2d(f, sampler, 10_000, seed=7)
    assert r1.value == r2.value and r1.error_estimate == r2.error_estimate


def test_monte_carlo_needs_samples():
    with pytest.raises(InvalidParameter):
        monte_carlo_2d(lambda p: 1.0, UniformRectSampler(0, 1, 0, 1), 10, seed=0)


def test_uniform_triangle_sampler_unbiased():
    tri = UniformTriangleSampler((0, 0), (2, 0), (0, 2))
    res = monte_carlo_2d(lambda pts: np.ones(len(pts)), tri, 50_000, seed=3)
    assert res.value == pytest.approx(2.0, abs=1e-10)


def test_vertex_graded_sampler_agrees_with_uniform():
    apex, b, c = (0.0, 0.0), (1.0, 0.0), (0.0, 1.0)
    f = lambda pts: np.cos(pts[:, 0]) + pts[:, 1]
    graded = monte_carlo_2d(f, VertexGradedTriangleSampler(apex, b, c),
                            200_000, seed=4)
    uniform = monte_carlo_2d(f, UniformTriangleSampler(apex, b, c),
                             200_000, seed=5)
    se = np.hypot(graded.error_estimate, uniform.error_estimate)
    assert abs(graded.value - uniform.value) < 4.0 * se


def test_vertex_graded_handles_singular_integrand():
    # f ~ rho^(-3/2) at the apex: integrable, infinite variance under
    # uniform sampling, bounded weight under the graded sampler
    apex = np.array([1.0, 0.0])

    def f(pts):
        rho = np.linalg.norm(pts - apex, axis=1)
        return rho**-1.5

    sampler = VertexGradedTriangleSampler(apex, (0.0, 0.5), (0.0, -0.5))
    r1 = monte_carlo_2d(f, sampler, 200_000, seed=6)
    r2 = monte_carlo_2d(f, sampler, 200_000, seed=7)
    assert abs(r1.value - r2.value) < 4.0 * np.hypot(r1.error_estimate,
                                                     r2.error_estimate)
    assert r1.error_estimate < 0.02 * r1.value


def test_central_difference():
    assert central_difference(lambda x: x * x, 3.0, 1e-4) == pytest.approx(6.0, abs=1e-7)
    assert central_difference(np.log, 2.0, 1e-5) == pytest.approx(0.5, abs=1e-8)
