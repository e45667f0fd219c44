"""Scalar area lower bounds for convex projective surfaces and orbifolds.

A closed surface of genus g >= 2 decomposes into 4g - 4 ideal triangles;
summing the per-triangle bound (pi^2 + tau_i^2)/8 over the triangle
invariants tau_i = log t_i gives the surface bound
(g - 1) pi^2 / 2 + ||tau||^2 / 8 in the Announced normalization.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import GenusTooSmall, NonNegativeChi, TauLengthMismatch
from .metric import Normalization


def euler_characteristic(genus):
    if genus < 2:
        raise GenusTooSmall("need genus >= 2")
    return 2 - 2 * genus


def ideal_triangle_count(genus):
    """An ideal triangulation has 2|chi| = 4g - 4 triangles."""
    return 2 * abs(euler_characteristic(genus))


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus g >= 2 plus the vector of 4g - 4 triangle invariants."""

    genus: int
    tau: np.ndarray

    def __post_init__(self):
        if self.genus < 2:
            raise GenusTooSmall("need genus >= 2")
        tau = np.asarray(self.tau, dtype=float).reshape(-1)
        if len(tau) != 4 * self.genus - 4:
            raise TauLengthMismatch(
                "genus %d needs %d triangle invariants, got %d"
                % (self.genus, 4 * self.genus - 4, len(tau)))
        object.__setattr__(self, "tau", tau)


@dataclass(frozen=True)
class OrbifoldSpec:
    """Negative orbifold Euler characteristic."""

    chi_orb: float

    def __post_init__(self):
        if not self.chi_orb < 0:
            raise NonNegativeChi("orbifold Euler characteristic must be negative")


def alpha_bound(spec, norm=Normalization.ANNOUNCED):
    """(g-1) pi^2/2 + ||tau||^2/8 (Announced); four times that for Full.

    Identical to the sum of the per-triangle closed-form areas
    triangle_area_closed(exp(tau_i), norm) over the 4g - 4 triangles.
    """
    announced = (spec.genus - 1) * np.pi**2 / 2.0 + float(spec.tau @ spec.tau) / 8.0
    return announced * (norm.area_scale / Normalization.ANNOUNCED.area_scale)


def coarse_bound(chi, norm=Normalization.ANNOUNCED):
    """(pi/2)^2 |chi| (Announced); pi^2 |chi| for Full."""
    if not chi < 0:
        raise NonNegativeChi("Euler characteristic must be negative")
    announced = (np.pi**2 / 4.0) * abs(chi)
    return announced * (norm.area_scale / Normalization.ANNOUNCED.area_scale)


def orbifold_bound(spec):
    """(pi/2)^2 |chi_orb|, Announced normalization.

    Over all orbifolds the minimum of |chi_orb| is 1/42, so the global
    area lower bound is pi^2/168.
    """
    return (np.pi**2 / 4.0) * abs(spec.chi_orb)
