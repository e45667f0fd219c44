"""Exception hierarchy shared by all hilbertgeo modules."""


class HilbertGeoError(Exception):
    """Base class for all library errors."""


class GeometryError(HilbertGeoError):
    """A geometric degeneracy: inputs violate the preconditions of an
    operation in a way that has no meaningful numerical answer."""


class DegenerateConfiguration(GeometryError):
    """Fewer than three of four cross-ratio points are distinct."""


class InfiniteCrossRatio(GeometryError):
    """Affine cross-ratio denominator vanished (value at infinity)."""


class NotCollinear(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


class PointsOutsideDomain(GeometryError):
    pass


class NotOnBoundary(GeometryError):
    pass


class NoUniqueTangent(GeometryError):
    """Tangent requested at a corner of a triangle or polygon."""


class DegenerateTangents(GeometryError):
    """The three tangent lines do not bound a triangle."""


class VertexOnEdgeEndpoint(GeometryError):
    pass


class EdgeMismatch(GeometryError):
    pass


class RegionOutsideDomain(GeometryError):
    pass


class NonConvergence(HilbertGeoError):
    """Requested tolerance not reached within the evaluation budget.

    Carries the best value and error estimate obtained so far.
    """

    def __init__(self, message, value=None, error_estimate=None, evaluations=0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class InvalidParameter(HilbertGeoError, ValueError):
    """Bad scalar/structural argument (usage error, not a degeneracy)."""


class GenusTooSmall(InvalidParameter):
    pass


class NonNegativeChi(InvalidParameter):
    pass


class TauLengthMismatch(InvalidParameter):
    pass


class NonPositiveCoordinate(InvalidParameter):
    pass
