"""Exception types shared across the package.

The CLI reports these by class name, so the names are part of the
user-facing surface.
"""


class KLHeckeError(Exception):
    """Base class for all package errors."""


class OddBondWeightMismatch(KLHeckeError):
    """Weights differ on two generators joined by a finite odd bond."""


class NonPositiveWeight(KLHeckeError):
    """A weight is negative, or zero where positivity is required."""


class InfiniteParabolic(KLHeckeError):
    """A longest element was requested in an infinite parabolic subgroup."""


class OrbitNotFinite(KLHeckeError):
    """A diagram-automorphism orbit does not generate a finite parabolic."""


class NotPeriodic(KLHeckeError):
    """Input does not define a bijection of Z commuting with the shift."""


class NonzeroChi(KLHeckeError):
    """Periodic permutation has nonzero displacement sum."""


class PreconditionViolated(KLHeckeError):
    """Arguments violate a documented precondition."""


class RegionTooSmall(KLHeckeError):
    """The trust margin leaves no usable elements in the region."""


class UncertifiedRegion(KLHeckeError):
    """A value was requested where the windowed computation is only a bound."""


class UnsupportedWeights(KLHeckeError):
    """Closed forms require L1 = L2 or L2 > L1; swap generator roles first."""


class OutOfCoverage(KLHeckeError):
    """No closed form is available for the requested input."""


class TTooSmall(KLHeckeError):
    """Complementation parameter t does not dominate the multiset."""


class RankMismatch(KLHeckeError):
    """Bipartition or symbol data do not have the expected rank."""


class ParityMismatch(KLHeckeError):
    """Set size and fixed-point count have different parities."""
