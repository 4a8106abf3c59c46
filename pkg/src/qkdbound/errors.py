"""Exception hierarchy shared by every module in the package."""


class QkdBoundError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QkdBoundError, ValueError):
    """A scalar argument lies outside its mathematical domain."""


class NonPhysicalStateError(QkdBoundError):
    """A matrix fails the density-operator requirements (PSD, unit trace)."""


class EigensolverError(QkdBoundError):
    """The dense eigensolver did not converge or lost the trace."""


class UnitarityError(QkdBoundError):
    """Attack vectors violate the column-norm or orthogonality constraints."""


class AsymmetricAttackError(QkdBoundError):
    """Attack noise differs between the two raw-key branches."""


class UnphysicalStatisticsError(QkdBoundError):
    """Observed statistics violate a Cauchy-Schwarz physicality screen."""


class InconsistentStatisticsError(QkdBoundError):
    """No collective attack reproduces the observed statistics."""


class ScenarioInfeasibleError(QkdBoundError):
    """A named noise scenario leaves the physical range at these parameters."""


class StatisticsSchemaError(QkdBoundError):
    """A statistics JSON document does not match the expected schema."""
