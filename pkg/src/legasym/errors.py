"""Exception hierarchy.

Every error carries a short machine-readable ``code`` which the command line
front end turns into an exit status.
"""


class LegasymError(Exception):
    code = "error"
    exit_status = 1


class ConfigurationError(LegasymError):
    code = "configuration"
    exit_status = 2


class DomainError(LegasymError, ValueError):
    code = "domain"
    exit_status = 3

    def __init__(self, message, tag=None):
        super().__init__(message)
        self.tag = tag


class BranchError(DomainError):
    code = "branch"


class PoleError(DomainError):
    code = "pole"

    def __init__(self, message, location=None, tag=None):
        super().__init__(message, tag=tag)
        self.location = location


class SingularityError(DomainError):
    code = "singularity"


class RegimeError(LegasymError, ValueError):
    code = "regime"
    exit_status = 4


class TruncationError(LegasymError, ArithmeticError):
    code = "truncation"
    exit_status = 5


class QuadratureError(LegasymError, ArithmeticError):
    code = "quadrature"
    exit_status = 6


class GeometryError(QuadratureError, ValueError):
    code = "geometry"


class OracleGapError(LegasymError):
    code = "oracle-gap"
    exit_status = 7


class InternalConsistencyError(LegasymError, AssertionError):
    """A structural property that must hold exactly failed (recurrence bug)."""

    code = "internal"
    exit_status = 70
