"""Exception types shared across the package."""


class BallcertError(Exception):
    """Base class for all package-specific errors."""


class DomainError(BallcertError, ValueError):
    """Argument lies outside the domain of a majorant family."""


class QuadratureError(BallcertError, RuntimeError):
    """Adaptive quadrature failed to meet its tolerance within budget."""


class SingularMatrixError(BallcertError, ValueError):
    """LU factorization hit a pivot below the singularity threshold."""


class SingularJacobianError(SingularMatrixError):
    """Jacobian at the root is numerically singular."""


class DegenerateGridError(BallcertError, ValueError):
    """Every denominator in a constant-estimation grid is below 1e-14."""


class InfeasibleAtOriginError(BallcertError, ValueError):
    """Radius condition already exceeds 1 at r = 1e-12."""


class NegativeDiscriminantError(BallcertError, ValueError):
    """A closed-form radius formula has a negative discriminant."""


class InsufficientDataError(BallcertError, ValueError):
    """Too few usable iterates to estimate a convergence order."""


class DenominatorNonpositiveError(BallcertError, ValueError):
    """A q-factor denominator 1 - integral(L) is not positive."""


class InvalidQError(BallcertError, ValueError):
    """q-factors do not satisfy q1 < 1 and q2 < 1."""


class MissingRootError(BallcertError, ValueError):
    """Operation requires a problem with a known root."""
