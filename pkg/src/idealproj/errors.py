"""Exception hierarchy shared across the package.

Every error carries an ``exit_code`` used by the CLI:

* 1 -- validation failure (bad user input),
* 2 -- mathematical failure (singular Gram matrix, point collision),
* 3 -- internal-consistency failure (a violated exact-divisibility
  identity; signals a bug in this library, never a user error).
"""


class IdealProjError(Exception):
    exit_code = 1


class ValidationError(IdealProjError):
    """User-supplied data failed a structural or mathematical precondition."""

    exit_code = 1


class SingularMatrixError(IdealProjError):
    """An exact linear solve hit a singular matrix."""

    exit_code = 2

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class PointCollisionError(IdealProjError):
    """Two perturbed interpolation points coincide at a concrete h."""

    exit_code = 2

    def __init__(self, message, indices=None):
        super().__init__(message)
        self.indices = indices


class ExactnessError(IdealProjError):
    """An exact division failed where theory guarantees divisibility."""

    exit_code = 3
