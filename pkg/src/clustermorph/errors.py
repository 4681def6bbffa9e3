"""Exception hierarchy.

Errors marked *internal* should never fire on valid input; raising one means
a theorem the code relies on has been contradicted.
"""


class ClusterMorphError(Exception):
    """Base class for every domain error raised by the package."""


class QuiverError(ClusterMorphError, ValueError):
    """Malformed quiver data (shape, admissibility, sign pattern)."""


class NotFiniteType(ClusterMorphError):
    def __init__(self, minor_index: int, value):
        self.minor_index = minor_index
        self.value = value
        super().__init__(
            f"symmetrized Euler matrix is not positive definite: "
            f"leading minor of size {minor_index} equals {value}"
        )


class NotARoot(ClusterMorphError, ValueError):
    pass


class NotInCategory(ClusterMorphError, ValueError):
    """An object was used outside the wide subcategory it must belong to."""


class ConsistencyError(ClusterMorphError):
    pass


class UniquenessViolation(ClusterMorphError):
    """Internal: a search that must have exactly one answer did not."""


class DegenerateInput(ClusterMorphError, ValueError):
    pass


class IntegralityViolation(ClusterMorphError):
    """Internal."""


class SignViolation(ClusterMorphError):
    """Internal."""


class SingularSystem(ClusterMorphError):
    """Internal."""


class NotOrderable(ClusterMorphError):
    """Internal."""


class NotPermutable(ClusterMorphError):
    def __init__(self, pair, message: str):
        self.pair = pair
        super().__init__(message)


class NonUnimodular(ClusterMorphError):
    """Internal."""


class BoundarySquareNonzero(ClusterMorphError):
    """Internal."""


class NotSimplyLaced(ClusterMorphError):
    pass
