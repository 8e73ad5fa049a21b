"""Exception types shared across the package."""


class ModuliError(Exception):
    """Base class for all errors raised by this package."""


class BadShape(ModuliError):
    """Input matrix or vector has the wrong dimensions."""


class NonGenerating(ModuliError):
    """The given weight characters do not generate the character group."""


class NotInM(ModuliError):
    """An exponent vector does not lie in the weight-trivial sublattice."""


class BadTheta(ModuliError):
    """A stability parameter fails validation (shape, integrality, or sum)."""


class NegativeW(ModuliError):
    """A cone-locating parameter w has a negative entry."""


class TrivialGroup(ModuliError):
    """The requested construction needs a nontrivial group."""


class MismatchedDescriptions(ModuliError):
    """An H-description and a V-description do not describe the same set."""


class OutsideSupport(ModuliError):
    """A query vector lies outside the support of the fan."""


class NotOptimal(ModuliError):
    """A linear program expected to be solvable was infeasible or unbounded."""


class GroupSpecError(ModuliError):
    """A group specification string failed to parse.

    Carries the character position of the offending token when known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
