"""Exception hierarchy for heunfg."""


class HeunError(Exception):
    """Base class for every error raised by this package."""


# algebra

class Inconsistent(HeunError):
    """Linear system has no solution."""


class Underdetermined(HeunError):
    """Linear system has a positive-dimensional solution set."""


class LogTermPresent(HeunError):
    """Antiderivative would need a logarithm (nonzero residue at ``pole``)."""

    def __init__(self, pole, residue=None):
        self.pole = pole
        self.residue = residue
        super().__init__(f"nonzero residue at z = {pole}: {residue}")


class NoConvergence(HeunError):
    """Iterative root finder hit its iteration cap."""


class DegreeTooLow(HeunError):
    pass


class NotDivisible(HeunError):
    pass


# flows / psi / curve

class BoundExceeded(HeunError):
    """No Novikov relation found up to the proven bound g <= N."""


class NegativeCharacteristic(HeunError):
    pass


class ZDependent(HeunError):
    """A quantity that must be z-free still depends on z."""


class EmptyClass(HeunError):
    pass


class NotPerfectSquare(HeunError):
    pass


class BadMultiplicity(HeunError):
    pass


class InvalidModulus(HeunError, ValueError):
    """The cross-ratio ``a`` collides with another singular point."""


# numerics

class PathTooCloseToZero(HeunError):
    pass


class QuadratureNoConvergence(HeunError):
    pass


class TooCloseToSingularity(HeunError):
    pass


class OutsideValidatedRegime(HeunError):
    pass
