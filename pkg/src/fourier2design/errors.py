"""Exception types raised across the package."""


class DesignError(ValueError):
    """Base class for invalid-input errors."""


class NotInvertible(DesignError):
    pass


class ZeroParameter(DesignError):
    pass


class ShapeMismatch(DesignError):
    pass


class NotHermitian(DesignError):
    pass


class EvenDimension(DesignError):
    pass


class NotOddPrime(DesignError):
    pass


class WrongDimensionClass(DesignError):
    """Raised when an object needs a prime d = 3 (mod 4)."""


class BetaZero(DesignError):
    pass


class IdentityElement(DesignError):
    pass


class NotInDomain(DesignError):
    pass


class NotNormalized(DesignError):
    pass


class TraceNotOne(DesignError):
    pass


class WrongOrbit(DesignError):
    pass


class LengthMismatch(DesignError):
    pass


class DegenerateCombination(RuntimeError):
    """No random combination of the R_m separated the joint eigenbasis."""
