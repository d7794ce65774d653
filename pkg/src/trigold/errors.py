"""Exception hierarchy shared by all trigold modules."""


class TrigoldError(Exception):
    """Base class for all package-specific errors."""


class DivideByZero(TrigoldError):
    pass


class DivisionNotExact(TrigoldError):
    """Polynomial or field division left a nonzero remainder."""


class InvalidParameter(TrigoldError):
    pass


class EdgeNotPresent(TrigoldError):
    pass


class NotATriangle(TrigoldError):
    pass


class FaceNotPresent(TrigoldError):
    pass


class EdgeNotFlippable(TrigoldError):
    pass


class FlipWouldCreateParallelEdge(EdgeNotFlippable):
    """Flipping would introduce a diagonal that already exists."""


class ResourceLimit(TrigoldError):
    """Recursion node budget exhausted; the computation was aborted, never wrong."""


class TooLarge(TrigoldError):
    """Input exceeds the size the brute-force oracle is willing to handle."""


class DegreeMismatch(TrigoldError):
    pass


class AllCoefficientsVanish(TrigoldError):
    """Every coefficient polynomial vanishes at the evaluation point."""


class NoConvergence(TrigoldError):
    """Iterative root finding failed at the maximum precision.

    The ``partial`` attribute carries whatever approximations were reached.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedFamily(TrigoldError):
    """The family has no explicit vertex-level construction."""


class OutOfRange(TrigoldError):
    pass


class ParseError(TrigoldError):
    pass
