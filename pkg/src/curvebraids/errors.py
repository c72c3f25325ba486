"""Exception hierarchy shared by all modules."""


class CurveBraidsError(Exception):
    """Base class for domain errors raised by this package."""


class StrandMismatchError(CurveBraidsError, ValueError):
    """Two braids (or a braid and a free word) live on different strand counts."""


class IndexRangeError(CurveBraidsError, ValueError):
    pass


class NotPureError(CurveBraidsError, ValueError):
    pass


class NotAKnotError(CurveBraidsError, ValueError):
    """The closure of a braid has more than one component."""


class DisconnectedFibreError(CurveBraidsError, ValueError):
    pass


class CoprimalityError(CurveBraidsError, ValueError):
    pass


class InvalidBranchError(CurveBraidsError, ValueError):
    pass


class CascadeValidationError(CurveBraidsError):
    """A cable cascade disagrees with the numerical monodromy oracle."""


class CollisionError(CurveBraidsError):
    """Two fibre points came closer than the collision tolerance."""


class RootMatchingError(CurveBraidsError):
    pass


class PoleError(CurveBraidsError):
    """The leading coefficient in w vanishes inside the tracked disk."""


class NegativeCrossingError(CurveBraidsError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotWirtingerError(CurveBraidsError, ValueError):
    pass


class SearchCapExceeded(CurveBraidsError):
    """A brute-force search would exceed its configured cap."""


class FormatError(CurveBraidsError, ValueError):
    """Malformed text or JSON input."""
