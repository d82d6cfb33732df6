"""Exception hierarchy.

Every error raised on bad input or a domain violation derives from
:class:`ArfError`, so callers (and the CLI) can separate domain failures from
programming errors with a single ``except``.
"""


class ArfError(Exception):
    """Base class for all toolkit errors."""


class InvalidSignature(ArfError, ValueError):
    pass


class InvalidModulus(ArfError, ValueError):
    pass


class ClosedSurface(ArfError, ValueError):
    """An operation that needs a boundary component got a closed surface."""


class ClosedSurfaceInadmissible(ArfError, ValueError):
    """Closed surface whose modulus does not divide 2g - 2."""


class SumConstraintViolated(ArfError, ValueError):
    pass


class MismatchedSignature(ArfError, ValueError):
    pass


class IndexOutOfRange(ArfError, IndexError):
    pass


class StateSpaceTooLarge(ArfError, RuntimeError):
    pass


# hyperbolic kernel


class DegenerateParameters(ArfError, ValueError):
    pass


class DegenerateElement(ArfError, ValueError):
    pass


class EllipticUnsupported(ArfError, ValueError):
    pass


class ChartBoundary(ArfError, ArithmeticError):
    """Lifted argument too close to an odd multiple of pi to read a level."""


class PathThroughDegeneracy(ArfError, ArithmeticError):
    pass


class NotCovered(ArfError, ValueError):
    """Pair of elements outside the hypotheses of every product rule."""


class SharedFixedPoint(ArfError, ValueError):
    pass


class OutOfValidityRegion(ArfError, ValueError):
    pass


class OrientationSearchFailed(ArfError, RuntimeError):
    pass


class RelatorNotIdentity(ArfError, ValueError):
    pass


class WindingNotIntegral(ArfError, ArithmeticError):
    pass


class LiftCheckMismatch(ArfError, AssertionError):
    """Numerical winding and closed-form level sum disagree."""
