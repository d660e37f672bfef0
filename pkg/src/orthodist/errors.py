"""Exception types raised across the package."""


class OrthodistError(Exception):
    """Base class for all errors raised by orthodist."""


class NonSquare(OrthodistError, ValueError):
    pass


class NotNormal(OrthodistError, ValueError):
    pass


class NoConvergence(OrthodistError, ArithmeticError):
    pass


class NotSkew(OrthodistError, ValueError):
    pass


class WrongDimension(OrthodistError, ValueError):
    pass


class DimensionMismatch(OrthodistError, ValueError):
    pass


class BadDimension(OrthodistError, ValueError):
    pass


class AnglePi(OrthodistError, ValueError):
    """A rotation angle sits on the branch locus of the logarithm."""


class NotOrthogonal(OrthodistError, ValueError):
    pass


class NegativeDeterminant(OrthodistError, ValueError):
    pass


class OutOfDomain(OrthodistError, ValueError):
    pass


class DegenerateRange(OrthodistError, ValueError):
    pass


class SpecInvalid(OrthodistError, ValueError):
    pass


class InsufficientSamples(OrthodistError, ValueError):
    pass
