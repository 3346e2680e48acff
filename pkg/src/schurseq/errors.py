"""Exception hierarchy shared by every module of the package."""


class SchurSeqError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPartition(SchurSeqError, ValueError):
    pass


class RowTooShort(SchurSeqError, ValueError):
    """A prepended row is shorter than the first row it sits on."""


class DegreeMismatch(SchurSeqError, ValueError):
    pass


class CoefficientOverflow(SchurSeqError, OverflowError):
    """A coefficient left the signed 64-bit range."""


class ShapeMismatch(SchurSeqError, ValueError):
    pass


class UnsortedAlpha(SchurSeqError, ValueError):
    pass


class FaceNotDefinedForK(SchurSeqError, ValueError):
    pass


class NegativeWeight(SchurSeqError, ValueError):
    pass


class SlopeMismatch(SchurSeqError, ValueError):
    pass


class BelowFloor(SchurSeqError, ValueError):
    """A sequence was evaluated below its smallest valid index."""


class NotStabilizing(SchurSeqError, ValueError):
    pass
