"""Exception hierarchy shared by all modules."""


class SectionCountsError(Exception):
    """Base class for every error raised by this package."""


class NonInvertible(SectionCountsError, ZeroDivisionError):
    pass


class OutOfRange(SectionCountsError, IndexError):
    pass


class UnsupportedWeight(SectionCountsError, ValueError):
    pass


class SingularSystem(SectionCountsError, ArithmeticError):
    pass


class DimensionMismatch(SectionCountsError, ValueError):
    pass


class UnsupportedRank(SectionCountsError, ValueError):
    pass


class IndefiniteLattice(SectionCountsError, ValueError):
    pass


class OddLattice(SectionCountsError, ValueError):
    pass


class NonIntegralNodes(SectionCountsError, ArithmeticError):
    pass


class NegativeInvariant(SectionCountsError, ValueError):
    pass


class ConsistencyError(SectionCountsError, AssertionError):
    """Two independent computations of the same quantity disagree."""
