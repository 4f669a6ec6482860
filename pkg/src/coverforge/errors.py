"""Exception hierarchy.  Every error raised by the package derives from CoverError."""


class CoverError(Exception):
    pass


class GroupError(CoverError, ValueError):
    pass


class NotNormal(GroupError):
    pass


class UnsupportedGroupKind(CoverError):
    """Explicit matrices exist only for cyclic and dihedral groups."""


class NonIntegerMultiplicity(CoverError):
    pass


class NonIntegerCount(CoverError):
    pass


class CharacterTableError(CoverError):
    pass


class InvalidDatum(CoverError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NonIntegralGenus(CoverError):
    pass


class NegativeGenus(CoverError):
    pass


class NonAdjacentMerge(CoverError):
    pass


class EmptyMerge(CoverError):
    pass


class BranchDropped(CoverError):
    pass


class NonIntegralMultiplicity(CoverError):
    pass


class BaseNotRational(CoverError):
    pass


class NotDihedral(CoverError):
    pass


class AssumptionViolated(CoverError):
    pass


class HOutOfRange(CoverError):
    pass


class MismatchWithGenericCW(CoverError):
    pass


class OrbitBudgetExceeded(CoverError):
    def __init__(self, message, census=None):
        super().__init__(message)
        self.census = census


class ShapeViolation(CoverError):
    pass


class ParseError(CoverError):
    pass
