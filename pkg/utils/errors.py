from typing import Optional


class DualKeyError(Exception):
    """Base class for every error raised by the workbench"""


class PolynomialParseError(DualKeyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(PolynomialParseError):
    def __init__(self, name: str, position: int):
        super().__init__(f"Unknown variable: {name}", position)
        self.name = name


class ExponentOverflowError(DualKeyError):
    pass


class FieldMismatchError(DualKeyError):
    pass


class RingMismatchError(DualKeyError):
    pass


class DimensionMismatchError(DualKeyError):
    pass


class InhomogeneousInputError(DualKeyError):
    pass


class LimitExceededError(DualKeyError):
    """A Gröbner computation crossed one of its resource caps"""

    def __init__(self, message: str, degree: int, pairs: int, basis_size: int):
        super().__init__(f"{message}: reached pair degree {degree}, {pairs} pairs pending, basis size {basis_size}")
        self.degree = degree
        self.pairs = pairs
        self.basis_size = basis_size


class PointNotOnVarietyError(DualKeyError):
    def __init__(self, index: int):
        super().__init__(f"Point is not on the variety: generator {index} does not vanish")
        self.index = index


class ZeroPointError(DualKeyError):
    pass


class DegenerateDrawError(DualKeyError):
    pass


class NotACurveError(DualKeyError):
    pass


class NoAffineFitError(DualKeyError):
    pass


class PreconditionError(DualKeyError):
    pass


class UnsupportedCaseError(DualKeyError):
    pass


class UnknownComponentError(DualKeyError):
    pass


class NonFiniteSchemeError(DualKeyError):
    pass


class LinearSpaceInSegreError(DualKeyError):
    pass


class UnknownOperationError(DualKeyError):
    def __init__(self, name: str):
        super().__init__("unknown operation")
        self.name = name


class ClaimExecutionError(DualKeyError):
    def __init__(self, message: str, cause: Optional[Exception] = None):
        super().__init__(message)
        self.cause = cause
