"""Exception hierarchy shared by every hopfdual subpackage."""

from __future__ import annotations

__all__ = [
    "BlockCriterionViolation",
    "ContextMismatchError",
    "DimensionMismatchError",
    "DiscreteLogError",
    "FamilyMismatchError",
    "HopfDualError",
    "ParameterError",
    "ScalarDivisionError",
    "SingularHypothesisError",
    "UnsupportedSuiteError",
]


class HopfDualError(Exception):
    """Base error for hopfdual failures that are not verification results."""


class ParameterError(HopfDualError, ValueError):
    """Raised when family or run parameters violate a stated constraint."""

    def __init__(self, constraint: str, detail: str | None = None):
        msg = constraint if detail is None else f"{constraint} ({detail})"
        super().__init__(msg)
        self.constraint = constraint
        self.detail = detail


class ContextMismatchError(HopfDualError, ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""

    def __init__(self, left: int, right: int):
        super().__init__(f"cannot combine scalars from Q(zeta_{left}) and Q(zeta_{right})")
        self.left = left
        self.right = right


class ScalarDivisionError(HopfDualError, ZeroDivisionError):
    """Raised on division by an exact zero."""


class DiscreteLogError(HopfDualError, ValueError):
    """Raised when a target is not a power of the given root of unity."""

    def __init__(self, base: str, target: str, order: int):
        super().__init__(f"{target} is not a power of {base} (order {order})")
        self.base = base
        self.target = target
        self.order = order


class DimensionMismatchError(HopfDualError, ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


class SingularHypothesisError(HopfDualError, ValueError):
    """Raised when an invertibility hypothesis of a criterion is violated."""


class FamilyMismatchError(HopfDualError, ValueError):
    """Raised when functionals or words from different Hopf algebras meet."""

    def __init__(self, left: str, right: str):
        super().__init__(f"family mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class UnsupportedSuiteError(HopfDualError, ValueError):
    """Raised when a suite is requested for a family that does not support it."""

    def __init__(self, suite: str, family: str):
        super().__init__(f"suite '{suite}' is not available for family '{family}'")
        self.suite = suite
        self.family = family


class BlockCriterionViolation(HopfDualError, AssertionError):
    """Raised when an assembled block matrix contradicts the block invertibility criterion."""
