"""Exception types shared across the package."""

from __future__ import annotations


class CascadeKitError(Exception):
    pass


class InvalidType(CascadeKitError, ValueError):
    pass


class InvalidRank(InvalidType):
    pass


class OrderOverflow(CascadeKitError, RuntimeError):
    pass


class NotAdmissible(CascadeKitError, ValueError):
    """A root takes a value outside {-1, 0, 1, 2} on the grading element."""

    def __init__(self, root, value):
        self.root = root
        self.value = value
        super().__init__(f"root {root} has value {value} outside [-1, 2]")


class PreconditionFailed(CascadeKitError, ValueError):
    pass


class DecompositionMismatch(CascadeKitError, RuntimeError):
    pass


class NoChain(CascadeKitError, RuntimeError):
    pass


class NotClassical(CascadeKitError, ValueError):
    pass


class NotApplicable(CascadeKitError, ValueError):
    pass


class InvariantViolation(CascadeKitError, AssertionError):
    """A computed object failed a structural identity it must satisfy."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)
