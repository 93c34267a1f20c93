# app/errors.py
from __future__ import annotations

from typing import Optional


class WeakGBError(Exception):
    """Base class for every error raised by this package."""


# ---- Input problems (CLI exit 2, HTTP 422) ----

class InputError(WeakGBError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, position: Optional[int] = None,
                 path: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.position = position
        self.path = path
        self.line = line
        super().__init__(str(self))

    def located(self, path: Optional[str], line: Optional[int]) -> "ParseError":
        return type(self)(self.message, self.position, path, line)

    def __str__(self) -> str:
        where = []
        if self.path:
            where.append(self.path)
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"col {self.position + 1}")
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class UnknownVariableError(ParseError):
    pass


class UnknownBenchmarkError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class ZeroInputError(InputError):
    pass


# ---- Ring capabilities (CLI exit 2, HTTP 400) ----

class UnsupportedRingError(WeakGBError):
    pass


class NonDivisibleError(ArithmeticError):
    pass


# ---- Failures while computing (CLI exit 1, HTTP 500) ----

class ComputationError(WeakGBError):
    pass


class IterationCeilingError(ComputationError):
    def __init__(self, ceiling: int):
        self.ceiling = ceiling
        super().__init__(f"iteration ceiling of {ceiling} reached; the run was stopped")


class SignatureOrderError(ComputationError):
    """Appended signatures went down: the nondecreasing-signature invariant broke."""
