"""Exception types raised by the completion calculus."""
from typing import Iterable, Optional


class CalculusError(Exception):
    """Base class for every error raised by the backend."""


class OperatorModelError(CalculusError, ValueError):
    """An atom or operator expression violates its structural invariants."""


class BasisError(CalculusError):
    """Kernel/cokernel bases are not available at the requested point."""


class ArrangementError(CalculusError):
    """The exact arrangement builder refused the input."""


class RegionError(CalculusError, ValueError):
    pass


class PreconditionError(CalculusError):
    """A theorem check was asked to run outside its hypotheses."""


class OracleError(CalculusError):
    pass


class DslSyntaxError(CalculusError, ValueError):
    def __init__(self, message: str, line: int, column: int,
                 expected: Optional[Iterable[str]] = None):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected or []))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class DslSemanticError(CalculusError, ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")
