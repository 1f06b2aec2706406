"""Exception hierarchy shared by all modules."""


class LatpolyError(Exception):
    """Base class for every error raised by latpoly."""


class DimensionError(LatpolyError, ValueError):
    pass


class DegenerateInputError(LatpolyError, ValueError):
    pass


class UnsupportedShapeError(LatpolyError, ValueError):
    """Operation only defined for a restricted class (e.g. simplicial) of polytopes."""


class InconsistentInputError(LatpolyError, ValueError):
    pass


class PreconditionError(LatpolyError, ValueError):
    pass


class DomainError(LatpolyError, ValueError):
    pass


class InternalInconsistencyError(LatpolyError, ArithmeticError):
    """Two exact computations that must agree did not; always a bug."""


class TheoremViolation(LatpolyError, AssertionError):
    """A proved statement failed on concrete data (implementation bug or bad input)."""


class ParseError(LatpolyError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)


class ValidationError(LatpolyError, ValueError):
    pass
