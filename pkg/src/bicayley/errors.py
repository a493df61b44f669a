"""Exception types raised across the package."""


class BiCayleyError(Exception):
    pass


class InvalidParameter(BiCayleyError, ValueError):
    pass


class InvalidConnectionSet(BiCayleyError, ValueError):
    pass


class BudgetExceeded(BiCayleyError):
    pass


class ParseError(BiCayleyError, ValueError):
    """Malformed input text; carries a 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
