class SpecError(ValueError):
    """Invalid group spec or an element that does not conform to it."""


class KernelElementError(ValueError):
    """An element lies in ker mu where a non-kernel element was required."""


class NotHomogeneousError(ValueError):
    pass


class InvalidPairError(ValueError):
    """A classification pair violates the conditions on (V0, V)."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
