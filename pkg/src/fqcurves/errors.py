"""Exception hierarchy shared by all modules."""


class PreconditionError(ValueError):
    """An input violates a documented precondition (CLI exit code 2)."""


class UnsupportedError(PreconditionError):
    """The request is well formed but lies outside what is implemented."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed the configured work budget (exit code 3)."""


class PrecisionExhausted(ArithmeticError):
    """A truncated power series vanished to its full tracked precision."""


class PolySyntaxError(PreconditionError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
