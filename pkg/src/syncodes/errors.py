"""Exception types shared across the package.

Every error raised on a user-facing path is one of these four, so the CLI
can map exception class to exit code without inspecting messages.
"""


class ParseError(ValueError):
    """Malformed textual input: a polynomial, a code descriptor, a CLI spec."""


class PreconditionError(ValueError):
    """Inputs are well formed but violate a mathematical requirement.

    Examples: a generator that does not divide x^n - shift, a construction
    asked to combine codes over different fields, a theorem check whose
    hypotheses fail.
    """


class BudgetExceededError(RuntimeError):
    """An exact computation would exceed the configured enumeration budget."""


class InternalError(AssertionError):
    """A cross-check that should be unconditionally true failed.

    Raised when two independent computations of the same object disagree.
    Reaching this is a bug, not a user error.
    """
