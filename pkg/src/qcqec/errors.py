"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise the
most specific class that applies rather than bare ValueError/RuntimeError.
"""

from __future__ import annotations


class QcqecError(Exception):
    """Base class for everything raised deliberately by this package."""


class SpecError(QcqecError):
    """Bad user-supplied input: unsupported field size, malformed compact
    notation, out-of-range digits, broken spec files."""


class PreconditionError(QcqecError):
    """A mathematical precondition failed (e.g. g does not divide x^n - 1).

    ``code`` is a short machine-readable slug that ends up in CLI error
    reports; ``message`` is the human-readable half.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class BudgetExceeded(QcqecError):
    """An exhaustive enumeration would overrun the configured budget.

    ``required`` is the number of codewords (or scan steps) the full job
    would take, so callers can report how far over budget the request was.
    """

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        super().__init__(
            f"{what} needs {required} steps but the budget is {budget}"
        )
        self.required = required
        self.budget = budget


class SingularMatrixError(QcqecError):
    """Matrix inversion was asked of a singular matrix."""
