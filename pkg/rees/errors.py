"""Exception hierarchy shared by the computational modules and the commands.

Verdicts (an ideal that is not good, a cell labelled X) are data, never
exceptions. Only input outside an operation's hypothesis and broken internal
cross-checks raise.
"""

from __future__ import annotations


class ReesError(Exception):
    """Base class for every error raised by the ``rees`` package."""


class PreconditionError(ReesError, ValueError):
    """The arguments lie outside the hypothesis of the requested operation."""


class DimensionMismatch(PreconditionError):
    """Two monomials or ideals live in polynomial rings of different dimension."""


class NotPrimaryError(PreconditionError):
    """The ideal has finite colength only if every variable has a pure power in it."""

    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(
            f"Ideal is not primary to the maximal ideal: no pure power of variable {variable}."
        )


class IdealFileError(PreconditionError):
    """An ideal file could not be parsed."""

    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")


class InvariantBreach(ReesError):
    """An internal cross-check failed: two derivations of one quantity disagree."""
