"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class HomLieError(Exception):
    """Base class for all errors raised by homlie."""


class FieldMismatch(HomLieError, TypeError):
    pass


class DimensionMismatch(HomLieError, ValueError):
    pass


class ShapeError(HomLieError, ValueError):
    pass


class DegreeError(HomLieError, ValueError):
    pass


class UnsupportedField(HomLieError, ValueError):
    pass


class InternalInconsistency(HomLieError):
    """A certificate that should hold by construction failed (a bug)."""


class PreconditionViolated(HomLieError):
    """Input does not satisfy the hypotheses of the requested construction.

    ``witness`` carries whatever data pins down the failure (violations,
    an offending index pair, a vector...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnIdeal(PreconditionViolated):
    pass


class NotAlphaInvariant(PreconditionViolated):
    pass


class IncompatibleActions(PreconditionViolated):
    pass


class AxiomViolation(HomLieError):
    """Structure data fails one or more axioms; ``violations`` lists them."""

    def __init__(self, message, violations):
        super().__init__(message)
        self.violations = list(violations)


class ParseError(HomLieError, ValueError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message
