"""Exception hierarchy.

Two families: ``ValidationError`` for bad inputs/preconditions (CLI exit
code 1) and ``RuntimeFailure`` for failures of well-posed computations
(CLI exit code 2).
"""


class QexpError(Exception):
    """Base class for all package errors."""


class ValidationError(QexpError):
    """Invalid input, configuration, or precondition violation."""


class ParseError(ValidationError):
    """Malformed profile or ensemble file."""


class NegativeEntry(ValidationError):
    """A variance profile entry is negative."""


class NotRegular(ValidationError):
    """Adjacency matrix is not r-regular."""


class DimensionMismatch(ValidationError):
    """Operand dimensions do not match the operator."""


class TooLarge(ValidationError):
    """Dense materialization requested above the size guard."""


class WrongNormalization(ValidationError):
    """Operation requires the other ensemble normalization."""


class UnknownFourthMoment(ValidationError):
    """Distribution lacks a closed-form fourth moment."""


class InsufficientData(ValidationError):
    """Not enough records for the requested fit."""


class InvalidConfig(ValidationError):
    """Experiment configuration failed validation."""


class RuntimeFailure(QexpError):
    """A well-posed computation failed at run time."""


class ConvergenceFailure(RuntimeFailure):
    """Iteration budget exhausted before reaching tolerance."""


class SingularSigma(RuntimeFailure):
    """Normalization matrix is numerically singular (degenerate sample)."""


class IoError(RuntimeFailure):
    """Could not read or write an output artifact."""
