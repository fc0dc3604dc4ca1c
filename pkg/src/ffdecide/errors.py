"""Exception hierarchy.

Two branches matter operationally: ``ValidationFailure`` (bad input; CLI exit
code 2, HTTP 400) and ``DegenerateComputationError`` (input was well-formed but
the computation has no defined result; CLI exit code 3, HTTP 422).
"""


class FFDecideError(Exception):
    """Base class for all errors raised by this package."""


class ValidationFailure(FFDecideError):
    """Input rejected before any computation ran."""


class DomainError(ValidationFailure):
    """A numeric argument is outside its admissible range."""


class CubeSumError(DomainError):
    """Membership/non-membership cubes sum above the Fermatean bound."""


class UnknownTermError(ValidationFailure):
    """A linguistic label is not present in the active scale."""

    def __init__(self, term, known=()):
        self.term = term
        self.known = tuple(known)
        msg = f"unknown linguistic term {term!r}"
        if self.known:
            msg += f" (known: {', '.join(self.known)})"
        super().__init__(msg)


class LengthMismatchError(ValidationFailure):
    """Two parallel sequences have different lengths."""


class EmptyInputError(ValidationFailure):
    """An operation that needs at least one element received none."""


class ShapeError(ValidationFailure):
    """A matrix or vector has an unusable shape."""


class ItemMismatchError(ValidationFailure):
    """Two rankings do not cover the same item set."""


class UnknownCaseError(ValidationFailure):
    """No built-in case is registered under the requested name."""


class ParseError(ValidationFailure):
    """A problem document is not syntactically valid."""


class SchemaError(ValidationFailure):
    """A problem document parses but violates the document schema."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ValidationError(ValidationFailure):
    """A problem document is schema-valid but semantically inconsistent."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class DegenerateComputationError(FFDecideError):
    """The computation is undefined for this (valid) input."""


class DegenerateWeightsError(DegenerateComputationError):
    """A weight vector could not be derived (zero or sign-mixed mass)."""


class DegenerateReferenceError(DegenerateComputationError):
    """An ideal/anti-ideal reference sum vanished."""
