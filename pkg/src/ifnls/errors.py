"""Exception types shared across the package."""


class IFNLSError(Exception):
    """Base class for all library errors."""


class DomainError(IFNLSError):
    """An argument lies outside the mathematical domain of an operation."""


class WitnessNotFound(IFNLSError):
    """A grid search exhausted its budget without finding a witness."""


class BracketError(IFNLSError):
    """A monotone threshold could not be bracketed below the search cap."""


class DegenerateBasis(IFNLSError):
    """The supplied vectors are numerically linearly dependent."""


class TailNotSettled(IFNLSError):
    """A sequence tail oscillates too much for limit extraction."""


class PreconditionFailed(IFNLSError):
    """A documented precondition of a check does not hold for the input."""


class SchemaError(IFNLSError):
    """A JSON or CSV input does not match the expected schema."""
