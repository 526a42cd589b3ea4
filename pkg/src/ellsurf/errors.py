"""Exception hierarchy.

Errors split into two families. InputError marks data the caller handed us
that cannot be processed (CLI exit code 1). InternalError marks a broken
internal invariant (CLI exit code 2); seeing one is a bug.
"""


class EllsurfError(Exception):
    """Base class for all package errors."""


class InputError(EllsurfError):
    """Invalid input data. Carries an optional field path for documents."""

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class MismatchedConfig(InputError):
    """Two divisors living on different curve configurations."""


class NotNegativeDefinite(InputError):
    """Gram submatrix on the candidate support fails negative definiteness."""


class NegativeCoefficient(InputError):
    """Solved negative part acquired a coefficient below zero."""


class UnknownFiberKind(InputError):
    """Fiber kind string outside the catalog."""


class InvalidMultiplicity(InputError):
    """Fiber multiplicity that the model does not support."""


class NonIntegralEuler(InputError):
    """Total Euler number not divisible by 12."""


class InvalidGenus(InputError):
    """Genus outside the range an operation supports."""


class HurwitzInconsistent(InputError):
    """Branch data admits no nonnegative integral curve genus."""


class InconsistentMinimalModel(InputError):
    """Named minimal-model class contradicts the computed invariants."""


class NotInvariant(InputError):
    """Local differential with a term of the wrong involution parity."""


class PreconditionFailed(InputError):
    """Operation called outside its stated precondition."""


class DeskScaleExceeded(InputError):
    """Requested symmetric degree above the configured desk-scale cap."""


class InternalError(EllsurfError):
    """An internal invariant failed; indicates a bug, not bad input."""
