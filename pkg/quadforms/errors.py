"""
Exceptions raised by the quadratic form library.

Every error carries a machine-readable ``code`` that the CLI and the REST API
put in their error payloads.
"""


class QuadraticFormError(Exception):
    """Base class for all domain errors."""

    code = "domain_error"

    def to_payload(self):
        return {"error": self.code, "message": str(self)}


class ZeroFormError(QuadraticFormError):
    """The zero form (0, 0, 0) has no content."""

    code = "zero_form"


class SquareDiscriminantError(QuadraticFormError):
    """The discriminant is a perfect square (zero included)."""

    code = "square_discriminant"


class InvalidDiscriminantError(QuadraticFormError):
    """The discriminant has the wrong residue or the wrong sign for the operation."""

    code = "invalid_discriminant"


class BoundExceededError(QuadraticFormError):
    """A configured computation cap was exceeded."""

    code = "bound_exceeded"


class PeriodLimitError(QuadraticFormError):
    """The continued fraction did not close within the configured number of steps."""

    code = "period_limit"


class ImprimitiveFormError(QuadraticFormError):
    """The operation needs a primitive form; divide by the content first."""

    code = "imprimitive_form"


class PreconditionError(QuadraticFormError):
    """A mathematical precondition of the operation does not hold."""

    code = "precondition_failed"


class NotPrimeError(QuadraticFormError):
    code = "not_prime"


class FormatError(QuadraticFormError):
    """Malformed textual input, e.g. a form that is not ``a,b,c``."""

    code = "bad_format"


class MatrixError(QuadraticFormError):
    """A matrix that should be unimodular has determinant other than +1 or -1."""

    code = "not_unimodular"
