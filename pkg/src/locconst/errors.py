"""Exception hierarchy.

Every validation failure carries the witness that exposed it, so callers
(and the CLI) can report exactly which element, tuple or triple broke an
axiom.
"""


class LocConstError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LocConstError):
    """Input data violates a structural law. ``witness`` names the culprit."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(LocConstError):
    """An enumeration would exceed its configured bound."""

    def __init__(self, what, needed, cap):
        super().__init__(f"{what}: {needed} exceeds cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class NotAssociative(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class NoInverse(ValidationError):
    pass


class VertexOutOfRange(ValidationError):
    pass


class ActionNotHomomorphic(ValidationError):
    pass


class NotACocycle(ValidationError):
    pass


class AxiomIViolated(ValidationError):
    pass


class AxiomIIViolated(ValidationError):
    pass


class ActionInvalid(ValidationError):
    pass


class NotEquivariant(ValidationError):
    pass


class NonAbelianTarget(ValidationError):
    pass


class KNotTrivial(ValidationError):
    pass


class PresentationNotRealizable(ValidationError):
    pass
