"""Exception hierarchy shared by every module in the package."""


class MatroidError(Exception):
    """Base class for all errors raised by matpaint."""


class AxiomViolation(MatroidError):
    def __init__(self, kind, sets, message=""):
        self.kind = kind
        self.sets = [tuple(sorted(s)) for s in sets]
        super().__init__(message or f"{kind} violated by {self.sets}")


class InvalidSpec(MatroidError):
    pass


class NotABase(MatroidError):
    pass


class ElementInBase(MatroidError):
    pass


class ElementNotInBase(MatroidError):
    pass


class PreconditionViolated(MatroidError):
    pass


class TooLarge(MatroidError):
    pass


class BadParameters(MatroidError):
    pass


class NotAUnit(MatroidError, ZeroDivisionError):
    pass


class MixedFields(MatroidError, TypeError):
    pass


class NotACircuit(MatroidError):
    pass


class InvalidDependence(MatroidError):
    pass


class DomainMismatch(MatroidError):
    pass


class UnverifiedPainting(MatroidError):
    pass


class PartialFieldTag(MatroidError):
    pass


class NotConnected(MatroidError):
    pass


class TraceInvariantViolated(MatroidError):
    """A step guaranteed by the underlying theory failed; indicates a bug."""


class WitnessVerificationFailed(MatroidError):
    """A step guaranteed by the underlying theory failed; indicates a bug."""


class VerificationFailed(MatroidError):
    """A step guaranteed by the underlying theory failed; indicates a bug."""


class FormatError(MatroidError, ValueError):
    pass
