"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all library errors."""


class DomainError(AlgebraError, ValueError):
    """Operands live in different rings, or a value is outside an operation's domain."""


class UnsupportedFamilyError(DomainError):
    """The operation is not defined for this ring family."""


class UnsupportedEnumerationError(DomainError):
    """Enumeration was requested over an infinite ring."""


class FormatError(AlgebraError, ValueError):
    """A table or serialized payload is malformed."""


class CompositionError(AlgebraError):
    """Morphisms are not composable."""


class IllDefinedMorphismError(AlgebraError):
    """A generator image does not define a function on the domain ideal.

    ``witness`` is an annihilator element ``r`` of the domain generator with
    ``r * image != 0``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
