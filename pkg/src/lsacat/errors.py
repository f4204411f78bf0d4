"""Exception hierarchy shared across the package."""


class LsaError(Exception):
    """Base class for all package errors."""


class DomainMismatch(LsaError):
    """Two scalars live in incompatible domains and cannot be promoted."""


class DivisionByZero(LsaError, ZeroDivisionError):
    pass


class UnboundVariable(LsaError):
    pass


class DenominatorVanishes(LsaError):
    """A substitution makes a rational-function denominator zero."""


class DegreeTooHigh(LsaError):
    pass


class DimensionMismatch(LsaError):
    pass


class NotDimension3(LsaError):
    pass


class EigenvalueOutsideDomain(LsaError):
    pass


class NotBijective(LsaError):
    pass


class NotCocycle(LsaError):
    pass


class NotLeftSymmetric(LsaError):
    pass


class SingularWitness(LsaError):
    pass


class NotAutomorphism(LsaError):
    pass


class ExtensionDegreeTooHigh(LsaError):
    pass


class ZeroAlgebra(LsaError):
    pass


class NotCommutativeAssociative(LsaError):
    pass


class NotDerivation(LsaError):
    pass


class CybeFails(LsaError):
    pass


class NotOOperator(LsaError):
    pass


class UnknownId(LsaError):
    pass


class ConstraintViolated(LsaError):
    pass


class DocSyntaxError(LsaError):
    """Malformed document text; carries line/column."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = "line %s, col %s: %s" % (line, col, message)
        super().__init__(message)
        self.line = line
        self.col = col


class DocSemanticError(LsaError):
    """Well-formed text that does not describe a valid object."""
