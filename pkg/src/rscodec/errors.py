"""Exception types raised across the codec."""


class RSError(Exception):
    """Base class for codec errors."""


class FieldError(RSError):
    pass


class NotPrime(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class BadPolyDegree(FieldError):
    pass


class DivideByZero(RSError, ZeroDivisionError):
    pass


class BadLength(RSError):
    pass


class DuplicateNode(RSError):
    pass


class CodeError(RSError):
    pass


class MethodMismatch(CodeError):
    pass


class BadLocator(RSError):
    pass


class RepeatedRoot(RSError):
    pass


class InternalError(RSError):
    pass


class BudgetExceeded(RSError):
    pass


class KeyEquationError(RSError):
    """The key equation has no solution within the degree bounds."""
