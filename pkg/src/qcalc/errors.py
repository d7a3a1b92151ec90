"""Exception types raised by qcalc.

Undefined sums are *not* errors: they are returned as
:class:`qcalc.quantity.Undefined` values.  The exceptions here cover the
operations the axioms leave undefined without an undefined element
(inverting a zero, taking a root that does not exist) and malformed input.
"""


class QcalcError(Exception):
    """Base class for all qcalc errors."""


class ZeroInverseError(QcalcError, ZeroDivisionError):
    """Multiplicative inverse of a zero quantity was requested."""


class NoRootError(QcalcError, ValueError):
    """A requested root does not exist in the scalar carrier."""


class FieldMismatchError(QcalcError, TypeError):
    """Quantities over different scalar fields were combined."""


class MissingUnitError(QcalcError, KeyError):
    """A unit system has no unit for the requested dimension."""

    def __str__(self):
        return Exception.__str__(self)


class NotDimensionlessError(QcalcError, ValueError):
    """A numerical value was expected to be dimensionless."""


class DimensionSyntaxError(QcalcError, ValueError):
    pass


class ModelError(QcalcError, ValueError):
    """Base class for finite-model errors."""


class MalformedModelError(ModelError):
    """Tables are ragged, out of range, or the file cannot be parsed."""


class ModelTooLargeError(ModelError):
    """Model exceeds the size cap for exhaustive checks."""


class NotAPafError(ModelError):
    """Operation requires a partially additive field."""


class NotAFieldoidError(ModelError):
    """Operation requires a fieldoid."""


class BadExtensionError(ModelError):
    """Group-extension data do not satisfy the construction's preconditions."""


class ParseError(QcalcError, ValueError):
    """Syntax error in an expression, with 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.line}:{self.column}: {self.message}"


class UnknownUnitError(QcalcError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown unit {self.name!r}"


class DefinitionError(QcalcError, ValueError):
    """Invalid line in a unit-definition file."""

    def __init__(self, message, line=None, path=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.path = path

    def __str__(self):
        where = ""
        if self.path is not None:
            where = f"{self.path}:"
        if self.line is not None:
            where += f"{self.line}: "
        elif where:
            where += " "
        return where + self.message
