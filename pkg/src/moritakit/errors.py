"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map it
without a lookup table: 2 for bad input, 3 for unsupported fields, 4 for
internal invariant violations.
"""

from __future__ import annotations


class MoritakitError(Exception):
    exit_code = 2


class InputError(MoritakitError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column


class SchemaError(InputError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message if key is None else f"{key}: {message}")
        self.key = key


class CapNotNilpotent(InputError):
    pass


class NonAdmissible(InputError):
    pass


class NotIdempotentSubset(InputError):
    pass


class NotProjective(InputError):
    pass


class NotCommutative(InputError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class UnsupportedError(MoritakitError):
    exit_code = 3


class NotSplit(UnsupportedError):
    pass


class UnsupportedCharacteristic(UnsupportedError):
    pass


class InternalError(MoritakitError):
    exit_code = 4


class LemmaViolation(InternalError):
    pass


class TheoremViolation(InternalError):
    pass


class ExtensionFailed(InternalError):
    pass


class NoIdempotentMatch(InternalError):
    pass
