"""Exception types raised by tclose.

Everything derives from :class:`TCloseError` so callers (the CLI in
particular) can separate bad input from programming errors.
"""


class TCloseError(Exception):
    """Base class for all tclose errors."""


class InputError(TCloseError, ValueError):
    """Malformed table, schema or argument supplied by the caller."""


class SchemaError(InputError):
    pass


class MissingColumn(InputError):
    def __init__(self, name):
        super().__init__(f"column {name!r} named in schema is missing from CSV header")
        self.name = name


class RaggedRow(InputError):
    def __init__(self, line, expected, got):
        super().__init__(f"line {line}: expected {expected} cells, got {got}")
        self.line = line


class EmptyTable(InputError):
    def __init__(self, msg="table has no data rows"):
        super().__init__(msg)


class MissingValue(InputError):
    def __init__(self, line, column):
        super().__init__(f"line {line}: empty value in required column {column!r}")
        self.line = line
        self.column = column


class NonNumericValue(InputError):
    def __init__(self, value):
        super().__init__(f"value {value!r} is not a finite number")
        self.value = value


class ValueOutsideDomain(InputError):
    def __init__(self, value):
        super().__init__(f"value {value!r} does not belong to the domain")
        self.value = value


class LengthMismatch(InputError):
    def __init__(self, left, right):
        super().__init__(f"distributions are not aligned (m={left} vs m={right})")


class IndexOutOfRange(InputError):
    pass


class NoClasses(InputError):
    def __init__(self):
        super().__init__("no equivalence classes")


class UnknownAttribute(InputError):
    def __init__(self, name):
        super().__init__(f"unknown or non-sensitive attribute {name!r}")
        self.name = name


class MethodRoleMismatch(InputError):
    def __init__(self, method, role):
        super().__init__(f"method {method!r} cannot be used for a {role} attribute")


class InstanceTooLarge(InputError):
    pass
