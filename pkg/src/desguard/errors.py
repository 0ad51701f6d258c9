"""Exception hierarchy shared across the package."""


class DesguardError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DesguardError):
    """Malformed or inconsistent input data (CLI exit code 2)."""


class PreconditionError(InputError):
    """An operation was invoked outside its supported precondition."""


class UnsupportedError(DesguardError):
    """A structurally valid request this implementation refuses (CLI exit code 3)."""


class NoWitnessError(DesguardError):
    """A requested witness string does not exist."""
