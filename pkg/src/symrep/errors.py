"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SymrepError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class DomainError(SymrepError, ValueError):
    """An argument lies outside the domain of the operation."""


class ShapeError(DomainError):
    """A skew shape was requested with an inner diagram not contained in the outer one."""


class PreconditionError(DomainError):
    """A documented precondition does not hold (e.g. a Fock cap too small for a check)."""


class TruncationError(SymrepError):
    """A Fock-space operation would produce a partition above the degree cap."""


class ResourceError(SymrepError):
    """A configured size cap was exceeded."""

    exit_code = 4


class VerificationError(SymrepError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 3
