"""Exception hierarchy shared by the whole package."""


class HopfkitError(Exception):
    """Base class for expected failures raised by hopfkit."""


class UsageError(HopfkitError):
    """Malformed input: bad scalars, mixed fields, schema violations."""


class BuilderError(HopfkitError):
    """A catalog builder received incompatible parameters."""


class StructureError(HopfkitError):
    """Input data violates a structural hypothesis (e.g. a quotient by a
    subspace that is not a normal left coideal subalgebra)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(HopfkitError):
    """A documented precondition of a splitting operation does not hold."""


class InternalError(HopfkitError):
    """Unexpected failure inside a task; carries the operation name."""
