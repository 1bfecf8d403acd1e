"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class IndMorseError(Exception):
    """Base class for all library errors."""


class InputError(IndMorseError, ValueError):
    """Malformed input: unknown vertex, bad file, bad family spec."""


class PreconditionError(InputError):
    """An operation was called outside its documented precondition."""


class StructuralError(IndMorseError):
    """A graph transformation produced an object the caller must handle
    (e.g. degree-two contraction collapsing a cycle into a loop)."""


class ResourceError(IndMorseError):
    """A configured enumeration cap was exceeded."""

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached


class CapabilityError(IndMorseError):
    """An operation needs data the certificate does not carry."""


class VerificationError(IndMorseError):
    """A claimed inequality was violated; indicates an implementation bug."""
