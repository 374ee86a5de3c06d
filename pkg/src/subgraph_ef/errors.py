"""Exception hierarchy. The CLI maps these onto exit codes."""


class EFError(Exception):
    """Base class for all library errors."""


class InputError(EFError, ValueError):
    """Malformed or inconsistent input (unknown node, bad file, ...)."""


class DimensionError(EFError, ValueError):
    pass


class ScaleError(EFError):
    """An enumeration or brute-force routine would exceed its size cap."""


class CompositionError(EFError):
    """Formulations cannot be combined (mismatched projection variables, ...)."""


class ConstructionError(EFError):
    """A construction received an input it cannot be built from,
    e.g. an empty polyhedron where a non-empty one is required."""


class SpecError(EFError, ValueError):
    """Invalid count-matroid parameters."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class PreconditionError(EFError):
    """A construction's precondition does not hold for the given input."""
