"""Exception hierarchy shared across the package."""


class OwpfError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(OwpfError):
    """A physical or numerical parameter is out of its admissible range."""


class SchemaError(OwpfError):
    """A document or state container is structurally malformed."""


class ValidationError(OwpfError):
    """A scenario is structurally valid but violates a consistency rule."""


class InfeasibleStateError(OwpfError):
    """A state that should satisfy a physical relation does not."""


class SolverError(OwpfError):
    """A solve failed in a way the caller cannot recover from."""
