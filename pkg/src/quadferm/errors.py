"""Exception hierarchy shared by all quadferm modules."""


class QuadfermError(Exception):
    """Base class for all quadferm-specific errors."""


class ValidationError(QuadfermError, ValueError):
    """Malformed input: wrong shapes, non-finite entries, broken invariants."""


class PhysicsError(QuadfermError, RuntimeError):
    """Mathematically valid input outside the regime an operation supports.

    Raised for dissipativity violations, near-resonant Lyapunov spectra,
    correlation spectra escaping [0, 1], or generators without a unique
    steady state.
    """
