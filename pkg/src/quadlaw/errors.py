"""Exception hierarchy shared by all quadlaw modules."""


class QuadlawError(Exception):
    """Base class for all library errors."""


class SpecMismatch(QuadlawError):
    """Arithmetic attempted between values from different fields/algebras."""


class BadCharacteristic(QuadlawError):
    """Ground field of characteristic 2 or 3 requested."""


class DegenerateInput(QuadlawError):
    """An input that the operation explicitly excludes (zero, etc.)."""


class Unsupported(QuadlawError):
    """Operation not available for this field kind."""


class ZeroDivisor(QuadlawError):
    """A zero divisor was passed where an invertible element is required."""


class NotHyperbolic(QuadlawError):
    """Split requested on an algebra without an isotropic vector."""


class SingularMap(QuadlawError):
    """A non-invertible matrix was used as a change of variables."""


class NotRegular(QuadlawError):
    """Invariants requested for a law whose traceless form is degenerate."""


class Degenerate(QuadlawError):
    """The attached quadratic form is degenerate."""


class TooLarge(QuadlawError):
    """Brute-force enumeration requested beyond the configured ceiling."""


class Indeterminate(QuadlawError):
    """A recovery formula has a vanishing denominator."""


class InternalError(QuadlawError):
    """A mathematically guaranteed condition failed; indicates a bug."""
