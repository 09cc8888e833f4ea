"""Exception hierarchy for the whole library.

``DomainError`` covers invalid mathematical input (the CLI maps it to exit
code 2).  ``SchemaError`` covers structurally broken input documents (exit
code 1).  ``InternalContradictionError`` is different in kind: it means a
proof-certified structural fact failed to hold at runtime, which is a bug
in this library and never a property of user input.
"""


class DomainError(Exception):
    """Mathematically invalid input data."""


class SchemaError(Exception):
    """An input document does not match the expected JSON shape."""


# lattice ------------------------------------------------------------------

class ParallelLinesError(DomainError):
    """Two lines with collinear normals have no unique intersection."""


# fan ----------------------------------------------------------------------

class NonPrimitiveRayError(DomainError):
    """A ray generator whose coordinates share a factor (or the zero vector)."""


class DuplicateRayError(DomainError):
    """The same primitive ray listed twice."""


class NotCompleteError(DomainError):
    """The rays do not positively span the plane."""


class TooFewRaysError(DomainError):
    """A complete fan in the plane needs at least three rays."""


class SingularConeError(DomainError):
    """A cone of index > 1 where a smooth (index 1) cone is required."""


class LengthMismatchError(DomainError):
    """An intersection vector whose length differs from the ray count."""


# newton -------------------------------------------------------------------

class TooFewTermsError(DomainError):
    """A curve needs at least two monomials to cut out a one dimensional set."""


class ZeroCoefficientError(DomainError):
    """Coefficients must be non-zero rationals."""


class DuplicateExponentError(DomainError):
    """The same exponent vector listed twice in a term list."""


class SingularFanError(DomainError):
    """An operation that needs integral corner data received a singular fan."""


class ZeroCoordinateError(DomainError):
    """Laurent terms cannot be evaluated where a coordinate vanishes."""


# classify -----------------------------------------------------------------

class InternalContradictionError(Exception):
    """A structure that is provably forced did not materialize.  Bug, not input."""
