"""Exception types shared across the package.

The hierarchy distinguishes three failure families that callers (and the
command line tool) treat differently:

* bad input -- malformed documents, out-of-domain evaluation points,
  incompatible operands (``FormatError``, ``DomainError`` and friends);
* numeric breakdown -- overflow of ``exp`` or a non-finite intermediate
  (``NumericRangeError``);
* representability -- the requested object exists but cannot be expressed
  in the target representation (``RepresentabilityError`` subclasses).
"""


class CurveSpaceError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CurveSpaceError, ValueError):
    """Evaluation point or interval outside a profile's domain."""


class DisjointDomainError(DomainError):
    """Two profiles were combined but their domains do not overlap."""


class NumericRangeError(CurveSpaceError, ArithmeticError):
    """A computation left the range of finite floating point numbers."""


class DegenerateCurveError(CurveSpaceError, ValueError):
    """A curve collapsed to a point, so a scale-relative quantity is undefined."""


class FormatError(CurveSpaceError, ValueError):
    """A document could not be parsed.

    Carries the 1-based line number at which parsing failed so messages
    can point at the offending line.
    """

    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class RepresentabilityError(CurveSpaceError, ValueError):
    """The object cannot be expressed in the requested representation."""


class AperiodicProfileError(RepresentabilityError):
    """The profile has no period, so a period-based construction fails."""


class NonClosingError(RepresentabilityError):
    """The profile's curve does not close, but a closed curve is required."""


class ConvexityError(RepresentabilityError):
    """An angle profile is not convex (its turning rate changes sign)."""
