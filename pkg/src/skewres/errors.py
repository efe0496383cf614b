"""Exception types shared across the package.

Everything raised on purpose derives from SkewresError so callers (and the CLI)
can tell validation failures apart from genuine bugs.
"""


class SkewresError(Exception):
    """Base class for all deliberate failures."""


class DivisionByZero(SkewresError):
    """Multiplicative inverse of zero requested."""


class NotRationallyNormalizable(SkewresError):
    """Imaginary part has no rational norm, so no rational unit exists."""


class RealArgument(SkewresError):
    """A real quaternion has no associated imaginary unit or sphere axis."""


class ZeroPolynomial(SkewresError):
    """Operation requires a nonzero polynomial."""


class InternalRealityViolation(SkewresError):
    """A value that must be real by construction came out non-real."""


class DegreeTooLow(SkewresError):
    """Polynomial degree too small for the requested operation."""


class NonSquare(SkewresError):
    """Determinant of a non-square matrix requested."""


class DimensionMismatch(SkewresError):
    """Matrix/vector shapes are incompatible."""


class IndexOutOfRange(SkewresError):
    """Row or column index outside the matrix."""


class SingularSystem(SkewresError):
    """Linear system has no unique solution."""


class NonCommutingPoint(SkewresError):
    """Two-variable evaluation point (a, b) with ab != ba."""


class MixedVariableError(SkewresError):
    """Expression mixes the one-variable and two-variable indeterminates."""


class ExprSyntaxError(SkewresError):
    """Parse failure, carrying the byte offset and the expected token set."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.offset = offset
        self.expected = expected

    def __str__(self) -> str:
        base = super().__str__()
        if self.expected:
            return f"{base} at offset {self.offset} (expected {', '.join(self.expected)})"
        return f"{base} at offset {self.offset}"


class SchemaError(SkewresError):
    """JSON document does not match the published schema."""
