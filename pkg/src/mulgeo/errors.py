"""Exception hierarchy shared by every module in the package."""


class MulGeoError(Exception):
    """Base class for all library errors."""


# ---- scalar arithmetic ----

class RangeOverflow(MulGeoError):
    """A result left the representable band |log value| <= 700."""


class DivisionByMulZero(MulGeoError):
    """Multiplicative division by the additive identity (the value 1)."""


class NegativeMulSqrt(MulGeoError):
    """Multiplicative square root of a value below 1 (negative log)."""


class DomainError(MulGeoError):
    """Argument outside the mathematical domain of an operation."""


class ZeroVectorAngle(MulGeoError):
    """Angle requested against a multiplicative zero vector."""


# ---- expression DSL ----

class LexError(MulGeoError):
    """Illegal character in an expression source string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class ParseError(MulGeoError):
    """Token stream does not match the grammar."""

    def __init__(self, message: str, position: int, expected: str = ""):
        detail = f"{message} (offset {position})"
        if expected:
            detail += f", expected {expected}"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class UnknownFunction(ParseError):
    pass


class UnknownIdentifier(ParseError):
    pass


class EvalDomainError(MulGeoError):
    """Evaluation hit log/sqrt/division outside its classical domain."""


class EvalOverflow(MulGeoError):
    """Evaluation produced a non-finite intermediate value."""


class JetSingularity(MulGeoError):
    """Division by a series with zero constant term during jet arithmetic."""


# ---- calculus / quadrature ----

class QuadratureNonconvergence(MulGeoError):
    """Adaptive quadrature exhausted its subdivision budget."""


# ---- curve analysis ----

class NotRegular(MulGeoError):
    """Curve speed vanished (multiplicatively) at a sample point."""


class NotBiregular(MulGeoError):
    """Multiplicative curvature too close to 0*; the frame is undefined."""


class NotUnitSpeed(MulGeoError):
    """Curve is not parameterized by multiplicative arc length."""


class NotSpherical(MulGeoError):
    """Input curve does not lie on the required multiplicative sphere."""


class DegenerateFit(MulGeoError):
    """Least-squares design matrix is rank deficient."""


class UnknownCurve(MulGeoError):
    """Catalog lookup for a name that does not exist."""


class StepDomainError(MulGeoError):
    """Prescribed curvature/torsion not evaluable (or kappa <= 0*) on the grid."""


class FrameDrift(MulGeoError):
    """Frame re-orthonormalization correction exceeded its per-step budget."""
