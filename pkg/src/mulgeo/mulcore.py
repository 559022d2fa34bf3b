"""The multiplicative arithmetic field on the positive reals.

The positive reals form a field once the usual operations are transported
through the natural logarithm:

    a +* b = e^(log a + log b)        a -* b = e^(log a - log b)
    a .* b = e^(log a . log b)        a /* b = e^(log a / log b), b != 1

The additive identity 0* is the number 1 and the multiplicative identity
1* is the number e.  A ``MulScalar`` stores the positive real value
itself; the log/exp views (``log_view`` / ``from_log``) exist for
serialization and for the independent test oracles, not as the working
representation.

Closeness of two values always means closeness of their logs (a ratio
metric): see ``log_distance``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DivisionByMulZero,
    DomainError,
    NegativeMulSqrt,
    RangeOverflow,
)

#: Hard bound on |log value|; beyond it we refuse to represent the number
#: rather than silently saturate.
LOG_BOUND = 700.0


@dataclass(frozen=True)
class MulScalar:
    """An element of the multiplicative field: a positive real."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"MulScalar requires a positive finite real, got {self.value!r}")
        if abs(math.log(v)) > LOG_BOUND:
            raise RangeOverflow(f"|log {v!r}| exceeds {LOG_BOUND}")
        object.__setattr__(self, "value", v)

    @property
    def log(self) -> float:
        return math.log(self.value)

    def __repr__(self):
        return f"MulScalar({self.value!r})"


#: The additive identity 0* and the multiplicative identity 1*.
ZERO = MulScalar(1.0)
ONE = MulScalar(math.e)


def as_mul(x) -> MulScalar:
    """Coerce a positive number (or MulScalar) to a MulScalar."""
    if isinstance(x, MulScalar):
        return x
    return MulScalar(float(x))


def from_log(u: float) -> MulScalar:
    """Build the field element whose log is ``u``."""
    if not math.isfinite(u) or abs(u) > LOG_BOUND:
        raise RangeOverflow(f"log value {u!r} outside +/-{LOG_BOUND}")
    return MulScalar(math.exp(u))


def log_view(a) -> float:
    """The log of a field element (the conjugated classical number)."""
    return as_mul(a).log


def log_distance(a, b) -> float:
    """|log a - log b|: the ratio metric used for every tolerance test."""
    return abs(as_mul(a).log - as_mul(b).log)


# --------------------------------------------------------------------------
# field operations
# --------------------------------------------------------------------------

def add(a, b) -> MulScalar:
    """a +* b = e^(log a + log b)."""
    return from_log(as_mul(a).log + as_mul(b).log)


def sub(a, b) -> MulScalar:
    """a -* b = e^(log a - log b)."""
    return from_log(as_mul(a).log - as_mul(b).log)


def neg(a) -> MulScalar:
    """-* a = 0* -* a, i.e. the reciprocal value."""
    return from_log(-as_mul(a).log)


def mul(a, b) -> MulScalar:
    """a .* b = e^(log a * log b)."""
    return from_log(as_mul(a).log * as_mul(b).log)


def div(a, b) -> MulScalar:
    """a /* b = e^(log a / log b); b must not be the additive identity."""
    b = as_mul(b)
    if b.value == 1.0:
        raise DivisionByMulZero("division by 0* (the value 1)")
    return from_log(as_mul(a).log / b.log)


_FIELD_OPS = {"add": add, "sub": sub, "mul": mul, "div": div}


def field_op(a, b, op: str) -> MulScalar:
    """Dispatch one of the four field operations by name."""
    try:
        fn = _FIELD_OPS[op]
    except KeyError:
        raise DomainError(f"unknown field op {op!r}, expected one of {sorted(_FIELD_OPS)}")
    return fn(a, b)


# --------------------------------------------------------------------------
# powers and absolute value
# --------------------------------------------------------------------------

def square(a) -> MulScalar:
    """a^(2*) = e^((log a)^2)."""
    u = as_mul(a).log
    return from_log(u * u)


def sqrt(a) -> MulScalar:
    """a^(1/2 *) = e^(sqrt(log a)); defined for a >= 1."""
    u = as_mul(a).log
    if u < 0.0:
        raise NegativeMulSqrt(f"sqrt* of {as_mul(a).value!r} (log < 0)")
    return from_log(math.sqrt(u))


def absolute(a) -> MulScalar:
    """|a|* : a itself if a >= 1, else 1/a."""
    a = as_mul(a)
    return a if a.value >= 1.0 else MulScalar(1.0 / a.value)


_POWER_OPS = {"square": square, "sqrt": sqrt, "abs": absolute}


def power_op(a, op: str) -> MulScalar:
    try:
        fn = _POWER_OPS[op]
    except KeyError:
        raise DomainError(f"unknown power op {op!r}, expected one of {sorted(_POWER_OPS)}")
    return fn(a)


# --------------------------------------------------------------------------
# multiplicative trigonometry
# --------------------------------------------------------------------------

#: Slack allowed when clamping arccos* arguments onto [e^-1, e].
ARCCOS_CLAMP = 1e-12


def cos(x) -> MulScalar:
    """cos* x = e^(cos(log x))."""
    return from_log(math.cos(as_mul(x).log))


def sin(x) -> MulScalar:
    """sin* x = e^(sin(log x))."""
    return from_log(math.sin(as_mul(x).log))


def tan(x) -> MulScalar:
    """tan* x = e^(tan(log x)); log x must avoid pi/2 + k pi."""
    u = as_mul(x).log
    c = math.cos(u)
    if c == 0.0:
        raise DomainError(f"tan* undefined at log x = {u!r}")
    return from_log(math.tan(u))


def sec(x) -> MulScalar:
    """sec* x = e^(sec(log x)); log x must avoid pi/2 + k pi."""
    u = as_mul(x).log
    c = math.cos(u)
    if c == 0.0:
        raise DomainError(f"sec* undefined at log x = {u!r}")
    return from_log(1.0 / c)


def arccos(x) -> MulScalar:
    """arccos* x = e^(arccos(log x)) for x in [e^-1, e]."""
    u = as_mul(x).log
    if abs(u) > 1.0 + ARCCOS_CLAMP:
        raise DomainError(f"arccos* argument log {u!r} outside [-1, 1]")
    return from_log(math.acos(max(-1.0, min(1.0, u))))


def arctan(x) -> MulScalar:
    """arctan* x = e^(arctan(log x))."""
    return from_log(math.atan(as_mul(x).log))


_TRIG_OPS = {"cos": cos, "sin": sin, "tan": tan, "sec": sec,
             "arccos": arccos, "arctan": arctan}


def trig_op(x, op: str) -> MulScalar:
    try:
        fn = _TRIG_OPS[op]
    except KeyError:
        raise DomainError(f"unknown trig op {op!r}, expected one of {sorted(_TRIG_OPS)}")
    return fn(x)
