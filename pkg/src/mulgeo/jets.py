"""Truncated Taylor-series ("jet") arithmetic in the log parameter.

Everything downstream differentiates a positive-valued function f of a
positive variable through the substitution t = e^u: the object of study
is the expansion of u -> log f(e^u) around a basepoint u0.  ``LogJet``
stores those coefficients; ``Series`` does the underlying truncated
polynomial arithmetic.

Coefficients may be plain floats or numpy arrays of a common shape (one
expansion per grid point) -- that is how the curve analysis vectorizes
over sample grids without changing any formula here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EvalDomainError, EvalOverflow, JetSingularity


def _any_nonpos(x) -> bool:
    return bool(np.any(np.asarray(x) <= 0.0))


def _any_neg(x) -> bool:
    return bool(np.any(np.asarray(x) < 0.0))


def _any_zero(x) -> bool:
    return bool(np.any(np.asarray(x) == 0.0))


def _any_nonfinite(x) -> bool:
    return not bool(np.all(np.isfinite(x)))


class Series:
    """A power series sum c[k] h^k truncated after len(c) coefficients.

    Arithmetic truncates to the shorter operand, which keeps the "known
    through order n" bookkeeping honest.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = list(coeffs)
        if not self.c:
            raise ValueError("series needs at least one coefficient")

    def __len__(self):
        return len(self.c)

    def __repr__(self):
        return f"Series({self.c!r})"

    @classmethod
    def constant(cls, value, length: int) -> "Series":
        zero = value * 0.0
        return cls([value] + [zero] * (length - 1))

    @classmethod
    def variable(cls, value, length: int) -> "Series":
        """The expansion of the running variable itself: value + h."""
        zero = value * 0.0
        coeffs = [value] + [zero] * (length - 1)
        if length >= 2:
            coeffs[1] = zero + 1.0
        return cls(coeffs)

    # ---------- ring operations ----------

    def __neg__(self):
        return Series([-a for a in self.c])

    def __add__(self, other):
        n = min(len(self.c), len(other.c))
        return Series([self.c[k] + other.c[k] for k in range(n)])

    def __sub__(self, other):
        n = min(len(self.c), len(other.c))
        return Series([self.c[k] - other.c[k] for k in range(n)])

    def __mul__(self, other):
        n = min(len(self.c), len(other.c))
        a, b = self.c, other.c
        out = []
        for k in range(n):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out)

    def __truediv__(self, other):
        n = min(len(self.c), len(other.c))
        a, b = self.c, other.c
        if _any_zero(b[0]):
            raise JetSingularity("series division by zero constant term")
        out = []
        for k in range(n):
            acc = a[k]
            for j in range(1, k + 1):
                acc = acc - b[j] * out[k - j]
            out.append(acc / b[0])
        return Series(out)


def reciprocal(a: Series) -> Series:
    return Series.constant(a.c[0] * 0.0 + 1.0, len(a)) / a


def differentiate(a: Series) -> Series:
    """Coefficientwise derivative; drops one order."""
    if len(a) < 2:
        raise ValueError("cannot differentiate an order-0 series")
    return Series([k * a.c[k] for k in range(1, len(a))])


def integrate(a: Series) -> Series:
    """Antiderivative with zero constant term; gains one order."""
    return Series([a.c[0] * 0.0] + [a.c[k] / (k + 1) for k in range(len(a))])


def compose(outer: Series, inner: Series) -> Series:
    """outer(inner(h)) for an inner series with zero constant term."""
    if bool(np.any(np.asarray(inner.c[0]) != 0.0)):
        raise ValueError("composition requires inner constant term 0")
    n = min(len(outer), len(inner))
    inner_t = Series(inner.c[:n])
    result = Series.constant(outer.c[n - 1], n)
    for k in range(n - 2, -1, -1):
        result = result * inner_t
        result.c[0] = result.c[0] + outer.c[k]
    return result


# ---------- transcendental functions ----------

def s_exp(a: Series) -> Series:
    e0 = np.exp(a.c[0])
    if _any_nonfinite(e0):
        raise EvalOverflow("exp overflow in series arithmetic")
    out = [e0]
    for k in range(1, len(a)):
        acc = a.c[1] * out[k - 1]
        for j in range(2, k + 1):
            acc = acc + j * a.c[j] * out[k - j]
        out.append(acc / k)
    return Series(out)


def s_log(a: Series) -> Series:
    if _any_nonpos(a.c[0]):
        raise EvalDomainError("log of a nonpositive series constant term")
    out = [np.log(a.c[0])]
    for k in range(1, len(a)):
        acc = k * a.c[k]
        for j in range(1, k):
            acc = acc - j * out[j] * a.c[k - j]
        out.append(acc / (k * a.c[0]))
    return Series(out)


def s_sqrt(a: Series) -> Series:
    if _any_neg(a.c[0]):
        raise EvalDomainError("sqrt of a negative series constant term")
    if _any_zero(a.c[0]):
        raise JetSingularity("sqrt series at zero constant term")
    r0 = np.sqrt(a.c[0])
    out = [r0]
    for k in range(1, len(a)):
        acc = a.c[k]
        for j in range(1, k):
            acc = acc - out[j] * out[k - j]
        out.append(acc / (2.0 * r0))
    return Series(out)


def s_sin_cos(a: Series) -> tuple[Series, Series]:
    s0, c0 = np.sin(a.c[0]), np.cos(a.c[0])
    s, c = [s0], [c0]
    for k in range(1, len(a)):
        sa = a.c[1] * c[k - 1]
        ca = a.c[1] * s[k - 1]
        for j in range(2, k + 1):
            sa = sa + j * a.c[j] * c[k - j]
            ca = ca + j * a.c[j] * s[k - j]
        s.append(sa / k)
        c.append(-(ca / k))
    return Series(s), Series(c)


def s_sin(a: Series) -> Series:
    return s_sin_cos(a)[0]


def s_cos(a: Series) -> Series:
    return s_sin_cos(a)[1]


def s_tan(a: Series) -> Series:
    s, c = s_sin_cos(a)
    if _any_zero(c.c[0]):
        raise JetSingularity("tan series at a cosine zero")
    return s / c


def s_sec(a: Series) -> Series:
    c = s_cos(a)
    if _any_zero(c.c[0]):
        raise JetSingularity("sec series at a cosine zero")
    return reciprocal(c)


def _is_constant(a: Series) -> bool:
    return all(bool(np.all(np.asarray(x) == 0.0)) for x in a.c[1:])


def s_pow(a: Series, b: Series) -> Series:
    """a ** b with classical power semantics on the constant terms."""
    if _is_constant(b):
        p = b.c[0]
        p_arr = np.asarray(p)
        if p_arr.ndim == 0 and float(p_arr) == int(float(p_arr)):
            n = int(float(p_arr))
            length = min(len(a), len(b))
            base = Series(a.c[:length])
            if n == 0:
                return Series.constant(a.c[0] * 0.0 + 1.0, length)
            if n < 0:
                base = reciprocal(base)
                n = -n
            out = base
            for _ in range(n - 1):
                out = out * base
            return out
    if _any_nonpos(a.c[0]):
        raise EvalDomainError("series power with nonpositive base constant term")
    return s_exp(b * s_log(a))


# --------------------------------------------------------------------------
# LogJet: the public carrier of derivative data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LogJet:
    """Taylor coefficients of u -> log f(e^u) at a basepoint.

    coeffs[k] is the k-th Taylor coefficient, so the k-th derivative of
    log f(e^u) at the basepoint is coeffs[k] * k!.
    """

    basepoint: object
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self, k: int):
        if not 0 <= k <= self.order:
            raise ValueError(f"jet holds orders 0..{self.order}, asked for {k}")
        return self.coeffs[k] * math.factorial(k)

    def series(self) -> Series:
        return Series(list(self.coeffs))


# --------------------------------------------------------------------------
# finite-difference pseudo-jets (the "fd" backend)
# --------------------------------------------------------------------------

# Step sizes per derivative order, chosen to balance truncation against
# round-off for O(h^4) stencils in double precision.
_FD_STEPS = (1e-4, 3e-3, 1e-2, 3e-2)


def fd_log_jet(fn, u0, order: int) -> LogJet:
    """Jet of a log-domain function by central finite differences.

    ``fn`` maps u (scalar or array) to log f(e^u) and must be vectorized.
    Supports orders 1..4; each derivative uses its own O(h^4) stencil.
    """
    if not 1 <= order <= 4:
        raise ValueError("fd jets support orders 1..4")
    u0 = np.asarray(u0, dtype=float)
    coeffs = [fn(u0)]
    h1 = _FD_STEPS[0]
    d1 = (fn(u0 - 2 * h1) - 8 * fn(u0 - h1) + 8 * fn(u0 + h1) - fn(u0 + 2 * h1)) / (12 * h1)
    coeffs.append(d1)
    if order >= 2:
        h = _FD_STEPS[1]
        d2 = (-fn(u0 + 2 * h) + 16 * fn(u0 + h) - 30 * fn(u0)
              + 16 * fn(u0 - h) - fn(u0 - 2 * h)) / (12 * h * h)
        coeffs.append(d2 / 2.0)
    if order >= 3:
        h = _FD_STEPS[2]
        d3 = (fn(u0 - 3 * h) - 8 * fn(u0 - 2 * h) + 13 * fn(u0 - h)
              - 13 * fn(u0 + h) + 8 * fn(u0 + 2 * h) - fn(u0 + 3 * h)) / (8 * h ** 3)
        coeffs.append(d3 / 6.0)
    if order >= 4:
        h = _FD_STEPS[3]
        d4 = (-fn(u0 - 3 * h) + 12 * fn(u0 - 2 * h) - 39 * fn(u0 - h) + 56 * fn(u0)
              - 39 * fn(u0 + h) + 12 * fn(u0 + 2 * h) - fn(u0 + 3 * h)) / (6 * h ** 4)
        coeffs.append(d4 / 24.0)
    return LogJet(basepoint=u0 if u0.ndim else float(u0), coeffs=tuple(coeffs))
