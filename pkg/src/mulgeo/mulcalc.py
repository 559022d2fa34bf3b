"""Multiplicative differentiation and integration.

The multiplicative derivative of a positive function f at x is
f*(x) = e^(x (log f(x))'), which is the ordinary derivative of
u -> log f(e^u) at u = log x; iterating gives the n-th order version.
The multiplicative integral over [a, b] is e^(integral of log f(e^u) du
from log a to log b).  Working in u = log x removes the 1/x weight and
behaves uniformly across decades of x.
"""

from __future__ import annotations

import math
from typing import Callable, Union

from . import expr as _expr
from .errors import DomainError, EvalDomainError, QuadratureNonconvergence
from .jets import LogJet
from .mulcore import MulScalar, as_mul, from_log

#: Default jet order: the Frenet apparatus needs third multiplicative
#: derivatives of curve components, plus one guard order.
DEFAULT_JET_ORDER = 4

#: Default log-domain step for multiplicative finite differences.
DEFAULT_FD_STEP = 1e-4

#: Adaptive quadrature defaults: log-domain tolerance and the subdivision
#: budget (2^20 subintervals, i.e. recursion depth 20).
QUADRATURE_TOL = 1e-10
QUADRATURE_MAX_DEPTH = 20

PositiveFn = Union[_expr.Constant, _expr.Var, _expr.Neg, _expr.Binary, _expr.Call,
                   Callable[[float], float]]


def _is_ast(f) -> bool:
    return isinstance(f, (_expr.Constant, _expr.Var, _expr.Neg, _expr.Binary, _expr.Call))


def _log_of(f: PositiveFn, t: float) -> float:
    value = _expr.evaluate(f, t) if _is_ast(f) else float(f(t))
    if not value > 0.0:
        raise EvalDomainError(f"function value {value!r} is not positive at t={t!r}")
    return math.log(value)


def mul_derivative(f: _expr.ExprAst, x, n: int = 1) -> MulScalar:
    """n-th multiplicative derivative of an expression at x, via jets.

    Returns e^(c_n * n!) where c_n is the n-th coefficient of the jet of
    log f(e^u) at u = log x; this agrees with iterating the first-order
    definition.
    """
    if n < 1:
        raise DomainError("derivative order must be >= 1")
    jet = jet_at(f, x, order=max(n, 1))
    return from_log(float(jet.derivative(n)))


def jet_at(f: _expr.ExprAst, x, order: int = DEFAULT_JET_ORDER) -> LogJet:
    """Jet of log f(e^u) at u = log x."""
    return _expr.evaluate_jet(f, as_mul(x).log, order)


def mul_derivative_fd(f: PositiveFn, x, log_step: float = DEFAULT_FD_STEP) -> MulScalar:
    """First multiplicative derivative by a central multiplicative difference.

    Computes e^((log f(x e^d) - log f(x e^-d)) / (2 d)); the log error
    against the exact derivative shrinks as O(d^2).  Accepts an expression
    or any positive-valued callable of t.
    """
    if not 0.0 < log_step <= 0.1:
        raise DomainError("log_step must lie in (0, 0.1]")
    u = as_mul(x).log
    up = _log_of(f, math.exp(u + log_step))
    dn = _log_of(f, math.exp(u - log_step))
    return from_log((up - dn) / (2.0 * log_step))


# --------------------------------------------------------------------------
# quadrature
# --------------------------------------------------------------------------

def _simpson(fa, fm, fb, width):
    return width / 6.0 * (fa + 4.0 * fm + fb)


def _adapt(fn, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = fn(lm)
    frm = fn(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureNonconvergence(
            f"interval [{a!r}, {b!r}] still above tolerance after the subdivision budget")
    half = 0.5 * tol
    return (_adapt(fn, a, m, fa, flm, fm, left, half, depth - 1)
            + _adapt(fn, m, b, fm, frm, fb, right, half, depth - 1))


def log_quadrature(fn: Callable[[float], float], ua: float, ub: float,
                   tol: float = QUADRATURE_TOL,
                   max_depth: int = QUADRATURE_MAX_DEPTH) -> float:
    """Adaptive Simpson integral of a log-domain integrand over [ua, ub]."""
    if ua == ub:
        return 0.0
    fa, fm, fb = fn(ua), fn(0.5 * (ua + ub)), fn(ub)
    whole = _simpson(fa, fm, fb, ub - ua)
    return _adapt(fn, ua, ub, fa, fm, fb, whole, tol, max_depth)


def mul_integral(f: PositiveFn, a, b, tol: float = QUADRATURE_TOL) -> MulScalar:
    """Multiplicative integral of f over [a, b] (0 < a <= b).

    Substitutes u = log x and evaluates e^(integral of log f(e^u) du)
    by adaptive Simpson quadrature to the given log-domain tolerance.
    """
    ua = as_mul(a).log
    ub = as_mul(b).log
    if ua > ub:
        raise DomainError("integration bounds must satisfy a <= b")
    value = log_quadrature(lambda u: _log_of(f, math.exp(u)), ua, ub, tol)
    return from_log(value)
