"""Multiplicative Euclidean vector algebra and the basic geometric loci.

Vectors live in E*^n: tuples of positive reals with componentwise
multiplicative addition, a scalar action a .* x = e^(log a log x_i), the
inner product <x, y>* = e^(sum log x_i log y_i) and the norm it induces.
``inner``/``norm``/``vec_add``/``scalar_mul`` accept vectors of any
dimension; the cross product, angles in the plane they span, and the
line/plane/sphere primitives are specific to dimension three.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import mulcore
from .errors import DomainError, ZeroVectorAngle
from .mulcore import MulScalar, as_mul, from_log

#: Two vectors count as multiplicative collinear when the log-norm of
#: their cross product is at or below this threshold.
COLLINEAR_TOL = 1e-10


@dataclass(frozen=True)
class MulVector3:
    """A point or vector of E*^3."""

    x1: MulScalar
    x2: MulScalar
    x3: MulScalar

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))

    def __len__(self):
        return 3

    def __getitem__(self, i):
        return (self.x1, self.x2, self.x3)[i]


def vec(a, b, c) -> MulVector3:
    """Build a vector from three positive numbers (or MulScalars)."""
    return MulVector3(as_mul(a), as_mul(b), as_mul(c))


def from_logs(logs: Sequence[float]) -> MulVector3:
    u1, u2, u3 = logs
    return MulVector3(from_log(u1), from_log(u2), from_log(u3))


def logs(v: Iterable[MulScalar]) -> tuple[float, ...]:
    return tuple(x.log for x in v)


ZERO_VEC = vec(1.0, 1.0, 1.0)
E1 = vec(math.e, 1.0, 1.0)
E2 = vec(1.0, math.e, 1.0)
E3 = vec(1.0, 1.0, math.e)


def _wrap(components, like_a, like_b=None):
    """Return a MulVector3 when the inputs were 3-vectors, else a tuple."""
    if isinstance(like_a, MulVector3) and (like_b is None or isinstance(like_b, MulVector3)):
        return MulVector3(*components)
    return tuple(components)


def vec_add(u, v):
    """Componentwise multiplicative sum (works in any dimension)."""
    us, vs = list(u), list(v)
    if len(us) != len(vs):
        raise DomainError("vector dimensions differ")
    return _wrap([mulcore.add(a, b) for a, b in zip(us, vs)], u, v)


def vec_sub(u, v):
    """Componentwise multiplicative difference."""
    us, vs = list(u), list(v)
    if len(us) != len(vs):
        raise DomainError("vector dimensions differ")
    return _wrap([mulcore.sub(a, b) for a, b in zip(us, vs)], u, v)


def scalar_mul(a, u):
    """a .* u : scale every component in the log domain."""
    la = as_mul(a).log
    return _wrap([from_log(la * x.log) for x in u], u)


def inner(u, v) -> MulScalar:
    """<u, v>* = e^(sum log u_i log v_i)."""
    us, vs = list(u), list(v)
    if len(us) != len(vs):
        raise DomainError("vector dimensions differ")
    return from_log(math.fsum(a.log * b.log for a, b in zip(us, vs)))


def norm(u) -> MulScalar:
    """||u||* = e^(sqrt(sum (log u_i)^2)); equals 1 only for the zero vector."""
    return from_log(math.sqrt(math.fsum(x.log * x.log for x in u)))


def cross(u: MulVector3, v: MulVector3) -> MulVector3:
    """Multiplicative cross product in E*^3."""
    a = logs(u)
    b = logs(v)
    return from_logs((
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ))


def collinear(u: MulVector3, v: MulVector3, tol: float = COLLINEAR_TOL) -> bool:
    """True when the cross product is multiplicatively negligible."""
    return norm(cross(u, v)).log <= tol


def angle(u, v) -> MulScalar:
    """Multiplicative radian measure between u and v, in [1, e^pi]."""
    nu = norm(u).log
    nv = norm(v).log
    if nu == 0.0 or nv == 0.0:
        raise ZeroVectorAngle("angle against a multiplicative zero vector")
    ratio = inner(u, v).log / (nu * nv)
    return mulcore.arccos(from_log(ratio))


# --------------------------------------------------------------------------
# lines, planes, spheres
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MulLine:
    point: MulVector3
    direction: MulVector3

    def __post_init__(self):
        if norm(self.direction).log == 0.0:
            raise DomainError("line direction is the multiplicative zero vector")


@dataclass(frozen=True)
class MulPlane:
    point: MulVector3
    normal: MulVector3

    def __post_init__(self):
        if norm(self.normal).log == 0.0:
            raise DomainError("plane normal is the multiplicative zero vector")


@dataclass(frozen=True)
class MulSphere:
    center: MulVector3
    radius: MulScalar

    def __post_init__(self):
        if as_mul(self.radius).log <= 0.0:
            raise DomainError("sphere radius must exceed 0* (value 1)")


def line_contains(line: MulLine, p: MulVector3, tol: float) -> bool:
    """Membership Q = P +* t .* v, tested as collinearity of Q -* P with v."""
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    delta = vec_sub(p, line.point)
    if norm(delta).log == 0.0:
        return True
    return norm(cross(delta, line.direction)).log <= tol


def plane_contains(plane: MulPlane, p: MulVector3, tol: float) -> bool:
    """Membership <Q -* P, normal>* = 0*, within tol in the log metric."""
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    return abs(inner(vec_sub(p, plane.point), plane.normal).log) <= tol


def sphere_contains(sphere: MulSphere, p: MulVector3, tol: float) -> bool:
    """Membership ||Q -* C||* = r, within tol in the log metric."""
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    return abs(norm(vec_sub(p, sphere.center)).log - as_mul(sphere.radius).log) <= tol
