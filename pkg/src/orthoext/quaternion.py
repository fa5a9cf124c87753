"""Lipschitz integral quaternions and the constructions built on them.

The coefficient order is ``(a0, a1, a2, a3)`` for ``a0 + a1 i + a2 j + a3 k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

from .errors import (
    DimensionMismatch,
    InternalFailure,
    InvalidInput,
    NotPerfectSquareNorm,
    NotPrimitive,
    checked,
)
from .gaussian import GaussianInt, gauss_ext_gcd, gauss_mul
from .intvec import IntVector, OrthoSet, verify_ortho_set


@dataclass(frozen=True)
class Quaternion:
    a0: int = 0
    a1: int = 0
    a2: int = 0
    a3: int = 0

    def __post_init__(self):
        for c in self.coeffs:
            checked(c)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(checked(x + y) for x, y in zip(self, other)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(checked(x - y) for x, y in zip(self, other)))

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __mul__(self, other):
        if isinstance(other, int):
            return Quaternion(*(checked(other * x) for x in self))
        return quat_mul(self, other)

    __rmul__ = __mul__

    def conj(self) -> Quaternion:
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    @property
    def norm2(self) -> int:
        acc = 0
        for c in self:
            acc = checked(acc + checked(c * c))
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_pure(self) -> bool:
        return self.a0 == 0

    def vector_part(self) -> IntVector:
        return IntVector((self.a1, self.a2, self.a3))

    def to_vector(self) -> IntVector:
        return IntVector(self.coeffs)

    def content(self) -> int:
        return gcd(*self.coeffs)

    def __str__(self) -> str:
        return f"{self.a0}{self.a1:+d}i{self.a2:+d}j{self.a3:+d}k"


ONE = Quaternion(1, 0, 0, 0)
QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


class PureUnit(enum.Enum):
    I = "i"
    J = "j"
    K = "k"

    @property
    def quaternion(self) -> Quaternion:
        return {PureUnit.I: QI, PureUnit.J: QJ, PureUnit.K: QK}[self]

    @property
    def index(self) -> int:
        return {PureUnit.I: 0, PureUnit.J: 1, PureUnit.K: 2}[self]


UNITS = (PureUnit.I, PureUnit.J, PureUnit.K)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = p
    b0, b1, b2, b3 = q

    def s(*terms):
        acc = 0
        for t in terms:
            acc = checked(acc + checked(t))
        return acc

    return Quaternion(
        s(a0 * b0, -a1 * b1, -a2 * b2, -a3 * b3),
        s(a0 * b1, a1 * b0, a2 * b3, -a3 * b2),
        s(a0 * b2, -a1 * b3, a2 * b0, a3 * b1),
        s(a0 * b3, a1 * b2, -a2 * b1, a3 * b0),
    )


def from_vector4(v: IntVector) -> Quaternion:
    """``(v1, v2, v3, v4) -> v1 + v2 i + v3 j + v4 k``."""
    if v.dim != 4:
        raise DimensionMismatch(f"expected a 4-vector, got dimension {v.dim}")
    return Quaternion(*v.coords)


def embed_vec3(a: IntVector) -> Quaternion:
    if a.dim != 3:
        raise DimensionMismatch(f"expected a 3-vector, got dimension {a.dim}")
    return Quaternion(0, *a.coords)


def dot_cross(a: IntVector, b: IntVector) -> tuple[int, IntVector]:
    """Dot and cross product read off from ``q_a * q_b = -(a.b) + q_(a x b)``."""
    p = quat_mul(embed_vec3(a), embed_vec3(b))
    return -p.a0, p.vector_part()


def sandwich(q: Quaternion, x: Quaternion) -> Quaternion:
    return quat_mul(quat_mul(q, x), q.conj())


def rotate_vec(q: Quaternion, a: IntVector) -> IntVector:
    """Vector ``b`` with ``q q_a conj(q) = q_b``; ``|b|^2 = |q|^4 |a|^2``."""
    p = sandwich(q, embed_vec3(a))
    if p.a0 != 0:
        raise InternalFailure("q q_a conj(q) has a nonzero real part")
    return p.vector_part()


def unit_frame(q: Quaternion) -> OrthoSet:
    if q.is_zero():
        raise InvalidInput("unit_frame of the zero quaternion")
    return verify_ortho_set([sandwich(q, u.quaternion).vector_part() for u in UNITS])


def _two_squares(m: int) -> list[tuple[int, int]]:
    """All signed (x, y) with x^2 + y^2 = m."""
    if m < 0:
        return []
    out = []
    r = isqrt(m)
    for x in range(-r, r + 1):
        y2 = m - x * x
        y = isqrt(y2)
        if y * y == y2:
            out.append((x, -y))
            if y:
                out.append((x, y))
    return out


# For q = a0 + a1 i + a2 j + a3 k, the u-component of q u conj(q) is
# (sum of squares of the first pair) - (sum of squares of the second pair).
_PAIRS = {
    PureUnit.I: ((0, 1), (2, 3)),
    PureUnit.J: ((0, 2), (1, 3)),
    PureUnit.K: ((0, 3), (1, 2)),
}


def _order_key(q: Quaternion, u: PureUnit):
    return (-q.a0, q.a1, q.a2, q.a3, u.index)


def pythagorean_param(a: IntVector) -> tuple[Quaternion, PureUnit]:
    """Find ``(q, u)`` with ``q u conj(q) = q_a`` and ``|q|^2 = |a|``.

    ``a`` must be primitive with a perfect-square squared norm.  Among all
    solutions the one returned is the first in the order: ``a0`` descending,
    then ``a1, a2, a3`` ascending, then unit ``i, j, k``.
    """
    if a.dim != 3:
        raise DimensionMismatch(f"expected a 3-vector, got dimension {a.dim}")
    n2 = a.norm2
    n = isqrt(n2)
    if n * n != n2 or n == 0:
        raise NotPerfectSquareNorm(f"|{a}|^2 = {n2} is not a nonzero square")
    if gcd(*a.coords) != 1:
        raise NotPrimitive(f"{a} has coordinate gcd {gcd(*a.coords)}")
    target = embed_vec3(a)
    best = None
    for u in UNITS:
        t = a.coords[u.index]
        if (n + t) % 2:
            continue
        (p0, p1), (r0, r1) = _PAIRS[u]
        firsts = _two_squares((n + t) // 2)
        seconds = _two_squares((n - t) // 2)
        for x, y in firsts:
            for z, w in seconds:
                c = [0, 0, 0, 0]
                c[p0], c[p1], c[r0], c[r1] = x, y, z, w
                q = Quaternion(*c)
                if sandwich(q, u.quaternion) != target:
                    continue
                if best is None or _order_key(q, u) < _order_key(*best):
                    best = (q, u)
    if best is None:
        raise InternalFailure(f"no quaternion parametrizes the Pythagorean quadruple {a}")
    return best


# Cyclic relabelling i -> j -> k -> i acting on coefficients.
def cycle(q: Quaternion) -> Quaternion:
    return Quaternion(q.a0, q.a3, q.a1, q.a2)


def cycle_inv(q: Quaternion) -> Quaternion:
    return Quaternion(q.a0, q.a2, q.a3, q.a1)


def _bezout_i(q: Quaternion) -> tuple[Quaternion, Quaternion]:
    a, b, c, d = q
    g, s, t = gauss_ext_gcd(GaussianInt(a, b), GaussianInt(c, -d))
    if g.norm != 1:
        raise InternalFailure(
            f"a+bi and c-di share the factor {g} although q i conj(q) is primitive"
        )
    ginv = g.conj()
    ab = gauss_mul(s, ginv)  # A + B i
    cd = gauss_mul(t, ginv)  # C - D i
    A, B = ab.re, ab.im
    gi = Quaternion(cd.re, cd.im, 0, 0)
    q1 = Quaternion(A, B, 0, 0) - quat_mul(gi, QJ)
    q2 = Quaternion(B, -A, 0, 0) + quat_mul(gi, QK)
    return q1, q2


def quat_bezout(q: Quaternion, u: PureUnit) -> tuple[Quaternion, Quaternion]:
    """Return ``(q1, q2)`` with ``q1 q + q2 q u = 2``.

    Requires ``q u conj(q)`` to be primitive.
    """
    image = sandwich(q, u.quaternion)
    if image.is_zero() or image.content() != 1:
        raise NotPrimitive(f"q u conj(q) = {image} is not primitive")
    steps = u.index  # how many forward cycles carry i to u
    p = q
    for _ in range(steps):
        p = cycle_inv(p)
    p1, p2 = _bezout_i(p)
    for _ in range(steps):
        p1, p2 = cycle(p1), cycle(p2)
    lhs = quat_mul(p1, q) + quat_mul(quat_mul(p2, q), u.quaternion)
    if lhs != Quaternion(2):
        raise InternalFailure(f"Bezout identity failed: got {lhs}")
    return p1, p2
